//! Independent oracles shared by the integration tests. None of these call
//! the enumeration code they are used to check.

#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet};

use bunncalc_core::Rational;

/// Slope vectors of all concave polygons with integral breakpoints from
/// `(0,0)` to `(n, Σμ)` lying on or below the polygon of `μ`, found by
/// trying every breakpoint set and every integer height in a wide box.
pub fn brute_force_b(mu: &[i64]) -> BTreeSet<Vec<Rational>> {
    let n = mu.len();
    let kappa: i64 = mu.iter().sum();
    let mut mu_poly = vec![0i64];
    for &m in mu {
        mu_poly.push(mu_poly.last().unwrap() + m);
    }
    let reach = mu.iter().map(|m| m.abs()).max().unwrap_or(0) * n as i64 + 2;
    let mut out = BTreeSet::new();
    for mask in 0u32..(1 << (n - 1)) {
        let xs: Vec<usize> = (1..n).filter(|x| mask & (1 << (x - 1)) != 0).collect();
        let mut heights = vec![-reach; xs.len()];
        'grid: loop {
            let mut pts = vec![(0usize, 0i64)];
            pts.extend(xs.iter().copied().zip(heights.iter().copied()));
            pts.push((n, kappa));
            let slopes: Vec<Rational> = pts
                .windows(2)
                .map(|w| Rational::new(w[1].1 - w[0].1, (w[1].0 - w[0].0) as i64))
                .collect();
            let concave = slopes.windows(2).all(|w| w[1] < w[0]);
            let below = pts.iter().all(|&(x, y)| y <= mu_poly[x]);
            if concave && below {
                let mut v = Vec::with_capacity(n);
                for (w, s) in pts.windows(2).zip(&slopes) {
                    v.extend(std::iter::repeat_n(*s, w[1].0 - w[0].0));
                }
                out.insert(v);
            }
            for h in heights.iter_mut() {
                if *h < reach {
                    *h += 1;
                    continue 'grid;
                }
                *h = -reach;
            }
            break;
        }
    }
    out
}

/// Schur polynomial `s_λ(x_1, …, x_n)` as exponent vector ↦ coefficient,
/// by enumerating semistandard tableaux. Negative parts are handled by
/// factoring out a power of the determinant.
pub fn schur(lambda: &[i64]) -> BTreeMap<Vec<i64>, u64> {
    let n = lambda.len();
    let shift = *lambda.last().unwrap();
    let shape: Vec<usize> = lambda.iter().map(|&l| (l - shift) as usize).collect();
    let cells: Vec<(usize, usize)> =
        shape.iter().enumerate().flat_map(|(r, &len)| (0..len).map(move |c| (r, c))).collect();
    let mut grid: Vec<Vec<usize>> = shape.iter().map(|&len| vec![0; len]).collect();
    let mut out = BTreeMap::new();
    fill(&cells, 0, n, &mut grid, &mut |g| {
        let mut content = vec![shift; n];
        for row in g {
            for &v in row {
                content[v] += 1;
            }
        }
        *out.entry(content).or_insert(0) += 1;
    });
    out
}

fn fill(
    cells: &[(usize, usize)],
    k: usize,
    n: usize,
    grid: &mut Vec<Vec<usize>>,
    visit: &mut dyn FnMut(&Vec<Vec<usize>>),
) {
    if k == cells.len() {
        visit(grid);
        return;
    }
    let (r, c) = cells[k];
    let lo_left = if c > 0 { grid[r][c - 1] } else { 0 };
    let lo_up = if r > 0 { grid[r - 1][c] + 1 } else { 0 };
    for v in lo_left.max(lo_up)..n {
        grid[r][c] = v;
        fill(cells, k + 1, n, grid, visit);
    }
}

/// `Σ mult · ∏_i s_{λ^(i)}(block i variables)`.
pub fn product_expansion(terms: &[(Vec<Vec<i64>>, u64)]) -> BTreeMap<Vec<i64>, u64> {
    let mut total = BTreeMap::new();
    for (mono, mult) in terms {
        let mut acc: BTreeMap<Vec<i64>, u64> = [(Vec::new(), *mult)].into_iter().collect();
        for part in mono {
            let s = schur(part);
            let mut next = BTreeMap::new();
            for (a, ca) in &acc {
                for (b, cb) in &s {
                    let mut v = a.clone();
                    v.extend_from_slice(b);
                    *next.entry(v).or_insert(0) += ca * cb;
                }
            }
            acc = next;
        }
        for (k, v) in acc {
            *total.entry(k).or_insert(0) += v;
        }
    }
    total
}

/// All compositions of `n` into positive parts.
pub fn compositions(n: u64) -> Vec<Vec<u64>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for first in 1..=n {
        for rest in compositions(n - first) {
            let mut v = vec![first];
            v.extend(rest);
            out.push(v);
        }
    }
    out
}

pub fn factorial(n: u64) -> u128 {
    (1..=n as u128).product()
}

pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    factorial(n) / (factorial(k) * factorial(n - k))
}
