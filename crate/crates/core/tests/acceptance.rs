//! Acceptance suite. Runs every criterion at its stated tolerance and prints
//! one PASS/FAIL line per criterion; exits non-zero if any fails.

mod common;

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use bunncalc_core::ffbundle::rho_pairing;
use bunncalc_core::kottwitz::{enumerate_b, kappa_exponents, modulus_exponents};
use bunncalc_core::lparam::{b_to_chis, chi_to_b, chi_to_bundle, chi_to_rep, make_f};
use bunncalc_core::shtuka::{boyer_factorize, harris_viehmann, modification_targets_rank_one, BoyerDirection};
use bunncalc_core::spectral::{eigensheaf_stalk, hecke, spectral_act, verify_eigen};
use bunncalc_core::weights::{isotypic_decomposition, levi_branching, sigma_chi, WeilSymbol};
use bunncalc_core::{BundleSpec, Character, HighestWeight, LParamShape, NewtonPoint, Rational, Slope};
use common::{binomial, brute_force_b, compositions, factorial, product_expansion, schur};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

struct Suite {
    failures: usize,
}

impl Suite {
    fn run(&mut self, id: &str, what: &str, limit: Duration, check: impl FnOnce() -> Outcome) -> Duration {
        let start = Instant::now();
        let result = catch_unwind(AssertUnwindSafe(check));
        let elapsed = start.elapsed();
        let (ok, detail) = match result {
            Ok(Ok(detail)) if elapsed <= limit => (true, detail),
            Ok(Ok(detail)) => (false, format!("{detail}; too slow")),
            Ok(Err(msg)) => (false, msg),
            Err(_) => (false, "panicked".to_string()),
        };
        if !ok {
            self.failures += 1;
        }
        println!(
            "[{}] {id} {what}: {detail} ({} ms, limit {} ms)",
            if ok { "PASS" } else { "FAIL" },
            elapsed.as_millis(),
            limit.as_millis()
        );
        elapsed
    }
}

fn phi(dims: &[u64]) -> LParamShape {
    LParamShape::from_dims(dims).unwrap()
}

fn bundle(s: &str) -> BundleSpec {
    s.parse().unwrap()
}

// ---- 1: worked examples ----

fn character_to_stratum() -> Outcome {
    let p = phi(&[1, 1]);
    let b = chi_to_bundle(&p, &Character::new(vec![-1, -2])).map_err(|e| e.to_string())?;
    ensure(b == bundle("O(-1)+O(-2)"), || format!("got {b}"))?;
    let d = NewtonPoint::from_bundle(&b).rho_pairing();
    ensure(d == 1, || format!("d = {d}"))?;
    Ok(format!("{b}, d = {d}"))
}

fn cubic_lines() -> Outcome {
    let p = phi(&[1, 1]);
    let lam = HighestWeight::new(vec![3, 0]).unwrap();
    let expected = [
        (vec![3, 0], "φ_1^3"),
        (vec![2, 1], "φ_1^2 ⊗ φ_2"),
        (vec![1, 2], "φ_1 ⊗ φ_2^2"),
        (vec![0, 3], "φ_2^3"),
    ];
    let iso = isotypic_decomposition(&p, &lam).map_err(|e| e.to_string())?;
    ensure(iso.len() == 4, || format!("{} lines", iso.len()))?;
    for (d, text) in expected {
        let chi = Character::new(d);
        let s = sigma_chi(&p, &lam, &chi).map_err(|e| e.to_string())?;
        ensure(s.to_string() == text && s.dim == 1, || format!("σ_{chi} = {s} (dim {})", s.dim))?;
    }
    Ok("four lines of dimension 1".into())
}

fn boyer_illustrations() -> Outcome {
    let mut mu = vec![0; 10];
    mu[0] = 1;
    let f = boyer_factorize(&bundle("O(3/4)+O(1/3)+O^3"), &bundle("O(3/2)+O(1/2)+O(1/3)+O^3"), &mu, 4)
        .map_err(|e| e.to_string())?;
    ensure(f.direction == BoyerDirection::Proposition, || "first: wrong direction".into())?;
    ensure(f.mu1 == [1, 0, 0, 0] && f.mu2 == [0; 6], || format!("first: μ_1 = {:?}, μ_2 = {:?}", f.mu1, f.mu2))?;
    ensure(
        f.b1 == bundle("O(3/4)") && f.bp1 == bundle("O(3/2)+O(1/2)") && f.b2 == bundle("O(1/3)+O^3") && f.bp2 == f.b2,
        || "first: sub-bundles differ".into(),
    )?;
    ensure(f.group_b == "D^×_{-3/4} × D^×_{-1/3} × GL_3", || format!("first: G_b = {}", f.group_b))?;
    ensure(f.rho_1 == 4 && f.rho_2 == 3, || format!("first: pairings {} and {}", f.rho_1, f.rho_2))?;
    ensure(f.rho_full == 27 && f.d == 20, || format!("first: ⟨2ρ,ν⟩ = {}, d = {}", f.rho_full, f.d))?;
    ensure(f.notes.iter().any(|n| n.contains("26")), || "first: discrepancy flag missing".into())?;

    let mut mu = vec![0; 12];
    mu[0] = 1;
    mu[1] = 1;
    let g = boyer_factorize(&bundle("O(3/2)+O(1/2)^2+O(1/6)"), &bundle("O(3/2)^2+O(1/2)+O(1/3)+O^3"), &mu, 2)
        .map_err(|e| e.to_string())?;
    ensure(g.direction == BoyerDirection::Corollary, || "second: wrong direction".into())?;
    let mut mu2 = vec![0; 10];
    mu2[0] = 1;
    mu2[1] = 1;
    ensure(g.mu1 == [0, 0] && g.mu2 == mu2, || format!("second: μ_1 = {:?}, μ_2 = {:?}", g.mu1, g.mu2))?;
    ensure(
        g.b1 == bundle("O(3/2)") && g.bp1 == g.b1 && g.b2 == bundle("O(1/2)^2+O(1/6)")
            && g.bp2 == bundle("O(3/2)+O(1/2)+O(1/3)+O^3"),
        || "second: sub-bundles differ".into(),
    )?;
    ensure(g.group_bprime == "GL_2(D_{-3/2}) × D^×_{-1/2} × D^×_{-1/3} × GL_3", || {
        format!("second: G_b' = {}", g.group_bprime)
    })?;
    ensure(g.parabolic_proper, || "second: P_b' should be proper".into())?;
    Ok(format!("pairings 4, 3; full pairing {} flagged against 26; d = {}", f.rho_full, f.d))
}

fn modification_sets() -> Outcome {
    let mut count = 0;
    for n in 3..=8u64 {
        for n1 in 2..n {
            let got: BTreeSet<String> =
                modification_targets_rank_one(n, n1).map_err(|e| e.to_string())?.iter().map(|b| b.canonical()).collect();
            let mut expected = BTreeSet::new();
            expected.insert(bundle(&format!("O^{n}")).canonical());
            for m in 0..n {
                for m1 in 1..=n {
                    if n1 + m + m1 == n {
                        let text = if m == 0 {
                            format!("O(1/{n1})+O(-1/{m1})")
                        } else {
                            format!("O(1/{n1})+O^{m}+O(-1/{m1})")
                        };
                        expected.insert(bundle(&text).canonical());
                    }
                }
            }
            ensure(got == expected, || format!("n = {n}, n' = {n1}: {got:?} vs {expected:?}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} (n, n') pairs"))
}

fn eigensheaf_counts() -> Outcome {
    let mut count = 0;
    for n in 1..=6u64 {
        let p = phi(&vec![1; n as usize]);
        for parts in compositions(n) {
            let k = parts.len() as i64;
            let raw: Vec<(Slope, u64)> =
                parts.iter().enumerate().map(|(i, &c)| (Slope::integer(k - 2 * i as i64), c)).collect();
            let b = NewtonPoint::from_bundle(&BundleSpec::normalize(raw).unwrap());
            let got = eigensheaf_stalk(&p, &b).map_err(|e| e.to_string())?.pieces.len() as u128;
            let expected = factorial(n) / parts.iter().map(|&c| factorial(c)).product::<u128>();
            ensure(got == expected, || format!("n = {n}, classes {parts:?}: {got} vs {expected}"))?;
            count += 1;
        }
    }
    Ok(format!("{count} compositions"))
}

fn hv_minuscule(rng: &mut ChaCha8Rng) -> Outcome {
    for _ in 0..50 {
        let r = rng.gen_range(1..=4usize);
        let mut dims: Vec<u64> = (0..r).map(|_| rng.gen_range(1..=3u64)).collect();
        while dims.iter().sum::<u64>() > 8 {
            dims.pop();
        }
        let p = phi(&dims);
        let d: Vec<i64> = dims.iter().map(|&n| rng.gen_range(0..=n as i64)).collect();
        let n = p.n() as usize;
        let a = d.iter().sum::<i64>() as usize;
        let mu = HighestWeight::fundamental(n, a);
        let xi = Character::new(d.clone());
        let hv = harris_viehmann(&p, &xi, &mu.dual()).map_err(|e| e.to_string())?;
        let piece = &hv.cohomology.pieces[0];
        let mono: Vec<Vec<i64>> = dims
            .iter()
            .zip(&d)
            .map(|(&n_i, &d_i)| (0..n_i as i64).map(|j| i64::from(j < d_i)).collect())
            .collect();
        let expected = WeilSymbol::new(dims.clone(), vec![(mono, 1)]);
        let dim: u128 = dims.iter().zip(&d).map(|(&n_i, &d_i)| binomial(n_i, d_i as u64)).product();
        let cross = sigma_chi(&p, &mu, &xi).map_err(|e| e.to_string())?;
        ensure(piece.dual, || "dual flag missing".into())?;
        ensure(piece.sigma_dual_form.as_ref() == Some(&expected), || format!("dims {dims:?}, ξ = {xi}"))?;
        ensure(piece.sigma.dim == dim && expected.dim == dim, || format!("dim {} vs {dim}", piece.sigma.dim))?;
        ensure(cross == expected, || format!("sigma_chi disagrees for {dims:?}, {xi}"))?;
    }
    Ok("50 random instances".into())
}

// ---- 2: property suites ----

fn random_phi_chi(rng: &mut ChaCha8Rng, max_r: usize, max_dim: u64) -> (LParamShape, Character) {
    let r = rng.gen_range(1..=max_r);
    let dims: Vec<u64> = (0..r).map(|_| rng.gen_range(1..=max_dim)).collect();
    let chi = Character::new((0..r).map(|_| rng.gen_range(-5..=5)).collect());
    (phi(&dims), chi)
}

fn bijection(rng: &mut ChaCha8Rng) -> Outcome {
    for _ in 0..250 {
        let (p, chi) = random_phi_chi(rng, 4, 4);
        let b = chi_to_b(&p, &chi).map_err(|e| e.to_string())?;
        let rep = chi_to_rep(&p, &chi).map_err(|e| e.to_string())?;
        let back: Vec<Character> = b_to_chis(&p, &b)
            .map_err(|e| e.to_string())?
            .into_iter()
            .filter(|c| chi_to_rep(&p, c).ok().as_ref() == Some(&rep))
            .collect();
        ensure(back == [chi.clone()], || format!("{chi} recovered as {back:?}"))?;
        let chi2 = Character::new((0..p.r()).map(|_| rng.gen_range(-5..=5)).collect());
        if chi2 != chi {
            let a = (chi_to_bundle(&p, &chi).unwrap(), chi_to_rep(&p, &chi).unwrap());
            let c = (chi_to_bundle(&p, &chi2).unwrap(), chi_to_rep(&p, &chi2).unwrap());
            ensure(a != c, || format!("{chi} and {chi2} collide"))?;
        }
    }
    Ok("250 cases".into())
}

fn hecke_dimension(rng: &mut ChaCha8Rng) -> Outcome {
    for _ in 0..250 {
        let (p, xi) = loop {
            let c = random_phi_chi(rng, 4, 4);
            if c.0.n() <= 8 {
                break c;
            }
        };
        let n = p.n() as usize;
        let lam = HighestWeight::fundamental(n, rng.gen_range(0..=n));
        let dec = hecke(&p, &lam, &make_f(&p, &xi).unwrap()).map_err(|e| e.to_string())?;
        ensure(dec.total_dim() == lam.dim(), || format!("{lam} on {:?}: {}", p.dims(), dec.total_dim()))?;
    }
    Ok("250 cases".into())
}

fn branching_oracle(rng: &mut ChaCha8Rng) -> Outcome {
    let mut done = 0;
    while done < 250 {
        let n = rng.gen_range(1..=5usize);
        let mut lam: Vec<i64> = (0..n).map(|_| rng.gen_range(0..=3)).collect();
        lam.sort_unstable_by(|a, b| b.cmp(a));
        if lam.iter().sum::<i64>() > 6 {
            continue;
        }
        let all = compositions(n as u64);
        let blocks = &all[rng.gen_range(0..all.len())];
        let terms = levi_branching(&HighestWeight::new(lam.clone()).unwrap(), blocks).map_err(|e| e.to_string())?;
        ensure(product_expansion(&terms) == schur(&lam), || format!("λ = {lam:?}, blocks {blocks:?}"))?;
        done += 1;
    }
    Ok("250 cases".into())
}

fn eigen_identity() -> Outcome {
    let mut count = 0;
    for n in 1..=6u64 {
        for dims in compositions(n).into_iter().filter(|d| d.len() <= 3) {
            let p = phi(&dims);
            for a in 0..=n as usize {
                let lam = HighestWeight::fundamental(n as usize, a);
                let mut strata: BTreeSet<String> = BTreeSet::new();
                let mut list = vec![NewtonPoint::basic(n, 0)];
                for (chi, _) in isotypic_decomposition(&p, &lam).map_err(|e| e.to_string())? {
                    let b = chi_to_b(&p, &chi).unwrap();
                    if strata.insert(b.to_string()) {
                        list.push(b);
                    }
                }
                ensure(verify_eigen(&p, &lam, &list).map_err(|e| e.to_string())?, || {
                    format!("dims {dims:?}, {lam}")
                })?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} (φ, λ) pairs"))
}

fn poset_axioms() -> Outcome {
    let mut count = 0;
    for n in 1..=8usize {
        for a in 0..=n {
            let mut mu: Vec<i64> = (0..n).map(|i| i64::from(i < a)).collect();
            for bump in 0..2 {
                mu[0] += bump;
                let pts = enumerate_b(n, &mu).map_err(|e| e.to_string())?;
                let le: Vec<Vec<bool>> = pts.iter().map(|x| pts.iter().map(|y| x.leq(y).unwrap()).collect()).collect();
                for i in 0..pts.len() {
                    ensure(le[i][i], || "reflexivity".into())?;
                    ensure(pts[i].polygon().has_integral_breakpoints(), || "breakpoints".into())?;
                    for j in 0..pts.len() {
                        ensure(!(le[i][j] && le[j][i]) || i == j, || "antisymmetry".into())?;
                        for k in 0..pts.len() {
                            ensure(!(le[i][j] && le[j][k]) || le[i][k], || "transitivity".into())?;
                        }
                    }
                }
                count += 1;
            }
        }
    }
    let two = enumerate_b(2, &[1, 0]).unwrap();
    let three = enumerate_b(3, &[1, 0, 0]).unwrap();
    let as_set = |pts: &[NewtonPoint]| -> BTreeSet<Vec<Rational>> {
        pts.iter().map(|p| p.entries().iter().map(|s| s.value()).collect()).collect()
    };
    ensure(two.len() == 2 && as_set(&two) == brute_force_b(&[1, 0]), || "B(GL_2,(1,0))".into())?;
    ensure(three.len() == 3 && as_set(&three) == brute_force_b(&[1, 0, 0]), || "B(GL_3,(1,0,0))".into())?;
    Ok(format!("{count} Kottwitz sets; sizes 2 and 3 confirmed"))
}

fn kappa_modulus() -> Outcome {
    let mut count = 0;
    for n in 1..=8usize {
        for kappa in -2 * n as i64..=2 * n as i64 {
            // largest polygon with slopes in [−2, 2] ending at κ
            let mut mu = vec![-2i64; n];
            let mut rest = kappa + 2 * n as i64;
            for x in mu.iter_mut() {
                let add = rest.min(4);
                *x += add;
                rest -= add;
            }
            for b in enumerate_b(n, &mu).map_err(|e| e.to_string())? {
                let e = b.to_bundle();
                let delta = modulus_exponents(&e);
                let kap = kappa_exponents(&e);
                let ranks: Vec<u64> = e.parts().iter().map(|p| p.rank()).collect();
                ensure(kap == delta.negate(), || format!("κ ≠ δ^-1 on {e}"))?;
                ensure(delta.weighted_sum(&ranks) == Rational::from_integer(0), || format!("Σ n e ≠ 0 on {e}"))?;
                ensure(rho_pairing(b.classes()).is_ok(), || "pairing".into())?;
                count += 1;
            }
        }
    }
    Ok(format!("{count} strata"))
}

// ---- 3: group law ----

fn group_law(rng: &mut ChaCha8Rng) -> Outcome {
    for _ in 0..500 {
        let (p, xi) = random_phi_chi(rng, 4, 4);
        let r = p.r();
        let a = Character::new((0..r).map(|_| rng.gen_range(-4..=4)).collect());
        let b = Character::new((0..r).map(|_| rng.gen_range(-4..=4)).collect());
        let f = make_f(&p, &xi).unwrap();
        let lhs = spectral_act(&p, &a, &spectral_act(&p, &b, &f).map_err(|e| e.to_string())?)
            .map_err(|e| e.to_string())?;
        let rhs = spectral_act(&p, &a.mul(&b), &f).map_err(|e| e.to_string())?;
        ensure(lhs == rhs, || format!("ξ = {xi}, χ = {a}, χ' = {b}"))?;
    }
    Ok("500 triples, exact equality".into())
}

fn main() {
    let mut suite = Suite { failures: 0 };
    let mut rng = ChaCha8Rng::seed_from_u64(0x6275_6e6e);
    let second = Duration::from_secs(1);

    suite.run("1.1", "character (-1,-2) gives O(-1)+O(-2) with d = 1", second, character_to_stratum);
    suite.run("1.2", "Sym^3 of GL_2 splits into four one-dimensional lines", second, cubic_lines);
    suite.run("1.3", "Boyer factorization of both rank-10/12 configurations", second, boyer_illustrations);
    suite.run("1.4", "rank-one modification sources for 2 ≤ n' < n ≤ 8", second, modification_sets);
    suite.run("1.5", "eigensheaf stalk counts are multinomial for n ≤ 6", second, eigensheaf_counts);
    suite.run("1.6", "minuscule Harris-Viehmann output vs sigma_chi", second, || hv_minuscule(&mut rng));

    let budget = Duration::from_secs(30);
    let mut total = Duration::ZERO;
    total += suite.run("2.1", "bijection round trip and injectivity", budget, || bijection(&mut rng));
    total += suite.run("2.2", "Hecke dimension conservation, fundamental λ, n ≤ 8", budget, || hecke_dimension(&mut rng));
    total += suite.run("2.3", "Levi branching vs Schur oracle, n ≤ 5, |λ| ≤ 6", budget, || branching_oracle(&mut rng));
    total += suite.run("2.4", "eigen identity for r ≤ 3, n ≤ 6, fundamental λ", budget, eigen_identity);
    total += suite.run("2.5", "poset axioms and breakpoints on B(GL_n, μ), n ≤ 8", budget, poset_axioms);
    total += suite.run("2.6", "κ_b = δ_b^-1 and Σ n_i e_i = 0 on strata of rank ≤ 8", budget, kappa_modulus);
    let within = total <= budget;
    if !within {
        suite.failures += 1;
    }
    println!(
        "[{}] 2 property suites total: {} ms (limit {} ms)",
        if within { "PASS" } else { "FAIL" },
        total.as_millis(),
        budget.as_millis()
    );

    suite.run("3", "spectral action group law", Duration::from_secs(30), || group_law(&mut rng));

    if suite.failures > 0 {
        println!("{} acceptance criteria failed", suite.failures);
        std::process::exit(1);
    }
    println!("all acceptance criteria passed");
}
