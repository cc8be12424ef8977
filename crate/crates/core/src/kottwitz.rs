//! The Kottwitz set `B(GL_n)`: Newton points, the dominance order,
//! enumeration of `B(GL_n, μ)`, Hasse diagrams and the characters
//! `δ_b`, `κ_b` of the automorphism groups `G_b`.

use std::fmt;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ffbundle::{rho_pairing, BundleSpec, Polygon, Rational, Slope};

/// An element of `B(GL_n)`: a dominant slope vector with integral breakpoints.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct NewtonPoint {
    /// `(λ, count)` with `λ` strictly decreasing; `count` entries equal `λ`.
    classes: Vec<(Slope, u64)>,
}

impl NewtonPoint {
    pub fn new(classes: Vec<(Slope, u64)>) -> Result<Self> {
        if classes.is_empty() {
            return Err(Error::EmptyBundle);
        }
        if classes.windows(2).any(|w| w[1].0 >= w[0].0) {
            return Err(Error::UnsortedClasses);
        }
        for (slope, count) in &classes {
            if *count == 0 {
                return Err(Error::ZeroMultiplicity(0));
            }
            if *count % slope.den() as u64 != 0 {
                return Err(Error::NonIntegralClass { slope: slope.to_string(), count: *count });
            }
        }
        Ok(NewtonPoint { classes })
    }

    /// Builds a point from a weakly decreasing rational vector.
    pub fn from_entries(entries: &[Slope]) -> Result<Self> {
        let mut classes: Vec<(Slope, u64)> = Vec::new();
        for &e in entries {
            match classes.last_mut() {
                Some((s, c)) if *s == e => *c += 1,
                _ => classes.push((e, 1)),
            }
        }
        NewtonPoint::new(classes)
    }

    /// The basic point of rank `n` with Kottwitz invariant `kappa`.
    pub fn basic(n: u64, kappa: i64) -> Self {
        let slope = Slope::new(kappa, n as i64).expect("n > 0");
        NewtonPoint { classes: vec![(slope, n)] }
    }

    pub fn classes(&self) -> &[(Slope, u64)] {
        &self.classes
    }

    pub fn rank(&self) -> u64 {
        self.classes.iter().map(|c| c.1).sum()
    }

    /// Endpoint of the Newton polygon.
    pub fn kappa(&self) -> i64 {
        self.classes
            .iter()
            .map(|(s, c)| s.value() * *c as i64)
            .sum::<Rational>()
            .to_integer()
    }

    pub fn entries(&self) -> Vec<Slope> {
        self.classes
            .iter()
            .flat_map(|(s, c)| std::iter::repeat_n(*s, *c as usize))
            .collect()
    }

    pub fn is_basic(&self) -> bool {
        self.classes.len() == 1
    }

    /// `⟨2ρ, ν_b⟩`, the dimension attached to the stratum.
    pub fn rho_pairing(&self) -> i64 {
        rho_pairing(&self.classes).expect("Newton point classes are integral")
    }

    pub fn polygon(&self) -> Polygon {
        let mut vertices = vec![(Rational::from_integer(0), Rational::from_integer(0))];
        let (mut x, mut y) = (0i64, Rational::from_integer(0));
        for (s, c) in &self.classes {
            x += *c as i64;
            y += s.value() * *c as i64;
            vertices.push((Rational::from_integer(x), y));
        }
        Polygon::from_vertices(vertices)
    }

    /// Block sizes of the standard parabolic `P` with `ν_b ∈ X_*(P)^+`.
    pub fn parabolic_type(&self) -> Vec<u64> {
        self.classes.iter().map(|c| c.1).collect()
    }

    /// `ν_b = (−ν_{E_b})_dom`.
    pub fn from_bundle(bundle: &BundleSpec) -> Self {
        let classes = bundle.slope_classes().into_iter().rev().map(|(s, c)| (s.neg(), c)).collect();
        NewtonPoint { classes }
    }

    pub fn to_bundle(&self) -> BundleSpec {
        let raw = self
            .classes
            .iter()
            .map(|(s, c)| (s.neg(), c / s.den() as u64));
        BundleSpec::normalize(raw).expect("Newton point classes are integral")
    }

    /// Partial order on a fixed-`κ` slice. Points of different `κ` are
    /// incomparable.
    pub fn leq(&self, other: &NewtonPoint) -> Result<bool> {
        if self.rank() != other.rank() {
            return Err(Error::RankMismatch { expected: self.rank(), found: other.rank() });
        }
        Ok(self.kappa() == other.kappa() && self.polygon().lies_below(&other.polygon()))
    }

    /// `ν=(…) κ=… d=…`.
    pub fn label(&self) -> String {
        let entries: Vec<String> = self.entries().iter().map(Slope::to_string).collect();
        format!("ν=({}) κ={} d={}", entries.join(","), self.kappa(), self.rho_pairing())
    }
}

impl fmt::Display for NewtonPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let entries: Vec<String> = self.entries().iter().map(Slope::to_string).collect();
        write!(f, "({})", entries.join(","))
    }
}

impl fmt::Debug for NewtonPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "NewtonPoint{self}")
    }
}

pub fn bundle_to_b(bundle: &BundleSpec) -> NewtonPoint {
    NewtonPoint::from_bundle(bundle)
}

pub fn b_to_bundle(b: &NewtonPoint) -> BundleSpec {
    b.to_bundle()
}

/// Polygon of an integral cocharacter `μ` (weakly decreasing).
fn weight_polygon(mu: &[i64]) -> Vec<i64> {
    let mut acc = vec![0i64];
    for &m in mu {
        acc.push(acc.last().unwrap() + m);
    }
    acc
}

/// All `b ∈ B(GL_n)` with `κ(b) = Σμ` and `ν_b ≤ μ`, listed so that larger
/// points come first; ties are broken lexicographically (descending).
pub fn enumerate_b(n: usize, mu: &[i64]) -> Result<Vec<NewtonPoint>> {
    if mu.len() != n {
        return Err(Error::LengthMismatch { expected: n, found: mu.len() });
    }
    if mu.windows(2).any(|w| w[1] > w[0]) {
        return Err(Error::NotDominant(mu.to_vec()));
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let bound = weight_polygon(mu);
    let kappa = *bound.last().unwrap();
    let mut out = Vec::new();
    let mut stack = Vec::new();
    descend(n as i64, kappa, &bound, 0, 0, None, &mut stack, &mut out);
    let mut keyed: Vec<(Rational, Vec<Slope>, NewtonPoint)> = out
        .into_iter()
        .map(|p| {
            let poly = p.polygon();
            let area: Rational = (0..=n as i64)
                .map(|x| poly.value_at(Rational::from_integer(x)).unwrap())
                .sum();
            (area, p.entries(), p)
        })
        .collect();
    keyed.sort_by(|a, b| b.0.cmp(&a.0).then_with(|| b.1.cmp(&a.1)));
    Ok(keyed.into_iter().map(|k| k.2).collect())
}

#[allow(clippy::too_many_arguments)]
fn descend(
    n: i64,
    kappa: i64,
    bound: &[i64],
    x: i64,
    y: i64,
    prev: Option<Rational>,
    stack: &mut Vec<(Slope, u64)>,
    out: &mut Vec<NewtonPoint>,
) {
    if x == n {
        if y == kappa {
            out.push(NewtonPoint { classes: stack.clone() });
        }
        return;
    }
    for nx in x + 1..=n {
        // A concave polygon ending at (n, κ) stays on or above the chord.
        let lo = num_integer::Integer::div_ceil(&(kappa * nx), &n);
        let hi = bound[nx as usize];
        for ny in lo..=hi {
            if nx == n && ny != kappa {
                continue;
            }
            let slope = Rational::new(ny - y, nx - x);
            if prev.is_some_and(|p| slope >= p) {
                continue;
            }
            // Later slopes must stay strictly smaller.
            if nx < n && Rational::new(kappa - ny, n - nx) >= slope {
                continue;
            }
            stack.push((Slope::from_ratio(slope), (nx - x) as u64));
            descend(n, kappa, bound, nx, ny, Some(slope), stack, out);
            stack.pop();
        }
    }
}

/// Covering relations `(lower, upper)` of `leq` restricted to `points`,
/// computed by transitive reduction.
pub fn hasse(points: &[NewtonPoint]) -> Vec<(usize, usize)> {
    let n = points.len();
    let le: Vec<Vec<bool>> = points
        .iter()
        .map(|a| points.iter().map(|b| a.leq(b).unwrap_or(false)).collect())
        .collect();
    let lt = |i: usize, j: usize| i != j && le[i][j] && !le[j][i];
    let mut edges = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if lt(i, j) && !(0..n).any(|k| lt(i, k) && lt(k, j)) {
                edges.push((i, j));
            }
        }
    }
    edges
}

/// DOT digraph of the Hasse diagram, edges pointing upward in the order.
pub fn dot_export(points: &[NewtonPoint]) -> String {
    let mut out = String::from("digraph kottwitz {\n");
    for (i, p) in points.iter().enumerate() {
        let _ = writeln!(out, "  n{i} [label=\"{}\"];", p.label());
    }
    for (lo, hi) in hasse(points) {
        let _ = writeln!(out, "  n{lo} -> n{hi};");
    }
    out.push_str("}\n");
    out
}

/// One factor `GL_m(D_{inv})` of an inner form of a Levi subgroup.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct GroupFactor {
    pub m: u64,
    /// Invariant of the division algebra, `−λ` for the bundle slope `λ`.
    pub inv: Slope,
}

impl GroupFactor {
    /// Rank of the split inner form `GL_{m·den}`.
    pub fn split_rank(&self) -> u64 {
        self.m * self.inv.den() as u64
    }

    pub fn is_split(&self) -> bool {
        self.inv.is_integer()
    }
}

impl fmt::Display for GroupFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.is_split(), self.m) {
            (true, m) => write!(f, "GL_{m}"),
            (false, 1) => write!(f, "D^×_{{{}}}", self.inv),
            (false, m) => write!(f, "GL_{m}(D_{{{}}})", self.inv),
        }
    }
}

/// `G_b = ∏ GL_{m_i}(D_{−λ_i})`, factors in decreasing bundle slope order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct InnerFormGroup {
    pub factors: Vec<GroupFactor>,
}

impl fmt::Display for InnerFormGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(GroupFactor::to_string).collect();
        f.write_str(&parts.join(" × "))
    }
}

pub fn automorphism_group(bundle: &BundleSpec) -> InnerFormGroup {
    InnerFormGroup {
        factors: bundle
            .parts()
            .iter()
            .map(|p| GroupFactor { m: p.mult, inv: p.slope.neg() })
            .collect(),
    }
}

/// A character `∏ |det_i|^{e_i}` recorded by its exponents, indexed by the
/// factor position in the matching [`InnerFormGroup`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterExponents {
    pub exps: Vec<(usize, Rational)>,
}

impl CharacterExponents {
    pub fn negate(&self) -> CharacterExponents {
        CharacterExponents { exps: self.exps.iter().map(|(i, e)| (*i, -*e)).collect() }
    }

    pub fn exponent(&self, factor: usize) -> Option<Rational> {
        self.exps.iter().find(|(i, _)| *i == factor).map(|e| e.1)
    }

    /// `Σ_i n_i e_i` against the given factor ranks.
    pub fn weighted_sum(&self, ranks: &[u64]) -> Rational {
        self.exps.iter().map(|(i, e)| *e * ranks[*i] as i64).sum()
    }

    pub fn is_trivial(&self) -> bool {
        self.exps.iter().all(|(_, e)| *e == Rational::from_integer(0))
    }
}

/// Exponents of `δ_b`, the modulus character of the standard parabolic with
/// `ν_b ∈ X_*(P)^+`. In `ν_b` order (increasing bundle slope) block `i` gets
/// `Σ_{j>i} n_j − Σ_{j<i} n_j`.
pub fn modulus_exponents(bundle: &BundleSpec) -> CharacterExponents {
    let ranks: Vec<u64> = bundle.parts().iter().map(|p| p.rank()).collect();
    let k = ranks.len();
    // Factor index k-1-pos in the group corresponds to position pos in ν order.
    let nu_ranks: Vec<i64> = ranks.iter().rev().map(|&r| r as i64).collect();
    let mut exps = Vec::with_capacity(k);
    for pos in 0..k {
        let after: i64 = nu_ranks[pos + 1..].iter().sum();
        let before: i64 = nu_ranks[..pos].iter().sum();
        exps.push((k - 1 - pos, Rational::from_integer(after - before)));
    }
    exps.sort_by_key(|e| e.0);
    CharacterExponents { exps }
}

/// `κ_b = δ_b^{-1}`.
pub fn kappa_exponents(bundle: &BundleSpec) -> CharacterExponents {
    modulus_exponents(bundle).negate()
}
