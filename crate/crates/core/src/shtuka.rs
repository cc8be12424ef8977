//! Bookkeeping for the cohomology of local shtuka spaces: shifts and twists,
//! Harris–Viehmann presentations, Boyer-type factorizations, modification
//! checks and the output of Igusa varieties.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ffbundle::{known_pairing_discrepancy, rho_pairing_weight, BundleSpec, Rational, Slope};
use crate::kottwitz::{
    automorphism_group, enumerate_b, kappa_exponents, modulus_exponents, CharacterExponents, NewtonPoint,
};
use crate::lparam::{b_to_chis, check_a1, chi_to_b, chi_to_bundle, chi_to_rep, make_f, Character, LParamShape, RepSymbol};
use crate::spectral::{hecke, stalk};
use crate::weights::{levi_branching, sigma_chi, HighestWeight, Monomial, WeilSymbol};

/// Which Hecke operator the output is computed with.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// `T_μ` applied to `i_{b!}`.
    Forward,
    /// `T_{μ^{-1}}`; multiplicity spaces carry the dual flag.
    Inverse,
}

impl Direction {
    pub fn convention(self) -> &'static str {
        match self {
            Direction::Forward => "forward: T_μ applied to i_{b!}",
            Direction::Inverse => "inverse: T_{μ^{-1}} applied to i_{b!}; σ carries the dual flag",
        }
    }
}

impl fmt::Display for Direction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Direction::Forward => "forward",
            Direction::Inverse => "inverse",
        })
    }
}

/// One entry of the twist ledger.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LedgerEntry {
    pub source: String,
    pub contribution: String,
}

fn ledger(source: &str, contribution: impl Into<String>) -> LedgerEntry {
    LedgerEntry { source: source.into(), contribution: contribution.into() }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyPiece {
    pub chi: Character,
    pub rep: RepSymbol,
    /// `Ind_P^{GL_n}(…)` presentation when one applies.
    pub induction: Option<String>,
    /// Exponent of `δ` attached to `rep`.
    pub modulus_exponent: Rational,
    pub sigma: WeilSymbol,
    pub dual: bool,
    /// `σ` written as the dual of this symbol when `dual` is set.
    pub sigma_dual_form: Option<WeilSymbol>,
    pub shift: i64,
    /// Shift of the stalk of the Hecke operator alone, before the
    /// normalization of `i_{b!}π_b` is undone.
    pub hecke_shift: i64,
    pub tate: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CohomologyOutput {
    pub convention: String,
    pub source: NewtonPoint,
    pub source_rep: RepSymbol,
    /// `κ_b^{-1} = δ_b` on the source slot.
    pub source_twist: CharacterExponents,
    pub target: NewtonPoint,
    pub pieces: Vec<CohomologyPiece>,
    pub ledger: Vec<LedgerEntry>,
    pub notes: Vec<String>,
}

/// `RΓ_c(G, b, b', μ)[π_b ⊗ κ_b^{-1}]` from `i_{b'}^* T i_{b!}(π_b)`.
///
/// `weight` is the highest weight of the operator actually applied. The
/// source stratum is `b_ξ`; each piece sits in total degree
/// `−d_{b'} − d_{b_ξ}`.
pub fn shtuka_cohomology(
    phi: &LParamShape,
    xi: &Character,
    target: &NewtonPoint,
    weight: &HighestWeight,
    direction: Direction,
) -> Result<CohomologyOutput> {
    if !check_a1(phi) {
        return Err(Error::InvalidShape("(A1) does not hold for this parameter".into()));
    }
    if target.rank() != phi.n() {
        return Err(Error::RankMismatch { expected: phi.n(), found: target.rank() });
    }
    let f_xi = make_f(phi, xi)?;
    let source = f_xi.stratum.clone();
    let d_b = source.rho_pairing();
    let d_t = target.rho_pairing();
    let source_bundle = source.to_bundle();
    let tate = Rational::new(rho_pairing_weight(weight.entries()), 2);
    let dec = hecke(phi, weight, &f_xi)?;
    let dual = direction == Direction::Inverse;
    let mut pieces = Vec::new();
    for term in stalk(&dec, target) {
        let sigma_dual_form = if dual {
            Some(sigma_chi(phi, &weight.dual(), &term.chi.inverse())?)
        } else {
            None
        };
        pieces.push(CohomologyPiece {
            chi: term.chi.clone(),
            rep: term.sheaf.rep.clone(),
            induction: None,
            modulus_exponent: term.sheaf.modulus_half_exponent,
            sigma: term.sigma,
            dual,
            sigma_dual_form,
            shift: -d_t - d_b,
            hecke_shift: -d_t + d_b,
            tate,
        });
    }
    let ledger = vec![
        ledger("S_μ normalization", format!("Tate twist ⟨2ρ,μ⟩/2 = {tate}")),
        ledger("source slot", format!("κ_b^{{-1}} = δ_b on π_ξ, b = {source}")),
        ledger("F_ξ = i_{b!}(δ^{-1/2} ⊗ π_ξ)[−d_b]", format!("undo [−d_b]: +{d_b}")),
        ledger("stalk i_{b'}^* F_{χξ}", format!("δ_{{b'}}^{{-1/2}}, shift −d_{{b'}} = {}", -d_t)),
        ledger("[2d_b] on the cohomology side", format!("−2d_b = {}", -2 * d_b)),
    ];
    let mut notes = Vec::new();
    if is_two_slope_example(phi, xi, weight, target) {
        notes.push(format!(
            "⟨2ρ, ν_b⟩ = n_1 − n_2 = {d_b} here; a negative value n_2 − n_1 is sometimes quoted for this case"
        ));
    }
    Ok(CohomologyOutput {
        convention: direction.convention().into(),
        source,
        source_rep: f_xi.rep,
        source_twist: modulus_exponents(&source_bundle),
        target: target.clone(),
        pieces,
        ledger,
        notes,
    })
}

/// `φ = φ_1 ⊕ φ_2` with `n_1 > n_2`, `ξ = (−1, −1)`, `Λ^2`-type weight and
/// trivial target.
fn is_two_slope_example(phi: &LParamShape, xi: &Character, weight: &HighestWeight, target: &NewtonPoint) -> bool {
    let dims = phi.dims();
    dims.len() == 2
        && dims[0] > dims[1]
        && xi.entries() == [-1, -1]
        && *weight == HighestWeight::fundamental(weight.n(), 2)
        && *target == NewtonPoint::basic(phi.n(), 0)
}

/// Factored presentation of the Harris–Viehmann formula.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LeviPresentation {
    /// Block sizes of the Levi `M`, in decreasing bundle slope order.
    pub blocks: Vec<u64>,
    pub d_m: i64,
    /// `μ_j = (1^{deg E(λ_j)}, 0^{rank − deg})` when `μ` is of this shape.
    pub mu_components: Option<Vec<Vec<i64>>>,
    /// Branching of `r_{μ^{-1}}` to `M` otherwise.
    pub branching: Option<Vec<(Monomial, u64)>>,
    pub text: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HvOutput {
    pub cohomology: CohomologyOutput,
    pub levi: LeviPresentation,
}

/// `RΓ_c(GL_n, b, μ)[δ_b^{1/2} ⊗ π_b] = π_1 ⊠ Hom_{S_φ}(χ_b^{-1}, r_{μ^{-1}} ∘ φ)[−d_b]`
/// with `b = b_ξ`.
pub fn harris_viehmann(phi: &LParamShape, xi: &Character, mu_inv: &HighestWeight) -> Result<HvOutput> {
    if !check_a1(phi) {
        return Err(Error::InvalidShape("(A1) does not hold for this parameter".into()));
    }
    if mu_inv.n() as u64 != phi.n() {
        return Err(Error::RankMismatch { expected: phi.n(), found: mu_inv.n() as u64 });
    }
    let bundle = chi_to_bundle(phi, xi)?;
    let b = NewtonPoint::from_bundle(&bundle);
    if !b_to_chis(phi, &b)?.contains(xi) {
        return Err(Error::Irrelevant(format!("{xi} does not map to {b}")));
    }
    let d_b = b.rho_pairing();
    let mu = mu_inv.dual();
    let sigma = sigma_chi(phi, mu_inv, &xi.inverse())?;
    let dual_form = sigma_chi(phi, &mu, xi)?;
    let pi_1 = chi_to_rep(phi, &Character::identity(phi.r()))?;
    let levi = levi_presentation(&bundle, &mu, mu_inv)?;
    let piece = CohomologyPiece {
        chi: xi.inverse(),
        rep: pi_1.clone(),
        induction: Some(levi.text.clone()),
        modulus_exponent: Rational::from_integer(0),
        sigma,
        dual: true,
        sigma_dual_form: Some(dual_form),
        shift: -d_b,
        hecke_shift: -d_b,
        tate: Rational::from_integer(0),
    };
    let mut notes = Vec::new();
    if is_two_slope_example(phi, xi, &mu, &NewtonPoint::basic(phi.n(), 0)) {
        notes.push(format!(
            "⟨2ρ, ν_b⟩ = n_1 − n_2 = {d_b} here; a negative value n_2 − n_1 is sometimes quoted for this case"
        ));
    }
    let cohomology = CohomologyOutput {
        convention: Direction::Inverse.convention().into(),
        source: b.clone(),
        source_rep: chi_to_rep(phi, xi)?,
        source_twist: modulus_exponents(&bundle),
        target: NewtonPoint::basic(phi.n(), 0),
        pieces: vec![piece],
        ledger: vec![
            ledger("source slot", format!("δ_b^{{1/2}} ⊗ π_b, b = {b}")),
            ledger("degree", format!("[−d_b] with d_b = ⟨2ρ, ν_b⟩ = {d_b}")),
            ledger("Levi", format!("d_M = {}", levi.d_m)),
        ],
        notes,
    };
    Ok(HvOutput { cohomology, levi })
}

/// One output per `χ` with `b_χ = b`; rejects strata that no `χ` reaches.
pub fn harris_viehmann_at(phi: &LParamShape, b: &NewtonPoint, mu_inv: &HighestWeight) -> Result<Vec<HvOutput>> {
    let chis = b_to_chis(phi, b)?;
    if chis.is_empty() {
        return Err(Error::Irrelevant(format!("no character of S_φ maps to {b}")));
    }
    chis.iter().map(|xi| harris_viehmann(phi, xi, mu_inv)).collect()
}

fn levi_presentation(bundle: &BundleSpec, mu: &HighestWeight, mu_inv: &HighestWeight) -> Result<LeviPresentation> {
    let blocks: Vec<u64> = bundle.parts().iter().map(|p| p.rank()).collect();
    let is_zero_one = mu.entries().iter().all(|&x| x == 0 || x == 1);
    let degrees: Vec<i64> = bundle.parts().iter().map(|p| p.degree()).collect();
    let fits = is_zero_one && degrees.iter().zip(&blocks).all(|(&d, &r)| 0 <= d && d as u64 <= r);
    let (mu_components, branching) = if fits {
        let comps = degrees
            .iter()
            .zip(&blocks)
            .map(|(&d, &r)| (0..r as i64).map(|i| i64::from(i < d)).collect())
            .collect();
        (Some(comps), None)
    } else {
        (None, Some(levi_branching(mu_inv, &blocks)?))
    };
    let sizes: Vec<String> = blocks.iter().map(u64::to_string).collect();
    let text = format!(
        "Ind_P^{{GL_{}}} RΓ_c(M, b_M, μ_M), M = GL_{{{}}}",
        blocks.iter().sum::<u64>(),
        sizes.join(",")
    );
    Ok(LeviPresentation { blocks, d_m: 0, mu_components, branching, text })
}

/// Which statement the factorization comes from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoyerDirection {
    /// The `b'` side splits strictly; `μ_1` is the top `m` entries.
    Proposition,
    /// The `b` side splits strictly and `b_1 ≅ b'_1`; `μ_1 = 0`.
    Corollary,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoyerFactorization {
    pub direction: BoyerDirection,
    pub m: u64,
    pub b1: BundleSpec,
    pub b2: BundleSpec,
    pub bp1: BundleSpec,
    pub bp2: BundleSpec,
    pub mu1: Vec<i64>,
    pub mu2: Vec<i64>,
    /// `G` of the side whose pairings define `d`.
    pub group: String,
    pub group_b: String,
    pub group_bprime: String,
    pub parabolic: String,
    pub parabolic_proper: bool,
    /// `⟨2ρ, ν⟩`, `⟨2ρ_m, ν_1⟩`, `⟨2ρ_{n−m}, ν_2⟩` on the side used for `d`.
    pub rho_full: i64,
    pub rho_1: i64,
    pub rho_2: i64,
    pub d: i64,
    pub h: i64,
    pub kappa_twist: CharacterExponents,
    /// Ranks of the factors `kappa_twist` is indexed by.
    pub factor_ranks: Vec<u64>,
    pub notes: Vec<String>,
}

fn validate_mu(mu: &[i64]) -> Result<()> {
    if mu.windows(2).any(|w| w[1] > w[0]) {
        return Err(Error::NotDominant(mu.to_vec()));
    }
    if mu[0] - mu[mu.len() - 1] > 1 {
        return Err(Error::NotMinuscule(mu.to_vec()));
    }
    Ok(())
}

pub fn boyer_applicable(b: &BundleSpec, bp: &BundleSpec, mu: &[i64], m: u64) -> bool {
    boyer_factorize(b, bp, mu, m).is_ok()
}

pub fn boyer_factorize(b: &BundleSpec, bp: &BundleSpec, mu: &[i64], m: u64) -> Result<BoyerFactorization> {
    let n = b.rank();
    if bp.rank() != n {
        return Err(Error::RankMismatch { expected: n, found: bp.rank() });
    }
    if mu.len() as u64 != n {
        return Err(Error::LengthMismatch { expected: n as usize, found: mu.len() });
    }
    validate_mu(mu)?;
    let total: i64 = mu.iter().sum();
    if total != bp.degree() - b.degree() {
        return Err(Error::DegreeBalance { mu: total, diff: bp.degree() - b.degree() });
    }
    if m == 0 || m >= n {
        return Err(Error::BoyerInapplicable(format!("split rank {m} must satisfy 0 < m < {n}")));
    }
    let (b1, b2) = b
        .split_at_rank(m)
        .ok_or_else(|| Error::BoyerInapplicable(format!("{b} has no summand boundary at rank {m}")))?;
    let (bp1, bp2) = bp
        .split_at_rank(m)
        .ok_or_else(|| Error::BoyerInapplicable(format!("{bp} has no summand boundary at rank {m}")))?;
    let split = Split { b1, b2, bp1, bp2 };
    let prop = proposition(b, bp, mu, m, &split);
    match prop {
        Ok(f) => Ok(f),
        Err(why_prop) => corollary(b, bp, mu, m, &split).map_err(|why_cor| {
            Error::BoyerInapplicable(format!("proposition: {why_prop}; corollary: {why_cor}"))
        }),
    }
}

struct Split {
    b1: BundleSpec,
    b2: BundleSpec,
    bp1: BundleSpec,
    bp2: BundleSpec,
}

fn lowest(b: &BundleSpec) -> Slope {
    b.parts().last().unwrap().slope
}

fn highest(b: &BundleSpec) -> Slope {
    b.parts()[0].slope
}

fn proposition(b: &BundleSpec, bp: &BundleSpec, mu: &[i64], m: u64, s: &Split) -> std::result::Result<BoyerFactorization, String> {
    let (mu1, mu2) = mu.split_at(m as usize);
    let expected = s.b1.degree() + mu1.iter().sum::<i64>();
    if s.bp1.degree() != expected {
        return Err(format!("deg b'_1 = {} but deg b_1 + Σ_(i≤m) k_i = {expected}", s.bp1.degree()));
    }
    if lowest(&s.bp1) <= highest(&s.bp2) {
        return Err(format!("b' does not split strictly at rank {m}"));
    }
    let proper = lowest(&s.b1) == highest(&s.b2);
    Ok(assemble(BoyerDirection::Proposition, b, bp, m, s, mu1.to_vec(), mu2.to_vec(), mu, proper))
}

fn corollary(b: &BundleSpec, bp: &BundleSpec, mu: &[i64], m: u64, s: &Split) -> std::result::Result<BoyerFactorization, String> {
    let n = mu.len();
    let cut = n - m as usize;
    if mu[cut..].iter().any(|&k| k != 0) {
        return Err(format!("the last {m} entries of μ are not all 0"));
    }
    if s.b1 != s.bp1 {
        return Err(format!("b_1 = {} differs from b'_1 = {}", s.b1, s.bp1));
    }
    if lowest(&s.b1) <= highest(&s.b2) {
        return Err(format!("b does not split strictly at rank {m}"));
    }
    let proper = lowest(&s.bp1) == highest(&s.bp2);
    Ok(assemble(BoyerDirection::Corollary, b, bp, m, s, mu[cut..].to_vec(), mu[..cut].to_vec(), mu, proper))
}

#[allow(clippy::too_many_arguments)]
fn assemble(
    direction: BoyerDirection,
    b: &BundleSpec,
    bp: &BundleSpec,
    m: u64,
    s: &Split,
    mu1: Vec<i64>,
    mu2: Vec<i64>,
    mu: &[i64],
    proper: bool,
) -> BoyerFactorization {
    // d and κ are measured on the side that splits strictly.
    let (full, one, two, other_label, other_group) = match direction {
        BoyerDirection::Proposition => (bp, &s.bp1, &s.bp2, "b", automorphism_group(b)),
        BoyerDirection::Corollary => (b, &s.b1, &s.b2, "b'", automorphism_group(bp)),
    };
    let rho_full = full.rho_pairing();
    let (rho_1, rho_2) = (one.rho_pairing(), two.rho_pairing());
    let d = rho_full - rho_1 - rho_2;
    let h = rho_pairing_weight(mu) - rho_pairing_weight(&mu1);

    // Strict split: G of the full side is G_1 × G_2 factor by factor.
    let kappa_full = kappa_exponents(full);
    let (k1, k2) = (kappa_exponents(one), kappa_exponents(two));
    let offset = one.parts().len();
    let exps = kappa_full
        .exps
        .iter()
        .map(|&(i, e)| {
            let sub = if i < offset { k1.exponent(i) } else { k2.exponent(i - offset) };
            (i, e - sub.expect("factor lists line up"))
        })
        .collect();
    let factor_ranks = full.parts().iter().map(|p| p.rank()).collect();

    let (b1_part, b2_part) = match direction {
        BoyerDirection::Proposition => (&s.b1, &s.b2),
        BoyerDirection::Corollary => (&s.bp1, &s.bp2),
    };
    let parabolic = if proper {
        format!(
            "P_{other_label} ⊂ G_{other_label} = {other_group} proper, Levi {} × {}",
            automorphism_group(b1_part),
            automorphism_group(b2_part)
        )
    } else {
        format!("P_{other_label} = G_{other_label} = {other_group}")
    };

    let mut notes = Vec::new();
    for bundle in [b, bp] {
        if let Some(note) = known_pairing_discrepancy(&bundle.slope_classes()) {
            notes.push(note);
        }
    }
    BoyerFactorization {
        direction,
        m,
        b1: s.b1.clone(),
        b2: s.b2.clone(),
        bp1: s.bp1.clone(),
        bp2: s.bp2.clone(),
        mu1,
        mu2,
        group: automorphism_group(full).to_string(),
        group_b: automorphism_group(b).to_string(),
        group_bprime: automorphism_group(bp).to_string(),
        parabolic,
        parabolic_proper: proper,
        rho_full,
        rho_1,
        rho_2,
        d,
        h,
        kappa_twist: CharacterExponents { exps },
        factor_ranks,
        notes,
    }
}

/// Sources of type-`(1, 0^{n−1})` modifications into `O(1/n') ⊕ O^{n−n'}`:
/// `O^n` and `O(1/n') ⊕ O^m ⊕ O(−1/m')` with `n' + m + m' = n`, `m' ≥ 1`.
pub fn modification_targets_rank_one(n: u64, n_prime: u64) -> Result<Vec<BundleSpec>> {
    if n_prime == 0 || n_prime > n {
        return Err(Error::InvalidShape(format!("need 1 ≤ n' ≤ n, got n = {n}, n' = {n_prime}")));
    }
    let top = Slope::new(1, n_prime as i64)?;
    let mut out = vec![BundleSpec::trivial(n)];
    for m_prime in 1..=n - n_prime {
        let m = n - n_prime - m_prime;
        let mut raw = vec![(top, 1), (Slope::new(-1, m_prime as i64)?, 1)];
        if m > 0 {
            raw.push((Slope::ZERO, m));
        }
        out.push(BundleSpec::normalize(raw)?);
    }
    Ok(out)
}

/// Necessary conditions for a modification of type `μ` from `E_b` to
/// `E_{b'}`: degree balance and, after a central twist making `μ ≥ 0`, the
/// polygon bound `HN(E_b) ≤ HN(E_{b'})`. Not sufficient in general.
pub fn modification_necessary(b: &BundleSpec, bp: &BundleSpec, mu: &[i64]) -> Result<bool> {
    let n = b.rank();
    if bp.rank() != n {
        return Err(Error::RankMismatch { expected: n, found: bp.rank() });
    }
    if mu.len() as u64 != n {
        return Err(Error::LengthMismatch { expected: n as usize, found: mu.len() });
    }
    if mu.windows(2).any(|w| w[1] > w[0]) {
        return Err(Error::NotDominant(mu.to_vec()));
    }
    if mu.iter().sum::<i64>() != bp.degree() - b.degree() {
        return Ok(false);
    }
    let low = *mu.last().unwrap();
    let target = if low < 0 { bp.twist(-low) } else { bp.clone() };
    let (src, dst) = (b.hn_polygon(), target.hn_polygon());
    Ok((0..=n as i64).all(|x| {
        let x = Rational::from_integer(x);
        src.value_at(x).unwrap() <= dst.value_at(x).unwrap()
    }))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IgusaPiece {
    pub chi: Character,
    pub rep: RepSymbol,
    pub modulus_half_exponent: Rational,
    pub text: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IgusaOutput {
    pub stratum: NewtonPoint,
    pub degree: i64,
    pub multiplicity: String,
    pub similitude: String,
    pub pieces: Vec<IgusaPiece>,
}

fn minus_mu(mu: &HighestWeight) -> Vec<i64> {
    mu.dual().entries().to_vec()
}

/// `H^{d_b}_c(Ig_b, L)[Π^{∞,p}] = m ⊕_{χ: b_χ = b} δ_b^{1/2} ⊗ (π_χ × ω)`.
pub fn igusa_cohomology(phi: &LParamShape, mu: &HighestWeight, b: &NewtonPoint) -> Result<IgusaOutput> {
    if !check_a1(phi) {
        return Err(Error::InvalidShape("(A1) does not hold for this parameter".into()));
    }
    if mu.n() as u64 != phi.n() {
        return Err(Error::RankMismatch { expected: phi.n(), found: mu.n() as u64 });
    }
    if !mu.is_minuscule() {
        return Err(Error::NotMinuscule(mu.entries().to_vec()));
    }
    let neg = minus_mu(mu);
    if !enumerate_b(neg.len(), &neg)?.contains(b) {
        return Err(Error::OutsideKottwitzSet(HighestWeight::new(neg)?.to_string()));
    }
    let labels = phi.labels();
    let pieces = b_to_chis(phi, b)?
        .into_iter()
        .map(|chi| {
            let rep = chi_to_rep(phi, &chi)?;
            let text = format!("δ_b^{{1/2}} ⊗ ({} × ω)", rep.render(&labels));
            Ok(IgusaPiece { chi, rep, modulus_half_exponent: Rational::new(1, 2), text })
        })
        .collect::<Result<_>>()?;
    Ok(IgusaOutput {
        stratum: b.clone(),
        degree: b.rho_pairing(),
        multiplicity: "m".into(),
        similitude: "ω".into(),
        pieces,
    })
}

/// The graded piece of the Mantovan filtration attached to `b`.
pub fn mantovan_piece(mu: &HighestWeight, b: &NewtonPoint) -> String {
    let d = rho_pairing_weight(mu.entries());
    let d_b = b.rho_pairing();
    let tate = Rational::new(-d, 2);
    format!(
        "RΓ_c(GL_{}, b, μ) ⊗_{{H(G_b)}} RΓ_c(Ig_b)[{}]({}) for b = {}",
        mu.n(),
        2 * d_b - d,
        tate,
        b
    )
}

/// One graded piece per `b ∈ B(GL_n, −μ)`.
pub fn mantovan_pieces(mu: &HighestWeight) -> Result<Vec<(NewtonPoint, String)>> {
    let neg = minus_mu(mu);
    Ok(enumerate_b(neg.len(), &neg)?
        .into_iter()
        .map(|b| {
            let text = mantovan_piece(mu, &b);
            (b, text)
        })
        .collect())
}

/// `b_χ` for the character attached to `ξ`, exposed for callers that only
/// hold a character.
pub fn stratum_of(phi: &LParamShape, xi: &Character) -> Result<NewtonPoint> {
    chi_to_b(phi, xi)
}
