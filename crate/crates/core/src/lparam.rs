//! Parameter skeletons `φ = φ_1 ⊕ … ⊕ φ_r`, characters of `S_φ ≅ G_m^r`,
//! and the bijection `χ ↦ (b_χ, π_χ)` with its inverse enumeration.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ffbundle::{gcd, BundleSpec, Rational, Slope};
use crate::kottwitz::{automorphism_group, InnerFormGroup, NewtonPoint};

/// One irreducible summand `φ_i` of the parameter.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Component {
    pub label: String,
    pub dim: u64,
    pub torsion: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub frobenius: Option<Vec<String>>,
}

/// A semisimple parameter recorded by its components.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LParamShape {
    components: Vec<Component>,
    /// Caller's assertion that the components stay pairwise distinct after
    /// any unramified twist.
    a1_asserted: bool,
}

impl LParamShape {
    pub fn new(components: Vec<Component>, a1_asserted: bool) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::InvalidShape("a parameter needs at least one component".into()));
        }
        for c in &components {
            if c.dim == 0 {
                return Err(Error::InvalidShape(format!("{} has dimension 0", c.label)));
            }
            if c.torsion == 0 {
                return Err(Error::InvalidShape(format!("{} has torsion number 0", c.label)));
            }
            if let Some(f) = &c.frobenius {
                if f.len() as u64 != c.dim {
                    return Err(Error::InvalidShape(format!(
                        "{} has {} Frobenius symbols but dimension {}",
                        c.label,
                        f.len(),
                        c.dim
                    )));
                }
            }
        }
        Ok(LParamShape { components, a1_asserted })
    }

    /// Components `φ_1, …, φ_r` of the given dimensions, torsion 1, with
    /// (A1) asserted.
    pub fn from_dims(dims: &[u64]) -> Result<Self> {
        let components = dims
            .iter()
            .enumerate()
            .map(|(i, &dim)| Component {
                label: format!("φ_{}", i + 1),
                dim,
                torsion: 1,
                frobenius: None,
            })
            .collect();
        LParamShape::new(components, true)
    }

    pub fn with_torsion(mut self, torsion: &[u64]) -> Result<Self> {
        if torsion.len() != self.components.len() {
            return Err(Error::LengthMismatch { expected: self.components.len(), found: torsion.len() });
        }
        for (c, &k) in self.components.iter_mut().zip(torsion) {
            c.torsion = k;
        }
        LParamShape::new(self.components, self.a1_asserted)
    }

    pub fn components(&self) -> &[Component] {
        &self.components
    }

    pub fn r(&self) -> usize {
        self.components.len()
    }

    pub fn dims(&self) -> Vec<u64> {
        self.components.iter().map(|c| c.dim).collect()
    }

    pub fn n(&self) -> u64 {
        self.components.iter().map(|c| c.dim).sum()
    }

    pub fn labels(&self) -> Vec<String> {
        self.components.iter().map(|c| c.label.clone()).collect()
    }

    pub fn a1_asserted(&self) -> bool {
        self.a1_asserted
    }

    fn check_len(&self, chi: &Character) -> Result<()> {
        if chi.len() != self.r() {
            return Err(Error::LengthMismatch { expected: self.r(), found: chi.len() });
        }
        Ok(())
    }
}

/// A character `(d_1, …, d_r)` of `S_φ`; the group law is addition.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Character(Vec<i64>);

impl Character {
    pub fn new(d: Vec<i64>) -> Self {
        Character(d)
    }

    pub fn identity(r: usize) -> Self {
        Character(vec![0; r])
    }

    /// `χ_i`: 1 in slot `i`, 0 elsewhere.
    pub fn basis(r: usize, i: usize) -> Self {
        let mut d = vec![0; r];
        d[i] = 1;
        Character(d)
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().all(|&d| d == 0)
    }

    /// `χ·χ'`. Panics on a length mismatch.
    pub fn mul(&self, other: &Character) -> Character {
        assert_eq!(self.len(), other.len(), "characters of different tori");
        Character(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn inverse(&self) -> Character {
        Character(self.0.iter().map(|d| -d).collect())
    }

    pub fn degree(&self) -> i64 {
        self.0.iter().sum()
    }
}

impl fmt::Display for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for Character {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "χ{self}")
    }
}

/// `E_{b_χ} = ⊕_i O(d_i/n_i)^{gcd(d_i, n_i)}`.
pub fn chi_to_bundle(phi: &LParamShape, chi: &Character) -> Result<BundleSpec> {
    phi.check_len(chi)?;
    let raw = phi.components.iter().zip(chi.entries()).map(|(c, &d)| {
        let n = c.dim as i64;
        (Slope::new(d, n).expect("dim > 0"), gcd(d, n).unsigned_abs())
    });
    BundleSpec::normalize(raw)
}

pub fn chi_to_b(phi: &LParamShape, chi: &Character) -> Result<NewtonPoint> {
    Ok(NewtonPoint::from_bundle(&chi_to_bundle(phi, chi)?))
}

/// Components whose bundle slope `d_j/n_j` equals `slope`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SlopeClass {
    pub slope: Slope,
    pub members: Vec<usize>,
}

/// `π_χ`, the representation of `G_{b_χ}` with parameter `φ_χ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RepSymbol {
    pub stratum: NewtonPoint,
    /// In decreasing bundle slope order, parallel to `group.factors`.
    pub classes: Vec<SlopeClass>,
    pub group: InnerFormGroup,
}

impl RepSymbol {
    /// `π⟨O(λ): φ_i ⊕ φ_j | …⟩` using the given component labels.
    pub fn render(&self, labels: &[String]) -> String {
        let blocks: Vec<String> = self
            .classes
            .iter()
            .map(|c| {
                let bundle = if c.slope == Slope::ZERO { "O".to_string() } else { format!("O({})", c.slope) };
                let members: Vec<&str> = c.members.iter().map(|&j| labels[j].as_str()).collect();
                format!("{bundle}: {}", members.join(" ⊕ "))
            })
            .collect();
        format!("π⟨{}⟩", blocks.join(" | "))
    }

    pub fn is_trivial_stratum(&self) -> bool {
        self.classes.len() == 1 && self.classes[0].slope == Slope::ZERO
    }
}

pub fn chi_to_rep(phi: &LParamShape, chi: &Character) -> Result<RepSymbol> {
    let bundle = chi_to_bundle(phi, chi)?;
    let mut classes: Vec<SlopeClass> = bundle
        .parts()
        .iter()
        .map(|p| SlopeClass { slope: p.slope, members: Vec::new() })
        .collect();
    for (j, (c, &d)) in phi.components.iter().zip(chi.entries()).enumerate() {
        let slope = Slope::new(d, c.dim as i64).expect("dim > 0");
        let class = classes.iter_mut().find(|k| k.slope == slope).expect("slope occurs in bundle");
        class.members.push(j);
    }
    Ok(RepSymbol {
        stratum: NewtonPoint::from_bundle(&bundle),
        classes,
        group: automorphism_group(&bundle),
    })
}

/// A sheaf `i_{b!}(δ_b^{e} ⊗ π)[s](t)` on `Bun_n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SheafSymbol {
    pub stratum: NewtonPoint,
    pub rep: RepSymbol,
    pub modulus_half_exponent: Rational,
    pub shift: i64,
    pub tate_twist: Rational,
}

impl SheafSymbol {
    pub fn render(&self, labels: &[String]) -> String {
        let mut s = format!(
            "i_{{b!}}(δ_b^{} ⊗ {})[{}]",
            self.modulus_half_exponent,
            self.rep.render(labels),
            self.shift
        );
        if self.tate_twist != Rational::from_integer(0) {
            s.push_str(&format!("({})", self.tate_twist));
        }
        s.push_str(&format!(" on b = {}", self.stratum));
        s
    }
}

/// `F_χ = i_{b_χ!}(δ_{b_χ}^{-1/2} ⊗ π_χ)[−d_χ]`.
pub fn make_f(phi: &LParamShape, chi: &Character) -> Result<SheafSymbol> {
    let rep = chi_to_rep(phi, chi)?;
    let shift = -rep.stratum.rho_pairing();
    Ok(SheafSymbol {
        stratum: rep.stratum.clone(),
        rep,
        modulus_half_exponent: Rational::new(-1, 2),
        shift,
        tate_twist: Rational::from_integer(0),
    })
}

/// Recovers `ξ` from a sheaf of the form `F_ξ`; anything else is rejected.
pub fn sheaf_character(phi: &LParamShape, sheaf: &SheafSymbol) -> Result<Character> {
    let mut d = vec![None; phi.r()];
    for class in &sheaf.rep.classes {
        for &j in &class.members {
            let slot = d
                .get_mut(j)
                .ok_or_else(|| Error::NotInOrbit(format!("component index {j} out of range")))?;
            let value = class.slope.value() * phi.components[j].dim as i64;
            if !value.is_integer() || slot.is_some() {
                return Err(Error::NotInOrbit(format!("slope class {} does not fit φ", class.slope)));
            }
            *slot = Some(value.to_integer());
        }
    }
    let d: Option<Vec<i64>> = d.into_iter().collect();
    let xi = Character::new(d.ok_or_else(|| Error::NotInOrbit("some component is unassigned".into()))?);
    if make_f(phi, &xi)? != *sheaf {
        return Err(Error::NotInOrbit(format!("sheaf differs from F_{xi}")));
    }
    Ok(xi)
}

/// All `χ` with `b_χ = b`, in lexicographic order.
pub fn b_to_chis(phi: &LParamShape, b: &NewtonPoint) -> Result<Vec<Character>> {
    if b.rank() != phi.n() {
        return Err(Error::RankMismatch { expected: phi.n(), found: b.rank() });
    }
    let bundle = b.to_bundle();
    let classes = bundle.slope_classes();
    let mut order: Vec<usize> = (0..phi.r()).collect();
    order.sort_by_key(|&j| std::cmp::Reverse(phi.components[j].dim));
    let mut remaining: Vec<u64> = classes.iter().map(|c| c.1).collect();
    let mut assign = vec![0usize; phi.r()];
    let mut out = BTreeSet::new();
    assign_classes(phi, &classes, &order, 0, &mut remaining, &mut assign, &mut out);
    Ok(out.into_iter().collect())
}

fn assign_classes(
    phi: &LParamShape,
    classes: &[(Slope, u64)],
    order: &[usize],
    pos: usize,
    remaining: &mut [u64],
    assign: &mut [usize],
    out: &mut BTreeSet<Character>,
) {
    if pos == order.len() {
        if remaining.iter().all(|&r| r == 0) {
            let d = assign
                .iter()
                .enumerate()
                .map(|(j, &l)| (classes[l].0.value() * phi.components[j].dim as i64).to_integer())
                .collect();
            out.insert(Character::new(d));
        }
        return;
    }
    let j = order[pos];
    let n_j = phi.components[j].dim;
    for l in 0..classes.len() {
        if !n_j.is_multiple_of(classes[l].0.den() as u64) || remaining[l] < n_j {
            continue;
        }
        remaining[l] -= n_j;
        assign[j] = l;
        assign_classes(phi, classes, order, pos + 1, remaining, assign, out);
        remaining[l] += n_j;
    }
}

/// (A1) at the symbolic level: distinct labels and the caller's assertion.
pub fn check_a1(phi: &LParamShape) -> bool {
    let labels: BTreeSet<&str> = phi.components.iter().map(|c| c.label.as_str()).collect();
    labels.len() == phi.r() && phi.a1_asserted
}

/// (A2) under formal independence of Frobenius eigenvalues: the
/// eigenvalue multisets of `σ_χ` and `σ_χ'` are disjoint iff `χ ≠ χ'`.
pub fn a2_separates(phi: &LParamShape, chi: &Character, chi2: &Character) -> Result<bool> {
    phi.check_len(chi)?;
    phi.check_len(chi2)?;
    Ok(chi != chi2)
}

/// The connected component of the parameter stack containing `φ`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComponentShape {
    pub r: usize,
    pub torsion: Vec<u64>,
    pub stack: String,
    pub coordinates: String,
}

pub fn component_shape(phi: &LParamShape) -> Result<ComponentShape> {
    if !check_a1(phi) {
        return Err(Error::InvalidShape("(A1) does not hold for this parameter".into()));
    }
    let r = phi.r();
    let torsion: Vec<u64> = phi.components.iter().map(|c| c.torsion).collect();
    let power = |base: String, k: u64| if k == 1 { base } else { format!("{base}^{k}") };
    let (stack, coordinates) = if r == 1 {
        ("[G_m/G_m]".to_string(), power("t".into(), torsion[0]))
    } else {
        let coords: Vec<String> =
            torsion.iter().enumerate().map(|(i, &k)| power(format!("t_{}", i + 1), k)).collect();
        (format!("[G_m^{r}/G_m^{r}]"), format!("({})", coords.join(", ")))
    };
    Ok(ComponentShape { r, torsion, stack, coordinates })
}
