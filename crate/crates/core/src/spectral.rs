//! The spectral action on the orbit of sheaves `F_ξ`, Hecke operators and
//! stalks of the Hecke eigensheaf `G_φ = ⊕_χ F_χ`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kottwitz::NewtonPoint;
use crate::lparam::{b_to_chis, check_a1, make_f, sheaf_character, Character, LParamShape, SheafSymbol};
use crate::weights::{isotypic_decomposition, HighestWeight, WeilSymbol};

/// `C_χ ⋆ F_ξ = F_{χξ}`.
pub fn spectral_act(phi: &LParamShape, chi: &Character, sheaf: &SheafSymbol) -> Result<SheafSymbol> {
    let xi = sheaf_character(phi, sheaf)?;
    if chi.len() != xi.len() {
        return Err(Error::LengthMismatch { expected: xi.len(), found: chi.len() });
    }
    make_f(phi, &chi.mul(&xi))
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct HeckeTerm {
    pub chi: Character,
    pub sheaf: SheafSymbol,
    pub sigma: WeilSymbol,
}

/// `T_λ(F) = ⊕_χ C_χ ⋆ F ⊠ σ_χ`, zero terms omitted.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HeckeDecomposition {
    pub terms: Vec<HeckeTerm>,
}

impl HeckeDecomposition {
    pub fn total_dim(&self) -> u128 {
        self.terms.iter().map(|t| t.sigma.dim).sum()
    }
}

pub fn hecke(phi: &LParamShape, lambda: &HighestWeight, sheaf: &SheafSymbol) -> Result<HeckeDecomposition> {
    if lambda.n() as u64 != phi.n() {
        return Err(Error::RankMismatch { expected: phi.n(), found: lambda.n() as u64 });
    }
    let iso = isotypic_decomposition(phi, lambda)?;
    hecke_with(phi, &iso, sheaf)
}

fn hecke_with(
    phi: &LParamShape,
    iso: &[(Character, WeilSymbol)],
    sheaf: &SheafSymbol,
) -> Result<HeckeDecomposition> {
    let xi = sheaf_character(phi, sheaf)?;
    let terms = iso
        .iter()
        .filter(|(_, sigma)| sigma.dim > 0)
        .map(|(chi, sigma)| {
            Ok(HeckeTerm { chi: chi.clone(), sheaf: make_f(phi, &chi.mul(&xi))?, sigma: sigma.clone() })
        })
        .collect::<Result<_>>()?;
    Ok(HeckeDecomposition { terms })
}

/// `i_b^*` of a decomposition: the terms supported on `b`.
pub fn stalk(dec: &HeckeDecomposition, b: &NewtonPoint) -> Vec<HeckeTerm> {
    dec.terms.iter().filter(|t| t.sheaf.stratum == *b).cloned().collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EigensheafStalk {
    pub stratum: NewtonPoint,
    pub chis: Vec<Character>,
    pub pieces: Vec<SheafSymbol>,
}

/// `G_φ|_b = ⊕_{χ: b_χ = b} F_χ`.
pub fn eigensheaf_stalk(phi: &LParamShape, b: &NewtonPoint) -> Result<EigensheafStalk> {
    let chis = b_to_chis(phi, b)?;
    let pieces = chis.iter().map(|c| make_f(phi, c)).collect::<Result<_>>()?;
    Ok(EigensheafStalk { stratum: b.clone(), chis, pieces })
}

/// Checks `T_λ(G_φ)|_b = G_φ|_b ⊠ (r_λ ∘ φ)` termwise for each listed `b`.
///
/// The left side is assembled by running [`hecke`] on every `F_ξ` whose
/// translates can land on `b`, the right side from the eigensheaf stalk and
/// the isotypic decomposition. Both are compared as multisets of
/// `(sheaf, σ)` pairs.
pub fn verify_eigen(phi: &LParamShape, lambda: &HighestWeight, strata: &[NewtonPoint]) -> Result<bool> {
    if !check_a1(phi) {
        return Err(Error::InvalidShape("(A1) does not hold for this parameter".into()));
    }
    if lambda.n() as u64 != phi.n() {
        return Err(Error::RankMismatch { expected: phi.n(), found: lambda.n() as u64 });
    }
    let iso = isotypic_decomposition(phi, lambda)?;
    for b in strata {
        let etas = b_to_chis(phi, b)?;
        let mut rhs: Vec<(SheafSymbol, WeilSymbol)> = Vec::new();
        for eta in &etas {
            let piece = make_f(phi, eta)?;
            for (_, sigma) in &iso {
                rhs.push((piece.clone(), sigma.clone()));
            }
        }
        let mut lhs: Vec<(SheafSymbol, WeilSymbol)> = Vec::new();
        if !etas.is_empty() {
            for xi in window(&etas, &iso) {
                let dec = hecke_with(phi, &iso, &make_f(phi, &xi)?)?;
                lhs.extend(stalk(&dec, b).into_iter().map(|t| (t.sheaf, t.sigma)));
            }
        }
        let key = |p: &(SheafSymbol, WeilSymbol)| format!("{:?}", p);
        lhs.sort_by_cached_key(key);
        rhs.sort_by_cached_key(key);
        if lhs != rhs {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Every `ξ` in the box `[min η − max χ, max η − min χ]` (componentwise).
/// Any `ξ` with `χξ = η` for some listed `η` and `χ` lies in it.
fn window(etas: &[Character], iso: &[(Character, WeilSymbol)]) -> Vec<Character> {
    let r = etas[0].len();
    let ranges: Vec<(i64, i64)> = (0..r)
        .map(|i| {
            let e = etas.iter().map(|c| c.entries()[i]);
            let x = iso.iter().map(|(c, _)| c.entries()[i]);
            let (emin, emax) = (e.clone().min().unwrap(), e.max().unwrap());
            let (xmin, xmax) = (x.clone().min().unwrap_or(0), x.max().unwrap_or(0));
            (emin - xmax, emax - xmin)
        })
        .collect();
    let mut out = vec![Vec::new()];
    for (lo, hi) in ranges {
        out = out
            .into_iter()
            .flat_map(|prefix: Vec<i64>| {
                (lo..=hi).map(move |v| {
                    let mut p = prefix.clone();
                    p.push(v);
                    p
                })
            })
            .collect();
    }
    out.into_iter().map(Character::new).collect()
}
