//! Highest-weight representations of `GL_n`: weight multiplicities from
//! Gelfand–Tsetlin patterns, branching to block Levi subgroups and the
//! isotypic pieces `σ_χ` of `r_λ ∘ φ`.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::lparam::{Character, LParamShape};

/// A dominant integral weight of `GL_n`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct HighestWeight(Vec<i64>);

impl HighestWeight {
    pub fn new(entries: Vec<i64>) -> Result<Self> {
        if entries.is_empty() {
            return Err(Error::InvalidShape("weights need at least one entry".into()));
        }
        if entries.windows(2).any(|w| w[1] > w[0]) {
            return Err(Error::NotDominant(entries));
        }
        Ok(HighestWeight(entries))
    }

    pub fn trivial(n: usize) -> Self {
        HighestWeight(vec![0; n])
    }

    /// `Λ^a` of the standard representation.
    pub fn fundamental(n: usize, a: usize) -> Self {
        HighestWeight((0..n).map(|i| i64::from(i < a)).collect())
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    /// Highest weight of the contragredient: `(−λ_n, …, −λ_1)`.
    pub fn dual(&self) -> HighestWeight {
        HighestWeight(self.0.iter().rev().map(|x| -x).collect())
    }

    /// Entries take at most two adjacent values.
    pub fn is_minuscule(&self) -> bool {
        self.0[0] - self.0[self.0.len() - 1] <= 1
    }

    pub fn size(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn dim(&self) -> u128 {
        weyl_dim(&self.0)
    }
}

impl fmt::Display for HighestWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(i64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl fmt::Debug for HighestWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "λ{self}")
    }
}

/// Cap on the number of Gelfand–Tsetlin patterns an enumeration may visit.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_patterns: u128,
}

impl Budget {
    pub const DEFAULT: Budget = Budget { max_patterns: 2_000_000 };

    /// Reads `BUNNCALC_BUDGET`, falling back to the default when unset or
    /// unparsable.
    pub fn from_env() -> Budget {
        std::env::var("BUNNCALC_BUDGET")
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .map_or(Budget::DEFAULT, |max_patterns| Budget { max_patterns })
    }

    fn check(&self, what: &'static str, needed: u128) -> Result<()> {
        if needed > self.max_patterns {
            return Err(Error::Budget { what, needed, budget: self.max_patterns });
        }
        Ok(())
    }
}

impl Default for Budget {
    fn default() -> Self {
        Budget::from_env()
    }
}

fn gcd_u128(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

/// `∏_{a<b} (λ_a − λ_b + b − a)/(b − a)` for a dominant weight.
pub fn weyl_dim(lambda: &[i64]) -> u128 {
    let (mut num, mut den) = (1u128, 1u128);
    for a in 0..lambda.len() {
        for b in a + 1..lambda.len() {
            let gap = (b - a) as i64;
            let top = (lambda[a] - lambda[b] + gap) as u128;
            num *= top;
            den *= gap as u128;
            let g = gcd_u128(num, den);
            num /= g;
            den /= g;
        }
    }
    debug_assert_eq!(den, 1);
    num / den
}

type WeightMap = BTreeMap<Vec<i64>, u64>;

/// Weight multiplicities of `r_λ` under the default budget.
pub fn weight_multiplicities(lambda: &HighestWeight) -> Result<WeightMap> {
    weight_multiplicities_with(lambda, &Budget::default())
}

pub fn weight_multiplicities_with(lambda: &HighestWeight, budget: &Budget) -> Result<WeightMap> {
    budget.check("Gelfand-Tsetlin patterns", lambda.dim())?;
    let shift = *lambda.0.last().unwrap();
    let top: Vec<i64> = lambda.0.iter().map(|x| x - shift).collect();
    let mut memo = HashMap::new();
    let raw = gt_weights(&top, &mut memo);
    Ok(raw
        .iter()
        .map(|(w, &m)| (w.iter().map(|x| x + shift).collect(), m))
        .collect())
}

/// Weights contributed by all patterns below `row`, as `(w_1, …, w_k)`
/// where `w_k = |row| − |row'|` for the next row `row'`.
fn gt_weights(row: &[i64], memo: &mut HashMap<Vec<i64>, WeightMap>) -> WeightMap {
    if let Some(hit) = memo.get(row) {
        return hit.clone();
    }
    let total: i64 = row.iter().sum();
    let mut out = WeightMap::new();
    if row.len() == 1 {
        out.insert(vec![total], 1);
    } else {
        let mut below = vec![0i64; row.len() - 1];
        interlacing(row, 0, &mut below, &mut |next: &[i64]| {
            let rest = gt_weights(next, memo);
            let step = total - next.iter().sum::<i64>();
            for (w, m) in rest {
                let mut w = w;
                w.push(step);
                *out.entry(w).or_insert(0) += m;
            }
        });
    }
    memo.insert(row.to_vec(), out.clone());
    out
}

fn interlacing(row: &[i64], i: usize, below: &mut Vec<i64>, visit: &mut dyn FnMut(&[i64])) {
    if i == below.len() {
        visit(below);
        return;
    }
    for v in row[i + 1]..=row[i] {
        below[i] = v;
        interlacing(row, i + 1, below, visit);
    }
}

/// A block monomial `⊗_i S_{λ^(i)}(φ_i)`.
pub type Monomial = Vec<Vec<i64>>;

fn check_blocks(n: usize, blocks: &[u64]) -> Result<()> {
    if blocks.iter().sum::<u64>() != n as u64 || blocks.contains(&0) {
        return Err(Error::BlockMismatch { blocks: blocks.to_vec(), n: n as u64 });
    }
    Ok(())
}

/// Restriction of `r_λ` to `GL_{n_1} × … × GL_{n_r}`, lexicographically
/// descending on monomials.
pub fn levi_branching(lambda: &HighestWeight, blocks: &[u64]) -> Result<Vec<(Monomial, u64)>> {
    levi_branching_with(lambda, blocks, &Budget::default())
}

pub fn levi_branching_with(
    lambda: &HighestWeight,
    blocks: &[u64],
    budget: &Budget,
) -> Result<Vec<(Monomial, u64)>> {
    check_blocks(lambda.n(), blocks)?;
    let mut remaining: BTreeMap<Vec<i64>, i64> = weight_multiplicities_with(lambda, budget)?
        .into_iter()
        .map(|(w, m)| (w, m as i64))
        .collect();
    let mut block_cache: HashMap<Vec<i64>, WeightMap> = HashMap::new();
    let mut out = Vec::new();
    // The lexicographically largest remaining weight is always the highest
    // weight of a constituent.
    while let Some((top, mult)) = remaining.iter().next_back().map(|(w, m)| (w.clone(), *m)) {
        assert!(mult > 0, "branching produced a negative multiplicity");
        let mono = split_blocks(&top, blocks);
        for part in &mono {
            if !block_cache.contains_key(part) {
                let hw = HighestWeight::new(part.clone()).expect("lex-max weight is block dominant");
                block_cache.insert(part.clone(), weight_multiplicities_with(&hw, budget)?);
            }
        }
        let maps: Vec<&WeightMap> = mono.iter().map(|part| &block_cache[part]).collect();
        subtract_product(&mut remaining, &maps, mult);
        out.push((mono, mult as u64));
    }
    Ok(out)
}

fn split_blocks(w: &[i64], blocks: &[u64]) -> Monomial {
    let mut start = 0;
    blocks
        .iter()
        .map(|&b| {
            let part = w[start..start + b as usize].to_vec();
            start += b as usize;
            part
        })
        .collect()
}

fn subtract_product(remaining: &mut BTreeMap<Vec<i64>, i64>, maps: &[&WeightMap], mult: i64) {
    let mut acc: Vec<(Vec<i64>, i64)> = vec![(Vec::new(), mult)];
    for map in maps {
        acc = acc
            .iter()
            .flat_map(|(w, m)| {
                map.iter().map(move |(part, pm)| {
                    let mut v = w.clone();
                    v.extend_from_slice(part);
                    (v, m * *pm as i64)
                })
            })
            .collect();
    }
    for (w, m) in acc {
        let entry = remaining.get_mut(&w).expect("constituent weight lies in the character");
        *entry -= m;
        assert!(*entry >= 0, "branching produced a negative multiplicity");
        if *entry == 0 {
            remaining.remove(&w);
        }
    }
}

/// A formal sum of block monomials in the components of `φ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct WeilSymbol {
    pub blocks: Vec<u64>,
    pub terms: Vec<(Monomial, u64)>,
    pub dim: u128,
}

impl WeilSymbol {
    pub fn new(blocks: Vec<u64>, terms: Vec<(Monomial, u64)>) -> Self {
        let dim = terms
            .iter()
            .map(|(mono, m)| *m as u128 * mono.iter().map(|p| weyl_dim(p)).product::<u128>())
            .sum();
        WeilSymbol { blocks, terms, dim }
    }

    pub fn zero(blocks: Vec<u64>) -> Self {
        WeilSymbol { blocks, terms: Vec::new(), dim: 0 }
    }

    pub fn trivial(blocks: Vec<u64>) -> Self {
        let mono = blocks.iter().map(|&b| vec![0; b as usize]).collect();
        WeilSymbol::new(blocks, vec![(mono, 1)])
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Renders with the given labels, e.g. `φ_1^2 ⊗ φ_2` or `Λ^2 φ_1 ⊕ Sym^2 φ_2`.
    pub fn render(&self, labels: &[String]) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let terms: Vec<String> = self
            .terms
            .iter()
            .map(|(mono, m)| {
                let factors: Vec<String> = mono
                    .iter()
                    .zip(labels)
                    .filter_map(|(part, label)| render_factor(part, label))
                    .collect();
                let body = if factors.is_empty() { "1".to_string() } else { factors.join(" ⊗ ") };
                match (*m, factors.len()) {
                    (1, _) => body,
                    (m, 0 | 1) => format!("{m}·{body}"),
                    (m, _) => format!("{m}·({body})"),
                }
            })
            .collect();
        terms.join(" ⊕ ")
    }
}

impl fmt::Display for WeilSymbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let labels: Vec<String> = (1..=self.blocks.len()).map(|i| format!("φ_{i}")).collect();
        f.write_str(&self.render(&labels))
    }
}

fn power(base: &str, k: i64) -> String {
    match k {
        1 => base.to_string(),
        k if k < 0 => format!("{base}^{{{k}}}"),
        k => format!("{base}^{k}"),
    }
}

fn render_factor(part: &[i64], label: &str) -> Option<String> {
    if part.len() == 1 {
        return (part[0] != 0).then(|| power(label, part[0]));
    }
    let c = *part.last().unwrap();
    let rest: Vec<i64> = part.iter().map(|x| x - c).collect();
    let twist = (c != 0).then(|| {
        let det = format!("det {label}");
        if c == 1 { det } else { format!("({det})^{}", if c < 0 { format!("{{{c}}}") } else { c.to_string() }) }
    });
    let ones = rest.iter().filter(|&&x| x == 1).count();
    let base = if rest.iter().all(|&x| x == 0) {
        None
    } else if rest.iter().all(|&x| x <= 1) {
        Some(if ones == 1 { label.to_string() } else { format!("Λ^{ones} {label}") })
    } else if rest[1..].iter().all(|&x| x == 0) {
        Some(format!("Sym^{} {label}", rest[0]))
    } else {
        let trimmed: Vec<String> = rest.iter().filter(|&&x| x != 0).map(i64::to_string).collect();
        Some(format!("S_({}) {label}", trimmed.join(",")))
    };
    match (base, twist) {
        (None, None) => None,
        (Some(b), None) => Some(b),
        (None, Some(t)) => Some(t),
        (Some(b), Some(t)) => Some(format!("{b} ⊗ {t}")),
    }
}

/// Block central characters `(|λ^(1)|, …, |λ^(r)|)` of a monomial.
pub fn monomial_character(mono: &Monomial) -> Character {
    Character::new(mono.iter().map(|p| p.iter().sum()).collect())
}

/// All nonzero `σ_χ` of `r_λ ∘ φ`, keyed by `χ` in lexicographic order.
pub fn isotypic_decomposition(phi: &LParamShape, lambda: &HighestWeight) -> Result<Vec<(Character, WeilSymbol)>> {
    let blocks = phi.dims();
    let terms = levi_branching(lambda, &blocks)?;
    let mut grouped: BTreeMap<Character, Vec<(Monomial, u64)>> = BTreeMap::new();
    for (mono, m) in terms {
        grouped.entry(monomial_character(&mono)).or_default().push((mono, m));
    }
    Ok(grouped
        .into_iter()
        .map(|(chi, terms)| (chi, WeilSymbol::new(blocks.clone(), terms)))
        .collect())
}

/// `σ_χ = Hom_{S_φ}(χ, r_λ ∘ φ)`.
pub fn sigma_chi(phi: &LParamShape, lambda: &HighestWeight, chi: &Character) -> Result<WeilSymbol> {
    if chi.len() != phi.r() {
        return Err(Error::LengthMismatch { expected: phi.r(), found: chi.len() });
    }
    let blocks = phi.dims();
    let terms = levi_branching(lambda, &blocks)?
        .into_iter()
        .filter(|(mono, _)| monomial_character(mono) == *chi)
        .collect();
    Ok(WeilSymbol::new(blocks, terms))
}
