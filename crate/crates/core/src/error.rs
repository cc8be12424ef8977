use thiserror::Error;

/// Errors raised by the symbolic calculator.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator in slope {0}/0")]
    ZeroDenominator(i64),

    #[error("empty bundle: at least one summand is required")]
    EmptyBundle,

    #[error("multiplicity must be positive (got {0})")]
    ZeroMultiplicity(u64),

    #[error("slope classes must be strictly decreasing")]
    UnsortedClasses,

    #[error("slope class {slope} with {count} entries has non-integral total degree")]
    NonIntegralClass { slope: String, count: u64 },

    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: u64, found: u64 },

    #[error("length mismatch: expected {expected}, found {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("weight {0:?} is not dominant (entries must be weakly decreasing)")]
    NotDominant(Vec<i64>),

    #[error("cocharacter {0:?} is not minuscule up to a central shift")]
    NotMinuscule(Vec<i64>),

    #[error("block sizes {blocks:?} do not sum to {n}")]
    BlockMismatch { blocks: Vec<u64>, n: u64 },

    #[error("invalid parameter shape: {0}")]
    InvalidShape(String),

    #[error("sheaf is not of the form F_xi for this parameter: {0}")]
    NotInOrbit(String),

    #[error("enumeration budget exceeded: {needed} > {budget} ({what})")]
    Budget { what: &'static str, needed: u128, budget: u128 },

    #[error("parameter is not relevant for this stratum: {0}")]
    Irrelevant(String),

    #[error("stratum is not in B(GL_n, {0})")]
    OutsideKottwitzSet(String),

    #[error("degree balance fails: deg mu = {mu}, deg target - deg source = {diff}")]
    DegreeBalance { mu: i64, diff: i64 },

    #[error("Boyer factorization not applicable: {0}")]
    BoyerInapplicable(String),

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

impl Error {
    /// Parse errors map to a distinct exit status at the command line.
    pub fn is_parse(&self) -> bool {
        matches!(self, Error::Parse { .. })
    }
}

pub type Result<T> = std::result::Result<T, Error>;
