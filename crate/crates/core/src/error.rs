use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u32),
    #[error("variable weights must be positive, one per variable")]
    InvalidWeights,
    #[error("invalid monomial order {0}")]
    InvalidOrder(String),
    #[error("at most 16 variables are supported, got {0}")]
    TooManyVariables(usize),
    #[error("duplicate variable name `{0}`")]
    DuplicateVariable(String),
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("input is not homogeneous: {0}")]
    NonHomogeneous(String),
    #[error("depth of the zero module is undefined")]
    ZeroModule,
    #[error("saturation did not stabilize within {0} colon steps")]
    SaturationCap(usize),
    #[error("ring is not Cohen-Macaulay (depth {depth} < dim {dim})")]
    NotCohenMacaulay { depth: i64, dim: i64 },
    #[error("ideal must be proper and nonzero: {0}")]
    InvalidIdeal(String),
    #[error("reduction not confirmed up to r_max = {0}")]
    ReductionNotConfirmed(u32),
    #[error("no reduction by {s} generic combinations after {draws} draws (analytic spread wrong or p too small?)")]
    GenericityFailure { s: usize, draws: usize },
    #[error("{0}")]
    Invalid(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
