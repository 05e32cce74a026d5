use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("polynomial is not divisible by the given divisor")]
    Indivisible,
    #[error("exponent overflow: {0}")]
    UnsupportedSize(String),
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("resource limit exceeded after {steps} reduction steps")]
    ResourceLimit { steps: u64 },
    #[error("ideal is not zero-dimensional: {0}")]
    NotZeroDimensional(String),
    #[error("no separating linear form found after {attempts} attempts")]
    ShapePosition { attempts: usize },
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("point {0} does not lie on the variety")]
    PointNotOnVariety(String),
    #[error("real singular point with irrational coordinates: {0}")]
    UnsupportedIrrational(String),
    #[error("input is not reduced: {0}")]
    NonReduced(String),
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("specialization is not generic: degrees {0:?} disagree")]
    NonGenericSpecialization(Vec<usize>),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

impl Error {
    pub(crate) fn invalid(msg: impl Into<String>) -> Self {
        Error::InvalidInput(msg.into())
    }
}
