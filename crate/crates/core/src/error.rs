use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable count mismatch: {0} vs {1}")]
    VarMismatch(usize, usize),
    #[error("variable index {index} out of range for {n_vars} variables")]
    VarIndex { index: usize, n_vars: usize },
    #[error("pole: {0}")]
    Pole(String),
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),
    #[error("singular parameter: a*d + b vanishes at d = {d}")]
    SingularParameter { d: usize },
    #[error("empty operator family")]
    EmptyFamily,
    #[error("degree cap {cap} exceeds safety limit {limit}")]
    CapOverflow { cap: usize, limit: usize },
    #[error("zero operator has no symbol")]
    ZeroOperator,
    #[error("polynomial is not homogeneous")]
    NotHomogeneous,
    #[error("family is not symmetric under permutations of the variables")]
    NotSymmetric,
    #[error("non-integral multiplicity: {0}")]
    NonIntegral(String),
    #[error("coefficient is not polynomial in q: {0}")]
    NonPolynomialQ(String),
    #[error("size mismatch: {0} vs {1}")]
    SizeMismatch(usize, usize),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("singular probe point: {0}")]
    SingularProbe(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
