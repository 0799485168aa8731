use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("singular limit: denominator vanishes at q = 1")]
    SingularLimit,
    #[error("parse error: {0}")]
    Parse(String),
    #[error("mixed parity: bracket argument is not homogeneous")]
    MixedParity,
    #[error("no star image for symbol {0}")]
    NoStarImage(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("index {index} out of range [{lo}; {hi}]")]
    IndexOutOfRange { index: i64, lo: i64, hi: i64 },
    #[error("unsupported algebra: n + m must be at least 1")]
    UnsupportedSpec,
    #[error("unorientable relation {0}")]
    Unorientable(String),
    #[error("symbol {0} is not part of the alphabet")]
    AlphabetMismatch(String),
    #[error("unassigned symbol {0} in representation")]
    Unassigned(String),
    #[error("no vector representation found for {0}")]
    NoVectorRepresentation(String),
    #[error("oracle incoherence: {0}")]
    OracleIncoherence(String),
    #[error("state not in basis")]
    StateNotInBasis,
}

pub type Result<T> = std::result::Result<T, Error>;
