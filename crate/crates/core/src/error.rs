use thiserror::Error;

/// Errors raised by the algebraic core.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },
    #[error("unsupported arity {0} (must be 2, 3 or 4)")]
    UnsupportedArity(usize),
    #[error("dimension must be positive")]
    EmptyDimension,
    #[error("dimension {dim} exceeds the supported maximum {max}")]
    DimensionTooLarge { dim: usize, max: usize },
    #[error("matrix is not square: {rows} rows but a row of length {cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("duplicate structure constant for inputs {inputs:?}, output {out}")]
    DuplicateEntry { inputs: Vec<usize>, out: usize },
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("cannot parse rational {0:?}")]
    ParseRational(String),
    #[error("linear map is singular")]
    SingularMap,
    #[error("twisting maps {0} and {1} do not commute")]
    NonCommuting(String, String),
    #[error("algebra is not regular: {0} is not invertible")]
    NotRegular(&'static str),
    #[error("algebra is not multiplicative: {0}")]
    NotMultiplicative(String),
    #[error("{map} is not an endomorphism: {detail}")]
    NotEndomorphism { map: String, detail: String },
    #[error("{map} is not a self-morphism: {detail}")]
    NotMorphism { map: String, detail: String },
    #[error("bracket is not skew-symmetric at {0:?}")]
    NotSkewSymmetric(Vec<usize>),
    #[error("Akivis identity fails at {witness:?}")]
    AkivisIdentityFails { witness: Vec<usize> },
    #[error("structure kinds differ: {0} vs {1}")]
    KindMismatch(String, String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("unknown identity {0:?}")]
    UnknownIdentity(String),
    #[error("unknown catalog entry {0:?}")]
    UnknownExample(String),
}
