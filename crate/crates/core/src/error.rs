use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum QzError {
    #[error("index {index} out of range 1..={bound}")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("operands live in different ambient sizes ({0} vs {1})")]
    AmbientMismatch(u8, u8),
    #[error("row and column index sets differ in size ({0} vs {1})")]
    SizeMismatch(usize, usize),
    #[error("index set must be strictly increasing")]
    UnsortedIndices,
    #[error("polynomial is not homogeneous in the row/column gradings")]
    Inhomogeneous,
    #[error("matrix size must be even, got {0}")]
    OddAmbient(usize),
    #[error("subset size must be even, got {0}")]
    OddSubset(usize),
    #[error("graded component of dimension {dim} exceeds cap {cap}")]
    ComponentTooLarge { dim: u128, cap: u128 },
    #[error("intersection has dimension {0}, expected 1")]
    NotOneDimensional(usize),
    #[error("division left a nonzero remainder")]
    NonzeroRemainder,
    #[error("torus restriction is not a polynomial in s_i = t_(2i-1) t_(2i)")]
    NotInSVariables,
    #[error("restriction has no term at the leading monomial {0}")]
    MissingLeadingTerm(String),
    #[error("polynomial is not symmetric")]
    NotSymmetric,
    #[error("eigenvalues of {0} and {1} coincide")]
    EigenvalueCollision(String, String),
    #[error("no parameter convention matches")]
    NoConventionMatches,
    #[error("division by zero")]
    DivisionByZero,
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, QzError>;
