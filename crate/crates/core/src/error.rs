use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("degree {degree} is not of the form k*({arity}-1)+1 for arity {arity}")]
    InvalidDegree { arity: usize, degree: usize },

    #[error("arity must be at least 2, got {0}")]
    InvalidArity(usize),

    #[error("variable {0} occurs more than once")]
    RepeatedVariable(String),

    #[error("variable {variable} is out of range for degree {degree}")]
    VariableOutOfRange { variable: String, degree: usize },

    #[error("operation node has {found} children, expected {expected}")]
    WrongArity { expected: usize, found: usize },

    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("identities of mixed degree or arity")]
    MixedDegree,

    #[error("not a permutation: {0:?}")]
    NotPermutation(Vec<usize>),

    #[error("basis vectors are linearly dependent")]
    DependentRows,

    #[error("{0} is not a prime below 256")]
    InvalidPrime(u32),

    #[error("monomial {0} is not in the second association type")]
    NotSecondType(String),

    #[error("not an identity: {0}")]
    NotAnIdentity(String),

    #[error("no rewrite rule for arity {arity}, degree {degree}")]
    NoRewriteRule { arity: usize, degree: usize },

    #[error("coefficient does not fit in a machine integer")]
    Overflow,

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
