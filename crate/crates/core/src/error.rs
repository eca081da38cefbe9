use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum RgsError {
    #[error("empty digit sequence")]
    Empty,
    #[error("invalid digit {0:?}")]
    BadDigit(String),
    #[error("{0} is not a restricted growth string")]
    NotRestricted(String),
    #[error("partition contains an empty block")]
    EmptyBlock,
    #[error("element {0} appears in more than one block")]
    Overlap(usize),
    #[error("element {element} is outside 1..={n}")]
    NotCovering { element: usize, n: usize },
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SpecError {
    #[error("set size must be at least 1")]
    ZeroElements,
    #[error("block counts must be at least 1")]
    ZeroBlocks,
    #[error("k_min ({kmin}) exceeds k_max ({kmax})")]
    InvertedRange { kmin: usize, kmax: usize },
    #[error("block-count set is empty")]
    EmptySet,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TokenError {
    #[error("resume token is missing field {0:?}")]
    MissingField(&'static str),
    #[error("malformed resume token field {0:?}")]
    Malformed(String),
    #[error("resume token digits do not fit the enumeration: {0}")]
    Mismatch(String),
    #[error(transparent)]
    Spec(#[from] SpecError),
    #[error(transparent)]
    Digits(#[from] RgsError),
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("oracle supports 1 <= n <= {max}, got {n}")]
    OutOfRange { n: usize, max: usize },
}
