use thiserror::Error;

/// Errors raised by the library. Verification failures are not errors; they
/// are carried inside reports.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Cartan type `{0}`")]
    InvalidType(String),
    #[error("not a root: {0}")]
    NotARoot(String),
    #[error("marking has {got} entries, expected {expected}")]
    MarkingLength { expected: usize, got: usize },
    #[error("negative marking {value} at node {node}")]
    NegativeMarking { node: usize, value: i64 },
    #[error("root {0} is not horizontal")]
    NotHorizontal(String),
    #[error("vectors belong to different Hodge data")]
    BasisMismatch,
    #[error("[xi, eta] = {0} is not zero")]
    NonCommuting(String),
    #[error("quotient is not a polynomial with nonnegative coefficients: {0}")]
    NonPolynomialQuotient(String),
    #[error("pair is not irreducible or too small: {0}")]
    NotIrreducible(String),
    #[error("pair is not of equal rank: {0}")]
    NonEqualRank(String),
    #[error("unknown real form `{0}`")]
    UnknownForm(String),
    #[error("catalog error: {0}")]
    Catalog(String),
    #[error("malformed input: {0}")]
    Input(String),
}

pub type Result<T> = std::result::Result<T, Error>;
