use num_bigint::BigInt;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("matrix is not unimodular (det = {det})")]
    NotUnimodular { det: BigInt },

    #[error("matrix is not symmetric")]
    NotSymmetric,

    #[error("matrix is not skew-symmetric")]
    NotSkewSymmetric,

    #[error("matrix has odd size {0}")]
    OddSize(usize),

    #[error("skew form has determinant {det}, expected 1")]
    SkewDeterminant { det: BigInt },

    #[error("not a Seifert matrix: det(M - M^T) = {det}, expected 1")]
    SeifertPairing { det: BigInt },

    #[error("matrix is not standardized: M - M^T differs from the standard symplectic form")]
    NotStandardized,

    #[error("transition matrix is not symplectic")]
    NotSymplectic,

    #[error("strand index out of range: {0}")]
    StrandIndex(String),

    #[error("invalid exponent {0}, expected 1 or -1")]
    Exponent(i64),

    #[error("relator indices must satisfy i < j < k <= n, got ({i}, {j}, {k}) with n = {n}")]
    RelatorIndices { i: usize, j: usize, k: usize, n: usize },

    #[error("insertion position {position} out of range for word of length {len}")]
    Position { position: usize, len: usize },

    #[error("invalid move: {0}")]
    InvalidMove(String),

    #[error("strand count mismatch: {0} vs {1}")]
    StrandCount(usize, usize),

    #[error("string link has nonzero pairwise linking lk({i},{j}) = {value}")]
    NonzeroLinking { i: usize, j: usize, value: i64 },

    #[error("braid closure has {components} components, expected a knot")]
    NotAKnot { components: usize },

    #[error("generator sigma_{0} does not occur; the Seifert surface is disconnected")]
    MissingGenerator(usize),

    #[error("exact Laurent division left a nonzero remainder")]
    InexactDivision,

    #[error("integer {0} does not fit in 64 bits")]
    Overflow(BigInt),

    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse { line, msg: msg.into() }
    }
}
