use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("radicand mismatch: sqrt({left}) and sqrt({right}) cannot share a field")]
    RadicandMismatch { left: u64, right: u64 },

    #[error("division by zero")]
    DivisionByZero,

    #[error("index {index} out of range for literal sequence of length {len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("border sequences disagree at the corner: alpha_0 = {alpha0}, beta_0 = {beta0}")]
    CornerMismatch { alpha0: String, beta0: String },

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not unipotent lower triangular")]
    NotUnipotentTriangular,

    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },

    #[error("matrix of order {n} exceeds the limit {max} for this method")]
    TooLarge { n: usize, max: usize },

    #[error("prefix of length {got} is too short, need {needed}")]
    InsufficientPrefix { needed: usize, got: usize },

    #[error("unknown identity `{0}`")]
    UnknownIdentity(String),

    #[error("unknown matrix family `{0}`")]
    UnknownFamily(String),

    #[error("lambda_{index} is zero")]
    ZeroLambda { index: usize },

    #[error("negative radicand {0}")]
    NegativeRadicand(String),

    #[error("value out of domain: {0}")]
    OutOfDomain(String),

    #[error("invalid {what} provenance: {detail}")]
    InvalidProvenance { what: String, detail: String },

    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

impl Error {
    pub(crate) fn parse(pos: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            pos,
            msg: msg.into(),
        }
    }
}
