use thiserror::Error;

/// Errors produced by the kernel.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at byte {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("unknown decoration `{0}`")]
    UnknownDecoration(String),
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("empty input: {0}")]
    Empty(&'static str),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("arguments belong to different models")]
    ModelMismatch,
    #[error("no assignment for decoration `{0}`")]
    UnassignedDecoration(String),
    #[error("the empty forest has no image in a non-unital target")]
    UnitNotRepresentable,
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn syntax(pos: usize, msg: impl Into<String>) -> Self {
        Error::Syntax { pos, msg: msg.into() }
    }
}
