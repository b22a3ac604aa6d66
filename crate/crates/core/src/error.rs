use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("kind error: {0}")]
    Kind(String),

    #[error("search space of {size} candidates exceeds the budget of {budget}")]
    SearchSpaceTooLarge { size: u128, budget: u128 },

    #[error("bilinear form is singular")]
    SingularForm,

    #[error("Rota-Baxter weight must be nonzero")]
    ZeroWeight,

    #[error("precondition failed: {0}")]
    PreconditionFailed(String),

    #[error("pre-Lie bialgebra is not balanced")]
    NotBalanced,

    #[error("invalid partition: {0}")]
    Partition(String),

    #[error("parse error at {line}:{column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("unknown object `{0}`")]
    UnknownObject(String),

    #[error("unknown check `{0}`")]
    UnknownCheck(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn dim_mismatch(what: impl Into<String>) -> Error {
    Error::DimensionMismatch(what.into())
}

pub(crate) fn ensure_dim(cond: bool, what: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::DimensionMismatch(what()))
    }
}
