use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),

    #[error("{op}: domain/codomain mismatch ({detail})")]
    Mismatch { op: &'static str, detail: String },

    #[error("{0}: composite is not zero, no factorization exists")]
    NonZeroComposite(&'static str),

    #[error("{0}: diagram does not commute")]
    NonCommuting(&'static str),

    #[error("columns are rationally dependent")]
    DependentColumns,

    #[error("morphism is not a cokernel")]
    NotACokernel,

    #[error("morphism is not a kernel")]
    NotAKernel,

    #[error("morphism does not map the distinguished subspace into the target subspace")]
    SubspaceConstraint,

    #[error("invalid field `{field}`: {message}")]
    Parse { field: String, message: String },
}

impl Error {
    pub(crate) fn mismatch(op: &'static str, detail: impl Into<String>) -> Self {
        Error::Mismatch { op, detail: detail.into() }
    }

    pub(crate) fn parse(field: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse { field: field.into(), message: message.into() }
    }
}
