use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("syntax error at position {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("unknown variable `{0}`")]
    UnknownVariable(String),

    #[error("polynomials live in different variable contexts")]
    ContextMismatch,

    #[error("invalid input: {0}")]
    Input(String),

    /// Step or degree budget exhausted. Never accompanied by a partial answer.
    #[error("{stage} exceeded the step budget ({used} of {limit} steps)")]
    Resource {
        stage: String,
        used: u64,
        limit: u64,
    },

    /// Every random draw of a seeded search was rejected.
    #[error("{stage}: no acceptable random draw in {tries} attempts")]
    RetryLimit { stage: String, tries: u32 },

    /// A checked postcondition failed; this indicates a bug, not bad input.
    #[error("internal invariant violated: {0}")]
    Invariant(String),
}

impl Error {
    pub fn is_resource(&self) -> bool {
        matches!(self, Error::Resource { .. })
    }

    /// Relabels a resource error with the pipeline stage that hit it.
    pub fn in_stage(self, stage: &str) -> Error {
        match self {
            Error::Resource {
                stage: inner,
                used,
                limit,
            } => Error::Resource {
                stage: format!("{stage} ({inner})"),
                used,
                limit,
            },
            other => other,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
