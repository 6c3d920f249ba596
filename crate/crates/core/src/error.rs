//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input text (FCIDUMP, manifests, circuit dumps).
    #[error("parse error{}: {message}", line.map(|l| format!(" at line {l}")).unwrap_or_default())]
    Parse { line: Option<usize>, message: String },

    /// Inconsistent duplicate data in an input file.
    #[error("conflicting input{}: {message}", line.map(|l| format!(" at line {l}")).unwrap_or_default())]
    Conflict { line: Option<usize>, message: String },

    /// Arguments violate a precondition (sizes, counts, index ranges).
    #[error("validation error: {0}")]
    Validation(String),

    /// An operator has X/Y support on a qubit whose symmetry eigenvalue is
    /// being fixed; it does not conserve the symmetry being removed.
    #[error("symmetry violation: {0}")]
    SymmetryViolation(String),

    /// A size guard on the dense verification engine was exceeded.
    #[error("resource limit: {0}")]
    ResourceLimit(String),

    /// An internal invariant failed; indicates a bug, not bad input.
    #[error("internal consistency error: {0}")]
    Internal(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    /// A pipeline stage failed; wraps the underlying error with the stage name.
    #[error("stage '{stage}' failed: {source}")]
    Stage {
        stage: &'static str,
        #[source]
        source: Box<Error>,
    },
}

impl Error {
    pub fn validation(msg: impl Into<String>) -> Self {
        Error::Validation(msg.into())
    }

    pub fn in_stage(self, stage: &'static str) -> Self {
        Error::Stage {
            stage,
            source: Box::new(self),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
