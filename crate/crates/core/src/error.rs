use thiserror::Error;

use crate::format::ParseError;
use crate::graph::GraphError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Graph(#[from] GraphError),

    #[error(transparent)]
    Parse(#[from] ParseError),

    /// The caller handed an input outside an operation's contract.
    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("infeasible parameters: {0}")]
    Infeasible(String),

    #[error("instance has {size} vertices, above the exact-search limit of {limit}")]
    ExactLimit { size: usize, limit: usize },

    /// A proved guarantee did not hold. This always indicates a bug; the
    /// offending instance is carried along so it can be turned into a test.
    #[error(transparent)]
    TheoremViolation(Box<TheoremViolation>),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("theorem violation ({statement}): {detail}")]
pub struct TheoremViolation {
    /// Short name of the guarantee that failed, e.g. `"excess-2-cycle"`.
    pub statement: &'static str,
    pub detail: String,
    /// The failing instance serialized in the `ecg` text format.
    pub instance: String,
}

impl Error {
    pub(crate) fn violation(
        statement: &'static str,
        detail: impl Into<String>,
        instance: &crate::graph::EdgeColouredGraph,
    ) -> Self {
        Error::TheoremViolation(Box::new(TheoremViolation {
            statement,
            detail: detail.into(),
            instance: crate::format::write_ecg(instance),
        }))
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub fn is_theorem_violation(&self) -> bool {
        matches!(self, Error::TheoremViolation(_))
    }
}
