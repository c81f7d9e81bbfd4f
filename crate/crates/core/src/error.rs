use thiserror::Error;

use crate::decomposition::TdError;
use crate::graph::GraphError;
use crate::oracle::OracleError;

/// Failure of a solver to run on an instance (as opposed to "no solution").
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SolveError {
    #[error("solver precondition failed: {0}")]
    WrongSolver(String),
    #[error("instance exceeds a configured limit: {0}")]
    Limit(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Decomposition(#[from] TdError),
    #[error(transparent)]
    Oracle(#[from] OracleError),
}
