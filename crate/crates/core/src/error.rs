use std::path::PathBuf;

use crate::benchmarks::ProblemId;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("expected a vector of length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("{problem} is not defined for n = {n}: {reason}")]
    InvalidDimension {
        problem: ProblemId,
        n: usize,
        reason: &'static str,
    },

    #[error("evaluation budget exhausted after {used} evaluations")]
    BudgetExhausted { used: u64 },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("sample needs at least {needed} values, got {got}")]
    SampleTooSmall { needed: usize, got: usize },

    #[error("sample contains a non-finite value")]
    NonFiniteSample,

    #[error("no default budget for dimension n = {0}; set a budget override")]
    UnknownBudget(usize),

    #[error("trace mismatch: {0}")]
    TraceMismatch(String),

    #[error("unknown problem `{0}`")]
    UnknownProblem(String),

    #[error("unknown algorithm `{0}`")]
    UnknownAlgorithm(String),

    #[error("config error: {0}")]
    Config(String),

    #[error("i/o error on {path}: {source}")]
    Io {
        path: PathBuf,
        #[source]
        source: std::io::Error,
    },
}
