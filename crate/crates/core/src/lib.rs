//! Derivative-free global optimization on a fixed evaluation budget.
//!
//! Three stochastic searchers share one contract ([`optim`]): the
//! individual-based state transition algorithm ([`sta`]), harmony search
//! ([`hs`]) and the artificial bee colony ([`abc`]). Every objective
//! evaluation is charged to a [`optim::Budget`], every run starts from the
//! same seeded initial population, and every run records a best-so-far trace.
//!
//! [`benchmarks`] holds the 27 test functions, [`stats`] the summary
//! statistics and rank-sum test, and [`harness`] runs whole comparisons and
//! writes the table, trace and run-record files.

pub mod abc;
pub mod benchmarks;
mod error;
pub mod harness;
pub mod hs;
pub mod optim;
pub mod rng;
pub mod sta;
pub mod stats;

pub use error::{Error, Result};

pub use abc::AbcParams;
pub use benchmarks::{Problem, ProblemId};
pub use harness::{ExperimentConfig, Profile};
pub use hs::HsParams;
pub use optim::{Algorithm, Budget, Candidate, Evaluator, Optimizer, RunRecord};
pub use rng::RandomStream;
pub use sta::StaParams;
