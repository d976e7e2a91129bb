//! The contract shared by all optimizers: candidates, evaluation budget,
//! greedy acceptance, box repair, seeded initialization and run records.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::benchmarks::{Problem, ProblemId};
use crate::rng::RandomStream;
use crate::{Error, Result};

/// Size of the shared initial population.
pub const POPULATION_SIZE: usize = 10;

/// Evaluations between best-so-far checkpoints.
pub const TRACE_CADENCE: u64 = 10;

/// Substream label for the initial population, identical across algorithms.
pub const INIT_STREAM: &str = "init";

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Candidate {
    pub x: Vec<f64>,
    pub value: f64,
}

/// Returns the challenger only if it is strictly better; ties keep the
/// incumbent.
pub fn greedy_accept(incumbent: Candidate, challenger: Candidate) -> Candidate {
    if challenger.value < incumbent.value {
        challenger
    } else {
        incumbent
    }
}

pub fn clip_to_bounds(mut x: Vec<f64>, problem: &Problem) -> Vec<f64> {
    problem.clip(&mut x);
    x
}

/// Evaluation counter. `used` never passes `max_evals`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    max_evals: u64,
    used: u64,
}

impl Budget {
    pub fn new(max_evals: u64) -> Self {
        Budget { max_evals, used: 0 }
    }

    pub fn max_evals(&self) -> u64 {
        self.max_evals
    }

    pub fn used(&self) -> u64 {
        self.used
    }

    pub fn remaining(&self) -> u64 {
        self.max_evals - self.used
    }

    pub fn is_exhausted(&self) -> bool {
        self.used >= self.max_evals
    }

    /// Charges one evaluation; false if nothing is left.
    pub fn try_consume(&mut self) -> bool {
        if self.is_exhausted() {
            false
        } else {
            self.used += 1;
            true
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(from = "(u64, f64)", into = "(u64, f64)")]
pub struct Checkpoint {
    pub evals: u64,
    pub best: f64,
}

impl From<(u64, f64)> for Checkpoint {
    fn from((evals, best): (u64, f64)) -> Self {
        Checkpoint { evals, best }
    }
}

impl From<Checkpoint> for (u64, f64) {
    fn from(c: Checkpoint) -> Self {
        (c.evals, c.best)
    }
}

/// Wraps a problem with a budget. Every objective evaluation in every
/// algorithm goes through [`Evaluator::evaluate`], which also maintains the
/// best-so-far candidate and the checkpoint trace.
#[derive(Debug)]
pub struct Evaluator<'a> {
    problem: &'a Problem,
    budget: Budget,
    cadence: u64,
    best: Option<Candidate>,
    trace: Vec<Checkpoint>,
}

impl<'a> Evaluator<'a> {
    pub fn new(problem: &'a Problem, max_evals: u64) -> Self {
        Self::with_cadence(problem, max_evals, TRACE_CADENCE)
    }

    pub fn with_cadence(problem: &'a Problem, max_evals: u64, cadence: u64) -> Self {
        assert!(cadence > 0);
        Evaluator {
            problem,
            budget: Budget::new(max_evals),
            cadence,
            best: None,
            trace: Vec::with_capacity((max_evals / cadence) as usize + 1),
        }
    }

    pub fn problem(&self) -> &'a Problem {
        self.problem
    }

    pub fn budget(&self) -> Budget {
        self.budget
    }

    pub fn is_exhausted(&self) -> bool {
        self.budget.is_exhausted()
    }

    pub fn best(&self) -> Option<&Candidate> {
        self.best.as_ref()
    }

    /// Evaluates `x` as given (callers clip first). `None` once the budget is
    /// spent.
    pub fn evaluate(&mut self, x: Vec<f64>) -> Option<Candidate> {
        if !self.budget.try_consume() {
            return None;
        }
        let value = self.problem.objective(&x);
        let improved = match &self.best {
            None => true,
            Some(b) => value < b.value || b.value.is_nan(),
        };
        if improved {
            self.best = Some(Candidate { x: x.clone(), value });
        }
        if self.budget.used() % self.cadence == 0 {
            self.checkpoint();
        }
        Some(Candidate { x, value })
    }

    fn checkpoint(&mut self) {
        if let Some(b) = &self.best {
            self.trace.push(Checkpoint { evals: self.budget.used(), best: b.value });
        }
    }

    pub fn finish(mut self, algorithm: Algorithm, seed: u64, initial: Vec<Candidate>) -> RunRecord {
        if self.trace.last().map(|c| c.evals) != Some(self.budget.used()) {
            self.checkpoint();
        }
        RunRecord {
            algorithm,
            problem: self.problem.id,
            n: self.problem.n,
            seed,
            budget: self.budget.max_evals(),
            evals_used: self.budget.used(),
            final_best: self.best.expect("at least one evaluation"),
            trace: self.trace,
            initial,
        }
    }
}

/// Draws `count` points uniformly in the box, point-major and
/// coordinate-minor, and evaluates each. The draw order makes the first `k`
/// points identical for any `count >= k`.
pub fn uniform_init(eval: &mut Evaluator<'_>, count: usize, rng: &mut RandomStream) -> Result<Vec<Candidate>> {
    if count == 0 {
        return Err(Error::InvalidParameter("initial population must be nonempty".into()));
    }
    if eval.budget().remaining() < count as u64 {
        return Err(Error::BudgetExhausted { used: eval.budget().used() });
    }
    let problem = eval.problem();
    let points: Vec<Vec<f64>> = (0..count)
        .map(|_| {
            problem.lower.iter().zip(&problem.upper).map(|(&lo, &hi)| rng.between(lo, hi)).collect()
        })
        .collect();
    Ok(points
        .into_iter()
        .map(|x| eval.evaluate(x).expect("budget checked above"))
        .collect())
}

/// Index of the first minimum.
pub fn argmin(cands: &[Candidate]) -> usize {
    let mut best = 0;
    for (i, c) in cands.iter().enumerate().skip(1) {
        if c.value < cands[best].value {
            best = i;
        }
    }
    best
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Algorithm {
    Hs,
    Abc,
    Sta,
}

impl Algorithm {
    /// Column order of the comparison table.
    pub const ALL: [Algorithm; 3] = [Algorithm::Hs, Algorithm::Abc, Algorithm::Sta];

    pub fn label(self) -> &'static str {
        match self {
            Algorithm::Hs => "HS",
            Algorithm::Abc => "ABC",
            Algorithm::Sta => "STA",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "hs" | "harmony" => Ok(Algorithm::Hs),
            "abc" | "bees" => Ok(Algorithm::Abc),
            "sta" => Ok(Algorithm::Sta),
            _ => Err(Error::UnknownAlgorithm(s.to_string())),
        }
    }
}

/// Outcome of one run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub algorithm: Algorithm,
    pub problem: ProblemId,
    pub n: usize,
    pub seed: u64,
    pub budget: u64,
    pub evals_used: u64,
    pub final_best: Candidate,
    /// `(evals_used, best_value)` every [`TRACE_CADENCE`] evaluations, plus a
    /// final entry if the budget is not a multiple of it.
    pub trace: Vec<Checkpoint>,
    /// The shared initial population, in draw order.
    #[serde(skip)]
    pub initial: Vec<Candidate>,
}

impl RunRecord {
    pub fn final_value(&self) -> f64 {
        self.final_best.value
    }
}

/// A seeded optimizer on the shared budget contract.
pub trait Optimizer {
    fn algorithm(&self) -> Algorithm;

    /// Runs until exactly `max_evals` evaluations are spent.
    fn run(&self, problem: &Problem, max_evals: u64, seed: u64) -> Result<RunRecord>;
}

/// Common run scaffolding: seeds the shared initialization substream and the
/// algorithm's own substream, draws `init_count` initial points, then hands
/// over to `search`.
pub(crate) fn seeded_run<F>(
    algorithm: Algorithm,
    problem: &Problem,
    max_evals: u64,
    seed: u64,
    init_count: usize,
    search: F,
) -> Result<RunRecord>
where
    F: FnOnce(&mut Evaluator<'_>, &[Candidate], &mut RandomStream),
{
    let root = RandomStream::new(seed);
    let mut init_rng = root.substream(INIT_STREAM);
    let mut rng = root.substream(algorithm.label());
    let mut eval = Evaluator::new(problem, max_evals);
    let initial = uniform_init(&mut eval, init_count, &mut init_rng)?;
    search(&mut eval, &initial, &mut rng);
    debug_assert!(eval.is_exhausted());
    Ok(eval.finish(algorithm, seed, initial))
}
