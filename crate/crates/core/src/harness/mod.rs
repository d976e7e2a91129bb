//! Experiment orchestration: every (problem, run, algorithm) triple is an
//! independent task; run `r` of all algorithms shares seed `base_seed + r`
//! and therefore the same initial population. Results are aggregated in task
//! order, so serial and parallel executions produce identical output.

mod config;
mod report;

use rayon::prelude::*;
use serde::Serialize;

pub use config::{ExperimentConfig, Profile};
pub use report::{comparison_csv, export_trace, metadata_toml, runs_jsonl, trace_csv, write_outputs, TraceRow};

use crate::benchmarks::{Problem, ProblemId, HUMP_SHIFT};
use crate::optim::{Algorithm, Optimizer, RunRecord};
use crate::stats::{mean_std, ranksum, Sample, TestOutcome};
use crate::{Error, Result};

/// Evaluations for a problem of dimension `n`: ten times the iteration cap
/// for that dimension (population 10).
pub fn resolve_budget(problem: &Problem) -> Result<u64> {
    let iterations: u64 = match problem.n {
        2 => 1_000,
        3 => 2_000,
        4 => 4_000,
        10 => 10_000,
        20 | 24 | 25 => 50_000,
        30 => 100_000,
        n => return Err(Error::UnknownBudget(n)),
    };
    Ok(10 * iterations)
}

impl ExperimentConfig {
    /// The problem instance for `id` under this config.
    pub fn instance(&self, id: ProblemId) -> Result<Problem> {
        match self.dimensions.get(&id) {
            None => Ok(Problem::benchmark(id)),
            Some(&n) => {
                let p = Problem::new(id, n)?;
                Ok(if id == ProblemId::Hump { p.shifted(HUMP_SHIFT) } else { p })
            }
        }
    }

    pub fn budget_for(&self, problem: &Problem) -> Result<u64> {
        match self.budget_override {
            Some(b) => Ok(b),
            None => Ok(resolve_budget(problem)?.div_ceil(self.budget_divisor)),
        }
    }

    fn optimizer(&self, algorithm: Algorithm) -> &dyn Optimizer {
        match algorithm {
            Algorithm::Sta => &self.sta,
            Algorithm::Hs => &self.hs,
            Algorithm::Abc => &self.abc,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct AlgorithmSummary {
    pub algorithm: Algorithm,
    pub mean: f64,
    /// `None` with fewer than two runs.
    pub std: Option<f64>,
    pub median: f64,
}

/// One line of the comparison table.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComparisonRow {
    pub problem: ProblemId,
    pub n: usize,
    pub budget: u64,
    pub summaries: Vec<AlgorithmSummary>,
    /// Rank-sum outcome of each other algorithm against STA.
    pub versus_sta: Vec<(Algorithm, TestOutcome)>,
}

impl ComparisonRow {
    pub fn summary(&self, algorithm: Algorithm) -> Option<&AlgorithmSummary> {
        self.summaries.iter().find(|s| s.algorithm == algorithm)
    }

    pub fn outcome(&self, algorithm: Algorithm) -> Option<&TestOutcome> {
        self.versus_sta.iter().find(|(a, _)| *a == algorithm).map(|(_, t)| t)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RowFailure {
    pub problem: ProblemId,
    pub message: String,
}

#[derive(Debug, Clone, Default)]
pub struct Experiment {
    pub rows: Vec<ComparisonRow>,
    /// Ordered by problem, run, then algorithm.
    pub records: Vec<RunRecord>,
    pub failures: Vec<RowFailure>,
}

impl Experiment {
    pub fn records_for(&self, problem: ProblemId) -> Vec<RunRecord> {
        self.records.iter().filter(|r| r.problem == problem).cloned().collect()
    }
}

struct Task {
    slot: usize,
    run: usize,
    algorithm: Algorithm,
}

/// Runs every configured (problem, run, algorithm) and builds the table.
/// A problem whose instance, budget or any run fails is reported in
/// `failures` and left out of `rows` and `records`.
pub fn run_experiment(config: &ExperimentConfig) -> Result<Experiment> {
    config.validate()?;
    let mut failures = Vec::new();
    let mut prepared = Vec::new();
    for &id in &config.problems {
        match config.instance(id).and_then(|p| config.budget_for(&p).map(|b| (p, b))) {
            Ok(pb) => prepared.push(pb),
            Err(e) => failures.push(RowFailure { problem: id, message: e.to_string() }),
        }
    }

    let tasks: Vec<Task> = (0..prepared.len())
        .flat_map(|slot| {
            (0..config.runs).flat_map(move |run| {
                config.algorithms.iter().map(move |&algorithm| Task { slot, run, algorithm })
            })
        })
        .collect();

    let execute = |t: &Task| {
        let (problem, budget) = &prepared[t.slot];
        config.optimizer(t.algorithm).run(problem, *budget, config.seed_for_run(t.run))
    };
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.jobs)
        .build()
        .map_err(|e| Error::Config(e.to_string()))?;
    let results: Vec<Result<RunRecord>> = pool.install(|| tasks.par_iter().map(execute).collect());

    let per_problem = config.runs * config.algorithms.len();
    let mut rows = Vec::new();
    let mut records = Vec::new();
    let mut results = results.into_iter();
    for (problem, budget) in &prepared {
        let chunk: Vec<_> = results.by_ref().take(per_problem).collect();
        let chunk: Result<Vec<RunRecord>> = chunk.into_iter().collect();
        match chunk.and_then(|recs| summarize(problem, *budget, &config.algorithms, &recs).map(|row| (row, recs))) {
            Ok((row, recs)) => {
                rows.push(row);
                records.extend(recs);
            }
            Err(e) => failures.push(RowFailure { problem: problem.id, message: e.to_string() }),
        }
    }
    Ok(Experiment { rows, records, failures })
}

fn summarize(problem: &Problem, budget: u64, algorithms: &[Algorithm], records: &[RunRecord]) -> Result<ComparisonRow> {
    let mut samples = Vec::new();
    for &a in algorithms {
        let finals: Vec<f64> = records.iter().filter(|r| r.algorithm == a).map(|r| r.final_value()).collect();
        samples.push((a, Sample::new(finals)?));
    }
    let summaries = samples
        .iter()
        .map(|(a, s)| AlgorithmSummary {
            algorithm: *a,
            mean: s.mean(),
            std: mean_std(s).ok().map(|(_, sd)| sd),
            median: s.median(),
        })
        .collect();
    let mut versus_sta = Vec::new();
    if let Some((_, sta)) = samples.iter().find(|(a, _)| *a == Algorithm::Sta) {
        if sta.len() >= 2 {
            for (a, s) in samples.iter().filter(|(a, _)| *a != Algorithm::Sta) {
                versus_sta.push((*a, ranksum(sta, s)?));
            }
        }
    }
    Ok(ComparisonRow { problem: problem.id, n: problem.n, budget, summaries, versus_sta })
}
