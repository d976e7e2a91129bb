use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use serde::Serialize;

use super::{resolve_budget, ComparisonRow, Experiment, ExperimentConfig};
use crate::optim::{Algorithm, RunRecord};
use crate::{Error, Result};

/// Averaged best-so-far values at one checkpoint, in HS, ABC, STA order.
#[derive(Debug, Clone, PartialEq)]
pub struct TraceRow {
    pub evals: u64,
    pub averages: [Option<f64>; 3],
}

/// Averages the best-so-far traces of `records` (all for one problem) per
/// algorithm at every checkpoint.
pub fn export_trace(records: &[RunRecord]) -> Result<Vec<TraceRow>> {
    let Some(first) = records.first() else {
        return Ok(Vec::new());
    };
    let checkpoints: Vec<u64> = first.trace.iter().map(|c| c.evals).collect();
    for r in records {
        if r.problem != first.problem {
            return Err(Error::TraceMismatch(format!("{} and {} in one trace", first.problem, r.problem)));
        }
        if r.trace.len() != checkpoints.len() || r.trace.iter().zip(&checkpoints).any(|(c, &e)| c.evals != e) {
            return Err(Error::TraceMismatch(format!(
                "{} seed {} uses a different checkpoint cadence",
                r.algorithm, r.seed
            )));
        }
    }
    let mut rows: Vec<TraceRow> =
        checkpoints.iter().map(|&evals| TraceRow { evals, averages: [None; 3] }).collect();
    for (col, algorithm) in Algorithm::ALL.into_iter().enumerate() {
        let runs: Vec<&RunRecord> = records.iter().filter(|r| r.algorithm == algorithm).collect();
        if runs.is_empty() {
            continue;
        }
        for (k, row) in rows.iter_mut().enumerate() {
            let total: f64 = runs.iter().map(|r| r.trace[k].best).sum();
            row.averages[col] = Some(total / runs.len() as f64);
        }
    }
    Ok(rows)
}

pub fn trace_csv(rows: &[TraceRow]) -> String {
    let mut s = String::from("evals,hs_avg,abc_avg,sta_avg\n");
    for row in rows {
        let _ = write!(s, "{}", row.evals);
        for v in row.averages {
            match v {
                Some(v) => {
                    let _ = write!(s, ",{v:e}");
                }
                None => s.push(','),
            }
        }
        s.push('\n');
    }
    s
}

/// Comparison table: mean, std, and (for HS and ABC) the rank-sum p-value and
/// symbol against STA, for the algorithms that were run.
pub fn comparison_csv(rows: &[ComparisonRow], algorithms: &[Algorithm]) -> String {
    let cols: Vec<Algorithm> = Algorithm::ALL.into_iter().filter(|a| algorithms.contains(a)).collect();
    let has_sta = cols.contains(&Algorithm::Sta);
    let mut s = String::from("function,name,n,budget");
    for a in &cols {
        let _ = write!(s, ",{a}_mean,{a}_std");
        if has_sta && *a != Algorithm::Sta {
            let _ = write!(s, ",{a}_p,{a}_vs_STA");
        }
    }
    s.push('\n');
    for row in rows {
        let _ = write!(s, "{},{},{},{}", row.problem.label(), row.problem.name(), row.n, row.budget);
        for a in &cols {
            match row.summary(*a) {
                Some(sum) => {
                    let _ = write!(s, ",{:e},", sum.mean);
                    if let Some(sd) = sum.std {
                        let _ = write!(s, "{sd:e}");
                    }
                }
                None => s.push_str(",,"),
            }
            if has_sta && *a != Algorithm::Sta {
                match row.outcome(*a) {
                    Some(t) => {
                        let _ = write!(s, ",{:e},{}", t.p_value, t.symbol);
                    }
                    None => s.push_str(",,"),
                }
            }
        }
        s.push('\n');
    }
    s
}

/// One JSON object per run. With `with_traces == false` the checkpoint list
/// is left empty.
pub fn runs_jsonl(records: &[RunRecord], with_traces: bool) -> String {
    let mut s = String::new();
    for r in records {
        let line = if with_traces {
            serde_json::to_string(r)
        } else {
            serde_json::to_string(&RunRecord { trace: Vec::new(), ..r.clone() })
        };
        s.push_str(&line.expect("run records serialize"));
        s.push('\n');
    }
    s
}

#[derive(Serialize)]
struct Metadata<'a> {
    version: &'static str,
    seeds: Vec<u64>,
    budgets: Vec<BudgetEntry>,
    config: &'a ExperimentConfig,
}

#[derive(Serialize)]
struct BudgetEntry {
    function: String,
    n: usize,
    evaluations: u64,
    default_evaluations: Option<u64>,
}

/// Every parameter, seed and budget of the experiment as TOML.
pub fn metadata_toml(config: &ExperimentConfig) -> String {
    let budgets = config
        .problems
        .iter()
        .filter_map(|&id| config.instance(id).ok())
        .filter_map(|p| {
            let evaluations = config.budget_for(&p).ok()?;
            Some(BudgetEntry {
                function: p.id.label(),
                n: p.n,
                evaluations,
                default_evaluations: resolve_budget(&p).ok(),
            })
        })
        .collect();
    let meta = Metadata {
        version: env!("CARGO_PKG_VERSION"),
        seeds: (0..config.runs).map(|r| config.seed_for_run(r)).collect(),
        budgets,
        config,
    };
    toml::to_string(&meta).expect("metadata serializes")
}

fn write_file(path: PathBuf, contents: &str) -> Result<PathBuf> {
    std::fs::write(&path, contents).map_err(|source| Error::Io { path: path.clone(), source })?;
    Ok(path)
}

/// Writes `table.csv`, `runs.jsonl`, `metadata.toml` and, if any row
/// aborted, `failures.txt` into `dir`.
pub fn write_outputs(dir: &Path, config: &ExperimentConfig, experiment: &Experiment, with_traces: bool) -> Result<Vec<PathBuf>> {
    std::fs::create_dir_all(dir).map_err(|source| Error::Io { path: dir.to_path_buf(), source })?;
    let mut written = vec![
        write_file(dir.join("table.csv"), &comparison_csv(&experiment.rows, &config.algorithms))?,
        write_file(dir.join("runs.jsonl"), &runs_jsonl(&experiment.records, with_traces))?,
        write_file(dir.join("metadata.toml"), &metadata_toml(config))?,
    ];
    if !experiment.failures.is_empty() {
        let text: String = experiment
            .failures
            .iter()
            .map(|f| format!("{}: {}\n", f.problem.label(), f.message))
            .collect();
        written.push(write_file(dir.join("failures.txt"), &text)?);
    }
    Ok(written)
}
