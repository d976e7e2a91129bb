//! Averaged best-so-far curves on Matyas over 20 runs, written as CSV.
//!
//!     cargo run --release --example matyas_trace -- trace_f14.csv

use stabench::harness::{export_trace, run_experiment, trace_csv};
use stabench::{ExperimentConfig, ProblemId};

fn main() -> stabench::Result<()> {
    let out = std::env::args().nth(1).unwrap_or_else(|| "trace_f14.csv".into());
    let config = ExperimentConfig { problems: vec![ProblemId::Matyas], ..ExperimentConfig::default() };
    let experiment = run_experiment(&config)?;
    let rows = export_trace(&experiment.records)?;
    std::fs::write(&out, trace_csv(&rows)).map_err(|source| stabench::Error::Io { path: out.clone().into(), source })?;

    let last = rows.last().expect("nonempty trace");
    println!("{} checkpoints written to {out}", rows.len());
    for (name, v) in ["HS", "ABC", "STA"].iter().zip(last.averages) {
        println!("{name:<4} final average {:.3e}", v.unwrap_or(f64::NAN));
    }
    Ok(())
}
