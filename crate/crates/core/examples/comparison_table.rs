//! Runs the three-way comparison and prints the table.
//!
//!     cargo run --release --example comparison_table            # smoke profile
//!     cargo run --release --example comparison_table -- desk    # 20 runs, full budgets

use stabench::harness::{comparison_csv, run_experiment};
use stabench::{ExperimentConfig, Profile};

fn main() -> stabench::Result<()> {
    let profile: Profile = std::env::args().nth(1).as_deref().unwrap_or("smoke").parse()?;
    let config = ExperimentConfig::profile(profile);
    let experiment = run_experiment(&config)?;
    print!("{}", comparison_csv(&experiment.rows, &config.algorithms));
    for f in &experiment.failures {
        eprintln!("{}: {}", f.problem.label(), f.message);
    }
    Ok(())
}
