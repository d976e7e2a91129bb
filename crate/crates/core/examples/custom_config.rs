//! Loads an experiment from TOML, overriding parameters per algorithm.
//!
//!     cargo run --release --example custom_config

use stabench::harness::{comparison_csv, metadata_toml, run_experiment};
use stabench::ExperimentConfig;

const CONFIG: &str = r#"
profile = "smoke"
problems = ["f2", "f14", "sphere"]
runs = 6
seed = 1000

[dimensions]
sphere = 10

[sta]
se = 20
alpha_min = 1e-6

[hs]
hmcr = 0.95
bw = { absolute = 0.05 }

[abc]
limit = 50
"#;

fn main() -> stabench::Result<()> {
    let config = ExperimentConfig::default().merge_toml(CONFIG)?;
    let experiment = run_experiment(&config)?;
    print!("{}", comparison_csv(&experiment.rows, &config.algorithms));
    println!("\n{}", metadata_toml(&config));
    Ok(())
}
