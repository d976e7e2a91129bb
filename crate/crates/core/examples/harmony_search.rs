//! Harmony search with default and custom parameters.
//!
//!     cargo run --release --example harmony_search

use stabench::hs::{hs_run, Bandwidth};
use stabench::{HsParams, Problem, ProblemId};

fn main() -> stabench::Result<()> {
    let problem = Problem::benchmark(ProblemId::Hartmann3);
    let default = HsParams::default();
    let narrow = HsParams { par: 0.5, bw: Bandwidth::RangeFraction(0.001), ..HsParams::default() };

    for (label, params) in [("default", &default), ("narrow bandwidth", &narrow)] {
        let finals: Vec<f64> = (0..5)
            .map(|seed| hs_run(&problem, params, 20_000, seed).map(|r| r.final_value()))
            .collect::<Result<_, _>>()?;
        println!("{label:<17} Hartmann3 finals: {finals:.6?}");
    }
    Ok(())
}
