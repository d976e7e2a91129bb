//! Artificial bee colony: onlooker probabilities and a full run.
//!
//!     cargo run --release --example bee_colony

use stabench::abc::{abc_run, fitness_of, selection_probabilities, FoodSource};
use stabench::{AbcParams, Candidate, Problem, ProblemId};

fn main() -> stabench::Result<()> {
    let sources: Vec<FoodSource> = [0.0, 1.0, 4.0, -3.86]
        .iter()
        .map(|&v| FoodSource::new(Candidate { x: vec![], value: v }))
        .collect();
    for (s, p) in sources.iter().zip(selection_probabilities(&sources)) {
        println!("value {:>6} fitness {:.4} selection {:.4}", s.position.value, fitness_of(s.position.value), p);
    }

    let problem = Problem::benchmark(ProblemId::DixonPrice);
    let params = AbcParams { limit: 100, ..AbcParams::default() };
    let rec = abc_run(&problem, &params, 100_000, 3)?;
    println!("\nDixonPrice n={} after {} evals: {:.3e}", problem.n, rec.evals_used, rec.final_value());
    Ok(())
}
