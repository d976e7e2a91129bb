//! Runs the state transition algorithm on a few problems and shows the
//! periodic rotation-factor schedule.
//!
//!     cargo run --release --example state_transition

use stabench::harness::resolve_budget;
use stabench::sta::sta_run;
use stabench::{Problem, ProblemId, StaParams};

fn main() -> stabench::Result<()> {
    let params = StaParams::default();
    let schedule: Vec<String> = params.alpha_schedule().take(16).map(|a| format!("{a:.2e}")).collect();
    println!("rotation factor: {}", schedule.join(" "));

    for id in [ProblemId::Matyas, ProblemId::Rastrigin, ProblemId::GoldsteinPrice, ProblemId::Hartmann3] {
        let problem = Problem::benchmark(id);
        let budget = resolve_budget(&problem)?;
        let rec = sta_run(&problem, &params, budget, 7)?;
        println!(
            "{:<15} n={:<2} evals={:<6} best={:.6e} at {:?}",
            id.name(),
            problem.n,
            rec.evals_used,
            rec.final_value(),
            rec.final_best.x
        );
    }
    Ok(())
}
