//! Prints the 27-function catalog and evaluates each function at its known
//! minimizer.
//!
//!     cargo run --example benchmark_catalog

use stabench::benchmarks::{catalog_manifest, known_minimizers};
use stabench::{Problem, ProblemId};

fn main() -> stabench::Result<()> {
    let all: Vec<Problem> = ProblemId::ALL.into_iter().map(Problem::benchmark).collect();
    print!("{}", catalog_manifest(&all));

    println!();
    for (id, x) in known_minimizers() {
        let p = Problem::new(id, x.len())?;
        println!("{:<15} f(x*) = {:>12.6e}", id.name(), p.evaluate(&x)?);
    }

    // the comparison instance of Hump is shifted so its minimum sits near zero
    let hump = Problem::benchmark(ProblemId::Hump);
    println!("\nshifted Hump at (0.0898, -0.7127): {:e}", hump.evaluate(&[0.089_842, -0.712_656])?);
    Ok(())
}
