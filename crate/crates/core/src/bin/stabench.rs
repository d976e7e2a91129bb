use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use stabench::benchmarks::{catalog_manifest, known_minimizers};
use stabench::harness::{comparison_csv, export_trace, run_experiment, trace_csv, write_outputs};
use stabench::{Algorithm, ExperimentConfig, Problem, ProblemId, Profile};

#[derive(Parser)]
#[command(name = "stabench", version, about = "Compare STA, HS and ABC on the 27-function benchmark suite")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the problem catalog.
    List,
    /// Run the comparison and write table.csv, runs.jsonl and metadata.toml.
    Run {
        #[command(flatten)]
        opts: ExperimentOpts,
        /// Leave checkpoint traces out of runs.jsonl.
        #[arg(long)]
        no_traces: bool,
    },
    /// Export the averaged best-so-far curves for one problem.
    Trace {
        #[command(flatten)]
        opts: ExperimentOpts,
        /// Problem to trace.
        #[arg(long, default_value = "matyas")]
        problem: String,
    },
    /// Evaluate every function at its known minimizer.
    Check,
}

#[derive(Args)]
struct ExperimentOpts {
    /// TOML config file; flags override its values.
    #[arg(long)]
    config: Option<PathBuf>,
    /// desk (20 runs, full budgets) or smoke (5 runs, budgets / 10).
    #[arg(long)]
    profile: Option<Profile>,
    /// Comma-separated problems, e.g. f1,f14,sphere.
    #[arg(long, value_delimiter = ',')]
    problems: Option<Vec<ProblemId>>,
    /// Comma-separated subset of sta,hs,abc.
    #[arg(long, value_delimiter = ',')]
    algorithms: Option<Vec<Algorithm>>,
    #[arg(long)]
    runs: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// Evaluation budget for every problem.
    #[arg(long)]
    budget: Option<u64>,
    #[arg(long)]
    jobs: Option<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
}

impl ExperimentOpts {
    fn resolve(self) -> stabench::Result<ExperimentConfig> {
        let mut c = match &self.config {
            Some(path) => ExperimentConfig::from_file(path)?,
            None => ExperimentConfig::default(),
        };
        if let Some(p) = self.profile {
            let base = ExperimentConfig::profile(p);
            c.runs = base.runs;
            c.budget_divisor = base.budget_divisor;
        }
        if let Some(v) = self.problems {
            c.problems = v;
        }
        if let Some(v) = self.algorithms {
            c.algorithms = v;
        }
        if let Some(v) = self.runs {
            c.runs = v;
        }
        if let Some(v) = self.seed {
            c.base_seed = v;
        }
        if self.budget.is_some() {
            c.budget_override = self.budget;
        }
        if let Some(v) = self.jobs {
            c.jobs = v;
        }
        if let Some(v) = self.out {
            c.out_dir = v;
        }
        Ok(c)
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn run(cli: Cli) -> stabench::Result<ExitCode> {
    match cli.command {
        Command::List => {
            let all: Vec<Problem> = ProblemId::ALL.into_iter().map(Problem::benchmark).collect();
            print!("{}", catalog_manifest(&all));
            Ok(ExitCode::SUCCESS)
        }
        Command::Check => {
            let mut ok = true;
            for (id, x) in known_minimizers() {
                let p = Problem::new(id, x.len())?;
                let v = p.evaluate(&x)?;
                let want = p.reference_value.unwrap_or(0.0);
                let pass = (v - want).abs() <= 1e-6;
                ok &= pass;
                println!("{:>4} {:<15} {:>14.8e} {:>14.8e} {}", id.label(), id.name(), v, want, if pass { "ok" } else { "FAIL" });
            }
            Ok(if ok { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
        Command::Run { opts, no_traces } => {
            let config = opts.resolve()?;
            let ex = run_experiment(&config)?;
            let files = write_outputs(&config.out_dir, &config, &ex, !no_traces)?;
            print!("{}", comparison_csv(&ex.rows, &config.algorithms));
            for f in &files {
                eprintln!("wrote {}", f.display());
            }
            for f in &ex.failures {
                eprintln!("aborted {}: {}", f.problem.label(), f.message);
            }
            Ok(if ex.failures.is_empty() { ExitCode::SUCCESS } else { ExitCode::FAILURE })
        }
        Command::Trace { opts, problem } => {
            let mut config = opts.resolve()?;
            let id: ProblemId = problem.parse()?;
            config.problems = vec![id];
            let ex = run_experiment(&config)?;
            if let Some(f) = ex.failures.first() {
                eprintln!("aborted {}: {}", f.problem.label(), f.message);
                return Ok(ExitCode::FAILURE);
            }
            let rows = export_trace(&ex.records)?;
            std::fs::create_dir_all(&config.out_dir)
                .map_err(|source| stabench::Error::Io { path: config.out_dir.clone(), source })?;
            let path = config.out_dir.join(format!("trace_{}.csv", id.label()));
            std::fs::write(&path, trace_csv(&rows)).map_err(|source| stabench::Error::Io { path: path.clone(), source })?;
            eprintln!("wrote {} ({} checkpoints)", path.display(), rows.len());
            Ok(ExitCode::SUCCESS)
        }
    }
}
