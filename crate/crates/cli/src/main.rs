//! `kuramoto`: solve rank-one Kuramoto equilibrium problems, evaluate the
//! closed-form counts, scan the three-oscillator map, and time the drivers.

mod bench;
mod count;
mod failure;
mod input;
mod scan;
mod solve;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use kuramoto_core::DEFAULT_SUM_TOL;

use failure::{Failure, Outcome};
use solve::Method;

#[derive(Parser)]
#[command(name = "kuramoto", version, about = "Certified equilibria of the rank-one Kuramoto model")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Find all equilibria of one instance.
    Solve {
        /// JSON file with {"omega", "k"} or {"P", "V"}.
        #[arg(required_unless_present = "fixture", conflicts_with = "fixture")]
        file: Option<PathBuf>,
        /// Use a built-in instance instead of a file.
        #[arg(long)]
        fixture: Option<String>,
        #[arg(long, value_enum, default_value = "optimized")]
        algorithm: Method,
        /// Tolerance on the zero frequency sum, relative to max |omega|.
        #[arg(long, default_value_t = DEFAULT_SUM_TOL)]
        tol: f64,
        /// Subtract the mean frequency before solving.
        #[arg(long)]
        fix_sum: bool,
        #[arg(long, value_enum, default_value = "json")]
        output: Format,
    },
    /// Print the equilibrium-count bounds and family counts for n.
    Count {
        #[arg(long)]
        n: usize,
        /// Family parameter, as a fraction (1/5) or decimal (0.2).
        #[arg(long, allow_hyphen_values = true)]
        q: Option<String>,
        #[arg(long, value_enum)]
        family: Option<count::Family>,
    },
    /// Equilibrium counts over a grid of (omega1, omega2) with k = (1, 1, 1).
    Scan2d {
        #[arg(long, default_value_t = -1.0, allow_hyphen_values = true)]
        x_min: f64,
        #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
        x_max: f64,
        #[arg(long, default_value_t = -1.0, allow_hyphen_values = true)]
        y_min: f64,
        #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
        y_max: f64,
        #[arg(long, default_value_t = 0.05, allow_hyphen_values = true)]
        step: f64,
    },
    /// Median wall time and count per fixture and algorithm.
    Bench {
        /// `table1`, `all`, or a comma-separated list of fixture names.
        #[arg(long, default_value = "table1")]
        fixtures: String,
        #[arg(long, value_enum, value_delimiter = ',', default_value = "basic,optimized,oracle")]
        algorithms: Vec<Method>,
        #[arg(long, default_value_t = 5)]
        repetitions: usize,
    },
}

fn execute(cmd: Command) -> Outcome<String> {
    match cmd {
        Command::Solve {
            file,
            fixture,
            algorithm,
            tol,
            fix_sum,
            output,
        } => {
            let mut model = match (file, fixture) {
                (_, Some(name)) => input::fixture(&name)?.input,
                (Some(path), None) => input::read_instance(&path)?,
                (None, None) => return Err(Failure::Parse("no input given".into())),
            };
            if fix_sum {
                model = model.with_mean_removed();
            }
            let out = solve::run(&model, algorithm, tol)?;
            Ok(match output {
                Format::Json => solve::to_json(&out) + "\n",
                Format::Csv => solve::to_csv(&out),
            })
        }
        Command::Count { n, q, family } => {
            let q = q.as_deref().map(input::parse_rational).transpose()?;
            count::run(n, q.as_ref(), family)
        }
        Command::Scan2d {
            x_min,
            x_max,
            y_min,
            y_max,
            step,
        } => scan::run(scan::Grid {
            x_min,
            x_max,
            y_min,
            y_max,
            step,
        }),
        Command::Bench {
            fixtures,
            algorithms,
            repetitions,
        } => {
            let set = bench::select(&fixtures)?;
            Ok(bench::render(&bench::run(&set, &algorithms, repetitions)?))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match execute(cli.command) {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{e}");
            e.exit_code()
        }
    }
}
