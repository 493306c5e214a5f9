//! Command-line front end: problem ingestion, theorem verification, and
//! the built-in demonstrations.
//!
//! Exit codes are a stable contract: 0 holds/equality, 2 input error,
//! 3 hypothesis violation, 4 internal inconsistency.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use abc_analytica::io::{
    self, error_report, load_problem, resolve_spec, run_demo, run_mason_problem,
    run_verify_problem, DemoId, DemoOutput, TheoremId,
};
use abc_analytica::verify::Status;
use abc_analytica::Result;

#[derive(Parser)]
#[command(
    name = "abc-analytica",
    about = "Verify local abc-type inequalities for analytic functions on disks",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct OutputOpts {
    /// Write the report here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Report format (csv applies to tabular output)
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct QuadOpts {
    /// Quadrature convergence tolerance
    #[arg(long)]
    tol: Option<f64>,
    /// Starting boundary node count (power of two, >= 64)
    #[arg(long)]
    boundary_nodes: Option<usize>,
}

#[derive(Subcommand)]
enum Command {
    /// Exact polynomial checks: the two-term abc inequality or its n-term
    /// generalization, depending on the problem payload
    Mason {
        /// Problem file (JSON)
        #[arg(long)]
        input: PathBuf,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Build an analytic system from the problem file and verify the
    /// named bound
    Verify {
        /// Problem file (JSON)
        #[arg(long)]
        input: PathBuf,
        /// Which bound: 1, 2, prop3a, prop3b, or 4
        #[arg(long)]
        theorem: String,
        /// Exponent for the D_alpha bound (theorem 4)
        #[arg(long)]
        alpha: Option<f64>,
        #[command(flatten)]
        quad: QuadOpts,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Built-in demonstrations: the two equality examples, the limiting
    /// argument table, and a seeded corpus run over the lemma verifiers
    Demo {
        /// Which demo: example1, example2, limit, or lemmas
        #[arg(long)]
        which: String,
        /// Exponent for the comparability reports in the lemmas demo
        #[arg(long)]
        alpha: Option<f64>,
        #[command(flatten)]
        quad: QuadOpts,
        #[command(flatten)]
        output: OutputOpts,
    },
}

fn emit(text: &str, out: &Option<PathBuf>) -> Result<()> {
    match out {
        None => {
            println!("{text}");
            Ok(())
        }
        Some(path) => {
            std::fs::write(path, format!("{text}\n"))?;
            Ok(())
        }
    }
}

fn run(cli: Cli) -> Result<u8> {
    match cli.command {
        Command::Mason { input, output } => {
            let text = std::fs::read_to_string(&input)?;
            let problem = load_problem(&text)?;
            let outcome = run_mason_problem(&problem)?;
            emit(&io::to_json_string(&outcome.report), &output.out)?;
            if outcome.holds {
                Ok(0)
            } else {
                // the inequality is a theorem; a false result is a bug
                Ok(4)
            }
        }
        Command::Verify {
            input,
            theorem,
            alpha,
            quad,
            output,
        } => {
            let text = std::fs::read_to_string(&input)?;
            let problem = load_problem(&text)?;
            let theorem: TheoremId = theorem.parse()?;
            let spec = resolve_spec(problem.quadrature.as_ref(), quad.boundary_nodes, quad.tol)?;
            let outcome = run_verify_problem(&problem, theorem, alpha, &spec)?;
            emit(&io::to_json_string(&outcome.report), &output.out)?;
            match outcome.status {
                Status::Holds | Status::Equality => Ok(0),
                Status::HypothesisViolated => Ok(3),
                Status::Fails => Ok(4),
            }
        }
        Command::Demo {
            which,
            alpha,
            quad,
            output,
        } => {
            let which: DemoId = which.parse()?;
            let spec = resolve_spec(None, quad.boundary_nodes, quad.tol)?;
            match run_demo(which, alpha, &spec)? {
                DemoOutput::Reports(value) => {
                    emit(&io::to_json_string(&value), &output.out)?;
                }
                DemoOutput::Table(table) => {
                    if output.format == Format::Csv {
                        emit(table.to_csv().trim_end(), &output.out)?;
                    } else {
                        emit(&io::to_json_string(&serde_json::to_value(&table)?), &output.out)?;
                    }
                }
            }
            Ok(0)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            // machine-readable error envelope on stdout, human text on stderr
            println!("{}", io::to_json_string(&error_report(&err)));
            eprintln!("error: {err}");
            ExitCode::from(u8::try_from(err.exit_code()).unwrap_or(1))
        }
    }
}
