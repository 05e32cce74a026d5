use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use centralnorm::cli::commands::{execute, Command};
use centralnorm::cli::report::Status;
use centralnorm::context::{DEFAULT_MAX_STEPS, DEFAULT_SEED};
use centralnorm::Context;

#[derive(Parser)]
#[command(name = "centralnorm", version, about = "Central seminormality and central normalizations of real curves")]
struct Cli {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Seed for random coordinate changes, separating forms and specializations.
    #[arg(long, default_value_t = DEFAULT_SEED, global = true)]
    seed: u64,
    /// Reduction steps allowed per Gröbner basis computation.
    #[arg(long, default_value_t = DEFAULT_MAX_STEPS, global = true)]
    max_steps: u64,
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Cmd {
    /// Singular points, centrality and seminormality of a curve.
    Analyze { spec: PathBuf },
    /// Presentation of X[candidates].
    Adjoin { spec: PathBuf },
    /// Fibers of the adjunction over the listed POINTS.
    Fiber { spec: PathBuf },
    /// Whether each candidate extends continuously to the central locus.
    Continuity { spec: PathBuf },
    /// Largest extension by the catalog that keeps the central locus in bijection.
    WcSearch { spec: PathBuf },
    /// Degree of the restriction to SUBVARIETY, sampled along PARAMETER.
    Hereditary { spec: PathBuf },
    /// Runs the bundled regression corpus.
    VerifyPaper,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let ctx = Context::new(cli.seed, cli.max_steps);
    let (command, path) = match cli.command {
        Cmd::Analyze { spec } => (Command::Analyze, Some(spec)),
        Cmd::Adjoin { spec } => (Command::Adjoin, Some(spec)),
        Cmd::Fiber { spec } => (Command::Fiber, Some(spec)),
        Cmd::Continuity { spec } => (Command::Continuity, Some(spec)),
        Cmd::WcSearch { spec } => (Command::WcSearch, Some(spec)),
        Cmd::Hereditary { spec } => (Command::Hereditary, Some(spec)),
        Cmd::VerifyPaper => (Command::VerifyPaper, None),
    };
    let text = match &path {
        Some(p) => match std::fs::read_to_string(p) {
            Ok(t) => Some(t),
            Err(e) => {
                eprintln!("cannot read {}: {e}", p.display());
                return ExitCode::from(Status::InputError.exit_code() as u8);
            }
        },
        None => None,
    };
    let name = path.as_ref().map(|p| p.display().to_string());
    let input = name.as_deref().zip(text.as_deref());
    let report = execute(command, input, &ctx);
    match cli.format {
        Format::Text => print!("{}", report.to_text()),
        Format::Json => println!("{}", report.to_json()),
    }
    ExitCode::from(report.exit_code as u8)
}
