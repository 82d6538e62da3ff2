mod commands;
mod error;
mod input;
mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand};
use serde_json::json;

use commands::{FieldChoice, Level};
use error::CliError;

#[derive(Parser)]
#[command(name = "pcb", version, about = "Primary decomposition of positive critical binomial ideals")]
struct Cli {
    /// Print a human-readable summary instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Associated vector, invariant factors, syzygies and component counts.
    Analyze { file: PathBuf },
    /// Normal decomposition P·L·Q = D with the last row of P equal to ν.
    Snf { file: PathBuf },
    /// Isolated components as parametrized curves, plus the embedded component.
    Decompose {
        file: PathBuf,
        /// `symbolic` or `fp:<p>`.
        #[arg(long, default_value = "symbolic", value_parser = parse_decompose_field)]
        field: FieldChoice,
    },
    /// Checks the identities, or with `--level full` the ideal-theoretic claims.
    Verify {
        file: PathBuf,
        /// `q` or `fp:<p>`.
        #[arg(long, default_value = "q", value_parser = parse_verify_field)]
        field: FieldChoice,
        #[arg(long, value_enum, default_value_t = Level::Identities)]
        level: Level,
    },
}

fn parse_prime(s: &str) -> Option<Result<FieldChoice, String>> {
    let p = s.strip_prefix("fp:")?;
    Some(p.parse().map(FieldChoice::Prime).map_err(|_| format!("`{p}` is not a positive integer")))
}

fn parse_decompose_field(s: &str) -> Result<FieldChoice, String> {
    match s {
        "symbolic" => Ok(FieldChoice::Symbolic),
        _ => parse_prime(s).unwrap_or_else(|| Err(format!("expected `symbolic` or `fp:<p>`, got `{s}`"))),
    }
}

fn parse_verify_field(s: &str) -> Result<FieldChoice, String> {
    match s {
        "q" => Ok(FieldChoice::Rationals),
        _ => parse_prime(s).unwrap_or_else(|| Err(format!("expected `q` or `fp:<p>`, got `{s}`"))),
    }
}

fn run(cli: &Cli) -> Result<(), CliError> {
    let start = Instant::now();
    let (name, file, options): (&str, &Path, _) = match &cli.command {
        Command::Analyze { file } => ("analyze", file, json!({})),
        Command::Snf { file } => ("snf", file, json!({})),
        Command::Decompose { file, field } => ("decompose", file, json!({ "field": field.label() })),
        Command::Verify { file, field, level } => (
            "verify",
            file,
            json!({ "field": field.label(), "level": if *level == Level::Full { "full" } else { "identities" } }),
        ),
    };
    let input = input::read(file)?;
    let p = &input.matrix;
    let outcome = match &cli.command {
        Command::Analyze { .. } => commands::analyze(p)?,
        Command::Snf { .. } => commands::snf(p)?,
        Command::Decompose { field, .. } => commands::decompose(p, *field)?,
        Command::Verify { field, level, .. } => commands::verify(p, *field, *level)?,
    };
    let timing = start.elapsed().as_secs_f64() * 1e3;
    let env = report::envelope(name, options, &input.digest, outcome.payload, timing);
    if cli.pretty {
        print!("{}", report::render(&env));
    } else {
        println!("{}", serde_json::to_string_pretty(&env).expect("serializable"));
    }
    if outcome.failed.is_empty() {
        Ok(())
    } else {
        Err(CliError::Verification(outcome.failed))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
