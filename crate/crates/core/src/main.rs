use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use pybx::error::Error;
use pybx::linear::parse_scalar;
use pybx::workbench::{
    emit_report, exit_status, is_usage_error, load_spec_file, run_command, Command, Direction,
    Format, RunOptions,
};

#[derive(Clone, Copy, ValueEnum)]
enum Cmd {
    /// Axiom checks for every structure present in the spec
    Check,
    /// Classify the spec's r-matrix
    Classify,
    /// Build the Drinfeld double and emit it as a spec
    Double,
    /// Convert between r-matrices and Rota-Baxter operators
    Convert,
    /// Induce a Poisson bialgebra from a differential one
    Induce,
    /// Checks plus classification when r is present
    Report,
}

#[derive(Clone, Copy, ValueEnum)]
enum Dir {
    Rb2fact,
    Fact2rb,
    Tilde,
    Tau,
}

#[derive(Clone, Copy, ValueEnum)]
enum Fmt {
    Human,
    Machine,
}

/// Exact-arithmetic workbench for Poisson and differential bialgebras.
#[derive(Parser)]
#[command(name = "pybx", version)]
struct Args {
    #[arg(value_enum)]
    command: Cmd,
    /// Spec file
    #[arg(long = "in", value_name = "FILE")]
    input: PathBuf,
    /// Required by `convert`
    #[arg(long, value_enum)]
    direction: Option<Dir>,
    /// Overrides the spec's weight, e.g. `-1/2`
    #[arg(long, value_parser = parse_weight, allow_hyphen_values = true)]
    weight: Option<pybx::linear::Scalar>,
    #[arg(long, value_enum, default_value = "human")]
    format: Fmt,
    /// Write the report here instead of stdout
    #[arg(long, value_name = "FILE")]
    out: Option<PathBuf>,
}

fn parse_weight(s: &str) -> Result<pybx::linear::Scalar, String> {
    parse_scalar(s).ok_or_else(|| format!("not a rational: `{s}`"))
}

fn main() -> ExitCode {
    let args = match Args::try_parse() {
        Ok(a) => a,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let command = match args.command {
        Cmd::Check => Command::Check,
        Cmd::Classify => Command::Classify,
        Cmd::Double => Command::Double,
        Cmd::Convert => Command::Convert,
        Cmd::Induce => Command::Induce,
        Cmd::Report => Command::Report,
    };
    let opts = RunOptions {
        direction: args.direction.map(|d| match d {
            Dir::Rb2fact => Direction::Rb2Fact,
            Dir::Fact2rb => Direction::Fact2Rb,
            Dir::Tilde => Direction::Tilde,
            Dir::Tau => Direction::Tau,
        }),
        weight: args.weight,
    };
    let format = match args.format {
        Fmt::Human => Format::Human,
        Fmt::Machine => Format::Machine,
    };

    let result = load_spec_file(&args.input).and_then(|loaded| {
        for w in &loaded.warnings {
            eprintln!(
                "{}:{}:{}: warning: {}",
                args.input.display(),
                w.line,
                w.col,
                w.message
            );
        }
        run_command(command, &loaded.spec, &opts)
    });
    let doc = match result {
        Ok(doc) => doc,
        Err(e) => {
            match e {
                Error::Parse { .. } | Error::IndexOutOfRange { .. } => {
                    eprintln!("{}:{e}", args.input.display())
                }
                _ => eprintln!("pybx: {e}"),
            }
            return ExitCode::from(if is_usage_error(&e) { 2 } else { 1 });
        }
    };
    let text = emit_report(&doc, format);
    match &args.out {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("pybx: cannot write {}: {e}", path.display());
                return ExitCode::from(2);
            }
        }
        None => print!("{text}"),
    }
    ExitCode::from(exit_status(&doc) as u8)
}
