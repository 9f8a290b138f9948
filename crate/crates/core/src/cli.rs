//! Command-line surface: argument definitions and command execution.
//!
//! The binary only parses arguments and maps [`execute`]'s result to an exit
//! code; everything else lives here so it can be driven from tests.

use std::io::Write;

use clap::{Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::exact::{closed_form, Method};
use crate::oracle::MEMO_DEPTH_LIMIT;
use crate::report::{convergence_report, simulate_report, solve_report, steps_report, Format};
use crate::sim::{run_trials, z_value, DEFAULT_CI_LEVEL};
use crate::verify::{render, run_checks, VerifyInputs};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VERIFY_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Lib(#[from] crate::error::Error),
    #[error("write failed: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Lib(_) => EXIT_USAGE,
            CliError::Io(_) => EXIT_VERIFY_FAILED,
        }
    }
}

#[derive(Debug, Parser)]
#[command(
    name = "pilegame",
    version,
    about = "Win probabilities and move counts for the random-vs-deterministic pile game"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Recursive,
    Telescoping,
    ClosedForm,
    Gf,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Self {
        match m {
            MethodArg::Recursive => Method::Recursive,
            MethodArg::Telescoping => Method::Telescoping,
            MethodArg::ClosedForm => Method::ClosedForm,
            MethodArg::Gf => Method::Gf,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum FormatArg {
    #[default]
    Csv,
    Json,
}

impl From<FormatArg> for Format {
    fn from(f: FormatArg) -> Self {
        match f {
            FormatArg::Csv => Format::Csv,
            FormatArg::Json => Format::Json,
        }
    }
}

fn parse_ci_level(s: &str) -> Result<f64, String> {
    let v: f64 = s.parse().map_err(|e| format!("{e}"))?;
    z_value(v).map(|_| v).map_err(|e| e.to_string())
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Exact D_n for n = 0..=n_max by one analytic method.
    Solve {
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = MethodArg::Recursive)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
        format: FormatArg,
    },
    /// Monte Carlo estimate of D_n with a Wilson interval.
    Simulate {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n: u64,
        #[arg(long, default_value_t = 1_000_000, value_parser = clap::value_parser!(u64).range(1..))]
        trials: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u64).range(1..))]
        workers: u64,
        #[arg(long, default_value_t = DEFAULT_CI_LEVEL, value_parser = parse_ci_level)]
        ci_level: f64,
        #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
        format: FormatArg,
    },
    /// Exact expected number of random-player moves.
    Steps {
        #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
        n_max: u64,
        #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
        format: FormatArg,
    },
    /// Run every cross-method check; exit 1 if any fails.
    Verify {
        #[arg(long, default_value_t = 200)]
        n_max: usize,
        #[arg(long, default_value_t = 12, value_parser = clap::value_parser!(u64).range(0..=MEMO_DEPTH_LIMIT as u64))]
        oracle_max: u64,
    },
    /// Distance of D_n from e^-1 next to the 1/(n+1)! bound.
    Convergence {
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
        format: FormatArg,
    },
}

/// Runs a parsed command, writing the report to `out`. Returns the exit code.
pub fn execute<W: Write>(command: &Command, mut out: W) -> Result<i32, CliError> {
    match *command {
        Command::Solve {
            n_max,
            method,
            format,
        } => {
            solve_report(method.into(), n_max).write(format.into(), &mut out)?;
        }
        Command::Simulate {
            n,
            trials,
            seed,
            workers,
            ci_level,
            format,
        } => {
            let result = run_trials(n, trials, seed, workers, ci_level)?;
            let exact_d = closed_form(n as usize).complement().into_inner();
            simulate_report(&result, &exact_d).write(format.into(), &mut out)?;
        }
        Command::Steps { n_max, format } => {
            steps_report(n_max as usize)?.write(format.into(), &mut out)?;
        }
        Command::Verify { n_max, oracle_max } => {
            let inputs = VerifyInputs::compute(n_max, oracle_max as usize)?;
            let (text, code) = render(&run_checks(&inputs));
            out.write_all(text.as_bytes())?;
            return Ok(code);
        }
        Command::Convergence { n_max, format } => {
            convergence_report(n_max).write(format.into(), &mut out)?;
        }
    }
    out.flush()?;
    Ok(EXIT_OK)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(args: &[&str]) -> Result<Cli, clap::Error> {
        Cli::try_parse_from(std::iter::once("pilegame").chain(args.iter().copied()))
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }

    #[test]
    fn usage_errors() {
        for args in [
            &["solve", "--n-max", "3", "--method", "fourier"][..],
            &["simulate", "--n", "0"],
            &["simulate", "--n", "4", "--trials", "0"],
            &["simulate", "--n", "4", "--ci-level", "0.8"],
            &["steps", "--n-max", "0"],
            &["verify", "--oracle-max", "15"],
        ] {
            let err = parse(args).unwrap_err();
            assert_eq!(err.exit_code(), EXIT_USAGE, "{args:?}");
        }
    }

    #[test]
    fn defaults() {
        let cli = parse(&["verify"]).unwrap();
        assert!(matches!(
            cli.command,
            Command::Verify {
                n_max: 200,
                oracle_max: 12
            }
        ));
        let cli = parse(&["simulate", "--n", "3"]).unwrap();
        let Command::Simulate {
            workers, ci_level, ..
        } = cli.command
        else {
            panic!("simulate expected")
        };
        assert_eq!(workers, 1);
        assert_eq!(ci_level, 0.99);
    }

    #[test]
    fn solve_runs() {
        let cli = parse(&["solve", "--n-max", "2", "--method", "closed-form"]).unwrap();
        let mut buf = Vec::new();
        assert_eq!(execute(&cli.command, &mut buf).unwrap(), EXIT_OK);
        let text = String::from_utf8(buf).unwrap();
        assert_eq!(text.lines().count(), 3 + 1);
    }
}
