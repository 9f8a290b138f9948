use std::io;
use std::process::ExitCode;

use clap::Parser;
use pilegame::cli::{execute, Cli};

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout().lock();
    let code = match execute(&cli.command, io::BufWriter::new(stdout)) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    ExitCode::from(code as u8)
}
