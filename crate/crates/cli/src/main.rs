//! `dirdom`: exact directed domination experiments from the command line.
//!
//! Exit codes: 0 pass, 1 violations found, 2 usage or parse error,
//! 3 resource cap exceeded.

mod args;
mod commands;
mod input;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};

/// Failure of a whole run, carrying its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: 2,
            message: message.into(),
        }
    }
}

impl From<dirdom::Error> for Failure {
    fn from(e: dirdom::Error) -> Self {
        use dirdom::Error::*;
        let code = match e {
            ResourceCap(_) => 3,
            ContractViolation(_) => 1,
            _ => 2,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::usage(format!("i/o error: {e}"))
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Exact(a) => commands::exact(&a, true),
        Command::Bounds(a) => commands::exact(&a, false),
        Command::Verify(a) => commands::verify(&a),
        Command::Partition(a) => commands::partition(&a),
        Command::Tournament(a) => commands::tournament(&a),
        Command::Schuette(a) => commands::schuette(&a),
    };
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
