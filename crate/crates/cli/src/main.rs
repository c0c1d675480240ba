//! `trigseries`: classify coefficient sequences, render convergence curves
//! and run the verification harnesses.
//!
//! Exit status: 0 on success, 1 when a verification reports a violated
//! inequality, 2 on usage or input errors.

mod args;
mod commands;
mod input;
mod output;

use std::process::ExitCode;

use clap::Parser;

use args::{Cli, Command};
use commands::Status;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command_line: Vec<String> = std::env::args().skip(1).collect();
    let result = match &cli.command {
        Command::Classify(a) => commands::run_classify(a, command_line),
        Command::Curve(a) => commands::run_curve(a, command_line),
        Command::Verify(a) => commands::run_verify(a, command_line),
    };
    match result {
        Ok(Status::Ok) => ExitCode::SUCCESS,
        Ok(Status::Violations) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {:#}", e);
            ExitCode::from(2)
        }
    }
}
