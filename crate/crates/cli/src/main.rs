mod args;
mod commands;
mod error;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::Parser;

use args::{Cli, Command};
use commands::Status;
use error::{CliError, CliResult};

const EXIT_USAGE: u8 = 1;
const EXIT_VIOLATION: u8 = 2;

fn check_tolerance_env() -> CliResult<()> {
    match std::env::var("QNG_TOL") {
        Ok(s) => match s.trim().parse::<f64>() {
            Ok(t) if t.is_finite() && t > 0.0 => Ok(()),
            _ => Err(CliError::Usage(format!("QNG_TOL must be a positive number, got {s:?}"))),
        },
        Err(_) => Ok(()),
    }
}

fn run(cli: Cli) -> CliResult<Status> {
    check_tolerance_env()?;
    match cli.command {
        Command::Spectrum { graphs, kind, out } => commands::spectrum(&graphs, kind, &out),
        Command::Check { graphs, thm, ng, out } => commands::check(&graphs, thm, &ng, &out),
        Command::Enumerate { orders, filter, input, out } => {
            commands::enumerate(&orders, filter, input.as_deref(), &out)
        }
        Command::Scan { orders, filter, predicate, ng, jobs, input, out } => {
            commands::scan_cmd(&orders, filter, &predicate, &ng, jobs, input.as_deref(), &out)
        }
        Command::ProofCheck { thm, orders, d2, out } => commands::proof_check(thm, &orders, d2, &out),
        Command::Report { graphs, thm, ng, out } => commands::report(&graphs, &thm, &ng, &out),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => ExitCode::SUCCESS,
                _ => ExitCode::from(EXIT_USAGE),
            };
        }
    };
    match run(cli) {
        Ok(Status::Clean) => ExitCode::SUCCESS,
        Ok(Status::Violation) => ExitCode::from(EXIT_VIOLATION),
        Err(e) => {
            eprintln!("qng: {e}");
            ExitCode::from(EXIT_USAGE)
        }
    }
}
