//! Command-line pipeline over the `tds-entropy` library.
//!
//! Exit codes: 0 success, 1 invalid data, 2 usage error, 3 I/O error. Data
//! goes to files or standard output; diagnostics go to standard error.

// `!(x >= 0.0)` style checks are deliberate: NaN must fail them.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

mod args;
mod commands;
mod error;
mod run_report;

use std::ffi::OsString;
use std::time::Instant;

use clap::error::ErrorKind;
use clap::Parser;

pub use args::{Cli, Command};
pub use error::CliError;
pub use run_report::{sha256_hex, FileDigest, RunReport};

/// Parses `argv` (program name first) and runs the subcommand.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 2,
            };
        }
    };
    match execute(&cli.command) {
        Ok(report) => {
            for w in &report.warnings {
                eprintln!("warning: {w}");
            }
            eprintln!(
                "{}: wrote {} file(s) in {} ms",
                report.command,
                report.outputs.len(),
                report.elapsed.as_millis()
            );
            0
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

/// Runs one subcommand and returns its report.
pub fn execute(command: &Command) -> Result<RunReport, CliError> {
    let start = Instant::now();
    let name = match command {
        Command::Validate(_) => "validate",
        Command::Simulate(_) => "simulate",
        Command::Entropy(_) => "entropy",
        Command::Complexity(_) => "complexity",
        Command::Tds(_) => "tds",
        Command::Plot(_) => "plot",
        Command::Report(_) => "report",
    };
    let mut report = RunReport::new(name);
    match command {
        Command::Validate(a) => commands::validate(a, &mut report)?,
        Command::Simulate(a) => commands::simulate(a, &mut report)?,
        Command::Entropy(a) => commands::entropy(a, &mut report)?,
        Command::Complexity(a) => commands::complexity(a, &mut report)?,
        Command::Tds(a) => commands::tds(a, &mut report)?,
        Command::Plot(a) => commands::plot(a, &mut report)?,
        Command::Report(a) => commands::report(a, &mut report)?,
    }
    report.elapsed = start.elapsed();
    Ok(report)
}
