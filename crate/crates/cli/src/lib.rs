//! Command-line verification suites and parameter sweeps.
//!
//! Every command writes a machine-readable table (CSV by default, JSON with
//! a metadata header on request) and encodes its verdict in the exit code:
//!
//! * 0 — all checks within tolerance
//! * 1 — usage or configuration error
//! * 2 — tolerance breach (breaching rows are flagged in the table)
//! * 3 — internal numeric failure
//!
//! Identical configuration (including `--seed`) produces byte-identical
//! CSV; the JSON mirror carries run metadata in an `meta` block that
//! byte-stable comparisons can ignore.

mod commands;
mod config;
mod output;

use clap::error::ErrorKind;
use clap::Parser;

pub use config::{OutputFormat, RunConfig};

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_BREACH: i32 = 2;
pub const EXIT_NUMERIC: i32 = 3;

#[derive(Debug, Parser)]
#[command(
    name = "dynquant",
    version,
    about = "Deformed commutation relations: verification suites and spectrum sweeps"
)]
struct Cli {
    #[command(subcommand)]
    command: commands::Command,
}

/// Run the CLI on explicit arguments; returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let kind = e.kind();
            // help/version are successful outcomes, not usage errors
            let _ = e.print();
            return if matches!(kind, ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                EXIT_OK
            } else {
                EXIT_USAGE
            };
        }
    };
    commands::dispatch(cli.command)
}
