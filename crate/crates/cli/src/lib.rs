//! Command-line front end for the `twocolor` simulator: JSON configuration,
//! scenario presets and CSV/JSON exports.

pub mod commands;
pub mod config;
pub mod error;
pub mod export;

use std::ffi::OsString;
use std::process::ExitCode;

use clap::Parser;

pub use commands::Cli;
pub use config::RunConfig;
pub use error::{CliError, CliResult};

/// Parses `args`, runs the subcommand and maps failures to exit codes.
pub fn main_with_args<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(e.exit_code() as u8);
        }
    };
    match commands::execute(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
