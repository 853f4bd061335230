//! Command-line front end for `hypeig-core`: flag handling, measure tables,
//! and reproducible JSON/CSV output.

// `!(x > 0.0)` style guards are deliberate: they also reject NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod config;
pub mod measure;
pub mod output;
pub mod run;

pub use config::{Cli, Command, Format, RunConfig};
pub use run::{run, Outcome};

/// Exit status for flag and input errors.
pub const EXIT_USAGE: i32 = 2;
/// Exit status for numerical failures and failed checks.
pub const EXIT_FAILURE: i32 = 1;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("usage: {0}")]
    Usage(String),
    #[error(transparent)]
    Numerical(#[from] hypeig_core::Error),
    #[error("cannot write output: {0}")]
    Output(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => EXIT_USAGE,
            CliError::Numerical(_) | CliError::Output(_) => EXIT_FAILURE,
        }
    }
}
