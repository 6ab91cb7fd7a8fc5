//! Command-line front end for `ainf-core`: configuration, execution and
//! text/JSON reports.

pub mod args;
pub mod config;
pub mod report;
pub mod run;

pub use args::Cli;
pub use config::{Coefficients, Command, ConfigError, Format, RunConfig, SurfaceTarget, VerifyTarget};
pub use report::{Entry, Report, Term};
pub use run::{execute, run, Outcome, EXIT_FAILED, EXIT_INVALID, EXIT_OK};
