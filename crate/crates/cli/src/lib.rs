//! Command-line front end for `qden-core`.

pub mod args;
pub mod commands;
pub mod report;

pub use args::Cli;
pub use commands::{run, CliError, NodeSet};
pub use report::{Format, ReportEnvelope};
