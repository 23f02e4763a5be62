//! Library half of the `unproj` binary: report envelopes, golden files, the
//! verification grid and the command implementations.

pub mod commands;
pub mod golden;
pub mod grid;
pub mod report;
pub mod suites;

pub use commands::{CliError, Common, FSource};
pub use report::{Checks, ReportEnvelope, Status};
