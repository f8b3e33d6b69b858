//! File formats, report serialization and parallel scans on top of
//! `fproot-core`. The `fproot` binary is a thin layer over this crate.

pub mod error;
pub mod formats;
pub mod output;
pub mod scan;

pub use error::CliError;

/// Version string embedded in every report.
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");
