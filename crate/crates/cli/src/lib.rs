//! File formats, reports and SVG rendering behind the `cklein` binary.

pub mod error;
pub mod export;
pub mod render;
pub mod report;

pub use crate::error::CliError;
