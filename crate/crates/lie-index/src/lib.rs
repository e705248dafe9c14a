//! File formats, reports and the command-line front end for `lie-index-core`.

pub mod cli;
pub mod format;
pub mod report;

pub use format::{AlgebraFile, ParseError};
