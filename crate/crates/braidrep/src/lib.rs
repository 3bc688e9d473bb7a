//! IO companion for `braidrep-core`: JSON wire formats and the batch CLI.

pub mod cli;
pub mod json;
