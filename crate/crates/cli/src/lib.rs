//! Command-line front end for `selfloop-core`: graph files in, JSON or
//! table reports out.
//!
//! Exit status: 0 when every requested check holds, 1 when a verified
//! inequality or cross-check fails, 2 on input errors.

pub mod args;
pub mod commands;
pub mod report;
pub mod sampler;

pub use commands::{run, Outcome};
