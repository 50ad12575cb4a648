//! Command-line front end: argument handling, exports and the parameter
//! sweep.

pub mod app;
pub mod export;
pub mod sweep;

pub use app::{run, Cli, ExitStatus};
