//! Command-line front end for the `kmismatch` library.

pub mod app;
pub mod config;
pub mod fasta;
pub mod input;
pub mod report;
pub mod verify;

pub use app::{main_with_args, run, Cli};
pub use config::RunConfig;
