//! Benchmarking, verification, and file tooling around `assocsort-core`.

pub mod baselines;
pub mod bench;
pub mod cli;
mod error;
pub mod format;
pub mod runner;
pub mod workload;

pub use error::AppError;
