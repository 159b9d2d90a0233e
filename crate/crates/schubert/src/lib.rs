//! Command-line reports, JSON documents and exhaustive verification sweeps
//! built on [`schubert_core`].

pub mod cli;
mod error;
pub mod json;
pub mod render;
pub mod verify;

pub use cli::{run, Outcome};
pub use error::CliError;
pub use verify::{Check, JobReport, VerificationJob};
