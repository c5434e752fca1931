//! Command-line front end: expression parsing, a numerical quadrature oracle,
//! the catalog of worked examples and the `s3ca` verbs.

pub mod app;
pub mod examples;
pub mod expr;
pub mod oracle;

use s3ca::{MathError, ParseError};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Math(#[from] MathError),
}

impl CliError {
    /// Process exit code: 2 for syntax errors, 3 for mathematical errors.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Math(_) => 3,
        }
    }
}

pub use app::run;
