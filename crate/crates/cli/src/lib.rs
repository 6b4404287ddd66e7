//! Command-line front end and verification harness for the combinatorics
//! of cells in affine type A.

pub mod commands;
pub mod enumerate;
pub mod fixtures;
pub mod golden;
pub mod report;
pub mod suites;

pub use enumerate::{cell_triples, enumerate_cells, EnumerationSpec};
pub use report::{Tally, VerifyReport};
pub use suites::{run_suite, SUITES};

#[derive(Debug, thiserror::Error)]
pub enum HarnessError {
    #[error("n = {0} is too large for exhaustive enumeration (pass --force to override)")]
    TooLarge(usize),
    #[error("unknown suite {0:?}")]
    UnknownSuite(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] ambc_core::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error("{0}")]
    Io(#[from] std::io::Error),
}
