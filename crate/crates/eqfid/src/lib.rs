//! Command-line front end for `eqfid-core`: moment tables, verification
//! reports, trajectory files and Hamiltonian dumps.

// `!(x > 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod cli;
pub mod commands;
pub mod config;
pub mod error;
pub mod report;

pub use cli::{run, Cli, Outcome};
pub use error::{CliError, Result};
