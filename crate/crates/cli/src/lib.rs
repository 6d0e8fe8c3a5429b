//! File formats, parallel MDS checks, twist-matrix search and the command
//! implementations behind the `tgrs` binary.

pub mod commands;
pub mod error;
pub mod files;
pub mod report;
pub mod search;
pub mod textfmt;
pub mod verify;

pub use error::{CliError, Result};
