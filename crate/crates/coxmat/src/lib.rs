//! File formats, verification sweeps and the command-line front end for
//! `coxmat-core`.

pub mod error;
pub mod formats;
pub mod load;
pub mod suite;
pub mod verify;
pub mod words;

pub use error::{CliError, Result};
