//! File formats, name resolution, report documents and the census cache
//! behind the `subdirect` command-line tool.

pub mod cache;
pub mod catalog;
pub mod docs;
pub mod error;
pub mod io;

pub use error::{CliError, CliResult};
