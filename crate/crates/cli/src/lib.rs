//! Spec files, versioned reports and the `symrep` command line.

pub mod app;
pub mod budget;
pub mod error;
pub mod report;
pub mod spec_file;
pub mod verify;

pub use app::run;
pub use error::CliError;
pub use report::{Report, SCHEMA_VERSION};
pub use spec_file::{parse_spec, ParsedSpec, SpecFile};
