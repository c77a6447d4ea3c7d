//! Batch verifier for crossed-module base change over prime fields.
//!
//! The library side of the `xalg` binary: structured definition files,
//! deterministic reports, the bundled worked-example catalog, and the
//! command dispatch the CLI drives. See `xalg-core` for the underlying
//! constructions.

pub mod catalog;
pub mod commands;
pub mod defs;
pub mod fixtures;
pub mod report;

pub use commands::{run, CommandError, CommandSpec, QFlag, RunOptions};
pub use defs::{parse_file, parse_str, DefinitionFile, ParseError};
pub use report::Report;
