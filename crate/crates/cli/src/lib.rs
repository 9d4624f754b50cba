//! Command-line front end: method inspection, polynomials, stability regions,
//! amplification reports, reproduction tables and the tolerance-sweep
//! experiment. The binary is a thin clap layer over these functions.

pub mod commands;
mod error;
pub mod parse;
pub mod tables;

pub use error::CliError;
pub use parse::{parse_method_spec, parse_region_target, ParseError, RegionTarget};
pub use tables::{run_table, TableOptions, TABLES};
