//! Front end for the `simac` engine: argument parsing, output formats and the
//! batch verifier behind `siflag verify`.

pub mod config;
pub mod emit;
pub mod suite;

pub use config::{parse_args, ConfigError, Format, RunConfig, Suite};
pub use suite::{run_suite, Report};
