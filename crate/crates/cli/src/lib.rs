//! Configuration, commands and artifact writers behind the `spdc-window`
//! binary.

pub mod commands;
pub mod config;
pub mod error;
pub mod output;

pub use config::RunConfig;
pub use error::CliError;
