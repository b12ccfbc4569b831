//! Library side of the `hypersig` command-line tool: CSV formats, example
//! signal generators, command implementations, and the selftest criteria.
//!
//! The binary in `main.rs` is a thin clap wrapper over [`commands`]; keeping
//! the logic here lets the integration and acceptance tests drive it
//! directly.

pub mod commands;
pub mod error;
pub mod generate;
pub mod io;
pub mod selftest;

pub use error::AppError;
