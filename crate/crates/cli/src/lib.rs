//! Command-line surface, file formats and verification suite for the
//! `cpulse-core` composite-pulse library.

pub mod angles;
pub mod cli;
pub mod config;
pub mod document;
pub mod names;
pub mod parallel;
pub mod table;
pub mod verification;

pub use cli::{run, EXIT_DOMAIN, EXIT_OK, EXIT_USAGE, EXIT_VIOLATION};
