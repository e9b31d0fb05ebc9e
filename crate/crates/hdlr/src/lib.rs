//! File formats, result cache, verification harness and command-line
//! driver for the `hdlr-core` engine.

pub mod cache;
pub mod commands;
pub mod config;
pub mod error;
pub mod fanio;
pub mod formats;
pub mod golden;
pub mod harness;

pub use error::{Error, Result};
