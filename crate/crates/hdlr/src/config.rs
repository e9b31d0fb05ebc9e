//! Runtime configuration of the command-line driver.

use std::path::PathBuf;

use hdlr_core::limits::Budget;

use crate::cache::{Cache, ENV_VAR};
use crate::formats::Format;

#[derive(Debug, Clone)]
pub struct Config {
    pub format: Format,
    pub cache_dir: PathBuf,
    pub budget: Budget,
    /// Toric motivic Chern classes beyond projective spaces.
    pub experimental: bool,
}

/// `HDLR_CACHE_DIR`, else `.hdlr-cache` in the working directory.
pub fn default_cache_dir() -> PathBuf {
    std::env::var_os(ENV_VAR).map(PathBuf::from).unwrap_or_else(|| PathBuf::from(".hdlr-cache"))
}

impl Default for Config {
    fn default() -> Self {
        Config { format: Format::Text, cache_dir: default_cache_dir(), budget: Budget::default(), experimental: false }
    }
}

impl Config {
    pub fn cache(&self) -> Cache {
        Cache::new(&self.cache_dir)
    }
}
