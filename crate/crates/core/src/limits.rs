//! Resource caps for tensor materialization and cohomology levels.

use crate::error::LyError;

#[derive(Debug, Clone, Copy)]
pub struct Limits {
    /// Highest cochain level materialized by the cohomology complexes.
    pub max_level: usize,
    /// Upper bound on the number of rational entries in any single tensor.
    pub max_tensor_entries: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_level: 3,
            max_tensor_entries: 1_000_000,
        }
    }
}

impl Limits {
    pub fn check_entries(&self, entries: usize, what: &str) -> Result<(), LyError> {
        if entries > self.max_tensor_entries {
            return Err(LyError::ResourceCap(format!(
                "{what} needs {entries} tensor entries, cap is {}",
                self.max_tensor_entries
            )));
        }
        Ok(())
    }

    pub fn check_level(&self, level: usize) -> Result<(), LyError> {
        if level > self.max_level {
            return Err(LyError::ResourceCap(format!(
                "level {level} exceeds the configured cap {}; raise max_level to override",
                self.max_level
            )));
        }
        Ok(())
    }
}
