use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Truncation policy shared by every power-series evaluation.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SeriesConfig {
    pub max_terms: usize,
    pub rel_tol: f64,
}

impl SeriesConfig {
    pub const DEFAULT_MAX_TERMS: usize = 200;
    pub const DEFAULT_REL_TOL: f64 = 1e-16;

    pub fn new(max_terms: usize, rel_tol: f64) -> Result<Self> {
        let cfg = SeriesConfig { max_terms, rel_tol };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if !(self.rel_tol > 0.0 && self.rel_tol < 1.0) {
            return Err(Error::InvalidConfig(format!(
                "rel_tol must lie in (0, 1), got {}",
                self.rel_tol
            )));
        }
        if self.max_terms < 8 {
            return Err(Error::InvalidConfig(format!(
                "max_terms must be at least 8, got {}",
                self.max_terms
            )));
        }
        Ok(())
    }
}

impl Default for SeriesConfig {
    fn default() -> Self {
        SeriesConfig {
            max_terms: Self::DEFAULT_MAX_TERMS,
            rel_tol: Self::DEFAULT_REL_TOL,
        }
    }
}
