//! Search and term budgets.
//!
//! Every exhaustive search counts the nodes it visits against a [`Budget`] and
//! fails with [`Error::SearchSpaceTooLarge`] instead of truncating silently.
//! The `CU_DIV_BUDGET` environment variable overrides the defaults.

use crate::error::{Error, Result};

pub const BUDGET_ENV: &str = "CU_DIV_BUDGET";
pub const DEFAULT_SEARCH_NODES: u64 = 50_000_000;
pub const DEFAULT_TERMS: usize = 1 << 20;
pub const DEFAULT_CUTOFF: u64 = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget {
    pub search_nodes: u64,
    pub terms: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { search_nodes: DEFAULT_SEARCH_NODES, terms: DEFAULT_TERMS }
    }
}

impl Budget {
    /// Defaults, with both guards replaced by `CU_DIV_BUDGET` when it parses.
    pub fn from_env() -> Self {
        match std::env::var(BUDGET_ENV).ok().and_then(|v| v.trim().parse::<u64>().ok()) {
            Some(v) => Budget { search_nodes: v, terms: v.min(usize::MAX as u64) as usize },
            None => Budget::default(),
        }
    }
}

/// Node counter for one search.
#[derive(Debug)]
pub(crate) struct Meter {
    used: u64,
    limit: u64,
    what: &'static str,
}

impl Meter {
    pub(crate) fn new(limit: u64, what: &'static str) -> Self {
        Meter { used: 0, limit, what }
    }

    #[inline]
    pub(crate) fn tick(&mut self) -> Result<()> {
        self.used += 1;
        if self.used > self.limit {
            return Err(Error::SearchSpaceTooLarge { what: self.what.to_string(), budget: self.limit });
        }
        Ok(())
    }
}
