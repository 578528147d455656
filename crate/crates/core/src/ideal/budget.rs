use std::sync::atomic::{AtomicU64, Ordering};

use crate::error::{Error, Result};

/// Step budget shared by every Gröbner computation of a job.
///
/// One step is one S-pair reduction. When the budget runs out the current
/// computation stops with [`Error::Resource`]; no partial basis escapes.
#[derive(Debug)]
pub struct Budget {
    limit: u64,
    used: AtomicU64,
    max_degree: Option<u32>,
    check_postconditions: bool,
}

pub const DEFAULT_STEP_BUDGET: u64 = 2_000_000;

impl Budget {
    pub fn new(limit: u64) -> Self {
        Budget {
            limit,
            used: AtomicU64::new(0),
            max_degree: None,
            check_postconditions: false,
        }
    }

    pub fn unlimited() -> Self {
        Self::new(u64::MAX)
    }

    /// Fails any S-pair whose sugar degree exceeds `cap`.
    pub fn with_degree_cap(mut self, cap: u32) -> Self {
        self.max_degree = Some(cap);
        self
    }

    /// Re-verifies every computed basis (all S-polynomials reduce to zero).
    pub fn with_postcondition_checks(mut self, on: bool) -> Self {
        self.check_postconditions = on;
        self
    }

    pub fn limit(&self) -> u64 {
        self.limit
    }

    pub fn used(&self) -> u64 {
        self.used.load(Ordering::Relaxed)
    }

    pub fn checks_enabled(&self) -> bool {
        self.check_postconditions
    }

    pub(crate) fn charge(&self, stage: &str) -> Result<()> {
        let used = self.used.fetch_add(1, Ordering::Relaxed) + 1;
        if used > self.limit {
            return Err(Error::Resource {
                stage: stage.to_string(),
                used,
                limit: self.limit,
            });
        }
        Ok(())
    }

    pub(crate) fn check_degree(&self, degree: u32, stage: &str) -> Result<()> {
        match self.max_degree {
            Some(cap) if degree > cap => Err(Error::Resource {
                stage: format!("{stage}: degree {degree} above cap {cap}"),
                used: self.used(),
                limit: self.limit,
            }),
            _ => Ok(()),
        }
    }
}

impl Default for Budget {
    fn default() -> Self {
        Self::new(DEFAULT_STEP_BUDGET)
    }
}
