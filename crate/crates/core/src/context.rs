use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use crate::error::{Error, Result};

pub const DEFAULT_SEED: u64 = 0x5eed_2024;
pub const DEFAULT_MAX_STEPS: u64 = 5_000_000;

/// Budget and randomness settings shared by one computation.
///
/// The step budget applies to each Gröbner basis computation separately;
/// `steps_used` accumulates over all of them. Clones share the counter.
#[derive(Debug, Clone)]
pub struct Context {
    pub max_steps: u64,
    pub seed: u64,
    /// Random linear forms tried before giving up on shape position.
    pub shape_attempts: usize,
    used: Arc<AtomicU64>,
}

impl Default for Context {
    fn default() -> Self {
        Context::new(DEFAULT_SEED, DEFAULT_MAX_STEPS)
    }
}

impl Context {
    pub fn new(seed: u64, max_steps: u64) -> Self {
        Context {
            max_steps,
            seed,
            shape_attempts: 24,
            used: Arc::new(AtomicU64::new(0)),
        }
    }

    pub fn steps_used(&self) -> u64 {
        self.used.load(Ordering::Relaxed)
    }

    /// Adds steps spent in separate contexts on this one's behalf.
    pub(crate) fn charge(&self, steps: u64) {
        self.used.fetch_add(steps, Ordering::Relaxed);
    }

    pub(crate) fn meter(&self) -> StepMeter<'_> {
        StepMeter { ctx: self, local: 0 }
    }
}

/// Counts reduction steps of one computation against the budget.
pub(crate) struct StepMeter<'a> {
    ctx: &'a Context,
    local: u64,
}

impl StepMeter<'_> {
    pub(crate) fn tick(&mut self) -> Result<()> {
        self.local += 1;
        if self.local > self.ctx.max_steps {
            return Err(Error::ResourceLimit { steps: self.local });
        }
        Ok(())
    }
}

impl Drop for StepMeter<'_> {
    fn drop(&mut self) {
        self.ctx.used.fetch_add(self.local, Ordering::Relaxed);
    }
}
