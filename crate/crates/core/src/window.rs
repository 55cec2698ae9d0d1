//! Materialization budget for finite windows of the ∞-gon.

use std::sync::atomic::{AtomicI64, Ordering};

use crate::error::{Error, Result};

/// Default maximum window width `b - a`.
pub const DEFAULT_WINDOW_BUDGET: i64 = 512;

static WINDOW_BUDGET: AtomicI64 = AtomicI64::new(DEFAULT_WINDOW_BUDGET);

pub fn window_budget() -> i64 {
    WINDOW_BUDGET.load(Ordering::Relaxed)
}

/// Process-wide override (the CLI wires `INFGON_BUDGET` into this).
pub fn set_window_budget(width: i64) {
    WINDOW_BUDGET.store(width.max(1), Ordering::Relaxed);
}

/// Rejects reversed windows and windows wider than the budget.
pub fn check_window(a: i64, b: i64) -> Result<()> {
    if a >= b {
        return Err(Error::EmptyWindow { a, b });
    }
    let budget = window_budget();
    if b.saturating_sub(a) > budget {
        return Err(Error::WindowTooLarge { a, b, budget });
    }
    Ok(())
}
