//! Error type and the global size-budget guard.
//!
//! Every constructed base object (a finite set or a finite-dimensional vector
//! space) is checked against a process-wide size cap at construction time.
//! This turns accidentally astronomical objects — e.g. an internal hom with
//! billions of elements — into a clean `Error::Budget` instead of a hang or
//! an out-of-memory abort, and keeps every exhaustive check desk-scale.

use std::sync::atomic::{AtomicUsize, Ordering};

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("base kind mismatch: {0}")]
    KindMismatch(String),
    #[error("modulus must be a prime <= 257, got {0}")]
    BadModulus(u32),
    #[error("morphism is not invertible: {0}")]
    NotInvertible(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("size budget exceeded: object of size {size} exceeds cap {limit}")]
    Budget { size: usize, limit: usize },
}

pub const DEFAULT_BUDGET: usize = 100_000;

static BUDGET_LIMIT: AtomicUsize = AtomicUsize::new(DEFAULT_BUDGET);

/// Sets the maximum allowed size (elements or dimension) of any single
/// constructed base object in this process.
pub fn set_budget(limit: usize) {
    BUDGET_LIMIT.store(limit, Ordering::SeqCst);
}

pub fn budget_limit() -> usize {
    BUDGET_LIMIT.load(Ordering::SeqCst)
}

/// Checks a proposed object size against the cap.
pub fn check_size(size: usize) -> Result<()> {
    let limit = BUDGET_LIMIT.load(Ordering::SeqCst);
    if size > limit {
        return Err(Error::Budget { size, limit });
    }
    Ok(())
}

/// Multiplies sizes with overflow checking, for pre-flight cost estimates.
pub fn checked_product(parts: &[usize]) -> Result<usize> {
    let mut acc: usize = 1;
    for &p in parts {
        acc = acc
            .checked_mul(p)
            .ok_or_else(|| Error::Shape("size arithmetic overflow".into()))?;
    }
    Ok(acc)
}
