//! Dense-dimension resource cap.
//!
//! Every operation that materializes an exponentially sized object checks
//! the requested dimension against a process-wide cap before allocating.
//! The default is 2^20 amplitudes; the `QTFLAB_MAX_DIM` environment
//! variable or [`set_max_dim`] (used by the CLI `--max-dim` flag) override
//! it.

use crate::error::{Error, Result};
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::OnceLock;

/// Default cap on dense dimensions: 2^20 amplitudes.
pub const DEFAULT_MAX_DIM: usize = 1 << 20;

static MAX_DIM: OnceLock<AtomicUsize> = OnceLock::new();

fn cell() -> &'static AtomicUsize {
    MAX_DIM.get_or_init(|| {
        let from_env = std::env::var("QTFLAB_MAX_DIM")
            .ok()
            .and_then(|v| v.parse::<usize>().ok())
            .filter(|&v| v > 0);
        AtomicUsize::new(from_env.unwrap_or(DEFAULT_MAX_DIM))
    })
}

/// Current dense-dimension cap.
pub fn max_dim() -> usize {
    cell().load(Ordering::Relaxed)
}

/// Override the dense-dimension cap for this process.
pub fn set_max_dim(cap: usize) {
    cell().store(cap.max(1), Ordering::Relaxed);
}

/// Check a requested dense dimension against the cap.
///
/// The argument is `u128` so that callers can form products like `d^m`
/// without overflowing before the check happens.
pub fn check_dim(requested: u128) -> Result<usize> {
    let cap = max_dim();
    if requested == 0 {
        return Err(Error::argument("dimension must be positive"));
    }
    if requested > cap as u128 {
        return Err(Error::Resource { requested, cap });
    }
    Ok(requested as usize)
}

/// `base^exp` checked against the cap.
pub fn checked_pow(base: usize, exp: u32) -> Result<usize> {
    let mut acc: u128 = 1;
    for _ in 0..exp {
        acc = acc.saturating_mul(base as u128);
        if acc > max_dim() as u128 {
            return Err(Error::Resource {
                requested: acc,
                cap: max_dim(),
            });
        }
    }
    check_dim(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn default_cap_allows_small_and_rejects_huge() {
        assert_eq!(check_dim(1 << 10).unwrap(), 1 << 10);
        assert!(matches!(
            check_dim(1 << 40),
            Err(Error::Resource { .. })
        ));
    }

    #[test]
    fn checked_pow_overflows_to_resource_error() {
        assert_eq!(checked_pow(2, 10).unwrap(), 1024);
        assert!(checked_pow(2, 64).is_err());
    }
}
