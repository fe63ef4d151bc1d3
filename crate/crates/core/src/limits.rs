//! Size guards for the exponential-cost routines.
//!
//! Every guard has a built-in default. Setting `CLIFIS_MAX_N` replaces all of
//! them with a single vertex-count cap, which can both raise and lower them.

use crate::error::{Error, Result};

pub const ENV_MAX_N: &str = "CLIFIS_MAX_N";

pub const EDGE_FUNCTION_MAX_N: usize = 24;
/// Largest number of subsets `edge_function` will enumerate for one size.
pub const EDGE_FUNCTION_BUDGET: u64 = 1 << 26;
pub const BRUTE_FORCE_MAX_N: usize = 22;
pub const DENSE_MAX_N: usize = 12;
pub const STATEVECTOR_MAX_N: usize = 12;
pub const THRESHOLDS_MAX_N: usize = 20;
pub const EXACT_DIAG_MAX_N: usize = 20;
/// Degeneracy of production-solver optima is only checked by enumeration up to here.
pub const DEGENERACY_CHECK_MAX_N: usize = 16;

/// The `CLIFIS_MAX_N` override, if set to a valid integer.
pub fn env_override() -> Option<usize> {
    std::env::var(ENV_MAX_N).ok()?.trim().parse().ok()
}

pub fn effective(default: usize) -> usize {
    env_override().unwrap_or(default)
}

pub fn check(what: &'static str, size: usize, default: usize) -> Result<()> {
    let limit = effective(default);
    if size > limit {
        return Err(Error::InfeasibleSize { what, size, limit });
    }
    Ok(())
}
