//! Size caps for the exponential routines.
//!
//! Every cap can be raised (never lowered) by setting `OIDRD_MAX_N`. Raising
//! a cap is at your own risk: runtimes grow exponentially past the defaults.

/// Environment variable that overrides every soft cap.
pub const ENV_MAX_N: &str = "OIDRD_MAX_N";

/// Branch-and-bound solver input size.
pub const SOLVER_MAX_N: usize = 24;
/// Plain enumeration of all labelings.
pub const BRUTE_FORCE_MAX_N: usize = 12;
/// Labeled graph enumeration by edge subsets.
pub const GRAPH_ENUM_MAX_N: usize = 7;
/// Labeled tree enumeration by Prüfer sequences.
pub const TREE_ENUM_MAX_N: usize = 10;
/// Base graph size for the gadget identity check.
pub const REDUCTION_MAX_N: usize = 5;
/// Base graph size for the corona minimum.
pub const CORONA_MAX_N: usize = 20;

/// Effective cap: the default, or `OIDRD_MAX_N` when that is larger.
pub fn cap(default: usize) -> usize {
    std::env::var(ENV_MAX_N)
        .ok()
        .and_then(|v| v.trim().parse::<usize>().ok())
        .map_or(default, |v| v.max(default))
}
