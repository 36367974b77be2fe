//! Documents, sampling, the theorem suite and counterexample search for
//! Čech fuzzy closure spaces. The `fcs` binary wraps these.

pub mod document;
pub mod expr;
pub mod random;
pub mod search;
pub mod suite;

use fuzzy_closure_core::DEFAULT_MAX_CARRIER;

/// Overrides the enumeration budget (largest carrier `I^X` enumerated).
pub const BUDGET_VAR: &str = "FCS_MAX_CARRIER";

pub fn budget_from_env() -> usize {
    std::env::var(BUDGET_VAR)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_MAX_CARRIER)
}
