//! Shared workload sizes for the benchmarks.

use asm3_core::recurrences::PhiCache;
use asm3_core::{Family, UPoly};

pub const PHI_NU: [usize; 3] = [5, 10, 20];
pub const ROW_ORDERS: [usize; 3] = [10, 20, 40];
pub const KERNEL_ORDERS: [usize; 3] = [6, 9, 12];
pub const DP_ORDERS: [usize; 3] = [8, 10, 12];
pub const RATIO_NU: [usize; 2] = [10, 25];

/// `Phi^(j)_nu` from a fresh cache, so every lower index is recomputed.
pub fn cold_phi(family: Family, nu: usize) -> UPoly {
    PhiCache::new()
        .get(family, nu)
        .expect("recurrence divides exactly")
        .clone()
}
