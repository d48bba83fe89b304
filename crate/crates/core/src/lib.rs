//! Exact refined 3-enumeration of alternating sign matrices.
//!
//! `A(n,r;3)` is the total weight of the `n x n` alternating sign matrices
//! whose first-row 1 sits in column `r`, each matrix weighted by `3^k` for its
//! `k` entries equal to `-1`. The generating functions
//! `G_n(t) = sum_r A(n,r;3) t^(r-1)` are computed three ways:
//!
//! * [`genfun`]: the even-order formula driven by two second-order
//!   polynomial recurrences, and the even-to-odd relation;
//! * [`kernel`]: the trigonometric polynomial `f_n` found as the exact null
//!   space of its vanishing conditions, converted back to `G_n`;
//! * [`oracle`]: direct weighted enumeration of the matrices.
//!
//! All arithmetic is exact.

pub mod error;
pub mod exact;
pub mod genfun;
pub mod kernel;
pub mod linalg;
pub mod oracle;
pub mod recurrences;
pub mod verify;

pub use error::{Error, Result, Var};
pub use exact::{
    poly_exact_div, rat_binomial, trig_eval_derivative_at, trig_from_w_poly, trig_mul_cos3,
    trig_to_w_poly, OddTrigPoly, Rat, Sqrt3Scalar, TrigPoint, UPoly,
};
pub use genfun::{g_even, g_odd, normalized, refined, row, RefinedRow};
pub use kernel::{
    f_closed, f_even_closed, f_odd_closed, f_solve_linear, ratio_identity, reconstruct_row_from_f,
    verify_root_multiplicity, verify_shift_sum, KernelProblem,
};
pub use oracle::{count_minus_ones, enumerate, ColumnState, OracleMode};
pub use recurrences::{
    a3_total, f_trig_direct, g_poly, multiplier_c, multiplier_r, phi, phi_special, Family, GRoute,
    SpecialPoint,
};
