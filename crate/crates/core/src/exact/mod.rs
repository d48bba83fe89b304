//! Exact scalar, polynomial and trigonometric-polynomial arithmetic.

pub mod poly;
pub mod rat;
pub mod sqrt3;
pub mod trig;

pub use poly::{tpoly, wpoly, UPoly};
pub use rat::{rat_binomial, Rat};
pub use sqrt3::Sqrt3Scalar;
pub use trig::{trig_from_w_poly, trig_mul_cos3, trig_to_w_poly, OddTrigPoly, TrigPoint};

/// Exact quotient `a / b`.
pub fn poly_exact_div(a: &UPoly, b: &UPoly) -> crate::Result<UPoly> {
    a.exact_div(b)
}

/// The `order`-th derivative of `f` at `point`.
pub fn trig_eval_derivative_at(f: &OddTrigPoly, order: u32, point: TrigPoint) -> Rat {
    f.eval_derivative_at(order, point)
}
