//! The odd trigonometric polynomial `f_n(u) = Z(u) sin^n u cos^(n-1) u`,
//! determined up to scale by two routes: closed binomial sums and the exact
//! null space of its vanishing conditions.
//!
//! `f_n` has frequencies `4 - 3n + 6k` for `k = 0..n`; none is divisible by 3,
//! which is what makes `f(u) + f(u + 2pi/3) + f(u + 4pi/3)` vanish. The
//! remaining conditions are that `f^(m)(0) = 0` for `m < n` and
//! `f^(m)(pi/2) = 0` for `m < n - 1`.

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::exact::poly::tpoly;
use crate::exact::rat::{int, rat, rat_binomial, rat_pow, Rat};
use crate::exact::trig::{derivative_of_sin_at, trig_to_w_poly, OddTrigPoly, TrigPoint};
use crate::genfun::RefinedRow;
use crate::linalg::nullspace;
use crate::recurrences::{multiplier_c, multiplier_r};

/// The linear conditions on the coefficients `beta_k` of `sin((4 - 3n + 6k) u)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelProblem {
    pub n: usize,
    pub frequencies: Vec<i64>,
    /// `(point, derivative order)` per row.
    pub constraints: Vec<(TrigPoint, u32)>,
}

impl KernelProblem {
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "order must be positive");
        let ni = n as i64;
        let frequencies = (0..ni).map(|k| 4 - 3 * ni + 6 * k).collect();
        let at_zero = (0..n as u32).map(|m| (TrigPoint::Zero, m));
        let at_half_pi = (0..n as u32 - 1).map(|m| (TrigPoint::HalfPi, m));
        KernelProblem {
            n,
            frequencies,
            constraints: at_zero.chain(at_half_pi).collect(),
        }
    }

    /// Integer matrix with entry `d^m/du^m sin(q_k u)` at the row's point.
    pub fn matrix(&self) -> Vec<Vec<BigInt>> {
        self.constraints
            .iter()
            .map(|&(point, order)| {
                self.frequencies
                    .iter()
                    .map(|&q| derivative_of_sin_at(q, order, point).to_integer())
                    .collect()
            })
            .collect()
    }

    /// The exact null space of [`KernelProblem::matrix`].
    pub fn kernel(&self) -> Vec<Vec<Rat>> {
        nullspace(&self.matrix(), self.n)
    }

    pub fn to_trig(&self, beta: &[Rat]) -> OddTrigPoly {
        OddTrigPoly::from_terms(self.frequencies.iter().copied().zip(beta.iter().cloned()))
    }
}

fn third(k: i64) -> Rat {
    rat(k, 3)
}

/// `f_{2nu+2} / c_nu`:
/// `(3nu+2) sum C(nu-1/3, a) C(nu+1/3, nu-a) sin(2-6nu+12a)u
///  - (3nu+1) sum C(nu-2/3, a) C(nu+2/3, nu-a) sin(4-6nu+12a)u`.
pub fn f_even_closed(nu: usize) -> OddTrigPoly {
    let v = nu as i64;
    let nu_r = int(v);
    let mut f = OddTrigPoly::new();
    for a in 0..=nu {
        let ai = a as i64;
        let first =
            rat_binomial(&(&nu_r - third(1)), a) * rat_binomial(&(&nu_r + third(1)), nu - a);
        f.add_term(2 - 6 * v + 12 * ai, first * int(3 * v + 2));
        let second =
            rat_binomial(&(&nu_r - third(2)), a) * rat_binomial(&(&nu_r + third(2)), nu - a);
        f.add_term(4 - 6 * v + 12 * ai, -second * int(3 * v + 1));
    }
    f
}

/// The same polynomial written with the summation index of the first sum
/// reversed; it comes out as `-f_even_closed(nu)`.
pub fn f_even_closed_reversed(nu: usize) -> OddTrigPoly {
    let v = nu as i64;
    let nu_r = int(v);
    let mut f = OddTrigPoly::new();
    for a in 0..=nu {
        let ai = a as i64;
        let first =
            rat_binomial(&(&nu_r + third(1)), a) * rat_binomial(&(&nu_r - third(1)), nu - a);
        f.add_term(-2 - 6 * v + 12 * ai, first * int(3 * v + 2));
        let second =
            rat_binomial(&(&nu_r - third(2)), a) * rat_binomial(&(&nu_r + third(2)), nu - a);
        f.add_term(4 - 6 * v + 12 * ai, second * int(3 * v + 1));
    }
    f
}

/// `f_{2nu+1}` up to scale:
/// `sum_{a<=nu} C(nu-2/3, a) C(nu-1/3, nu-a) sin(1-6nu+12a)u
///  - sum_{a<nu} C(nu-1/3, a) C(nu-2/3, nu-a-1) sin(5-6nu+12a)u`.
pub fn f_odd_closed(nu: usize) -> OddTrigPoly {
    let v = nu as i64;
    let nu_r = int(v);
    let mut f = OddTrigPoly::new();
    for a in 0..=nu {
        let ai = a as i64;
        let c = rat_binomial(&(&nu_r - third(2)), a) * rat_binomial(&(&nu_r - third(1)), nu - a);
        f.add_term(1 - 6 * v + 12 * ai, c);
        if a < nu {
            let c = rat_binomial(&(&nu_r - third(1)), a)
                * rat_binomial(&(&nu_r - third(2)), nu - a - 1);
            f.add_term(5 - 6 * v + 12 * ai, -c);
        }
    }
    f
}

/// Closed form of `f_n` for any order (`sin u` for `n = 1`).
pub fn f_closed(n: usize) -> OddTrigPoly {
    assert!(n >= 1, "order must be positive");
    if n.is_multiple_of(2) {
        f_even_closed((n - 2) / 2)
    } else {
        f_odd_closed((n - 1) / 2)
    }
}

/// The one-dimensional kernel of the vanishing conditions, scaled so its
/// top-frequency coefficient equals that of [`f_closed`].
pub fn f_solve_linear(n: usize) -> Result<OddTrigPoly> {
    if n == 0 {
        return Err(Error::InvalidArgument("order must be positive".into()));
    }
    let problem = KernelProblem::new(n);
    let kernel = problem.kernel();
    if kernel.len() != 1 {
        return Err(Error::KernelDimension {
            n,
            dim: kernel.len(),
        });
    }
    let f = problem.to_trig(&kernel[0]);
    let target = f_closed(n);
    let (Some(have), Some(want)) = (f.leading(), target.leading()) else {
        return Err(Error::ZeroDenominator);
    };
    Ok(f.scale(&(want / have)))
}

/// Whether `f(u) + f(u + 2pi/3) + f(u + 4pi/3) = 0`, i.e. no frequency is a
/// multiple of 3.
pub fn verify_shift_sum(f: &OddTrigPoly) -> bool {
    f.terms().all(|(m, _)| m % 3 != 0)
}

/// Whether `sin^n u cos^(n-1) u` divides `f`, checked through the vanishing
/// derivatives at `0` and `pi/2`.
pub fn verify_root_multiplicity(f: &OddTrigPoly, n: usize) -> bool {
    let n = n as u32;
    let at_zero = (0..n).all(|m| f.eval_derivative_at(m, TrigPoint::Zero).is_zero());
    let at_half_pi =
        (0..n.saturating_sub(1)).all(|m| f.eval_derivative_at(m, TrigPoint::HalfPi).is_zero());
    at_zero && at_half_pi
}

/// `-[sum C(nu+1/3, a) C(nu-1/3, nu-a) (6a-1-3nu)^(2nu+1)]
///  / [sum C(nu-2/3, a) C(nu+2/3, nu-a) (6a+2-3nu)^(2nu+1)]`,
/// which equals `(3nu+1)/(3nu+2)`.
pub fn ratio_identity(nu: usize) -> Result<Rat> {
    let v = nu as i64;
    let nu_r = int(v);
    let exp = 2 * nu + 1;
    let mut num = Rat::zero();
    let mut den = Rat::zero();
    for a in 0..=nu {
        let ai = a as i64;
        num += rat_binomial(&(&nu_r + third(1)), a)
            * rat_binomial(&(&nu_r - third(1)), nu - a)
            * rat_pow(&int(6 * ai - 1 - 3 * v), exp);
        den += rat_binomial(&(&nu_r - third(2)), a)
            * rat_binomial(&(&nu_r + third(2)), nu - a)
            * rat_pow(&int(6 * ai + 2 - 3 * v), exp);
    }
    if den.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(-num / den)
}

/// Kernel coefficients of order `2nu + 2` from the product formulas:
/// `beta_{2a} = C(nu+1/3, a) C(nu-1/3, nu-a)` and
/// `beta_{2a+1} = ratio * C(nu-2/3, a) C(nu+2/3, nu-a)`.
pub fn beta_even_closed(nu: usize, ratio: &Rat) -> Vec<Rat> {
    let nu_r = int(nu as i64);
    let mut beta = Vec::with_capacity(2 * nu + 2);
    for a in 0..=nu {
        beta.push(rat_binomial(&(&nu_r + third(1)), a) * rat_binomial(&(&nu_r - third(1)), nu - a));
        beta.push(
            ratio
                * rat_binomial(&(&nu_r - third(2)), a)
                * rat_binomial(&(&nu_r + third(2)), nu - a),
        );
    }
    beta
}

/// `G_{2nu+2}` in the orientation `sum_r A(2nu+2, r) t^(2nu+2-r)` from
/// `bracket = f_{2nu+2} / c_nu`:
/// `(4/3)^(nu+1) c_nu / (sqrt3 (t+1)) (t^2+t+1)^(nu+1) Psi(w(t))` with
/// `Psi = bracket / sin^(2nu+1) 2u` and `w(t) = -(t^2+4t+1) / (2(t^2+t+1))`.
fn even_generating_poly(nu: usize, bracket: &OddTrigPoly) -> Result<crate::UPoly> {
    let psi = trig_to_w_poly(bracket, 2 * nu as u32 + 1)?;
    let num = tpoly(&[-1, -4, -1]);
    let den = tpoly(&[2, 2, 2]);
    // carries an extra factor 2^(nu+1)
    let cleared = psi.homogenized_substitute(&num, &den, nu + 1)?;
    let c = multiplier_c(nu)?;
    if !c.rational.is_zero() {
        return Err(Error::InvalidArgument(format!(
            "c_{nu} = {c} is not a pure sqrt3 multiple"
        )));
    }
    let scale = rat_pow(&rat(4, 3), nu + 1) * &c.root3 / rat_pow(&int(2), nu + 1);
    cleared.scale(&scale).exact_div(&tpoly(&[1, 1]))
}

fn row_from_reversed(n: usize, poly: &crate::UPoly) -> Result<RefinedRow> {
    let coeffs: Vec<Rat> = (0..n).rev().map(|i| poly.coeff(i)).collect();
    if poly.degree().is_some_and(|d| d >= n) {
        return Err(Error::InvalidArgument(format!(
            "G_{n} has degree above {}",
            n - 1
        )));
    }
    RefinedRow::from_poly(n, &crate::UPoly::new(crate::Var::T, coeffs))
}

/// `A(n, . ;3)` recovered from the kernel solution `f_n`.
///
/// Even `n`: `f_n` is turned into a polynomial in `cos 2u` and mapped to
/// `G_n(t)` with `c_nu`. Odd `n = 2nu+1`: `f_n` is divided exactly by
/// `cos 3u`, the quotient is treated as `f_{2nu}`, and
/// `G_{2nu+1} = -r_nu 2(1+2t)(2+t) / (3(1+t)) G_{2nu}`.
pub fn reconstruct_row_from_f(n: usize) -> Result<RefinedRow> {
    match n {
        0 => Err(Error::InvalidArgument("order must be positive".into())),
        1 => Ok(RefinedRow::from_u64(&[1])),
        n if n % 2 == 0 => {
            let nu = (n - 2) / 2;
            let f = f_solve_linear(n)?;
            row_from_reversed(n, &even_generating_poly(nu, &f)?)
        }
        n => {
            let nu = (n - 1) / 2;
            let f = f_solve_linear(n)?;
            let h = f.div_cos(3)?;
            // align the quotient's scale with the even bracket c_{nu-1} refers to
            let bracket = f_even_closed(nu - 1);
            let (Some(have), Some(want)) = (h.leading(), bracket.leading()) else {
                return Err(Error::ZeroDenominator);
            };
            let h = h.scale(&(want / have));
            let even = even_generating_poly(nu - 1, &h)?;
            let r = multiplier_r(nu)?;
            let lifted = &even * &tpoly(&[2, 5, 2]).scale(&(-r * int(2)));
            let odd = lifted.exact_div(&tpoly(&[3, 3]))?;
            row_from_reversed(n, &odd)
        }
    }
}

/// Scalar `s` with `a = s * b`, or `None`.
pub fn proportionality(a: &OddTrigPoly, b: &OddTrigPoly) -> Option<Rat> {
    a.ratio_to(b)
}
