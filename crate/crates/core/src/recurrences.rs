//! Polynomial sequences `Phi`, `F`, `g`, the totals `A(n;3)`, their values at
//! the special points `w = -1/2` and `w = -1`, and the multipliers `c_nu`, `r_nu`.

use std::sync::{LazyLock, Mutex, PoisonError};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result, Var};
use crate::exact::poly::{tpoly, wpoly, UPoly};
use crate::exact::rat::{as_natural, big, factorial_int, int, rat, rat_binomial, rat_pow, Rat};
use crate::exact::sqrt3::Sqrt3Scalar;
use crate::exact::trig::OddTrigPoly;

/// Which of the two sequences (`j = 1` or `j = 2`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    One,
    Two,
}

impl Family {
    pub const ALL: [Family; 2] = [Family::One, Family::Two];

    pub fn j(self) -> i64 {
        match self {
            Family::One => 1,
            Family::Two => 2,
        }
    }

    fn index(self) -> usize {
        self.j() as usize - 1
    }
}

impl TryFrom<i64> for Family {
    type Error = Error;

    fn try_from(j: i64) -> Result<Self> {
        match j {
            1 => Ok(Family::One),
            2 => Ok(Family::Two),
            _ => Err(Error::InvalidArgument(format!(
                "family index must be 1 or 2, got {j}"
            ))),
        }
    }
}

/// How `g_poly` is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GRoute {
    /// Second-order recurrence in `t`.
    Recurrence,
    /// Substituting `w = -(t^2+4t+1) / (2(t^2+t+1))` into `Phi`.
    Substitution,
}

/// Evaluation points of `Phi` with closed forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpecialPoint {
    /// `w = -1/2`, i.e. `u = pi/3`, `t = 0`.
    MinusHalf,
    /// `w = -1`, i.e. `u = pi/2`, `t = 1`.
    MinusOne,
}

impl SpecialPoint {
    pub fn value(self) -> Rat {
        match self {
            SpecialPoint::MinusHalf => rat(-1, 2),
            SpecialPoint::MinusOne => int(-1),
        }
    }
}

/// Memoized `Phi^(j)_nu(w)` for both families.
#[derive(Debug)]
pub struct PhiCache {
    seqs: [Vec<UPoly>; 2],
}

impl Default for PhiCache {
    fn default() -> Self {
        Self::new()
    }
}

impl PhiCache {
    pub fn new() -> Self {
        let one = vec![wpoly(&[1]), UPoly::new(Var::W, vec![int(0), rat(-16, 3)])];
        let two = vec![wpoly(&[0, 2]), wpoly(&[1, 0, 4]).scale(&rat(-4, 3))];
        PhiCache { seqs: [one, two] }
    }

    /// Extends the cache to index `nu` and returns that entry.
    ///
    /// `9nu(nu+1)(1-w^2) Phi_{nu+1} = -18nu(2nu+1) w(3-4w^2) Phi_nu
    ///  + 4(9nu^2-j^2)(1-4w^2)^2 Phi_{nu-1}`.
    pub fn get(&mut self, family: Family, nu: usize) -> Result<&UPoly> {
        let j = family.j();
        let seq = &mut self.seqs[family.index()];
        let w_cubic = wpoly(&[0, 3, 0, -4]);
        let quartic = wpoly(&[1, 0, -4]).pow(2);
        let one_minus_w2 = wpoly(&[1, 0, -1]);
        while seq.len() <= nu {
            let k = seq.len() - 1;
            let ki = k as i64;
            let a = (&w_cubic * &seq[k]).scale(&int(-18 * ki * (2 * ki + 1)));
            let b = (&quartic * &seq[k - 1]).scale(&int(4 * (9 * ki * ki - j * j)));
            let divisor = one_minus_w2.scale(&int(9 * ki * (ki + 1)));
            let next = (&a + &b).exact_div(&divisor)?;
            seq.push(next);
        }
        Ok(&seq[nu])
    }
}

fn lock<T>(m: &Mutex<T>) -> std::sync::MutexGuard<'_, T> {
    m.lock().unwrap_or_else(PoisonError::into_inner)
}

static PHI: LazyLock<Mutex<PhiCache>> = LazyLock::new(|| Mutex::new(PhiCache::new()));

/// `Phi^(j)_nu(w)`.
pub fn phi(family: Family, nu: usize) -> Result<UPoly> {
    lock(&PHI).get(family, nu).cloned()
}

/// `F^(j)_nu(u) = sum_a C(nu - j/3, a) C(nu + j/3, nu - a) sin 2(j - 3nu + 6a)u`.
pub fn f_trig_direct(family: Family, nu: usize) -> OddTrigPoly {
    let j = family.j();
    let nu_i = nu as i64;
    let lower = int(nu_i) - rat(j, 3);
    let upper = int(nu_i) + rat(j, 3);
    OddTrigPoly::from_terms((0..=nu).map(|a| {
        let c = rat_binomial(&lower, a) * rat_binomial(&upper, nu - a);
        (2 * (j - 3 * nu_i + 6 * a as i64), c)
    }))
}

struct GCache {
    seqs: [Vec<UPoly>; 2],
}

impl GCache {
    fn new() -> Self {
        // (1+2t)^2 (2+t)^2
        let pp = (&tpoly(&[1, 2]) * &tpoly(&[2, 1])).pow(2);
        let nine_t2 = tpoly(&[0, 0, 9]);
        let one = vec![
            tpoly(&[1, 1, 1]).scale(&rat(1, 3)),
            (&pp - &nine_t2).scale(&rat(1, 18)),
        ];
        let two = vec![
            tpoly(&[1, 4, 1]).scale(&rat(-1, 3)),
            (&pp + &nine_t2).scale(&rat(-1, 18)),
        ];
        GCache { seqs: [one, two] }
    }

    /// `3(1-t^2)^2 g_{nu+1} = (2nu+1)(1+4t+t^2)[3(1+t+t^2)^2 - (1+4t+t^2)^2] g_nu
    ///  + (9nu^2-j^2) t^2 (1+2t)^2 (2+t)^2 g_{nu-1}`.
    fn get(&mut self, family: Family, nu: usize) -> Result<&UPoly> {
        let j = family.j();
        let seq = &mut self.seqs[family.index()];
        let q = tpoly(&[1, 4, 1]);
        let d = tpoly(&[1, 1, 1]);
        let mid = &q * &(&d.pow(2).scale(&int(3)) - &q.pow(2));
        let far = &tpoly(&[0, 0, 1]) * &(&tpoly(&[1, 2]) * &tpoly(&[2, 1])).pow(2);
        let divisor = tpoly(&[1, 0, -1]).pow(2).scale(&int(3));
        while seq.len() <= nu {
            let k = seq.len() - 1;
            let ki = k as i64;
            let a = (&mid * &seq[k]).scale(&int(2 * ki + 1));
            let b = (&far * &seq[k - 1]).scale(&int(9 * ki * ki - j * j));
            let next = (&a + &b).exact_div(&divisor)?;
            seq.push(next);
        }
        Ok(&seq[nu])
    }
}

static G_REC: LazyLock<Mutex<GCache>> = LazyLock::new(|| Mutex::new(GCache::new()));

/// `g^(j)_nu(t)` by either route.
pub fn g_poly(family: Family, nu: usize, route: GRoute) -> Result<UPoly> {
    match route {
        GRoute::Recurrence => lock(&G_REC).get(family, nu).cloned(),
        GRoute::Substitution => g_by_substitution(family, nu),
    }
}

/// `nu! (t^2+t+1)^(nu+1) Phi_nu(w(t)) / (3 4^nu)`.
fn g_by_substitution(family: Family, nu: usize) -> Result<UPoly> {
    let p = phi(family, nu)?;
    let num = tpoly(&[-1, -4, -1]);
    let den = tpoly(&[2, 2, 2]);
    // the homogenized form carries an extra 2^(nu+1) from the denominator
    let h = p.homogenized_substitute(&num, &den, nu + 1)?;
    let scale = big(factorial_int(nu)) / (int(3) * rat_pow(&int(4), nu) * rat_pow(&int(2), nu + 1));
    Ok(h.scale(&scale))
}

/// Closed-form ratio `A(n;3) / A(n-1;3)` for `n >= 2`.
///
/// `A(2nu+2)/A(2nu+1) = 3^nu nu! (3nu+2)! / ((2nu+1)!)^2` and
/// `A(2nu+1)/A(2nu) = 3^nu nu! (3nu)! / ((2nu)!)^2`.
pub fn total_ratio(n: usize) -> Rat {
    assert!(n >= 2, "ratio defined from n = 2");
    let nu = (n - 1) / 2;
    let three_pow = rat_pow(&int(3), nu);
    let nu_fact = big(factorial_int(nu));
    if n.is_multiple_of(2) {
        let bottom = factorial_int(2 * nu + 1);
        three_pow * nu_fact * big(factorial_int(3 * nu + 2)) / big(&bottom * &bottom)
    } else {
        let bottom = factorial_int(2 * nu);
        three_pow * nu_fact * big(factorial_int(3 * nu)) / big(&bottom * &bottom)
    }
}

/// `A(n;3)` for `n = 1..` chained from `A(1;3) = 1`.
#[derive(Debug)]
pub struct TotalsTable {
    totals: Vec<BigUint>,
}

impl Default for TotalsTable {
    fn default() -> Self {
        Self::new()
    }
}

impl TotalsTable {
    pub fn new() -> Self {
        TotalsTable {
            totals: vec![BigUint::one()],
        }
    }

    pub fn get(&mut self, n: usize) -> Result<&BigUint> {
        if n == 0 {
            return Err(Error::InvalidArgument("order must be positive".into()));
        }
        while self.totals.len() < n {
            let next_n = self.totals.len() + 1;
            let prev = big(self.totals[next_n - 2].clone());
            let next = prev * total_ratio(next_n);
            let next = as_natural(&next).ok_or(Error::NonIntegerCoefficient {
                n: next_n,
                index: 0,
                value: next.to_string(),
            })?;
            self.totals.push(next);
        }
        Ok(&self.totals[n - 1])
    }
}

static TOTALS: LazyLock<Mutex<TotalsTable>> = LazyLock::new(|| Mutex::new(TotalsTable::new()));

/// `A(n;3)`, the 3-enumeration of all `n x n` ASMs.
pub fn a3_total(n: usize) -> Result<BigUint> {
    lock(&TOTALS).get(n).cloned()
}

/// Closed forms for `Phi^(j)_nu` at `w = -1/2` and `w = -1`.
pub fn phi_special(family: Family, nu: usize, point: SpecialPoint) -> Rat {
    let four_thirds = rat_pow(&rat(4, 3), nu);
    let f = |k: usize| big(factorial_int(k));
    match point {
        SpecialPoint::MinusHalf => {
            let sign = if family == Family::One {
                int(1)
            } else {
                int(-1)
            };
            sign * four_thirds * f(2 * nu) / (f(nu) * f(nu))
        }
        SpecialPoint::MinusOne => {
            let denom = f(nu) * f(2 * nu + 1);
            match family {
                Family::One => four_thirds * f(3 * nu + 1) / denom,
                Family::Two => -four_thirds * int(3 * nu as i64 + 2) * f(3 * nu) / denom,
            }
        }
    }
}

/// `c_nu = sqrt3 A(2nu+2;3) nu! (2nu+1)! (3/16)^nu / (4 (3nu+2)!)`.
pub fn multiplier_c(nu: usize) -> Result<Sqrt3Scalar> {
    let total = big(a3_total(2 * nu + 2)?);
    let f = |k: usize| big(factorial_int(k));
    let c = total * f(nu) * f(2 * nu + 1) * rat_pow(&rat(3, 16), nu) / (int(4) * f(3 * nu + 2));
    Ok(Sqrt3Scalar::root3_multiple(c))
}

/// `r_nu = -A(2nu+1;3) / (3 A(2nu;3))`, `nu >= 1`.
pub fn multiplier_r(nu: usize) -> Result<Rat> {
    if nu == 0 {
        return Err(Error::InvalidArgument("r_nu is defined for nu >= 1".into()));
    }
    let odd = big(a3_total(2 * nu + 1)?);
    let even = big(a3_total(2 * nu)?);
    if even.is_zero() {
        return Err(Error::ZeroDenominator);
    }
    Ok(-odd / (int(3) * even))
}
