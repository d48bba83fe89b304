//! Odd trigonometric polynomials `sum_m b_m sin(m u)` and their conversion
//! to polynomials in `w = cos 2u`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

use num_traits::{One, Zero};

use super::poly::UPoly;
use super::rat::{big, rat, Rat};
use crate::error::{Error, Result, Var};

/// Where a derivative is evaluated.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TrigPoint {
    Zero,
    HalfPi,
}

/// `sum_m b_m sin(m u)` over positive frequencies `m` with nonzero `b_m`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct OddTrigPoly {
    terms: BTreeMap<u32, Rat>,
}

/// `sin(q pi / 2)` for an integer `q`.
fn sin_quarter_turns(q: i64) -> i64 {
    match q.rem_euclid(4) {
        1 => 1,
        3 => -1,
        _ => 0,
    }
}

impl OddTrigPoly {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds from `(frequency, coefficient)` pairs with arbitrary integer
    /// frequencies; see [`OddTrigPoly::add_term`].
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, Rat)>,
    {
        let mut f = Self::new();
        for (m, c) in terms {
            f.add_term(m, c);
        }
        f
    }

    /// `sin(m u)`.
    pub fn sin(m: i64) -> Self {
        Self::from_terms([(m, Rat::one())])
    }

    /// Adds `c sin(m u)`. Negative frequencies fold through
    /// `sin(-m u) = -sin(m u)` and frequency zero contributes nothing.
    pub fn add_term(&mut self, m: i64, c: Rat) {
        if m == 0 || c.is_zero() {
            return;
        }
        let (freq, c) = if m < 0 {
            (m.unsigned_abs(), -c)
        } else {
            (m as u64, c)
        };
        let freq = u32::try_from(freq).expect("frequency fits in u32");
        let slot = self.terms.entry(freq).or_insert_with(Rat::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&freq);
        }
    }

    pub fn coeff(&self, m: u32) -> Rat {
        self.terms.get(&m).cloned().unwrap_or_else(Rat::zero)
    }

    /// Nonzero terms in increasing frequency.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (u32, &Rat)> {
        self.terms.iter().map(|(&m, c)| (m, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn max_frequency(&self) -> Option<u32> {
        self.terms.keys().next_back().copied()
    }

    /// Coefficient at the highest frequency.
    pub fn leading(&self) -> Option<&Rat> {
        self.terms.values().next_back()
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::new();
        }
        OddTrigPoly {
            terms: self.terms.iter().map(|(&m, b)| (m, b * c)).collect(),
        }
    }

    /// `self / leading coefficient`, so the top frequency carries 1.
    pub fn monic(&self) -> Self {
        match self.leading() {
            Some(lead) => self.scale(&(Rat::one() / lead)),
            None => Self::new(),
        }
    }

    /// The scalar `s` with `self = s * other`, if one exists.
    pub fn ratio_to(&self, other: &OddTrigPoly) -> Option<Rat> {
        if self.is_zero() || other.is_zero() {
            return None;
        }
        if self.terms.len() != other.terms.len() {
            return None;
        }
        let s = self.leading()? / other.leading()?;
        (*self == other.scale(&s)).then_some(s)
    }

    /// `cos(k u) * self` by `sin(m u) cos(k u) = [sin((m+k) u) + sin((m-k) u)] / 2`.
    pub fn mul_cos(&self, k: u32) -> Self {
        let half = rat(1, 2);
        let mut out = Self::new();
        for (&m, b) in &self.terms {
            let c = b * &half;
            out.add_term(i64::from(m) + i64::from(k), c.clone());
            out.add_term(i64::from(m) - i64::from(k), c);
        }
        out
    }

    /// `self * sin^2(k u)`, using `sin^2(k u) = (1 - cos(2 k u)) / 2`.
    pub fn mul_sin_squared(&self, k: u32) -> Self {
        let half = rat(1, 2);
        (self - &self.mul_cos(2 * k)).scale(&half)
    }

    /// Exact quotient by `cos(k u)`.
    ///
    /// Peels off the top frequency repeatedly: if `self = cos(k u) h` and `h`
    /// has top term `h_M sin(M u)`, then `self` has top term `h_M / 2 sin((M+k) u)`.
    pub fn div_cos(&self, k: u32) -> Result<Self> {
        let mut rem = self.clone();
        let mut quot = Self::new();
        while let Some(top) = rem.max_frequency() {
            if top <= k {
                return Err(Error::NonZeroTrigRemainder { multiple: k });
            }
            let m = top - k;
            let c = rem.coeff(top) * big(2);
            let step = Self::from_terms([(i64::from(m), c.clone())]).mul_cos(k);
            rem = &rem - &step;
            quot.add_term(i64::from(m), c);
        }
        Ok(quot)
    }

    /// Exact value of the `order`-th derivative at `point`.
    pub fn eval_derivative_at(&self, order: u32, point: TrigPoint) -> Rat {
        let mut acc = Rat::zero();
        for (&m, b) in &self.terms {
            acc += b * derivative_of_sin_at(i64::from(m), order, point);
        }
        acc
    }

    /// Whether every frequency is even.
    pub fn has_even_frequencies(&self) -> bool {
        self.terms.keys().all(|m| m % 2 == 0)
    }
}

/// `d^order/du^order sin(q u)` at `point`, for any integer `q`:
/// `q^order sin(q u0 + order pi/2)`.
pub fn derivative_of_sin_at(q: i64, order: u32, point: TrigPoint) -> Rat {
    let quarter = match point {
        TrigPoint::Zero => i64::from(order),
        TrigPoint::HalfPi => q + i64::from(order),
    };
    match sin_quarter_turns(quarter) {
        0 => Rat::zero(),
        s => big(s) * big(q).pow(order as i32),
    }
}

/// `cos(3u) * f`.
pub fn trig_mul_cos3(f: &OddTrigPoly) -> OddTrigPoly {
    f.mul_cos(3)
}

/// Chebyshev polynomials of the second kind `U_0 .. U_max` in `w`.
fn chebyshev_u(max: usize) -> Vec<UPoly> {
    let mut us = vec![UPoly::one(Var::W)];
    if max >= 1 {
        us.push(UPoly::from_ints(Var::W, &[0, 2]));
    }
    let two_w = UPoly::from_ints(Var::W, &[0, 2]);
    for k in 2..=max {
        let next = &(&two_w * &us[k - 1]) - &us[k - 2];
        us.push(next);
    }
    us
}

fn one_minus_w_squared() -> UPoly {
    UPoly::from_ints(Var::W, &[1, 0, -1])
}

/// Expands `sin^p(2u) * poly(cos 2u)` for odd `p` into frequency form.
///
/// With `v = 2u`, `sin^p v = sin v (1 - w^2)^((p-1)/2)`, and
/// `sin v * U_k(cos v) = sin((k+1) v)`; the polynomial factor is rewritten in
/// the `U_k` basis by Horner steps using `w U_k = (U_{k+1} + U_{k-1}) / 2`.
pub fn trig_from_w_poly(poly: &UPoly, sine_power: u32) -> OddTrigPoly {
    assert!(
        sine_power % 2 == 1,
        "sine power must be odd, got {sine_power}"
    );
    let nu = (sine_power / 2) as usize;
    let q = poly * &one_minus_w_squared().pow(nu);
    let half = rat(1, 2);
    let mut u_coeffs: Vec<Rat> = Vec::new();
    for c in q.coeffs().iter().rev() {
        // u_coeffs <- w * u_coeffs + c
        let mut next = vec![Rat::zero(); u_coeffs.len() + 1];
        for (k, a) in u_coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let h = a * &half;
            next[k + 1] += &h;
            if k >= 1 {
                next[k - 1] += h;
            }
        }
        next[0] += c;
        u_coeffs = next;
    }
    OddTrigPoly::from_terms(
        u_coeffs
            .into_iter()
            .enumerate()
            .map(|(k, c)| (2 * (k as i64 + 1), c)),
    )
}

/// Inverse of [`trig_from_w_poly`]: the polynomial `P` with
/// `f(u) = sin^p(2u) P(cos 2u)`. Requires even frequencies and exact
/// divisibility by `sin^p(2u)`.
pub fn trig_to_w_poly(f: &OddTrigPoly, sine_power: u32) -> Result<UPoly> {
    if sine_power.is_multiple_of(2) {
        return Err(Error::InvalidArgument(format!(
            "sine power must be odd, got {sine_power}"
        )));
    }
    if !f.has_even_frequencies() {
        return Err(Error::InvalidArgument(
            "odd frequency is not a function of cos 2u".into(),
        ));
    }
    let Some(top) = f.max_frequency() else {
        return Ok(UPoly::zero(Var::W));
    };
    let us = chebyshev_u((top / 2) as usize);
    let mut q = UPoly::zero(Var::W);
    for (m, b) in f.terms() {
        q = &q + &us[(m / 2 - 1) as usize].scale(b);
    }
    let nu = (sine_power / 2) as usize;
    q.exact_div(&one_minus_w_squared().pow(nu))
}

impl Add for &OddTrigPoly {
    type Output = OddTrigPoly;

    fn add(self, rhs: &OddTrigPoly) -> OddTrigPoly {
        let mut out = self.clone();
        for (&m, c) in &rhs.terms {
            out.add_term(i64::from(m), c.clone());
        }
        out
    }
}

impl Sub for &OddTrigPoly {
    type Output = OddTrigPoly;

    fn sub(self, rhs: &OddTrigPoly) -> OddTrigPoly {
        let mut out = self.clone();
        for (&m, c) in &rhs.terms {
            out.add_term(i64::from(m), -c);
        }
        out
    }
}

impl Neg for &OddTrigPoly {
    type Output = OddTrigPoly;

    fn neg(self) -> OddTrigPoly {
        OddTrigPoly {
            terms: self.terms.iter().map(|(&m, c)| (m, -c)).collect(),
        }
    }
}

impl fmt::Display for OddTrigPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms().rev().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c}) sin {m}u")?;
        }
        Ok(())
    }
}
