//! Dense univariate polynomials over the rationals.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rat::{int, Rat};
use crate::error::{Error, Result, Var};

/// Dense polynomial; `coeffs[i]` multiplies `x^i`. The highest stored
/// coefficient is never zero, so the zero polynomial has no coefficients.
#[derive(Clone, Debug)]
pub struct UPoly {
    coeffs: Vec<Rat>,
    var: Var,
}

impl PartialEq for UPoly {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl Eq for UPoly {}

impl UPoly {
    pub fn new(var: Var, mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        UPoly { coeffs, var }
    }

    pub fn from_ints(var: Var, coeffs: &[i64]) -> Self {
        Self::new(var, coeffs.iter().map(|&c| int(c)).collect())
    }

    pub fn zero(var: Var) -> Self {
        UPoly {
            coeffs: Vec::new(),
            var,
        }
    }

    pub fn one(var: Var) -> Self {
        Self::constant(var, Rat::one())
    }

    pub fn constant(var: Var, c: Rat) -> Self {
        Self::new(var, vec![c])
    }

    /// The monomial `c x^k`.
    pub fn monomial(var: Var, c: Rat, k: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); k + 1];
        coeffs[k] = c;
        Self::new(var, coeffs)
    }

    /// The identity polynomial `x`.
    pub fn x(var: Var) -> Self {
        Self::monomial(var, Rat::one(), 1)
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rat> {
        self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> Rat {
        self.coeffs.get(i).cloned().unwrap_or_else(Rat::zero)
    }

    /// `None` stands for the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading(&self) -> Option<&Rat> {
        self.coeffs.last()
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::new(self.var, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn pow(&self, exp: usize) -> Self {
        let mut acc = Self::one(self.var);
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        self.coeffs
            .iter()
            .rev()
            .fold(Rat::zero(), |acc, c| acc * x + c)
    }

    /// Sum of the coefficients, i.e. the value at 1.
    pub fn coeff_sum(&self) -> Rat {
        self.coeffs.iter().fold(Rat::zero(), |acc, c| acc + c)
    }

    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n / 2).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    /// Long division, returning `(quotient, remainder)`.
    pub fn div_rem(&self, divisor: &UPoly) -> Result<(UPoly, UPoly)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead = &divisor.coeffs[dd];
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((UPoly::zero(self.var), self.clone()));
        }
        let mut quot = vec![Rat::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let q = &rem[i + dd] / lead;
            if q.is_zero() {
                continue;
            }
            for (k, d) in divisor.coeffs.iter().enumerate() {
                rem[i + k] -= &q * d;
            }
            quot[i] = q;
        }
        rem.truncate(dd);
        Ok((UPoly::new(self.var, quot), UPoly::new(self.var, rem)))
    }

    /// The quotient `q` with `self = q * divisor`, or `NonZeroRemainder`.
    pub fn exact_div(&self, divisor: &UPoly) -> Result<UPoly> {
        let (q, r) = self.div_rem(divisor)?;
        match r.degree() {
            None => Ok(q),
            Some(degree) => Err(Error::NonZeroRemainder {
                var: self.var,
                degree,
            }),
        }
    }

    /// Evaluates `self` at the rational function `num/den` and clears the
    /// denominator: returns `sum_k c_k num^k den^(h-k)` in the variable of
    /// `num`. Fails if `self` has degree above `h`.
    pub fn homogenized_substitute(&self, num: &UPoly, den: &UPoly, h: usize) -> Result<UPoly> {
        let var = num.var;
        let Some(deg) = self.degree() else {
            return Ok(UPoly::zero(var));
        };
        if deg > h {
            return Err(Error::DegreeTooHigh {
                degree: deg,
                bound: h,
            });
        }
        let mut num_pows = vec![UPoly::one(var)];
        for k in 1..=deg {
            num_pows.push(&num_pows[k - 1] * num);
        }
        let mut den_pows = vec![UPoly::one(var)];
        for k in 1..=h {
            den_pows.push(&den_pows[k - 1] * den);
        }
        let mut acc = UPoly::zero(var);
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            acc = &acc + &(&num_pows[k] * &den_pows[h - k]).scale(c);
        }
        Ok(acc)
    }

    pub fn with_var(mut self, var: Var) -> Self {
        self.var = var;
        self
    }
}

impl Add for &UPoly {
    type Output = UPoly;

    fn add(self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        UPoly::new(self.var, coeffs)
    }
}

impl Sub for &UPoly {
    type Output = UPoly;

    fn sub(self, rhs: &UPoly) -> UPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        UPoly::new(self.var, coeffs)
    }
}

impl Mul for &UPoly {
    type Output = UPoly;

    fn mul(self, rhs: &UPoly) -> UPoly {
        if self.is_zero() || rhs.is_zero() {
            return UPoly::zero(self.var);
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UPoly::new(self.var, coeffs)
    }
}

impl Neg for &UPoly {
    type Output = UPoly;

    fn neg(self) -> UPoly {
        UPoly::new(self.var, self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($($tr:ident :: $m:ident),*) => {$(
        impl $tr for UPoly {
            type Output = UPoly;
            fn $m(self, rhs: UPoly) -> UPoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}

forward_owned!(Add::add, Sub::sub, Mul::mul);

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c}){}", self.var)?,
                _ => write!(f, "({c}){}^{i}", self.var)?,
            }
        }
        Ok(())
    }
}

/// Shorthand for small integer polynomials in `t`.
pub fn tpoly(coeffs: &[i64]) -> UPoly {
    UPoly::from_ints(Var::T, coeffs)
}

/// Shorthand for small integer polynomials in `w`.
pub fn wpoly(coeffs: &[i64]) -> UPoly {
    UPoly::from_ints(Var::W, coeffs)
}
