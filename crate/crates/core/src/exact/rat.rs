//! Rational scalars and the integer helpers shared by the closed forms.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::One;

/// Arbitrary-precision rational, always kept in lowest terms with a positive
/// denominator.
pub type Rat = BigRational;

/// `num / den` as a reduced rational. Panics on a zero denominator.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

pub fn big(n: impl Into<BigInt>) -> Rat {
    Rat::from_integer(n.into())
}

/// Generalized binomial coefficient `x (x-1) ... (x-k+1) / k!`.
pub fn rat_binomial(x: &Rat, k: usize) -> Rat {
    let mut acc = Rat::one();
    let mut factor = x.clone();
    for i in 1..=k {
        acc *= &factor;
        acc /= big(i);
        factor -= Rat::one();
    }
    acc
}

pub fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

pub fn factorial_int(n: usize) -> BigInt {
    BigInt::from(factorial(n))
}

/// `base^exp` for a rational base.
pub fn rat_pow(base: &Rat, exp: usize) -> Rat {
    let mut acc = Rat::one();
    for _ in 0..exp {
        acc *= base;
    }
    acc
}

/// The integer value of `x` if its denominator is one.
pub fn as_integer(x: &Rat) -> Option<BigInt> {
    x.is_integer().then(|| x.to_integer())
}

/// The nonnegative integer value of `x`, if any.
pub fn as_natural(x: &Rat) -> Option<BigUint> {
    as_integer(x).and_then(|n| n.to_biguint())
}
