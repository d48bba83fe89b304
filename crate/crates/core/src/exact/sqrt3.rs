use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rat::{int, Rat};

/// An element `a + b*sqrt(3)` of the field Q(sqrt 3).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Sqrt3Scalar {
    pub rational: Rat,
    pub root3: Rat,
}

impl Sqrt3Scalar {
    pub fn new(rational: Rat, root3: Rat) -> Self {
        Sqrt3Scalar { rational, root3 }
    }

    pub fn from_rational(rational: Rat) -> Self {
        Self::new(rational, Rat::zero())
    }

    /// `c * sqrt(3)`.
    pub fn root3_multiple(c: Rat) -> Self {
        Self::new(Rat::zero(), c)
    }

    pub fn conj(&self) -> Self {
        Self::new(self.rational.clone(), -&self.root3)
    }

    /// Field norm `a^2 - 3 b^2`.
    pub fn norm(&self) -> Rat {
        &self.rational * &self.rational - int(3) * &self.root3 * &self.root3
    }

    pub fn scale(&self, c: &Rat) -> Self {
        Self::new(&self.rational * c, &self.root3 * c)
    }

    /// The rational value, if the sqrt(3) part vanishes.
    pub fn as_rational(&self) -> Option<&Rat> {
        self.root3.is_zero().then_some(&self.rational)
    }

    pub fn is_zero(&self) -> bool {
        self.rational.is_zero() && self.root3.is_zero()
    }

    /// Multiplicative inverse; `None` for zero.
    pub fn inv(&self) -> Option<Self> {
        let n = self.norm();
        if n.is_zero() {
            return None;
        }
        Some(self.conj().scale(&(Rat::one() / n)))
    }
}

impl Add for &Sqrt3Scalar {
    type Output = Sqrt3Scalar;

    fn add(self, rhs: &Sqrt3Scalar) -> Sqrt3Scalar {
        Sqrt3Scalar::new(&self.rational + &rhs.rational, &self.root3 + &rhs.root3)
    }
}

impl Sub for &Sqrt3Scalar {
    type Output = Sqrt3Scalar;

    fn sub(self, rhs: &Sqrt3Scalar) -> Sqrt3Scalar {
        Sqrt3Scalar::new(&self.rational - &rhs.rational, &self.root3 - &rhs.root3)
    }
}

impl Mul for &Sqrt3Scalar {
    type Output = Sqrt3Scalar;

    fn mul(self, rhs: &Sqrt3Scalar) -> Sqrt3Scalar {
        let rational = &self.rational * &rhs.rational + int(3) * &self.root3 * &rhs.root3;
        let root3 = &self.rational * &rhs.root3 + &self.root3 * &rhs.rational;
        Sqrt3Scalar::new(rational, root3)
    }
}

impl Neg for &Sqrt3Scalar {
    type Output = Sqrt3Scalar;

    fn neg(self) -> Sqrt3Scalar {
        Sqrt3Scalar::new(-&self.rational, -&self.root3)
    }
}

impl fmt::Display for Sqrt3Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.rational.is_zero(), self.root3.is_zero()) {
            (_, true) => write!(f, "{}", self.rational),
            (true, false) => write!(f, "({})√3", self.root3),
            (false, false) => write!(f, "{} + ({})√3", self.rational, self.root3),
        }
    }
}
