use std::fmt;

use thiserror::Error;

/// Variable label carried by a [`UPoly`](crate::UPoly) for diagnostics.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Var {
    /// `w = cos 2u`
    W,
    /// `t = b(u)/a(u)`
    T,
}

impl fmt::Display for Var {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Var::W => f.write_str("w"),
            Var::T => f.write_str("t"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An exact division that the underlying identities guarantee left a remainder.
    #[error("exact division in {var} left a nonzero remainder of degree {degree}")]
    NonZeroRemainder { var: Var, degree: usize },

    #[error("exact trigonometric division by cos {multiple}u left a remainder")]
    NonZeroTrigRemainder { multiple: u32 },

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("coefficient of t^{index} in G_{n}(t) is {value}, not a nonnegative integer")]
    NonIntegerCoefficient {
        n: usize,
        index: usize,
        value: String,
    },

    #[error("column {r} is outside 1..={n}")]
    OutOfRange { n: usize, r: usize },

    #[error("constraint system of order {n} has a kernel of dimension {dim}, expected 1")]
    KernelDimension { n: usize, dim: usize },

    #[error("zero denominator")]
    ZeroDenominator,

    #[error("order {n} exceeds the {mode} limit of {limit}")]
    OrderTooLarge {
        n: usize,
        limit: usize,
        mode: &'static str,
    },

    #[error("not an alternating sign matrix: {0}")]
    NotAnAsm(String),

    #[error("substituted polynomial has degree {degree} above the homogenization degree {bound}")]
    DegreeTooHigh { degree: usize, bound: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
