//! Generating functions `G_n(t) = sum_r A(n,r;3) t^(r-1)` built from the
//! even-order formula and the even-to-odd relation.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::error::{Error, Result, Var};
use crate::exact::poly::{tpoly, UPoly};
use crate::exact::rat::{as_natural, big, factorial_int, int, Rat};
use crate::recurrences::{a3_total, g_poly, Family, GRoute};

/// The refined counts `A(n,r;x)` for `r = 1..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RefinedRow {
    pub n: usize,
    /// `counts[r-1]` is the weight of matrices whose first-row 1 sits in column `r`.
    pub counts: Vec<BigUint>,
    pub total: BigUint,
}

impl RefinedRow {
    pub fn new(counts: Vec<BigUint>) -> Self {
        let total = counts.iter().fold(BigUint::zero(), |acc, c| acc + c);
        RefinedRow {
            n: counts.len(),
            counts,
            total,
        }
    }

    pub fn from_u64(counts: &[u64]) -> Self {
        Self::new(counts.iter().map(|&c| BigUint::from(c)).collect())
    }

    /// Reads the coefficients of `G_n(t)`, requiring `n` nonnegative integers.
    pub fn from_poly(n: usize, poly: &UPoly) -> Result<Self> {
        if poly.degree().map_or(0, |d| d + 1) > n {
            return Err(Error::InvalidArgument(format!(
                "G_{n} has degree {:?}, above {}",
                poly.degree(),
                n - 1
            )));
        }
        let counts = (0..n)
            .map(|i| {
                let c = poly.coeff(i);
                as_natural(&c).ok_or_else(|| Error::NonIntegerCoefficient {
                    n,
                    index: i,
                    value: c.to_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::new(counts))
    }

    pub fn to_poly(&self) -> UPoly {
        UPoly::new(Var::T, self.counts.iter().map(|c| big(c.clone())).collect())
    }

    /// `G_n(t) / A(n;3)` with rational coefficients.
    pub fn normalized(&self) -> UPoly {
        self.to_poly()
            .scale(&(Rat::from_integer(1.into()) / big(self.total.clone())))
    }

    pub fn is_palindromic(&self) -> bool {
        self.counts.iter().eq(self.counts.iter().rev())
    }

    pub fn get(&self, r: usize) -> Result<&BigUint> {
        if r == 0 || r > self.n {
            return Err(Error::OutOfRange { n: self.n, r });
        }
        Ok(&self.counts[r - 1])
    }
}

/// `{(3nu+2) g1_nu - (3nu+1) g2_nu}`.
pub fn even_bracket(nu: usize) -> Result<UPoly> {
    let nu_i = nu as i64;
    let g1 = g_poly(Family::One, nu, GRoute::Recurrence)?;
    let g2 = g_poly(Family::Two, nu, GRoute::Recurrence)?;
    Ok(&g1.scale(&int(3 * nu_i + 2)) - &g2.scale(&int(3 * nu_i + 1)))
}

/// Row of order `2nu + 2`:
/// `G~ = (2nu+1)!/(3nu+2)! * bracket / (t+1)`, rescaled by `A(2nu+2;3)`.
pub fn g_even(nu: usize) -> Result<RefinedRow> {
    let n = 2 * nu + 2;
    let reduced = even_bracket(nu)?.exact_div(&tpoly(&[1, 1]))?;
    let scale = big(a3_total(n)?) * big(factorial_int(2 * nu + 1)) / big(factorial_int(3 * nu + 2));
    RefinedRow::from_poly(n, &reduced.scale(&scale))
}

/// Row of order `2nu + 1`: `G~_{2nu+1} = G~_{2nu} * 2(1+2t)(2+t) / (9(t+1))`,
/// with `nu = 0` the single 1x1 matrix.
pub fn g_odd(nu: usize) -> Result<RefinedRow> {
    if nu == 0 {
        return Ok(RefinedRow::from_u64(&[1]));
    }
    let n = 2 * nu + 1;
    let even = g_even(nu - 1)?;
    let lifted = &even.to_poly() * &tpoly(&[2, 5, 2]).scale(&int(2));
    let reduced = lifted.exact_div(&tpoly(&[9, 9]))?;
    let scale = big(a3_total(n)?) / big(a3_total(n - 1)?);
    RefinedRow::from_poly(n, &reduced.scale(&scale))
}

/// `G_n(t)` as a row of refined counts.
pub fn row(n: usize) -> Result<RefinedRow> {
    match n {
        0 => Err(Error::InvalidArgument("order must be positive".into())),
        n if n % 2 == 0 => g_even((n - 2) / 2),
        n => g_odd((n - 1) / 2),
    }
}

/// `A(n,r;3)`.
pub fn refined(n: usize, r: usize) -> Result<BigUint> {
    if n == 0 || r == 0 || r > n {
        return Err(Error::OutOfRange { n, r });
    }
    row(n)?.get(r).cloned()
}

/// `G~_n(t) = G_n(t) / A(n;3)`.
pub fn normalized(n: usize) -> Result<UPoly> {
    Ok(row(n)?.normalized())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat::rat;

    #[test]
    fn even_rows() {
        assert_eq!(g_even(0).unwrap(), RefinedRow::from_u64(&[1, 1]));
        assert_eq!(g_even(1).unwrap(), RefinedRow::from_u64(&[9, 36, 36, 9]));
        let six = g_even(2).unwrap();
        assert_eq!(
            six,
            RefinedRow::from_u64(&[2025, 14175, 34830, 34830, 14175, 2025])
        );
        assert_eq!(six.total, BigUint::from(102060u32));
    }

    #[test]
    fn bracket_before_division() {
        let b = even_bracket(1).unwrap();
        assert_eq!(b, tpoly(&[2, 10, 16, 10, 2]));
        // (2nu+1)!/(3nu+2)! * A(4;3) = 9/2 turns bracket/(t+1) into the row
        let reduced = b.exact_div(&tpoly(&[1, 1])).unwrap().scale(&rat(9, 2));
        assert_eq!(reduced, tpoly(&[9, 36, 36, 9]));
    }

    #[test]
    fn odd_rows() {
        assert_eq!(g_odd(0).unwrap(), RefinedRow::from_u64(&[1]));
        assert_eq!(g_odd(1).unwrap(), RefinedRow::from_u64(&[2, 5, 2]));
        assert_eq!(
            g_odd(2).unwrap(),
            RefinedRow::from_u64(&[90, 495, 855, 495, 90])
        );
    }

    #[test]
    fn refined_lookup() {
        assert_eq!(refined(4, 1).unwrap(), BigUint::from(9u32));
        assert_eq!(refined(3, 2).unwrap(), BigUint::from(5u32));
        assert_eq!(refined(5, 4).unwrap(), BigUint::from(495u32));
        assert_eq!(refined(3, 4), Err(Error::OutOfRange { n: 3, r: 4 }));
        assert_eq!(refined(3, 0), Err(Error::OutOfRange { n: 3, r: 0 }));
    }

    #[test]
    fn normalized_two() {
        assert_eq!(
            normalized(2).unwrap(),
            UPoly::new(Var::T, vec![rat(1, 2), rat(1, 2)])
        );
    }

    #[test]
    fn from_poly_rejects_fractions() {
        let p = UPoly::new(Var::T, vec![rat(1, 2), int(1)]);
        assert!(matches!(
            RefinedRow::from_poly(2, &p),
            Err(Error::NonIntegerCoefficient { index: 0, .. })
        ));
        assert!(RefinedRow::from_poly(2, &tpoly(&[-1, 3])).is_err());
    }

    #[test]
    fn structural_invariants_small() {
        for n in 1..=16 {
            let r = row(n).unwrap();
            assert!(r.is_palindromic(), "n={n}");
            assert_eq!(r.total, a3_total(n).unwrap());
            if n >= 2 {
                assert_eq!(r.counts[0], a3_total(n - 1).unwrap());
            }
        }
    }
}
