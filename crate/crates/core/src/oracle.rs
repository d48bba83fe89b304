//! Weighted enumeration of actual alternating sign matrices.
//!
//! A matrix over `{-1, 0, 1}` is an ASM iff every row and every column has
//! partial sums in `{0, 1}` and total 1. Rows are generated top to bottom
//! from the vector of partial column sums, which is always a 0/1 vector.

use std::collections::HashMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::genfun::RefinedRow;

pub const BRUTE_FORCE_MAX_ORDER: usize = 7;
pub const DP_MAX_ORDER: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OracleMode {
    /// Materializes every matrix.
    BruteForce,
    /// Folds weights over column states.
    Dp,
}

/// Partial column sums after a prefix of rows; bit `j` is column `j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColumnState(pub u32);

impl ColumnState {
    pub fn unit(col: usize) -> Self {
        ColumnState(1 << col)
    }

    pub fn full(n: usize) -> Self {
        ColumnState(((1u64 << n) - 1) as u32)
    }

    pub fn get(self, col: usize) -> bool {
        self.0 >> col & 1 == 1
    }
}

/// A row that may follow `state`: entries, the next state and the number of `-1`s.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Transition {
    pub row: Vec<i8>,
    pub next: ColumnState,
    pub minus_ones: u32,
}

/// All rows compatible with `state`. A `-1` needs a column sum of 1 above it
/// and a `+1` a column sum of 0; the running row sum stays in `{0, 1}` and
/// ends at 1.
pub fn transitions(state: ColumnState, n: usize) -> Vec<Transition> {
    fn walk(
        state: ColumnState,
        n: usize,
        col: usize,
        row_sum: bool,
        row: &mut Vec<i8>,
        out: &mut Vec<Transition>,
    ) {
        if col == n {
            if row_sum {
                let mut next = state.0;
                let mut minus_ones = 0;
                for (j, &e) in row.iter().enumerate() {
                    if e != 0 {
                        next ^= 1 << j;
                    }
                    if e < 0 {
                        minus_ones += 1;
                    }
                }
                out.push(Transition {
                    row: row.clone(),
                    next: ColumnState(next),
                    minus_ones,
                });
            }
            return;
        }
        row.push(0);
        walk(state, n, col + 1, row_sum, row, out);
        row.pop();
        if !state.get(col) && !row_sum {
            row.push(1);
            walk(state, n, col + 1, true, row, out);
            row.pop();
        }
        if state.get(col) && row_sum {
            row.push(-1);
            walk(state, n, col + 1, false, row, out);
            row.pop();
        }
    }
    let mut out = Vec::new();
    walk(state, n, 0, false, &mut Vec::with_capacity(n), &mut out);
    out
}

/// Number of `-1` entries of an ASM.
pub fn count_minus_ones(matrix: &[Vec<i8>]) -> Result<usize> {
    let n = matrix.len();
    if matrix.iter().any(|row| row.len() != n) {
        return Err(Error::NotAnAsm("matrix is not square".into()));
    }
    let line_ok = |entries: &mut dyn Iterator<Item = i8>| -> Result<()> {
        let mut sum = 0i32;
        for e in entries {
            if !(-1..=1).contains(&e) {
                return Err(Error::NotAnAsm(format!("entry {e} outside {{-1, 0, 1}}")));
            }
            sum += i32::from(e);
            if !(0..=1).contains(&sum) {
                return Err(Error::NotAnAsm("nonzero entries do not alternate".into()));
            }
        }
        if sum != 1 {
            return Err(Error::NotAnAsm("a line does not sum to 1".into()));
        }
        Ok(())
    };
    for (i, row) in matrix.iter().enumerate() {
        line_ok(&mut row.iter().copied())
            .map_err(|e| Error::NotAnAsm(format!("row {}: {e}", i + 1)))?;
    }
    for j in 0..n {
        line_ok(&mut matrix.iter().map(|row| row[j]))
            .map_err(|e| Error::NotAnAsm(format!("column {}: {e}", j + 1)))?;
    }
    Ok(matrix.iter().flatten().filter(|&&e| e == -1).count())
}

/// All ASMs of order `n` whose first-row 1 is in column `r` (1-based).
pub fn asms_with_first_one(n: usize, r: usize) -> Vec<Vec<Vec<i8>>> {
    fn extend(n: usize, state: ColumnState, rows: &mut Vec<Vec<i8>>, out: &mut Vec<Vec<Vec<i8>>>) {
        if rows.len() == n {
            if state == ColumnState::full(n) {
                out.push(rows.clone());
            }
            return;
        }
        for t in transitions(state, n) {
            rows.push(t.row);
            extend(n, t.next, rows, out);
            rows.pop();
        }
    }
    let mut first = vec![0i8; n];
    first[r - 1] = 1;
    let mut rows = vec![first];
    let mut out = Vec::new();
    extend(n, ColumnState::unit(r - 1), &mut rows, &mut out);
    out
}

fn check_order(n: usize, mode: OracleMode) -> Result<()> {
    let (limit, name) = match mode {
        OracleMode::BruteForce => (BRUTE_FORCE_MAX_ORDER, "brute-force"),
        OracleMode::Dp => (DP_MAX_ORDER, "dp"),
    };
    if n == 0 {
        return Err(Error::InvalidArgument("order must be positive".into()));
    }
    if n > limit {
        return Err(Error::OrderTooLarge {
            n,
            limit,
            mode: name,
        });
    }
    Ok(())
}

fn brute_force_column(n: usize, r: usize, x: u64) -> Result<BigUint> {
    let base = BigUint::from(x);
    let mut acc = BigUint::zero();
    for m in asms_with_first_one(n, r) {
        let k = count_minus_ones(&m)?;
        acc += base.pow(k as u32);
    }
    Ok(acc)
}

fn dp_column(n: usize, r: usize, x: u64) -> BigUint {
    let base = BigUint::from(x);
    let mut layer: HashMap<ColumnState, BigUint> = HashMap::new();
    layer.insert(ColumnState::unit(r - 1), BigUint::one());
    let mut weights: HashMap<u32, BigUint> = HashMap::new();
    for _ in 1..n {
        let mut next: HashMap<ColumnState, BigUint> = HashMap::new();
        for (state, w) in &layer {
            for t in transitions(*state, n) {
                let factor = weights
                    .entry(t.minus_ones)
                    .or_insert_with(|| base.pow(t.minus_ones));
                *next.entry(t.next).or_insert_with(BigUint::zero) += w * &*factor;
            }
        }
        layer = next;
    }
    layer.remove(&ColumnState::full(n)).unwrap_or_default()
}

/// `counts[r-1] = sum over ASMs with first-row 1 in column r of x^(#-1)`.
pub fn enumerate(n: usize, x: u64, mode: OracleMode) -> Result<RefinedRow> {
    check_order(n, mode)?;
    let counts = (1..=n)
        .into_par_iter()
        .map(|r| match mode {
            OracleMode::BruteForce => brute_force_column(n, r, x),
            OracleMode::Dp => Ok(dp_column(n, r, x)),
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(RefinedRow::new(counts))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn order_one() {
        for mode in [OracleMode::BruteForce, OracleMode::Dp] {
            assert_eq!(enumerate(1, 3, mode).unwrap(), RefinedRow::from_u64(&[1]));
        }
    }

    #[test]
    fn order_three() {
        for mode in [OracleMode::BruteForce, OracleMode::Dp] {
            assert_eq!(
                enumerate(3, 3, mode).unwrap(),
                RefinedRow::from_u64(&[2, 5, 2])
            );
            assert_eq!(
                enumerate(3, 1, mode).unwrap(),
                RefinedRow::from_u64(&[2, 3, 2])
            );
        }
    }

    #[test]
    fn seven_matrices_of_order_three() {
        let all: Vec<_> = (1..=3).flat_map(|r| asms_with_first_one(3, r)).collect();
        assert_eq!(all.len(), 7);
        let with_minus: Vec<_> = all
            .iter()
            .filter(|m| count_minus_ones(m).unwrap() == 1)
            .collect();
        assert_eq!(with_minus.len(), 1);
        assert_eq!(
            *with_minus[0],
            vec![vec![0, 1, 0], vec![1, -1, 1], vec![0, 1, 0]]
        );
    }

    #[test]
    fn identity_has_no_minus_ones() {
        let id: Vec<Vec<i8>> = (0..3)
            .map(|i| (0..3).map(|j| i8::from(i == j)).collect())
            .collect();
        assert_eq!(count_minus_ones(&id).unwrap(), 0);
    }

    #[test]
    fn invalid_grids() {
        let bad = vec![vec![1, 0, 0], vec![-1, 1, 1], vec![1, 0, 0]];
        assert!(matches!(count_minus_ones(&bad), Err(Error::NotAnAsm(_))));
        let not_square = vec![vec![1, 0], vec![0, 1], vec![0, 0]];
        assert!(count_minus_ones(&not_square).is_err());
        let two = vec![vec![2]];
        assert!(count_minus_ones(&two).is_err());
    }

    #[test]
    fn order_limits() {
        assert!(matches!(
            enumerate(8, 3, OracleMode::BruteForce),
            Err(Error::OrderTooLarge { n: 8, limit: 7, .. })
        ));
        assert!(matches!(
            enumerate(17, 1, OracleMode::Dp),
            Err(Error::OrderTooLarge {
                n: 17,
                limit: 16,
                ..
            })
        ));
    }

    #[test]
    fn plain_asm_numbers() {
        let expected = [1u64, 2, 7, 42, 429, 7436];
        for (i, &e) in expected.iter().enumerate() {
            assert_eq!(
                enumerate(i + 1, 1, OracleMode::Dp).unwrap().total,
                BigUint::from(e)
            );
        }
    }

    #[test]
    fn modes_agree() {
        for n in 1..=6 {
            for x in 1..=3 {
                assert_eq!(
                    enumerate(n, x, OracleMode::BruteForce).unwrap(),
                    enumerate(n, x, OracleMode::Dp).unwrap(),
                    "n={n} x={x}"
                );
            }
        }
    }

    #[test]
    fn first_column_restriction_and_mirror() {
        for x in 0..=4 {
            for n in 2..=8 {
                let row = enumerate(n, x, OracleMode::Dp).unwrap();
                let smaller = enumerate(n - 1, x, OracleMode::Dp).unwrap();
                assert_eq!(row.counts[0], smaller.total, "n={n} x={x}");
                assert!(row.is_palindromic());
            }
        }
    }
}
