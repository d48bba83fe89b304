//! Exact null spaces of integer matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::exact::rat::Rat;

/// Brings `rows` to row echelon form with fraction-free integer row
/// operations, dividing each updated row by the gcd of its entries.
/// Returns the pivot column of each nonzero row.
pub fn echelon(rows: &mut [Vec<BigInt>], cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        // smallest nonzero magnitude keeps the multipliers small
        let Some(p) = (r..rows.len())
            .filter(|&i| !rows[i][c].is_zero())
            .min_by(|&a, &b| rows[a][c].abs().cmp(&rows[b][c].abs()))
        else {
            continue;
        };
        rows.swap(r, p);
        let (top, rest) = rows[r..].split_first_mut().expect("row r exists");
        for row in rest {
            if row[c].is_zero() {
                continue;
            }
            let g = top[c].gcd(&row[c]);
            let mul_row = &top[c] / &g;
            let mul_top = &row[c] / &g;
            for (x, t) in row.iter_mut().zip(top.iter()) {
                *x = &*x * &mul_row - t * &mul_top;
            }
            reduce_row(row);
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

fn reduce_row(row: &mut [BigInt]) {
    let g = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if g > BigInt::from(1) {
        for x in row.iter_mut() {
            *x /= &g;
        }
    }
}

/// A basis of `{x : M x = 0}`, one vector per free column, with that free
/// coordinate set to 1 and the other free coordinates 0.
pub fn nullspace(matrix: &[Vec<BigInt>], cols: usize) -> Vec<Vec<Rat>> {
    let mut rows: Vec<Vec<BigInt>> = matrix.to_vec();
    let pivots = echelon(&mut rows, cols);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut x = vec![Rat::zero(); cols];
            x[f] = Rat::from_integer(1.into());
            for (i, &pc) in pivots.iter().enumerate().rev() {
                let mut acc = Rat::zero();
                for c in pc + 1..cols {
                    if !rows[i][c].is_zero() {
                        acc += Rat::from_integer(rows[i][c].clone()) * &x[c];
                    }
                }
                x[pc] = -acc / Rat::from_integer(rows[i][pc].clone());
            }
            x
        })
        .collect()
}
