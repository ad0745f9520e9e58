//! Exact nullspace computation for the primitive-element solver.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::scalar::Rational;

/// Basis of the right nullspace of a matrix given as rows of length `cols`.
///
/// Rows are cleared of denominators and reduced by fraction-free
/// cross-multiplication with per-row content removal, so every intermediate
/// value is an exact integer. One basis
/// vector is produced per free column, with a 1 in that column and zeros in
/// the other free columns; entries are scaled to coprime integers with the
/// first nonzero entry positive. The result is deterministic in the column
/// order.
pub fn nullspace(rows: &[Vec<Rational>], cols: usize) -> Vec<Vec<Rational>> {
    let mut m: Vec<Vec<BigInt>> = rows
        .iter()
        .filter(|row| {
            assert_eq!(row.len(), cols, "ragged matrix");
            row.iter().any(|x| !x.is_zero())
        })
        .map(|row| {
            let lcm = row
                .iter()
                .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
            row.iter()
                .map(|x| x.numer() * (&lcm / x.denom()))
                .collect()
        })
        .collect();

    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0usize;
    for col in 0..cols {
        let Some(pivot_row) = (rank..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pivot_row);
        let (top, rest) = m.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in rest {
            if row[col].is_zero() {
                continue;
            }
            let (a, b) = (pivot_row[col].clone(), row[col].clone());
            for j in col..cols {
                row[j] = &a * &row[j] - &b * &pivot_row[j];
            }
            let content = row.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
            if content > BigInt::one() {
                for x in row.iter_mut() {
                    *x = &*x / &content;
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == m.len() {
            break;
        }
    }

    let is_pivot: Vec<bool> = {
        let mut flags = vec![false; cols];
        for &c in &pivots {
            flags[c] = true;
        }
        flags
    };
    let mut basis = Vec::new();
    for free in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![Rational::zero(); cols];
        v[free] = Rational::one();
        for i in (0..rank).rev() {
            let p = pivots[i];
            let mut acc = Rational::zero();
            for j in (p + 1)..cols {
                if !v[j].is_zero() && !m[i][j].is_zero() {
                    acc += Rational::from_integer(m[i][j].clone()) * &v[j];
                }
            }
            v[p] = -acc / Rational::from_integer(m[i][p].clone());
        }
        basis.push(normalize(v));
    }
    basis
}

/// Scale to integer entries with content one and positive leading entry.
fn normalize(v: Vec<Rational>) -> Vec<Rational> {
    let lcm = v
        .iter()
        .fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| x.numer() * (&lcm / x.denom())).collect();
    let gcd = ints
        .iter()
        .fold(BigInt::zero(), |acc, x| acc.gcd(x));
    let flip = ints
        .iter()
        .find(|x| !x.is_zero())
        .map(|x| x.is_negative())
        .unwrap_or(false);
    ints.into_iter()
        .map(|x| {
            let mut y = &x / &gcd;
            if flip {
                y = -y;
            }
            Rational::from_integer(y)
        })
        .collect()
}
