//! Determinant oracles.
//!
//! [`det_exact`] runs fraction-free (Bareiss) elimination over the integers
//! when every entry is rational, and exact Gaussian elimination in
//! `Q(i, √D)` otherwise. [`det_cofactor`] is an independent Laplace
//! expansion kept for cross-checking small matrices.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::matrix::ExactMatrix;
use crate::scalar::{QuadScalar, Rational};

/// Largest order accepted by [`det_cofactor`].
pub const COFACTOR_MAX: usize = 7;

fn require_square(a: &ExactMatrix) -> Result<usize> {
    if a.is_square() {
        Ok(a.rows())
    } else {
        Err(Error::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        })
    }
}

pub fn det_exact(a: &ExactMatrix) -> Result<QuadScalar> {
    let n = require_square(a)?;
    if n == 0 {
        return Ok(QuadScalar::one());
    }
    if a.entries().iter().all(QuadScalar::is_rational) {
        Ok(QuadScalar::from_rational(det_rational(a)))
    } else {
        Ok(det_field(a))
    }
}

/// Clears denominators row by row, then runs Bareiss elimination.
fn det_rational(a: &ExactMatrix) -> Rational {
    let n = a.rows();
    let mut scale = BigInt::one();
    let mut m: Vec<Vec<BigInt>> = (0..n)
        .map(|i| {
            let row = a.row(i);
            let lcm = row
                .iter()
                .map(|x| x.a().denom().clone())
                .fold(BigInt::one(), |acc, d| acc.lcm(&d));
            scale *= &lcm;
            row.iter()
                .map(|x| (x.a() * Rational::from_integer(lcm.clone())).to_integer())
                .collect()
        })
        .collect();
    Rational::new(bareiss(&mut m), scale)
}

/// Fraction-free elimination; every division is exact.
pub fn bareiss(m: &mut [Vec<BigInt>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&r| !m[r][k].is_zero()) {
                Some(r) => {
                    m.swap(k, r);
                    negate = !negate;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = v / &prev;
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

fn det_field(a: &ExactMatrix) -> QuadScalar {
    let n = a.rows();
    let mut m = a.to_rows();
    let mut det = QuadScalar::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return QuadScalar::zero();
        };
        if p != k {
            m.swap(k, p);
            det = -det;
        }
        let pivot = m[k][k].clone();
        det = &det * &pivot;
        let inv = pivot.recip().expect("pivot is nonzero");
        for i in k + 1..n {
            if m[i][k].is_zero() {
                continue;
            }
            let f = &m[i][k] * &inv;
            for j in k..n {
                let t = &f * &m[k][j];
                m[i][j] = &m[i][j] - &t;
            }
        }
    }
    det
}

/// Laplace expansion along the first row, limited to order [`COFACTOR_MAX`].
pub fn det_cofactor(a: &ExactMatrix) -> Result<QuadScalar> {
    let n = require_square(a)?;
    if n > COFACTOR_MAX {
        return Err(Error::TooLarge { n, max: COFACTOR_MAX });
    }
    let rows = a.to_rows();
    let cols: Vec<usize> = (0..n).collect();
    Ok(expand(&rows, 0, &cols))
}

fn expand(m: &[Vec<QuadScalar>], row: usize, cols: &[usize]) -> QuadScalar {
    if cols.is_empty() {
        return QuadScalar::one();
    }
    let mut acc = QuadScalar::zero();
    for (pos, &c) in cols.iter().enumerate() {
        let entry = &m[row][c];
        if entry.is_zero() {
            continue;
        }
        let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
        let term = entry * &expand(m, row + 1, &rest);
        acc = if pos % 2 == 0 { &acc + &term } else { &acc - &term };
    }
    acc
}

/// Product of the diagonal; only meaningful for triangular input.
pub fn det_triangular(a: &ExactMatrix) -> Result<QuadScalar> {
    let n = require_square(a)?;
    if !a.is_triangular(true) && !a.is_triangular(false) {
        return Err(Error::OutOfDomain("matrix is not triangular".into()));
    }
    Ok((0..n).fold(QuadScalar::one(), |acc, i| &acc * a.get(i, i)))
}
