// Reference computations written without the library: plain recurrences,
// integer matrices and rational Gaussian elimination.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use pascal_toeplitz::QuadScalar;

pub fn fib_table(n: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::zero(), BigInt::one()];
    while v.len() <= n {
        let k = v.len();
        let next = &v[k - 1] + &v[k - 2];
        v.push(next);
    }
    v
}

pub fn lucas_table(n: usize) -> Vec<BigInt> {
    let mut v = vec![BigInt::from(2), BigInt::one()];
    while v.len() <= n {
        let k = v.len();
        let next = &v[k - 1] + &v[k - 2];
        v.push(next);
    }
    v
}

/// Rows 0..=n of Pascal's triangle by the addition rule.
pub fn binomial_rows(n: usize) -> Vec<Vec<i128>> {
    let mut rows: Vec<Vec<i128>> = Vec::new();
    for i in 0..=n {
        let mut row = vec![1i128; i + 1];
        for j in 1..i {
            row[j] = rows[i - 1][j - 1] + rows[i - 1][j];
        }
        rows.push(row);
    }
    rows
}

pub fn c(rows: &[Vec<i128>], i: usize, j: usize) -> i128 {
    if j > i {
        0
    } else {
        rows[i][j]
    }
}

pub fn sign(k: usize) -> i128 {
    if k % 2 == 0 {
        1
    } else {
        -1
    }
}

pub fn inverse_binomial(seq: &[i128]) -> Vec<i128> {
    let b = binomial_rows(seq.len());
    (0..seq.len())
        .map(|i| (0..=i).map(|k| sign(i + k) * c(&b, i, k) * seq[k]).sum())
        .collect()
}

pub fn forward_binomial(seq: &[i128]) -> Vec<i128> {
    let b = binomial_rows(seq.len());
    (0..seq.len())
        .map(|i| (0..=i).map(|k| c(&b, i, k) * seq[k]).sum())
        .collect()
}

pub type IntMatrix = Vec<Vec<i128>>;

pub fn pascal_int(alpha: &[i128], beta: &[i128], n: usize) -> IntMatrix {
    let mut m = vec![vec![0i128; n]; n];
    for i in 0..n {
        m[i][0] = alpha[i];
        m[0][i] = beta[i];
    }
    for i in 1..n {
        for j in 1..n {
            m[i][j] = m[i - 1][j] + m[i][j - 1];
        }
    }
    m
}

pub fn toeplitz_int(alpha: &[i128], beta: &[i128], n: usize) -> IntMatrix {
    (0..n)
        .map(|i| (0..n).map(|j| if i >= j { alpha[i - j] } else { beta[j - i] }).collect())
        .collect()
}

pub fn lower_binomial(n: usize, inverse: bool) -> IntMatrix {
    let b = binomial_rows(n);
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if inverse { sign(i + j) * c(&b, i, j) } else { c(&b, i, j) })
                .collect()
        })
        .collect()
}

pub fn transpose_int(a: &IntMatrix) -> IntMatrix {
    let n = a.len();
    let m = if n == 0 { 0 } else { a[0].len() };
    (0..m).map(|j| (0..n).map(|i| a[i][j]).collect()).collect()
}

pub fn matmul_int(a: &IntMatrix, b: &IntMatrix) -> IntMatrix {
    let (n, k, m) = (a.len(), b.len(), b.first().map_or(0, Vec::len));
    (0..n)
        .map(|i| (0..m).map(|j| (0..k).map(|t| a[i][t] * b[t][j]).sum()).collect())
        .collect()
}

pub fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

/// Gaussian elimination over the rationals.
pub fn det_rational(mut m: Vec<Vec<BigRational>>) -> BigRational {
    let n = m.len();
    let mut det = BigRational::one();
    for k in 0..n {
        let Some(p) = (k..n).find(|&r| !m[r][k].is_zero()) else {
            return BigRational::zero();
        };
        if p != k {
            m.swap(p, k);
            det = -det;
        }
        det *= m[k][k].clone();
        for i in k + 1..n {
            let f = &m[i][k] / &m[k][k];
            for j in k..n {
                let t = &f * &m[k][j];
                m[i][j] -= t;
            }
        }
    }
    det
}

pub fn int_to_rat(m: &IntMatrix) -> Vec<Vec<BigRational>> {
    m.iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(BigInt::from(x))).collect())
        .collect()
}

pub fn scalar_to_rat(x: &QuadScalar) -> BigRational {
    assert!(x.is_rational(), "expected a rational value, got {x}");
    x.a().clone()
}

pub fn scalar_to_int(x: &QuadScalar) -> i128 {
    let b = x.to_bigint().unwrap_or_else(|| panic!("expected an integer, got {x}"));
    i128::try_from(b).expect("fits in i128")
}

pub fn rat_pow(x: &BigRational, e: usize) -> BigRational {
    (0..e).fold(BigRational::one(), |acc, _| acc * x)
}
