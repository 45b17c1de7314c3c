//! `P(α, β) = L · T(α̂, β̂) · U` and its inverse form
//! `T(α, β) = L⁻¹ · P(α̌, β̌) · U⁻¹`.
//!
//! The factors are assembled from their closed forms. The triple product is
//! recomputed and compared against the source matrix unless the caller opts
//! out; a mismatch means the transform machinery is broken and panics.

use crate::determinant::{det_exact, det_triangular};
use crate::error::{Error, Result};
use crate::matrix::{
    matmul, pascal_l, pascal_matrix, pascal_u, toeplitz_matrix, unit_lower_inverse, ExactMatrix,
    Provenance,
};
use crate::scalar::QuadScalar;
use crate::sequences::{SequenceView, Transform};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Direction {
    PascalToToeplitz,
    ToeplitzToPascal,
}

#[derive(Clone, Debug)]
pub struct FactorizationTriple {
    pub l: ExactMatrix,
    pub t: ExactMatrix,
    pub u: ExactMatrix,
    pub direction: Direction,
}

impl FactorizationTriple {
    pub fn product(&self) -> Result<ExactMatrix> {
        matmul(&matmul(&self.l, &self.t)?, &self.u)
    }

    /// True when `L·T·U` reproduces `target` entrywise.
    pub fn reproduces(&self, target: &ExactMatrix) -> Result<bool> {
        Ok(self.product()?.entries() == target.entries())
    }
}

fn transformed(view: &SequenceView, t: Transform) -> Result<SequenceView> {
    SequenceView::new(view.spec().clone().transformed(t))
}

fn certify(triple: &FactorizationTriple, source: &ExactMatrix) {
    let ok = triple
        .reproduces(source)
        .expect("factors of one source share shape and radicand");
    assert!(ok, "factorization certificate failed: L·T·U differs from the source matrix");
}

pub fn factorize_pascal(alpha: &SequenceView, beta: &SequenceView, n: usize) -> Result<FactorizationTriple> {
    factorize_pascal_with(alpha, beta, n, true)
}

/// As [`factorize_pascal`]; `certify = false` skips the product check.
pub fn factorize_pascal_with(
    alpha: &SequenceView,
    beta: &SequenceView,
    n: usize,
    certify_product: bool,
) -> Result<FactorizationTriple> {
    let source = pascal_matrix(alpha, beta, n)?;
    let t = toeplitz_matrix(&transformed(alpha, Transform::Hat)?, &transformed(beta, Transform::Hat)?, n)?;
    let triple = FactorizationTriple {
        l: pascal_l(n),
        t,
        u: pascal_u(n),
        direction: Direction::PascalToToeplitz,
    };
    if certify_product {
        certify(&triple, &source);
    }
    Ok(triple)
}

/// The intermediate `Q` with `P = L·Q`: first column α̂, first row β and
/// `Q[i][j] = Q[i−1][j−1] + Q[i][j−1]`.
pub fn pascal_to_q(alpha: &SequenceView, beta: &SequenceView, n: usize) -> Result<ExactMatrix> {
    // validates the corner and the radicands
    pascal_matrix(alpha, beta, n)?;
    let a_hat = transformed(alpha, Transform::Hat)?.prefix(n)?;
    let b = beta.prefix(n)?;
    let mut q = vec![vec![QuadScalar::zero(); n]; n];
    for i in 0..n {
        q[i][0] = a_hat[i].clone();
        q[0][i] = b[i].clone();
    }
    for i in 1..n {
        for j in 1..n {
            q[i][j] = &q[i - 1][j - 1] + &q[i][j - 1];
        }
    }
    ExactMatrix::from_rows(q, Provenance::Explicit)
}

pub fn toeplitz_to_pascal(alpha: &SequenceView, beta: &SequenceView, n: usize) -> Result<FactorizationTriple> {
    toeplitz_to_pascal_with(alpha, beta, n, true)
}

pub fn toeplitz_to_pascal_with(
    alpha: &SequenceView,
    beta: &SequenceView,
    n: usize,
    certify_product: bool,
) -> Result<FactorizationTriple> {
    let source = toeplitz_matrix(alpha, beta, n)?;
    let p = pascal_matrix(
        &transformed(alpha, Transform::Check)?,
        &transformed(beta, Transform::Check)?,
        n,
    )?;
    let l_inv = unit_lower_inverse(&pascal_l(n))?;
    let u_inv = crate::matrix::transpose(&l_inv);
    let triple = FactorizationTriple {
        l: l_inv,
        t: p,
        u: u_inv,
        direction: Direction::ToeplitzToPascal,
    };
    if certify_product {
        certify(&triple, &source);
    }
    Ok(triple)
}

/// det P(α, β) evaluated on the Toeplitz factor T(α̂, β̂). Triangular
/// factors (one border constant) reduce to the diagonal product γⁿ.
pub fn det_via_factorization(alpha: &SequenceView, beta: &SequenceView, n: usize) -> Result<QuadScalar> {
    pascal_matrix(alpha, beta, n)?;
    let t = toeplitz_matrix(&transformed(alpha, Transform::Hat)?, &transformed(beta, Transform::Hat)?, n)?;
    match det_triangular(&t) {
        Ok(d) => Ok(d),
        Err(Error::OutOfDomain(_)) => det_exact(&t),
        Err(e) => Err(e),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::integer_matrix;

    fn view(s: &str) -> SequenceView {
        SequenceView::new(s.parse().unwrap()).unwrap()
    }

    #[test]
    fn generic_toeplitz_factor_matches_display() {
        // γ = 5, α = (5, 2, -1, 4), β = (5, 3, 0, 7)
        let a = view("lit:5,2,-1,4");
        let b = view("lit:5,3,0,7");
        let f = factorize_pascal(&a, &b, 4).unwrap();
        let (g, a1, a2, a3) = (5, 2, -1, 4);
        let col = [g, -g + a1, g - 2 * a1 + a2, -g + 3 * a1 - 3 * a2 + a3];
        for i in 0..4 {
            assert_eq!(*f.t.get(i, i), QuadScalar::from_integer(g));
            assert_eq!(*f.t.get(i, 0), QuadScalar::from_integer(col[i]));
        }
        assert_eq!(f.t.provenance(), Provenance::Toeplitz);
        assert!(f.l.is_unipotent_lower());
        assert_eq!(f.u.entries(), crate::matrix::transpose(&f.l).entries());
    }

    #[test]
    fn constant_borders_give_scaled_identity() {
        let c = view("const:-3/2");
        let f = factorize_pascal(&c, &c, 5).unwrap();
        let want = ExactMatrix::identity(5);
        for i in 0..5 {
            for j in 0..5 {
                assert_eq!(*f.t.get(i, j), &QuadScalar::from_ratio(-3, 2) * want.get(i, j));
            }
        }
    }

    #[test]
    fn fibonacci_product() {
        let fib = view("fib");
        let f = factorize_pascal(&fib, &fib, 4).unwrap();
        let want = integer_matrix(&[&[0, 1, 1, 2], &[1, 2, 3, 5], &[1, 3, 6, 11], &[2, 5, 11, 22]]);
        assert_eq!(f.product().unwrap().entries(), want.entries());
    }

    #[test]
    fn q_matrix_entries() {
        let a = view("lit:5,2,-1,4");
        let b = view("lit:5,3,10,7");
        let q = pascal_to_q(&a, &b, 4).unwrap();
        // first row is β
        for j in 0..4 {
            assert_eq!(*q.get(0, j), b.eval(j).unwrap());
        }
        // Q[1][2] = β₁ + α₁
        assert_eq!(*q.get(1, 2), QuadScalar::from_integer(3 + 2));
        // Q[1][3] = β₁ + β₂ + α₁ from the recurrence
        assert_eq!(*q.get(1, 3), QuadScalar::from_integer(3 + 10 + 2));
        let l = pascal_l(4);
        assert_eq!(matmul(&l, &q).unwrap().entries(), pascal_matrix(&a, &b, 4).unwrap().entries());
    }

    #[test]
    fn reverse_direction_examples() {
        let e = view("lit:1,0,0,0,0,0");
        let f = toeplitz_to_pascal(&e, &e, 6).unwrap();
        assert_eq!(f.product().unwrap().entries(), ExactMatrix::identity(6).entries());
        // check of (1,0,0,…) is all ones
        assert!(f.t.entries().iter().take(6).all(QuadScalar::is_one));

        let ones = view("geom:1");
        let f = toeplitz_to_pascal(&ones, &ones, 5).unwrap();
        assert!(f.product().unwrap().entries().iter().all(QuadScalar::is_one));
        assert_eq!(f.t.row(0)[3], QuadScalar::from_integer(8));

        let g = view("const:7");
        let f = toeplitz_to_pascal(&g, &g, 1).unwrap();
        assert_eq!(f.product().unwrap().entries(), &[QuadScalar::from_integer(7)]);
        assert_eq!(f.direction, Direction::ToeplitzToPascal);
    }

    #[test]
    fn determinant_transport() {
        let f = view("fib");
        assert_eq!(det_via_factorization(&f, &f, 4).unwrap(), QuadScalar::from_integer(-4));
        let g = view("const:-2");
        assert_eq!(det_via_factorization(&g, &g, 5).unwrap(), QuadScalar::from_integer(-32));
        let a = view("arith:1,1");
        let b = view("alt:1");
        assert_eq!(det_via_factorization(&a, &b, 3).unwrap(), QuadScalar::from_integer(9));
        assert_eq!(det_exact(&pascal_matrix(&a, &b, 3).unwrap()).unwrap(), QuadScalar::from_integer(9));
    }

    #[test]
    fn corner_mismatch_propagates() {
        let a = view("fib");
        let b = view("lucas");
        assert!(matches!(factorize_pascal(&a, &b, 3), Err(Error::CornerMismatch { .. })));
        assert!(matches!(toeplitz_to_pascal(&a, &b, 3), Err(Error::CornerMismatch { .. })));
        assert!(matches!(pascal_to_q(&a, &b, 3), Err(Error::CornerMismatch { .. })));
        assert!(matches!(det_via_factorization(&a, &b, 3), Err(Error::CornerMismatch { .. })));
    }

    #[test]
    fn uncertified_path_builds_same_factors() {
        let a = view("catalan");
        let b = view("fact");
        let f1 = factorize_pascal_with(&a, &b, 6, false).unwrap();
        let f2 = factorize_pascal(&a, &b, 6).unwrap();
        assert_eq!(f1.t, f2.t);
    }
}
