//! Exact generalized Pascal triangles and Toeplitz matrices.
//!
//! Every generalized Pascal triangle `P(α, β)` factors as `L · T(α̂, β̂) · U`
//! where `L` is the binomial matrix, `U = Lᵗ` and `α̂`, `β̂` are the inverse
//! binomial transforms of the border sequences. This crate builds those
//! objects over the exact field `Q(i, √D)`, evaluates their determinants
//! with two independent oracles and checks a catalog of closed-form
//! determinant identities, including families whose leading principal
//! minors run through Fibonacci and Lucas subsequences.

pub mod cli;
pub mod determinant;
pub mod error;
pub mod factorization;
pub mod identities;
pub mod matrix;
pub mod minors;
pub mod scalar;
pub mod sequences;

pub use determinant::{det_cofactor, det_exact};
pub use error::{Error, Result};
pub use factorization::{
    det_via_factorization, factorize_pascal, pascal_to_q, toeplitz_to_pascal, Direction,
    FactorizationTriple,
};
pub use identities::{register_identities, verify_identity, IdentityRecord, VerificationReport};
pub use matrix::{ExactMatrix, Provenance};
pub use minors::{Epsilon, MinorFamily};
pub use scalar::{QuadScalar, Rational};
pub use sequences::{binomial, SequenceSpec, SequenceView};
