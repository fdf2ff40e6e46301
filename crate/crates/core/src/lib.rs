//! Bezout matrices of univariate polynomials in arbitrary bases.
//!
//! The crate builds the Bezoutian of a polynomial pair with respect to a
//! monomial, Bernstein, Lagrange or confluent Hermite basis, describes its
//! null space in terms of the common roots, and computes the monic gcd of
//! several polynomials from the stacked Bezout matrix, either by Barnett's
//! column relations or by a small linear system on the null space. All of
//! it runs over exact rationals; `f64` with a zero tolerance is available
//! as an approximate mode.

pub mod bezout;
pub mod cli;
pub mod error;
pub mod exactlinalg;
pub mod gcd_engine;
pub mod json;
pub mod kernel_structure;
pub mod poly_bases;

pub use error::{Error, Result};
pub use exactlinalg::{Matrix, Rational, Scalar, Tolerance};
pub use poly_bases::{Basis, BasisKind, Poly};
