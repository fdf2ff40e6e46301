//! Polynomial bases (monomial, Bernstein, Lagrange, confluent Hermite),
//! polynomials expressed in them, and exact change-of-basis matrices.
//!
//! Bernstein note: `t = Σ_k (k/d) β_k^{(d)}(t)` for the degree-`d` basis,
//! so for `d = 3` the weights of `t` are `0, 1/3, 2/3, 1`.

mod basis;
pub mod dense;
mod poly;

pub use basis::{Basis, BasisKind};
pub use poly::{basis_function_derivatives, change_matrix, coords_of_one_and_t, BasisChange, Poly};
