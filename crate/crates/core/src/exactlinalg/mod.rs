//! Exact rational arithmetic and the dense linear-algebra kernel (RREF,
//! rank, null space, left solves) shared by every other module. `f64` is
//! accepted as an approximate scalar with an explicit zero tolerance.

mod matrix;
mod rational;
mod scalar;

pub(crate) use matrix::dot;
pub use matrix::{solve_left, solve_left_with, Matrix, Rref};
pub use rational::Rational;
pub use scalar::{binomial, falling_factorial, Scalar, Tolerance, DEFAULT_TOL};
