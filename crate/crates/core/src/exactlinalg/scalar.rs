use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::Rational;

/// Relative threshold used by the floating scalar mode when deciding that a
/// quantity is zero. It is multiplied by the largest absolute entry of the
/// matrix being eliminated.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Zero-test tolerance. Ignored by exact scalars.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance(pub f64);

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance(DEFAULT_TOL)
    }
}

/// Field elements usable by the linear-algebra kernel.
///
/// Two implementations exist: [`Rational`] (exact, authoritative) and `f64`
/// (approximate; every zero decision is `|x| <= threshold`).
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// Whether arithmetic is exact. Exact scalars pick the first nonzero
    /// pivot; approximate ones pick the largest in magnitude.
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(v: i64) -> Self;
    fn from_rational(r: &Rational) -> Self;

    /// Structural zero test (exact equality with zero).
    fn is_zero(&self) -> bool;

    /// `|self|` as a double, used for pivot choice and threshold scaling.
    fn magnitude(&self) -> f64;

    /// The zero test used during elimination. Exact scalars ignore the
    /// threshold.
    fn negligible(&self, threshold: f64) -> bool {
        if Self::EXACT {
            self.is_zero()
        } else {
            self.magnitude() <= threshold
        }
    }

    fn from_usize(v: usize) -> Self {
        Self::from_i64(v as i64)
    }

    fn pow(&self, exp: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..exp {
            acc = acc * self.clone();
        }
        acc
    }
}

impl Scalar for Rational {
    const EXACT: bool = true;

    fn zero() -> Self {
        Rational::zero()
    }
    fn one() -> Self {
        Rational::one()
    }
    fn from_i64(v: i64) -> Self {
        Rational::from_integer(v)
    }
    fn from_rational(r: &Rational) -> Self {
        r.clone()
    }
    fn is_zero(&self) -> bool {
        Rational::is_zero(self)
    }
    fn magnitude(&self) -> f64 {
        self.to_f64().abs()
    }
    fn pow(&self, exp: usize) -> Self {
        Rational::pow(self, exp as u32)
    }
}

impl Scalar for f64 {
    const EXACT: bool = false;

    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn from_i64(v: i64) -> Self {
        v as f64
    }
    fn from_rational(r: &Rational) -> Self {
        r.to_f64()
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn magnitude(&self) -> f64 {
        self.abs()
    }
    fn pow(&self, exp: usize) -> Self {
        self.powi(exp as i32)
    }
}

/// Falling factorial `m (m-1) ... (m-c+1)`; zero when `c > m`.
pub fn falling_factorial(m: usize, c: usize) -> i64 {
    if c > m {
        return 0;
    }
    ((m - c + 1)..=m).map(|v| v as i64).product()
}

pub fn binomial(n: usize, k: usize) -> i64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: i64 = 1;
    for i in 0..k {
        acc = acc * (n - i) as i64 / (i + 1) as i64;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn falling_factorials() {
        assert_eq!(falling_factorial(4, 0), 1);
        assert_eq!(falling_factorial(4, 2), 12);
        assert_eq!(falling_factorial(2, 3), 0);
        assert_eq!(falling_factorial(3, 3), 6);
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(4, 2), 6);
        assert_eq!(binomial(10, 3), 120);
        assert_eq!(binomial(3, 5), 0);
    }

    #[test]
    fn float_zero_test_uses_threshold() {
        assert!(1e-12_f64.negligible(1e-9));
        assert!(!1e-6_f64.negligible(1e-9));
        let tiny = Rational::new(1, 1_000_000_000_000i64).unwrap();
        assert!(!tiny.negligible(1.0));
    }
}
