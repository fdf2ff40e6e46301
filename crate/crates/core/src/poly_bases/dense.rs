//! Dense monomial-coefficient arithmetic, coefficients stored low to high.

use crate::exactlinalg::{falling_factorial, Scalar, Tolerance};

/// Degree after discarding negligible leading coefficients; `None` for the
/// zero polynomial.
pub fn degree<S: Scalar>(coeffs: &[S], tol: Tolerance) -> Option<usize> {
    let threshold = tol.0 * coeffs.iter().map(S::magnitude).fold(0.0, f64::max);
    coeffs.iter().rposition(|c| !c.negligible(threshold))
}

pub fn trimmed<S: Scalar>(coeffs: &[S], tol: Tolerance) -> Vec<S> {
    match degree(coeffs, tol) {
        Some(d) => coeffs[..=d].to_vec(),
        None => Vec::new(),
    }
}

pub fn eval<S: Scalar>(coeffs: &[S], t: &S) -> S {
    coeffs
        .iter()
        .rev()
        .fold(S::zero(), |acc, c| acc * t.clone() + c.clone())
}

/// `order`-th derivative evaluated at `t`.
pub fn eval_derivative<S: Scalar>(coeffs: &[S], order: usize, t: &S) -> S {
    let mut acc = S::zero();
    for (m, c) in coeffs.iter().enumerate().skip(order).rev() {
        let ff = S::from_i64(falling_factorial(m, order));
        acc = acc + c.clone() * ff * t.pow(m - order);
    }
    acc
}

pub fn mul<S: Scalar>(a: &[S], b: &[S]) -> Vec<S> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![S::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] = out[i + j].clone() + x.clone() * y.clone();
        }
    }
    out
}

/// Remainder of `a` divided by `b`; `b` must be trimmed and nonzero.
pub fn rem<S: Scalar>(a: &[S], b: &[S], tol: Tolerance) -> Vec<S> {
    let db = b.len() - 1;
    let lead = b[db].clone();
    let mut r = trimmed(a, tol);
    while r.len() > db {
        let dr = r.len() - 1;
        let factor = r[dr].clone() / lead.clone();
        for (i, bc) in b.iter().enumerate() {
            let idx = dr - db + i;
            r[idx] = r[idx].clone() - factor.clone() * bc.clone();
        }
        r[dr] = S::zero();
        r.pop();
        r = trimmed(&r, tol);
    }
    r
}

/// Scales a nonzero trimmed polynomial to leading coefficient one.
pub fn monic<S: Scalar>(a: &[S]) -> Vec<S> {
    let lead = a[a.len() - 1].clone();
    let mut out: Vec<S> = a.iter().map(|c| c.clone() / lead.clone()).collect();
    if let Some(last) = out.last_mut() {
        *last = S::one();
    }
    out
}

/// Monic gcd by the Euclidean algorithm. Both inputs must not be zero.
pub fn gcd<S: Scalar>(a: &[S], b: &[S], tol: Tolerance) -> Vec<S> {
    let mut a = trimmed(a, tol);
    let mut b = trimmed(b, tol);
    while !b.is_empty() {
        let r = rem(&a, &b, tol);
        a = b;
        b = r;
    }
    monic(&a)
}
