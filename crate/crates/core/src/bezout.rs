//! Cayley quotients, Bezout matrices in an arbitrary basis, and stacked
//! Bezout matrices for several polynomials.
//!
//! The authoritative construction divides `P(t)Q(x) - P(x)Q(t)` by `t - x`
//! in the monomial basis and then applies the congruence
//! `Bez_Φ = P_{St→Φ} · Bez_St · P_{St→Φ}^T`. A direct Lagrange constructor
//! works from point values only.

use crate::error::{Error, Result};
use crate::exactlinalg::{Matrix, Scalar};
use crate::poly_bases::{Basis, BasisKind, Poly};

/// `Bez_Φ(P, Q)`: the `n x n` coordinate matrix of the Cayley quotient in
/// `basis ⊗ basis`, where `basis` spans polynomials of degree `n - 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct BezoutMatrix<S> {
    basis: Basis<S>,
    n: usize,
    matrix: Matrix<S>,
}

impl<S: Scalar> BezoutMatrix<S> {
    pub fn basis(&self) -> &Basis<S> {
        &self.basis
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn matrix(&self) -> &Matrix<S> {
        &self.matrix
    }
}

/// Vertical stack of `Bez_Φ(P, Q_i)`, `i = 1..r`, in input order.
#[derive(Debug, Clone, PartialEq)]
pub struct StackedBezout<S> {
    basis: Basis<S>,
    n: usize,
    p: Poly<S>,
    blocks: Vec<BezoutMatrix<S>>,
    matrix: Matrix<S>,
}

impl<S: Scalar> StackedBezout<S> {
    pub fn basis(&self) -> &Basis<S> {
        &self.basis
    }

    /// Effective degree of `P`.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> &Poly<S> {
        &self.p
    }

    pub fn blocks(&self) -> &[BezoutMatrix<S>] {
        &self.blocks
    }

    /// The `(r·n) x n` stacked matrix.
    pub fn matrix(&self) -> &Matrix<S> {
        &self.matrix
    }
}

/// `max(deg P, deg Q)` on monomial forms.
pub fn sizing_degree<S: Scalar>(p: &Poly<S>, q: &Poly<S>) -> Result<usize> {
    let n = match (p.effective_degree(), q.effective_degree()) {
        (None, None) => return Err(Error::BothZero),
        (a, b) => a.unwrap_or(0).max(b.unwrap_or(0)),
    };
    if n == 0 {
        return Err(Error::DegreeTooLow);
    }
    Ok(n)
}

fn coeff<S: Scalar>(c: &[S], i: usize) -> S {
    c.get(i).cloned().unwrap_or_else(S::zero)
}

/// Cayley quotient coefficients `c_ij` of `t^i x^j` for monomial
/// coefficient vectors, sized `n x n`.
fn cayley_coeffs<S: Scalar>(p: &[S], q: &[S], n: usize) -> Matrix<S> {
    // (t - x) C = N with N_ab = p_a q_b - p_b q_a gives
    // c_ij = sum_{k=0}^{i} (p_{j+1+k} q_{i-k} - p_{i-k} q_{j+1+k}).
    Matrix::from_fn(n, n, |i, j| {
        (0..=i).fold(S::zero(), |acc, k| {
            let hi = j + 1 + k;
            let lo = i - k;
            acc + coeff(p, hi) * coeff(q, lo) - coeff(p, lo) * coeff(q, hi)
        })
    })
}

/// `Bez_St(P, Q)`: the Cayley quotient in the monomial basis, computed from
/// the monomial forms of `p` and `q`. Proportional inputs give the zero
/// matrix.
pub fn cayley_quotient_monomial<S: Scalar>(p: &Poly<S>, q: &Poly<S>) -> Result<Matrix<S>> {
    let n = sizing_degree(p, q)?;
    Ok(cayley_coeffs(p.monomial_coeffs(), q.monomial_coeffs(), n))
}

fn check_basis<S: Scalar>(phi: &Basis<S>, n: usize) -> Result<()> {
    if phi.degree() + 1 != n {
        return Err(Error::BasisDegreeMismatch {
            expected: n - 1,
            found: phi.degree(),
        });
    }
    Ok(())
}

fn congruence<S: Scalar>(bst: Matrix<S>, to_phi: Option<&Matrix<S>>) -> Matrix<S> {
    match to_phi {
        None => bst,
        Some(t) => &(t * &bst) * &t.transpose(),
    }
}

fn transform_for<S: Scalar>(phi: &Basis<S>) -> Result<Option<Matrix<S>>> {
    Ok(match phi.kind() {
        BasisKind::Monomial => None,
        _ => Some(phi.from_monomial_matrix()?),
    })
}

/// `Bez_Φ(P, Q)` with `phi` of degree `n - 1`, `n = max(deg P, deg Q)`.
pub fn bezout_matrix<S: Scalar>(
    p: &Poly<S>,
    q: &Poly<S>,
    phi: &Basis<S>,
) -> Result<BezoutMatrix<S>> {
    let n = sizing_degree(p, q)?;
    check_basis(phi, n)?;
    let bst = cayley_coeffs(p.monomial_coeffs(), q.monomial_coeffs(), n);
    let matrix = congruence(bst, transform_for(phi)?.as_ref());
    Ok(BezoutMatrix {
        basis: phi.clone(),
        n,
        matrix,
    })
}

/// Bezout matrix in the Lagrange basis on `nodes`, straight from values:
/// entry `(i, j)` is `C(x_i, x_j)`, with `P'Q - PQ'` on the diagonal.
pub fn bezout_matrix_lagrange_direct<S: Scalar>(
    p: &Poly<S>,
    q: &Poly<S>,
    nodes: &[S],
) -> Result<BezoutMatrix<S>> {
    let n = sizing_degree(p, q)?;
    let basis = Basis::lagrange(nodes.to_vec())?;
    check_basis(&basis, n)?;
    let pv: Vec<S> = nodes.iter().map(|x| p.eval(x)).collect();
    let qv: Vec<S> = nodes.iter().map(|x| q.eval(x)).collect();
    let matrix = Matrix::from_fn(n, n, |i, j| {
        if i == j {
            let x = &nodes[i];
            p.eval_derivative(1, x) * qv[i].clone() - pv[i].clone() * q.eval_derivative(1, x)
        } else {
            (pv[i].clone() * qv[j].clone() - pv[j].clone() * qv[i].clone())
                / (nodes[i].clone() - nodes[j].clone())
        }
    });
    Ok(BezoutMatrix { basis, n, matrix })
}

/// `B^P_Φ(Q_1, ..., Q_r)`. `P` fixes `n = deg P`; a `Q_i` of larger degree
/// is rejected rather than swapped in.
pub fn stacked<S: Scalar>(p: &Poly<S>, qs: &[Poly<S>], phi: &Basis<S>) -> Result<StackedBezout<S>> {
    if qs.is_empty() {
        return Err(Error::TooFewInputs(2));
    }
    let n = p.effective_degree().ok_or(Error::DegreeTooLow)?;
    if n == 0 {
        return Err(Error::DegreeTooLow);
    }
    for (index, q) in qs.iter().enumerate() {
        if let Some(degree) = q.effective_degree() {
            if degree > n {
                return Err(Error::DegreeViolation { index, degree, n });
            }
        }
    }
    check_basis(phi, n)?;
    let to_phi = transform_for(phi)?;
    let blocks: Vec<BezoutMatrix<S>> = qs
        .iter()
        .map(|q| BezoutMatrix {
            basis: phi.clone(),
            n,
            matrix: congruence(
                cayley_coeffs(p.monomial_coeffs(), q.monomial_coeffs(), n),
                to_phi.as_ref(),
            ),
        })
        .collect();
    let mats: Vec<Matrix<S>> = blocks.iter().map(|b| b.matrix.clone()).collect();
    Ok(StackedBezout {
        basis: phi.clone(),
        n,
        p: p.clone(),
        matrix: Matrix::vstack(&mats)?,
        blocks,
    })
}
