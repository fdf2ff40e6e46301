//! Monic gcd of `P, Q_1, ..., Q_r` from the stacked Bezout matrix in any
//! basis, by two routes, plus a Euclidean reference.
//!
//! Both matrix routes read off `k = n - rank(B^P_Φ)` first. Barnett's route
//! writes the leading `k` columns of `T = B^P_Φ · P^t_{Φ→St}` in terms of the
//! trailing `n - k`; the null-space route maps a null-space basis back to
//! monomial coordinates and solves `(d_k, ..., d_1, 1) · Z = 0` on its first
//! `k + 1` rows. Coefficients come out high to low.

use crate::bezout::{stacked, StackedBezout};
use crate::error::{Error, Result};
use crate::exactlinalg::{solve_left_with, Matrix, Scalar, Tolerance};
use crate::poly_bases::{dense, Basis, BasisKind, Poly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GcdMethod {
    BarnettPhi,
    NullspacePhi,
    EuclidOracle,
}

impl GcdMethod {
    pub fn name(self) -> &'static str {
        match self {
            GcdMethod::BarnettPhi => "barnett",
            GcdMethod::NullspacePhi => "nullspace",
            GcdMethod::EuclidOracle => "euclid",
        }
    }
}

/// Intermediate values each method exposes.
#[derive(Debug, Clone, PartialEq)]
pub enum Witness<S> {
    /// `h[(j, l)] = h^{k+1+j}_{l+1}`: column `l+1` of `T` as a combination
    /// of columns `k+1..n`.
    Barnett {
        h: Matrix<S>,
    },
    /// The null-space basis `N^Φ` and the `(k+1) x k` slice `Z^Φ`.
    Nullspace {
        null_space: Matrix<S>,
        z: Matrix<S>,
    },
    Euclid,
    /// Coprime inputs (`k = 0`): nothing to solve.
    Coprime,
    /// Every `Q_i` is a multiple of `P` (the stack is zero), so the gcd is
    /// `P` itself.
    Proportional,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GcdResult<S> {
    /// `(1, d_1, ..., d_k)`, leading coefficient first.
    pub monic_coeffs: Vec<S>,
    pub degree: usize,
    pub method: GcdMethod,
    /// `rank(B^P_Φ)`; absent for the Euclidean oracle.
    pub rank: Option<usize>,
    pub witness: Witness<S>,
    /// False in floating mode, where coefficient extraction is best-effort.
    pub authoritative: bool,
}

impl<S: Scalar> GcdResult<S> {
    fn new(
        high_to_low: Vec<S>,
        method: GcdMethod,
        rank: Option<usize>,
        witness: Witness<S>,
    ) -> Self {
        GcdResult {
            degree: high_to_low.len() - 1,
            monic_coeffs: high_to_low,
            method,
            rank,
            witness,
            authoritative: S::EXACT,
        }
    }

    /// The gcd as a monomial-basis polynomial.
    pub fn to_poly(&self) -> Poly<S> {
        Poly::monomial(self.monic_coeffs.iter().rev().cloned().collect())
    }
}

/// Which basis the stacked matrix is built in.
#[derive(Debug, Clone, PartialEq)]
pub enum BasisChoice<S> {
    /// The inputs' shared basis truncated to degree `n - 1`. Monomial
    /// inputs of different declared degrees count as sharing a basis.
    Native,
    Explicit(Basis<S>),
}

pub fn gcd_degree<S: Scalar>(stack: &StackedBezout<S>) -> usize {
    gcd_degree_with(stack, Tolerance::default())
}

/// `n - rank(B^P_Φ)`.
pub fn gcd_degree_with<S: Scalar>(stack: &StackedBezout<S>, tol: Tolerance) -> usize {
    stack.n() - stack.matrix().rank_with(tol)
}

fn monic_p_high_to_low<S: Scalar>(stack: &StackedBezout<S>) -> Vec<S> {
    let p = dense::trimmed(stack.p().monomial_coeffs(), Tolerance::default());
    dense::monic(&p).into_iter().rev().collect()
}

pub fn barnett_gcd<S: Scalar>(stack: &StackedBezout<S>) -> Result<GcdResult<S>> {
    barnett_gcd_with(stack, Tolerance::default())
}

pub fn barnett_gcd_with<S: Scalar>(
    stack: &StackedBezout<S>,
    tol: Tolerance,
) -> Result<GcdResult<S>> {
    let n = stack.n();
    let rank = stack.matrix().rank_with(tol);
    let k = n - rank;
    let method = GcdMethod::BarnettPhi;
    if k == 0 {
        return Ok(GcdResult::new(
            vec![S::one()],
            method,
            Some(rank),
            Witness::Coprime,
        ));
    }
    if k == n {
        return Ok(GcdResult::new(
            monic_p_high_to_low(stack),
            method,
            Some(rank),
            Witness::Proportional,
        ));
    }
    let t = match stack.basis().kind() {
        BasisKind::Monomial => stack.matrix().clone(),
        _ => stack.matrix() * &stack.basis().to_monomial_matrix()?.transpose(),
    };
    // Columns are attached to t^0, ..., t^{n-1}; solve [tail | head] jointly.
    let tail: Vec<usize> = (k..n).collect();
    let head: Vec<usize> = (0..k).collect();
    let aug = Matrix::hstack(&[t.select_cols(&tail), t.select_cols(&head)])?;
    let rref = aug.rref_with(tol);
    let expected: Vec<usize> = (0..n - k).collect();
    if rref.pivots != expected {
        return Err(Error::RankAssumptionViolated);
    }
    let h = Matrix::from_fn(n - k, k, |j, l| rref.matrix[(j, n - k + l)].clone());
    // D = t^k + h^{k+1}_k t^{k-1} + ... + h^{k+1}_1
    let mut coeffs = vec![S::one()];
    coeffs.extend((0..k).rev().map(|l| h[(0, l)].clone()));
    Ok(GcdResult::new(
        coeffs,
        method,
        Some(rank),
        Witness::Barnett { h },
    ))
}

pub fn nullspace_gcd<S: Scalar>(stack: &StackedBezout<S>) -> Result<GcdResult<S>> {
    nullspace_gcd_with(stack, Tolerance::default())
}

pub fn nullspace_gcd_with<S: Scalar>(
    stack: &StackedBezout<S>,
    tol: Tolerance,
) -> Result<GcdResult<S>> {
    let n = stack.n();
    let null_space = stack.matrix().null_space_basis_with(tol);
    let k = null_space.cols();
    let rank = n - k;
    let method = GcdMethod::NullspacePhi;
    if k == 0 {
        return Ok(GcdResult::new(
            vec![S::one()],
            method,
            Some(rank),
            Witness::Coprime,
        ));
    }
    if k == n {
        return Ok(GcdResult::new(
            monic_p_high_to_low(stack),
            method,
            Some(rank),
            Witness::Proportional,
        ));
    }
    let in_monomial = match stack.basis().kind() {
        BasisKind::Monomial => null_space.clone(),
        _ => &stack.basis().from_monomial_matrix()?.transpose() * &null_space,
    };
    let z = in_monomial.select_rows(0..k + 1);
    // (d_k, ..., d_1, 1)
    let low_to_high = solve_left_with(&z, tol)?;
    Ok(GcdResult::new(
        low_to_high.into_iter().rev().collect(),
        method,
        Some(rank),
        Witness::Nullspace { null_space, z },
    ))
}

pub fn euclid_gcd<S: Scalar>(ps: &[Poly<S>]) -> Result<GcdResult<S>> {
    euclid_gcd_with(ps, Tolerance::default())
}

/// Monic gcd by repeated Euclidean division of the monomial forms.
pub fn euclid_gcd_with<S: Scalar>(ps: &[Poly<S>], tol: Tolerance) -> Result<GcdResult<S>> {
    let mut acc: Option<Vec<S>> = None;
    for p in ps {
        let c = dense::trimmed(p.monomial_coeffs(), tol);
        if c.is_empty() {
            continue;
        }
        acc = Some(match acc {
            None => dense::monic(&c),
            Some(g) => dense::gcd(&g, &c, tol),
        });
    }
    let g = acc.ok_or(Error::AllZero)?;
    Ok(GcdResult::new(
        g.into_iter().rev().collect(),
        GcdMethod::EuclidOracle,
        None,
        Witness::Euclid,
    ))
}

/// Index of the first input of maximal effective degree, and that degree.
fn designate_p<S: Scalar>(ps: &[Poly<S>]) -> Result<(usize, usize)> {
    ps.iter()
        .enumerate()
        .filter_map(|(i, p)| p.effective_degree().map(|d| (i, d)))
        .fold(None, |best: Option<(usize, usize)>, (i, d)| match best {
            Some((_, bd)) if bd >= d => best,
            _ => Some((i, d)),
        })
        .ok_or(Error::AllZero)
}

/// Builds `B^P_Φ` for `ps`, designating a maximal-degree input as `P` and
/// keeping the others in order.
pub fn stack_for<S: Scalar>(ps: &[Poly<S>], choice: &BasisChoice<S>) -> Result<StackedBezout<S>> {
    if ps.len() < 2 {
        return Err(Error::TooFewInputs(2));
    }
    let (pi, n) = designate_p(ps)?;
    if n == 0 {
        return Err(Error::DegreeTooLow);
    }
    let phi = match choice {
        BasisChoice::Explicit(b) => b.clone(),
        BasisChoice::Native => {
            let first = ps[0].basis();
            if ps.iter().all(|p| p.basis().kind() == BasisKind::Monomial) {
                Basis::monomial(n - 1)
            } else if ps.iter().any(|p| p.basis() != first) {
                return Err(Error::MixedBases);
            } else {
                first.truncated(n - 1)?
            }
        }
    };
    let qs: Vec<Poly<S>> = ps
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != pi)
        .map(|(_, p)| p.clone())
        .collect();
    stacked(&ps[pi], &qs, &phi)
}

pub fn gcd<S: Scalar>(
    ps: &[Poly<S>],
    method: GcdMethod,
    choice: &BasisChoice<S>,
) -> Result<GcdResult<S>> {
    gcd_with(ps, method, choice, Tolerance::default())
}

/// Front door: picks `P`, builds the stack and dispatches to `method`.
pub fn gcd_with<S: Scalar>(
    ps: &[Poly<S>],
    method: GcdMethod,
    choice: &BasisChoice<S>,
    tol: Tolerance,
) -> Result<GcdResult<S>> {
    if ps.len() < 2 {
        return Err(Error::TooFewInputs(2));
    }
    if method == GcdMethod::EuclidOracle {
        return euclid_gcd_with(ps, tol);
    }
    let (_, n) = designate_p(ps)?;
    if n == 0 {
        // Nonzero constant among the inputs.
        return Ok(GcdResult::new(
            vec![S::one()],
            method,
            Some(0),
            Witness::Coprime,
        ));
    }
    let stack = stack_for(ps, choice)?;
    match method {
        GcdMethod::BarnettPhi => barnett_gcd_with(&stack, tol),
        GcdMethod::NullspacePhi => nullspace_gcd_with(&stack, tol),
        GcdMethod::EuclidOracle => unreachable!(),
    }
}
