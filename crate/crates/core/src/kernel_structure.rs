//! Null-space structure of Bezout matrices in terms of common roots.
//!
//! For a common root `x` of multiplicity `k` in the gcd, the null space of
//! `Bez_St` contains the `k` columns of [`monomial_block`]; in another basis
//! the matching block holds basis-function derivatives at `x`
//! ([`phi_block`]). Roots are supplied by the caller; nothing here searches
//! for them.

use serde::Serialize;

use crate::bezout::BezoutMatrix;
use crate::error::{Error, Result};
use crate::exactlinalg::{dot, falling_factorial, Matrix, Scalar, Tolerance};
use crate::poly_bases::{coords_of_one_and_t, dense, Basis};

#[derive(Debug, Clone, PartialEq)]
pub struct RootBlockSpec<S> {
    pub root: S,
    pub multiplicity: usize,
}

#[derive(Debug, Clone, PartialEq)]
pub struct KernelDescription<S> {
    pub blocks: Vec<RootBlockSpec<S>>,
    pub n: usize,
}

impl<S: Scalar> KernelDescription<S> {
    pub fn total_multiplicity(&self) -> usize {
        self.blocks.iter().map(|b| b.multiplicity).sum()
    }
}

/// Outcome of [`verify_kernel_structure`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct KernelVerdict {
    pub pass: bool,
    pub failed_condition: Option<String>,
    pub nullity: usize,
}

fn check_block_dims(k: usize, n: usize) -> Result<()> {
    if k == 0 || k > n {
        return Err(Error::BadDimensions(format!(
            "multiplicity {k} must be in 1..={n}"
        )));
    }
    Ok(())
}

/// `n x k` block whose column `c` has `m^{(c)} x^{m-c}` in row `m`
/// (falling factorial, zero above the diagonal).
pub fn monomial_block<S: Scalar>(x: &S, k: usize, n: usize) -> Result<Matrix<S>> {
    check_block_dims(k, n)?;
    Ok(Matrix::from_fn(n, k, |m, c| {
        let ff = falling_factorial(m, c);
        if ff == 0 {
            S::zero()
        } else {
            S::from_i64(ff) * x.pow(m - c)
        }
    }))
}

/// `n x k` block with entry `(j, i) = φ_j^{(i)}(x)`.
pub fn phi_block<S: Scalar>(x: &S, k: usize, phi: &Basis<S>) -> Result<Matrix<S>> {
    let n = phi.size();
    check_block_dims(k, n)?;
    // Same values as `basis_function_derivatives`, without re-expanding
    // the basis for every entry.
    let expansions = phi.to_monomial_matrix()?;
    Ok(Matrix::from_fn(n, k, |j, i| {
        dense::eval_derivative(&expansions.column(j), i, x)
    }))
}

/// The same block computed as `P^t_{Φ→St} · monomial_block(x, k, n)`.
pub fn phi_block_via_monomial<S: Scalar>(x: &S, k: usize, phi: &Basis<S>) -> Result<Matrix<S>> {
    let n = phi.size();
    let mb = monomial_block(x, k, n)?;
    Ok(&phi.to_monomial_matrix()?.transpose() * &mb)
}

pub fn verify_kernel_structure<S: Scalar>(
    b: &BezoutMatrix<S>,
    desc: &KernelDescription<S>,
) -> KernelVerdict {
    verify_kernel_structure_with(b, desc, Tolerance::default())
}

/// Checks that every root block is annihilated by the Bezout matrix and that
/// together the blocks span its whole null space.
pub fn verify_kernel_structure_with<S: Scalar>(
    b: &BezoutMatrix<S>,
    desc: &KernelDescription<S>,
    tol: Tolerance,
) -> KernelVerdict {
    let m = b.matrix();
    let n = m.cols();
    let nullity = n - m.rank_with(tol);
    let fail = |why: String| KernelVerdict {
        pass: false,
        failed_condition: Some(why),
        nullity,
    };
    if desc.n != n {
        return fail(format!(
            "description is for n = {}, matrix has n = {n}",
            desc.n
        ));
    }
    for (i, blk) in desc.blocks.iter().enumerate() {
        if desc.blocks[..i].iter().any(|o| o.root == blk.root) {
            return fail(format!("root {} listed twice", blk.root));
        }
    }
    let total = desc.total_multiplicity();
    let mut columns = Vec::new();
    for blk in &desc.blocks {
        let x = match phi_block(&blk.root, blk.multiplicity, b.basis()) {
            Ok(x) => x,
            Err(e) => return fail(format!("block for root {}: {e}", blk.root)),
        };
        let threshold = tol.0 * m.max_magnitude() * x.max_magnitude() * n as f64;
        let product = m * &x;
        if let Some(c) =
            (0..x.cols()).find(|&c| product.column(c).iter().any(|v| !v.negligible(threshold)))
        {
            return fail(format!(
                "column {c} of the block for root {} is not annihilated",
                blk.root
            ));
        }
        columns.push(x);
    }
    if total != nullity {
        return fail(format!(
            "total multiplicity {total} differs from nullity {nullity}"
        ));
    }
    if total > 0 {
        let all = Matrix::hstack(&columns).expect("blocks share row count");
        let rank = all.rank_with(tol);
        if rank != total {
            return fail(format!(
                "blocks have rank {rank}, expected full column rank {total}"
            ));
        }
    }
    KernelVerdict {
        pass: true,
        failed_condition: None,
        nullity,
    }
}

pub fn simple_common_root<S: Scalar>(b: &BezoutMatrix<S>) -> Result<S> {
    simple_common_root_with(b, Tolerance::default())
}

/// The unique simple common root `α = (b·u) / (a·u)`, where `u` spans the
/// one-dimensional null space and `a`, `b` are the coordinates of `1` and
/// `t` in the matrix's basis.
pub fn simple_common_root_with<S: Scalar>(b: &BezoutMatrix<S>, tol: Tolerance) -> Result<S> {
    let ns = b.matrix().null_space_basis_with(tol);
    if ns.cols() != 1 {
        return Err(Error::NullityNotOne(ns.cols()));
    }
    let u = ns.column(0);
    let (one, t) = coords_of_one_and_t(b.basis())?;
    let den = dot(&one, &u);
    let threshold = tol.0 * u.iter().map(S::magnitude).fold(0.0, f64::max);
    if den.negligible(threshold) {
        return Err(Error::ZeroDenominator);
    }
    Ok(dot(&t, &u) / den)
}
