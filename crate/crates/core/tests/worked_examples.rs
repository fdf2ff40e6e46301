mod common;

use bezout_core::bezout::{bezout_matrix, stacked};
use bezout_core::gcd_engine::{barnett_gcd, gcd_degree, nullspace_gcd, Witness};
use bezout_core::kernel_structure::{
    simple_common_root, verify_kernel_structure, KernelDescription, RootBlockSpec,
};
use bezout_core::{Basis, Matrix, Rational};
use common::*;

#[test]
fn bernstein_inputs_expand_to_expected_monomials() {
    let (p, q) = bernstein_fixture();
    assert_eq!(p.monomial_coeffs(), ints(&[4, 0, -5, 0, 1]).as_slice());
    assert_eq!(
        q.monomial_coeffs(),
        rs(&["1/2", "-1/4", "-2", "1", "0"]).as_slice()
    );
}

#[test]
fn bernstein_bezout_matrix() {
    let (p, q) = bernstein_fixture();
    let b = bezout_matrix(&p, &q, &Basis::bernstein(3)).unwrap();
    assert_eq!(b.n(), 4);
    assert_eq!(b.matrix(), &bernstein_matrix_expected());
}

#[test]
fn bernstein_kernel_and_root() {
    let (p, q) = bernstein_fixture();
    let b = bezout_matrix(&p, &q, &Basis::bernstein(3)).unwrap();
    let ns = b.matrix().null_space_basis();
    assert_eq!(ns.cols(), 1);
    let stated = ints(&[-1, 6, -12, 8]);
    let u = ns.column(0);
    let ratio = u[0].clone() / stated[0].clone();
    for (a, s) in u.iter().zip(&stated) {
        assert_eq!(a.clone(), ratio.clone() * s.clone());
    }
    assert_eq!(simple_common_root(&b).unwrap(), r("2"));
}

#[test]
fn bernstein_gcd_is_t_minus_2() {
    let (p, q) = bernstein_fixture();
    let s = stacked(&p, &[q], &Basis::bernstein(3)).unwrap();
    assert_eq!(gcd_degree(&s), 1);
    let g = nullspace_gcd(&s).unwrap();
    assert_eq!(g.monic_coeffs, ints(&[1, -2]));
    assert_eq!(barnett_gcd(&s).unwrap().monic_coeffs, ints(&[1, -2]));
}

#[test]
fn hermite_inputs_expand_to_expected_monomials() {
    let (p, q) = hermite_fixture();
    assert_eq!(p.monomial_coeffs(), ints(&[2, -1, 0, -2, 1]).as_slice());
    // (t-2)(t-1)^2
    assert_eq!(q.monomial_coeffs(), ints(&[-2, 5, -4, 1, 0]).as_slice());
}

#[test]
fn hermite_truncation_drops_last_condition() {
    let t = hermite_basis().truncated(3).unwrap();
    assert_eq!(t.nodes(), ints(&[-1, 3]).as_slice());
    assert_eq!(t.confluencies(), &[2, 2]);
}

#[test]
fn hermite_bezout_matrix() {
    let (p, q) = hermite_fixture();
    let phi = hermite_basis().truncated(3).unwrap();
    let b = bezout_matrix(&p, &q, &phi).unwrap();
    assert_eq!(b.matrix(), &hermite_matrix_expected());
}

fn hermite_stated_kernel() -> Matrix<Rational> {
    Matrix::from_columns(4, &[ints(&[-22, -21, 0, 9]), ints(&[-13, -12, 9, 0])]).unwrap()
}

#[test]
fn hermite_kernel_spans_stated_vectors() {
    let (p, q) = hermite_fixture();
    let phi = hermite_basis().truncated(3).unwrap();
    let b = bezout_matrix(&p, &q, &phi).unwrap();
    let ns = b.matrix().null_space_basis();
    assert_eq!(ns.cols(), 2);
    let stated = hermite_stated_kernel();
    assert!((b.matrix() * &stated).is_zero_matrix());
    let both = Matrix::hstack(&[ns, stated]).unwrap();
    assert_eq!(both.rank(), 2);
}

#[test]
fn hermite_z_slice_from_stated_kernel() {
    let phi = hermite_basis().truncated(3).unwrap();
    let vt = phi.from_monomial_matrix().unwrap().transpose();
    let z = (&vt * &hermite_stated_kernel()).select_rows(0..3);
    assert_eq!(z, int_matrix(&[&[-22, -4], &[10, 28], &[74, 92]]));
}

#[test]
fn hermite_gcd_both_methods() {
    let (p, q) = hermite_fixture();
    let phi = hermite_basis().truncated(3).unwrap();
    let s = stacked(&p, &[q], &phi).unwrap();
    assert_eq!(gcd_degree(&s), 2);
    let ns = nullspace_gcd(&s).unwrap();
    let ba = barnett_gcd(&s).unwrap();
    assert_eq!(ns.monic_coeffs, ints(&[1, -3, 2]));
    assert_eq!(ba.monic_coeffs, ints(&[1, -3, 2]));
    assert_eq!(ns.rank, Some(2));
    match ns.witness {
        Witness::Nullspace { z, .. } => assert_eq!((z.rows(), z.cols()), (3, 2)),
        other => panic!("unexpected witness {other:?}"),
    }
}

#[test]
fn hermite_kernel_structure_roots_one_and_two() {
    let (p, q) = hermite_fixture();
    let phi = hermite_basis().truncated(3).unwrap();
    let b = bezout_matrix(&p, &q, &phi).unwrap();
    let desc = KernelDescription {
        blocks: vec![
            RootBlockSpec {
                root: r("1"),
                multiplicity: 1,
            },
            RootBlockSpec {
                root: r("2"),
                multiplicity: 1,
            },
        ],
        n: 4,
    };
    let v = verify_kernel_structure(&b, &desc);
    assert!(v.pass, "{v:?}");
    assert_eq!(v.nullity, 2);
}
