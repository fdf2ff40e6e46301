use super::dense;
use super::{Basis, BasisKind};
use crate::error::{Error, Result};
use crate::exactlinalg::{dot, Matrix, Scalar, Tolerance};

/// A polynomial given by its coordinates in a declared basis.
///
/// The declared degree is the basis degree; trailing zero coordinates are
/// kept. The monomial form is computed once at construction.
#[derive(Debug, Clone, PartialEq)]
pub struct Poly<S> {
    basis: Basis<S>,
    coeffs: Vec<S>,
    monomial: Vec<S>,
}

impl<S: Scalar> Poly<S> {
    pub fn new(basis: Basis<S>, coeffs: Vec<S>) -> Result<Self> {
        if coeffs.len() != basis.size() {
            return Err(Error::CoefficientCount {
                expected: basis.size(),
                found: coeffs.len(),
            });
        }
        let monomial = basis
            .to_monomial_matrix()?
            .mul_vec(&coeffs)
            .expect("square change-of-basis matrix");
        Ok(Poly {
            basis,
            coeffs,
            monomial,
        })
    }

    /// Polynomial from monomial coefficients, lowest degree first.
    pub fn monomial(coeffs: Vec<S>) -> Self {
        let coeffs = if coeffs.is_empty() {
            vec![S::zero()]
        } else {
            coeffs
        };
        Poly {
            basis: Basis::monomial(coeffs.len() - 1),
            monomial: coeffs.clone(),
            coeffs,
        }
    }

    pub fn basis(&self) -> &Basis<S> {
        &self.basis
    }

    pub fn coeffs(&self) -> &[S] {
        &self.coeffs
    }

    /// Monomial coefficients, lowest degree first, padded to the declared
    /// degree.
    pub fn monomial_coeffs(&self) -> &[S] {
        &self.monomial
    }

    /// Degree of the monomial form; `None` for the zero polynomial.
    pub fn effective_degree(&self) -> Option<usize> {
        dense::degree(&self.monomial, Tolerance::default())
    }

    pub fn is_zero(&self) -> bool {
        self.effective_degree().is_none()
    }

    /// Same polynomial function, coordinates in `to`.
    pub fn convert(&self, to: &Basis<S>) -> Result<Poly<S>> {
        if to.degree() != self.basis.degree() {
            return Err(Error::DegreeMismatch {
                from: self.basis.degree(),
                to: to.degree(),
            });
        }
        let coeffs = to.from_monomial_matrix()?.mul_vec(&self.monomial)?;
        Ok(Poly {
            basis: to.clone(),
            coeffs,
            monomial: self.monomial.clone(),
        })
    }

    /// Value at `t`, computed from the basis functions directly where a
    /// closed form exists and from the monomial form otherwise.
    pub fn eval(&self, t: &S) -> S {
        match self.basis.direct_values(t) {
            Some(values) => dot(&values, &self.coeffs),
            None => self.eval_monomial(t),
        }
    }

    pub fn eval_monomial(&self, t: &S) -> S {
        dense::eval(&self.monomial, t)
    }

    /// `order`-th derivative at `t`.
    pub fn eval_derivative(&self, order: usize, t: &S) -> S {
        dense::eval_derivative(&self.monomial, order, t)
    }

    pub fn map_scalar<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Result<Poly<T>> {
        Poly::new(
            self.basis.map_scalar(&f),
            self.coeffs.iter().map(f).collect(),
        )
    }
}

/// Change-of-basis matrix `P_{from→to}`, with `(to) · P = (from)` as row
/// vectors of basis functions, so coordinates transform as
/// `c_to = P · c_from`.
#[derive(Debug, Clone, PartialEq)]
pub struct BasisChange<S> {
    from: Basis<S>,
    to: Basis<S>,
    matrix: Matrix<S>,
}

impl<S: Scalar> BasisChange<S> {
    pub fn from(&self) -> &Basis<S> {
        &self.from
    }

    pub fn to(&self) -> &Basis<S> {
        &self.to
    }

    pub fn matrix(&self) -> &Matrix<S> {
        &self.matrix
    }

    pub fn apply(&self, coeffs: &[S]) -> Result<Vec<S>> {
        self.matrix.mul_vec(coeffs)
    }
}

/// Builds `P_{from→to}` through the monomial basis:
/// `P_{from→to} = P_{St→to} · P_{from→St}`.
pub fn change_matrix<S: Scalar>(from: &Basis<S>, to: &Basis<S>) -> Result<BasisChange<S>> {
    if from.degree() != to.degree() {
        return Err(Error::DegreeMismatch {
            from: from.degree(),
            to: to.degree(),
        });
    }
    let matrix = if from == to {
        Matrix::identity(from.size())
    } else if to.kind() == BasisKind::Monomial {
        from.to_monomial_matrix()?
    } else if from.kind() == BasisKind::Monomial {
        to.from_monomial_matrix()?
    } else {
        &to.from_monomial_matrix()? * &from.to_monomial_matrix()?
    };
    Ok(BasisChange {
        from: from.clone(),
        to: to.clone(),
        matrix,
    })
}

/// `φ_j^{(order)}(t)`, by differentiating the monomial expansion of `φ_j`.
pub fn basis_function_derivatives<S: Scalar>(
    b: &Basis<S>,
    j: usize,
    order: usize,
    t: &S,
) -> Result<S> {
    if j > b.degree() {
        return Err(Error::IndexOutOfRange {
            index: j,
            degree: b.degree(),
        });
    }
    if order > b.degree() {
        return Ok(S::zero());
    }
    let phi_j = b.to_monomial_matrix()?.column(j);
    Ok(dense::eval_derivative(&phi_j, order, t))
}

/// Coordinates of the constant `1` and of `t` in basis `b` (the first two
/// columns of `P_{St→Φ}`).
pub fn coords_of_one_and_t<S: Scalar>(b: &Basis<S>) -> Result<(Vec<S>, Vec<S>)> {
    if b.degree() < 1 {
        return Err(Error::DegreeTooLow);
    }
    let p = b.from_monomial_matrix()?;
    Ok((p.column(0), p.column(1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlinalg::Rational;

    fn r(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn rs(v: &[&str]) -> Vec<Rational> {
        v.iter().map(|s| r(s)).collect()
    }

    fn hermite_fixture() -> Basis<Rational> {
        Basis::hermite(rs(&["-1", "3", "4"]), vec![2, 2, 1]).unwrap()
    }

    #[test]
    fn monomial_to_monomial_is_identity() {
        for d in 0..5 {
            let b = Basis::<Rational>::monomial(d);
            assert_eq!(
                *change_matrix(&b, &b).unwrap().matrix(),
                Matrix::identity(d + 1)
            );
        }
    }

    #[test]
    fn bernstein_degree_one_to_monomial() {
        let m = change_matrix(&Basis::bernstein(1), &Basis::monomial(1)).unwrap();
        // (a, b) in {1-t, t} -> (a, b - a)
        assert_eq!(m.apply(&rs(&["5", "7"])).unwrap(), rs(&["5", "2"]));
    }

    #[test]
    fn hermite_change_matrix_is_confluent_vandermonde() {
        let h = hermite_fixture();
        let p = change_matrix(&Basis::monomial(4), &h).unwrap();
        assert_eq!(
            p.matrix().row(0),
            rs(&["1", "-1", "1", "-1", "1"]).as_slice()
        );
        assert_eq!(
            p.matrix().row(1),
            rs(&["0", "1", "-2", "3", "-4"]).as_slice()
        );
    }

    #[test]
    fn degree_mismatch() {
        let e = change_matrix(&Basis::<Rational>::monomial(2), &Basis::bernstein(3));
        assert!(matches!(e, Err(Error::DegreeMismatch { .. })));
        let p = Poly::monomial(rs(&["1", "2"]));
        assert!(p.convert(&Basis::bernstein(2)).is_err());
    }

    #[test]
    fn hermite_fixture_round_trip() {
        let data = rs(&["6", "-11", "26", "53", "126"]);
        let p = Poly::new(hermite_fixture(), data.clone()).unwrap();
        // t^4 - 2t^3 - t + 2
        assert_eq!(
            p.monomial_coeffs(),
            rs(&["2", "-1", "0", "-2", "1"]).as_slice()
        );
        let back = Poly::monomial(p.monomial_coeffs().to_vec())
            .convert(&hermite_fixture())
            .unwrap();
        assert_eq!(back.coeffs(), data.as_slice());
        assert_eq!(p.eval(&r("3")), r("26"));
        assert_eq!(p.eval_derivative(1, &r("-1")), r("-11"));
    }

    #[test]
    fn eval_examples() {
        assert_eq!(Poly::monomial(rs(&["2", "-3", "1"])).eval(&r("2")), r("0"));
        // 4β0 + 4β1 + 19/6 β2 + 3/2 β3 of degree 4 is t^4 - 5t^2 + 4
        let p = Poly::new(Basis::bernstein(4), rs(&["4", "4", "19/6", "3/2", "0"])).unwrap();
        assert_eq!(p.eval(&r("2")), p.eval_monomial(&r("2")));
        assert_eq!(p.eval(&r("2")), r("0"));
    }

    #[test]
    fn basis_function_derivative_examples() {
        let m = Basis::<Rational>::monomial(3);
        assert_eq!(
            basis_function_derivatives(&m, 3, 1, &r("2")).unwrap(),
            r("12")
        );
        assert_eq!(
            basis_function_derivatives(&m, 3, 4, &r("2")).unwrap(),
            r("0")
        );
        let b = Basis::<Rational>::bernstein(3);
        assert_eq!(
            basis_function_derivatives(&b, 1, 0, &r("2")).unwrap(),
            r("6")
        );
        assert!(matches!(
            basis_function_derivatives(&b, 4, 0, &r("2")),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn one_and_t_coordinates() {
        let (a, b) = coords_of_one_and_t(&Basis::<Rational>::monomial(3)).unwrap();
        assert_eq!(a, rs(&["1", "0", "0", "0"]));
        assert_eq!(b, rs(&["0", "1", "0", "0"]));
        let (a, b) = coords_of_one_and_t(&Basis::<Rational>::bernstein(3)).unwrap();
        assert_eq!(a, rs(&["1", "1", "1", "1"]));
        assert_eq!(b, rs(&["0", "1/3", "2/3", "1"]));
        let nodes = rs(&["0", "1/2", "5"]);
        let (a, b) = coords_of_one_and_t(&Basis::lagrange(nodes.clone()).unwrap()).unwrap();
        assert_eq!(a, rs(&["1", "1", "1"]));
        assert_eq!(b, nodes);
        assert!(coords_of_one_and_t(&Basis::<Rational>::monomial(0)).is_err());
    }
}
