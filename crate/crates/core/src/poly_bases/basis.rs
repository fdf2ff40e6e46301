use crate::error::{Error, Result};
use crate::exactlinalg::{binomial, falling_factorial, Matrix, Scalar};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasisKind {
    Monomial,
    Bernstein,
    Lagrange,
    Hermite,
}

impl BasisKind {
    pub fn name(self) -> &'static str {
        match self {
            BasisKind::Monomial => "monomial",
            BasisKind::Bernstein => "bernstein",
            BasisKind::Lagrange => "lagrange",
            BasisKind::Hermite => "hermite",
        }
    }

    /// Interpolation kinds are described by conditions at nodes.
    pub fn is_interpolatory(self) -> bool {
        matches!(self, BasisKind::Lagrange | BasisKind::Hermite)
    }
}

/// A basis of the polynomials of degree at most `degree`.
///
/// For interpolation kinds the coordinates of a polynomial are its
/// interpolation data: values at the nodes (Lagrange), or values followed by
/// consecutive derivatives at each node (Hermite, node-major).
#[derive(Debug, Clone, PartialEq)]
pub struct Basis<S> {
    kind: BasisKind,
    degree: usize,
    nodes: Vec<S>,
    confluencies: Vec<usize>,
}

impl<S: Scalar> Basis<S> {
    pub fn monomial(degree: usize) -> Self {
        Basis {
            kind: BasisKind::Monomial,
            degree,
            nodes: Vec::new(),
            confluencies: Vec::new(),
        }
    }

    /// Element `i` is `C(d,i) (1-t)^(d-i) t^i`.
    pub fn bernstein(degree: usize) -> Self {
        Basis {
            kind: BasisKind::Bernstein,
            ..Self::monomial(degree)
        }
    }

    pub fn lagrange(nodes: Vec<S>) -> Result<Self> {
        if nodes.is_empty() {
            return Err(Error::InvalidBasis(
                "lagrange basis needs at least one node".into(),
            ));
        }
        check_distinct(&nodes)?;
        Ok(Basis {
            kind: BasisKind::Lagrange,
            degree: nodes.len() - 1,
            confluencies: vec![1; nodes.len()],
            nodes,
        })
    }

    pub fn hermite(nodes: Vec<S>, confluencies: Vec<usize>) -> Result<Self> {
        if nodes.is_empty() || nodes.len() != confluencies.len() {
            return Err(Error::InvalidBasis(
                "hermite basis needs one positive confluency per node".into(),
            ));
        }
        if confluencies.contains(&0) {
            return Err(Error::InvalidBasis("confluencies must be positive".into()));
        }
        check_distinct(&nodes)?;
        Ok(Basis {
            kind: BasisKind::Hermite,
            degree: confluencies.iter().sum::<usize>() - 1,
            nodes,
            confluencies,
        })
    }

    pub fn kind(&self) -> BasisKind {
        self.kind
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Number of basis elements, `degree + 1`.
    pub fn size(&self) -> usize {
        self.degree + 1
    }

    pub fn nodes(&self) -> &[S] {
        &self.nodes
    }

    pub fn confluencies(&self) -> &[usize] {
        if self.kind == BasisKind::Hermite {
            &self.confluencies
        } else {
            &[]
        }
    }

    /// The same kind of basis at a lower degree. Interpolation kinds drop
    /// their trailing conditions: the last node, or the highest derivative
    /// condition at the last node.
    pub fn truncated(&self, degree: usize) -> Result<Self> {
        if degree > self.degree {
            return Err(Error::DegreeMismatch {
                from: self.degree,
                to: degree,
            });
        }
        match self.kind {
            BasisKind::Monomial | BasisKind::Bernstein => Ok(Basis {
                degree,
                ..self.clone()
            }),
            BasisKind::Lagrange => Self::lagrange(self.nodes[..=degree].to_vec()),
            BasisKind::Hermite => {
                let mut nodes = self.nodes.clone();
                let mut conf = self.confluencies.clone();
                let mut excess = self.degree - degree;
                while excess > 0 {
                    let last = conf.len() - 1;
                    let take = excess.min(conf[last]);
                    conf[last] -= take;
                    excess -= take;
                    if conf[last] == 0 {
                        conf.pop();
                        nodes.pop();
                    }
                }
                Self::hermite(nodes, conf)
            }
        }
    }

    /// Interpolation conditions `(node, derivative order)` in coordinate
    /// order. Empty for non-interpolatory kinds.
    pub fn conditions(&self) -> Vec<(S, usize)> {
        self.nodes
            .iter()
            .zip(&self.confluencies)
            .flat_map(|(x, &s)| (0..s).map(move |d| (x.clone(), d)))
            .collect()
    }

    /// Confluent Vandermonde matrix of the interpolation conditions: row
    /// `(x, d)` holds the `d`-th derivative of `t^j` at `x`.
    pub(crate) fn confluent_vandermonde(&self) -> Matrix<S> {
        let conds = self.conditions();
        let n = self.size();
        Matrix::from_fn(n, n, |row, j| {
            let (x, d) = &conds[row];
            let ff = falling_factorial(j, *d);
            if ff == 0 {
                S::zero()
            } else {
                S::from_i64(ff) * x.pow(j - d)
            }
        })
    }

    /// `P_{Φ→St}`: column `j` holds the monomial coordinates of `φ_j`.
    pub fn to_monomial_matrix(&self) -> Result<Matrix<S>> {
        let n = self.size();
        match self.kind {
            BasisKind::Monomial => Ok(Matrix::identity(n)),
            BasisKind::Bernstein => {
                let d = self.degree;
                // coefficient of t^m in C(d,j)(1-t)^(d-j) t^j
                Ok(Matrix::from_fn(n, n, |m, j| {
                    if m < j {
                        return S::zero();
                    }
                    let mag = binomial(d, j) * binomial(d - j, m - j);
                    let sign = if (m - j) % 2 == 0 { 1 } else { -1 };
                    S::from_i64(sign * mag)
                }))
            }
            BasisKind::Lagrange | BasisKind::Hermite => self
                .confluent_vandermonde()
                .inverse()
                .map_err(|_| Error::SingularBasis),
        }
    }

    /// `P_{St→Φ}`: column `m` holds the coordinates of `t^m` in this basis.
    pub fn from_monomial_matrix(&self) -> Result<Matrix<S>> {
        let n = self.size();
        match self.kind {
            BasisKind::Monomial => Ok(Matrix::identity(n)),
            BasisKind::Bernstein => {
                // t^m = sum_{i>=m} C(i,m)/C(d,m) β_i
                let d = self.degree;
                Ok(Matrix::from_fn(n, n, |i, m| {
                    if i < m {
                        S::zero()
                    } else {
                        S::from_i64(binomial(i, m)) / S::from_i64(binomial(d, m))
                    }
                }))
            }
            BasisKind::Lagrange | BasisKind::Hermite => Ok(self.confluent_vandermonde()),
        }
    }

    /// Evaluates every basis function at `t` without going through the
    /// monomial basis, where a closed form exists.
    pub(crate) fn direct_values(&self, t: &S) -> Option<Vec<S>> {
        match self.kind {
            BasisKind::Monomial => Some((0..self.size()).map(|j| t.pow(j)).collect()),
            BasisKind::Bernstein => {
                let d = self.degree;
                let s = S::one() - t.clone();
                Some(
                    (0..=d)
                        .map(|i| S::from_i64(binomial(d, i)) * s.pow(d - i) * t.pow(i))
                        .collect(),
                )
            }
            BasisKind::Lagrange => {
                let xs = &self.nodes;
                Some(
                    (0..xs.len())
                        .map(|i| {
                            xs.iter().enumerate().filter(|&(k, _)| k != i).fold(
                                S::one(),
                                |acc, (_, xk)| {
                                    acc * (t.clone() - xk.clone()) / (xs[i].clone() - xk.clone())
                                },
                            )
                        })
                        .collect(),
                )
            }
            BasisKind::Hermite => None,
        }
    }

    pub fn map_scalar<T: Scalar>(&self, f: impl Fn(&S) -> T) -> Basis<T> {
        Basis {
            kind: self.kind,
            degree: self.degree,
            nodes: self.nodes.iter().map(f).collect(),
            confluencies: self.confluencies.clone(),
        }
    }
}

fn check_distinct<S: PartialEq>(nodes: &[S]) -> Result<()> {
    for (i, a) in nodes.iter().enumerate() {
        if nodes[..i].contains(a) {
            return Err(Error::RepeatedNodes);
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlinalg::Rational;

    fn q(v: i64) -> Rational {
        Rational::from_integer(v)
    }

    #[test]
    fn invariants_enforced() {
        assert_eq!(Basis::lagrange(vec![q(1), q(1)]), Err(Error::RepeatedNodes));
        assert!(Basis::<Rational>::lagrange(vec![]).is_err());
        assert!(Basis::hermite(vec![q(0)], vec![0]).is_err());
        assert!(Basis::hermite(vec![q(0), q(1)], vec![1]).is_err());
        let h = Basis::hermite(vec![q(-1), q(3), q(4)], vec![2, 2, 1]).unwrap();
        assert_eq!(h.degree(), 4);
        assert!(Basis::<Rational>::bernstein(3).nodes().is_empty());
    }

    #[test]
    fn hermite_truncation_drops_last_conditions() {
        let h = Basis::hermite(vec![q(-1), q(3), q(4)], vec![2, 2, 1]).unwrap();
        let t3 = h.truncated(3).unwrap();
        assert_eq!(t3, Basis::hermite(vec![q(-1), q(3)], vec![2, 2]).unwrap());
        let t2 = h.truncated(2).unwrap();
        assert_eq!(t2, Basis::hermite(vec![q(-1), q(3)], vec![2, 1]).unwrap());
        assert!(h.truncated(5).is_err());
    }

    #[test]
    fn lagrange_truncation_drops_last_nodes() {
        let l = Basis::lagrange(vec![q(0), q(1), q(2)]).unwrap();
        assert_eq!(l.truncated(1).unwrap().nodes(), &[q(0), q(1)]);
    }

    #[test]
    fn confluent_vandermonde_leading_rows() {
        let h = Basis::hermite(vec![q(-1), q(3), q(4)], vec![2, 2, 1]).unwrap();
        let v = h.from_monomial_matrix().unwrap();
        assert_eq!(v.row(0), &[q(1), q(-1), q(1), q(-1), q(1)]);
        assert_eq!(v.row(1), &[q(0), q(1), q(-2), q(3), q(-4)]);
        assert_eq!(v.row(4), &[q(1), q(4), q(16), q(64), q(256)]);
    }

    #[test]
    fn bernstein_matrices_are_mutual_inverses() {
        for d in 0..7 {
            let b = Basis::<Rational>::bernstein(d);
            let prod = &b.to_monomial_matrix().unwrap() * &b.from_monomial_matrix().unwrap();
            assert_eq!(prod, Matrix::identity(d + 1));
        }
    }
}
