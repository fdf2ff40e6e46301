#![allow(dead_code)]

use bezout_core::poly_bases::dense;
use bezout_core::{Basis, BasisKind, Matrix, Poly, Rational};
use rand::rngs::StdRng;
use rand::Rng;

pub fn r(s: &str) -> Rational {
    s.parse().unwrap()
}

pub fn rs(v: &[&str]) -> Vec<Rational> {
    v.iter().map(|s| r(s)).collect()
}

pub fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| Rational::from_integer(x)).collect()
}

pub fn int_matrix(rows: &[&[i64]]) -> Matrix<Rational> {
    Matrix::from_rows(rows.iter().map(|row| ints(row)).collect()).unwrap()
}

pub fn mono(v: Vec<Rational>) -> Poly<Rational> {
    Poly::monomial(v)
}

pub fn bernstein_fixture() -> (Poly<Rational>, Poly<Rational>) {
    let b = Basis::bernstein(4);
    (
        Poly::new(b.clone(), rs(&["4", "4", "19/6", "3/2", "0"])).unwrap(),
        Poly::new(b, rs(&["1/2", "7/16", "1/24", "-7/16", "-3/4"])).unwrap(),
    )
}

pub fn hermite_basis() -> Basis<Rational> {
    Basis::hermite(ints(&[-1, 3, 4]), vec![2, 2, 1]).unwrap()
}

pub fn hermite_fixture() -> (Poly<Rational>, Poly<Rational>) {
    (
        Poly::new(hermite_basis(), ints(&[6, -11, 26, 53, 126])).unwrap(),
        Poly::new(hermite_basis(), ints(&[-12, 16, 4, 8, 18])).unwrap(),
    )
}

pub fn bernstein_matrix_expected() -> Matrix<Rational> {
    Matrix::from_rows(vec![
        rs(&["1", "17/6", "10/3", "3"]),
        rs(&["17/6", "157/36", "83/18", "4"]),
        rs(&["10/3", "83/18", "187/36", "19/4"]),
        rs(&["3", "4", "19/4", "9/2"]),
    ])
    .unwrap()
}

pub fn hermite_matrix_expected() -> Matrix<Rational> {
    int_matrix(&[
        &[36, -102, -84, -150],
        &[-102, 181, 94, 173],
        &[-84, 94, 4, 14],
        &[-150, 173, 14, 37],
    ])
}

/// Random rational with `|num| <= bound` and `1 <= den <= bound`.
pub fn rand_rational(rng: &mut StdRng, bound: i64) -> Rational {
    let num = rng.gen_range(-bound..=bound);
    let den = rng.gen_range(1..=bound);
    Rational::new(num, den).unwrap()
}

pub fn rand_nonzero(rng: &mut StdRng, bound: i64) -> Rational {
    loop {
        let x = rand_rational(rng, bound);
        if !x.is_zero() {
            return x;
        }
    }
}

/// Random monomial coefficients of exact degree `d` (low to high).
pub fn rand_poly_coeffs(rng: &mut StdRng, d: usize, bound: i64) -> Vec<Rational> {
    let mut c: Vec<Rational> = (0..d).map(|_| rand_rational(rng, bound)).collect();
    c.push(rand_nonzero(rng, bound));
    c
}

pub fn distinct_rationals(rng: &mut StdRng, count: usize, bound: i64) -> Vec<Rational> {
    let mut out: Vec<Rational> = Vec::new();
    while out.len() < count {
        let x = rand_rational(rng, bound);
        if !out.contains(&x) {
            out.push(x);
        }
    }
    out
}

/// A random basis of the given kind and degree, with small rational nodes.
pub fn rand_basis(rng: &mut StdRng, kind: BasisKind, degree: usize) -> Basis<Rational> {
    match kind {
        BasisKind::Monomial => Basis::monomial(degree),
        BasisKind::Bernstein => Basis::bernstein(degree),
        BasisKind::Lagrange => Basis::lagrange(distinct_rationals(rng, degree + 1, 6)).unwrap(),
        BasisKind::Hermite => {
            let mut conf = Vec::new();
            let mut left = degree + 1;
            while left > 0 {
                let c = rng.gen_range(1..=left.min(3));
                conf.push(c);
                left -= c;
            }
            let nodes = distinct_rationals(rng, conf.len(), 6);
            Basis::hermite(nodes, conf).unwrap()
        }
    }
}

pub const KINDS: [BasisKind; 4] = [
    BasisKind::Monomial,
    BasisKind::Bernstein,
    BasisKind::Lagrange,
    BasisKind::Hermite,
];

pub fn poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    dense::mul(a, b)
}

/// Monic polynomial `Π (t - x_j)^{k_j}`, low to high.
pub fn from_roots(roots: &[(Rational, usize)]) -> Vec<Rational> {
    let mut acc = ints(&[1]);
    for (x, k) in roots {
        for _ in 0..*k {
            acc = poly_mul(&acc, &[-x.clone(), Rational::one()]);
        }
    }
    acc
}

// ---------------------------------------------------------------------------
// Independent oracles: plain bivariate arithmetic, not shared with the
// library's Cayley construction.
// ---------------------------------------------------------------------------

/// Bivariate polynomial as a dense grid `c[a][b]` of `t^a x^b`.
#[derive(Clone, Debug, PartialEq)]
pub struct Bivariate(pub Vec<Vec<Rational>>);

impl Bivariate {
    pub fn zeros(dt: usize, dx: usize) -> Self {
        Bivariate(vec![vec![Rational::zero(); dx + 1]; dt + 1])
    }

    /// `P(t) Q(x) - P(x) Q(t)`.
    pub fn cayley_numerator(p: &[Rational], q: &[Rational]) -> Self {
        let d = p.len().max(q.len());
        let get = |v: &[Rational], i: usize| v.get(i).cloned().unwrap_or_else(Rational::zero);
        let mut out = Bivariate::zeros(d, d);
        for a in 0..d {
            for b in 0..d {
                out.0[a][b] = get(p, a) * get(q, b) - get(p, b) * get(q, a);
            }
        }
        out
    }

    /// Exact division by `(t - x)` through long division in `t` with
    /// coefficients in `Q[x]`. Panics if the remainder is nonzero.
    pub fn divide_by_t_minus_x(&self) -> Self {
        // Coefficient of t^a is a polynomial in x; pad wide enough for the
        // x-degree growth during elimination.
        let dt = self.0.len() - 1;
        let width = self.0[0].len() + dt + 1;
        let mut rem: Vec<Vec<Rational>> = self
            .0
            .iter()
            .map(|row| {
                let mut row = row.clone();
                row.resize(width, Rational::zero());
                row
            })
            .collect();
        let mut quo = Bivariate::zeros(dt.saturating_sub(1), width - 1);
        for a in (1..=dt).rev() {
            // c(x) t^a = c(x) t^{a-1} (t - x) + x c(x) t^{a-1}
            let c = std::mem::replace(&mut rem[a], vec![Rational::zero(); width]);
            for b in 0..width {
                if b + 1 < width {
                    rem[a - 1][b + 1] = rem[a - 1][b + 1].clone() + c[b].clone();
                } else {
                    assert!(c[b].is_zero(), "x-degree overflow");
                }
            }
            quo.0[a - 1] = c;
        }
        assert!(
            rem.iter().flatten().all(Rational::is_zero),
            "(t - x) does not divide"
        );
        quo
    }

    pub fn coeff(&self, a: usize, b: usize) -> Rational {
        self.0
            .get(a)
            .and_then(|row| row.get(b))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }
}

/// Monomial coefficients of `C(d,i) (1-t)^{d-i} t^i`, by repeated
/// multiplication.
pub fn bernstein_expanded(d: usize, i: usize) -> Vec<Rational> {
    let mut acc = ints(&[binom(d, i)]);
    for _ in 0..(d - i) {
        acc = poly_mul(&acc, &ints(&[1, -1]));
    }
    for _ in 0..i {
        acc = poly_mul(&acc, &ints(&[0, 1]));
    }
    acc
}

pub fn binom(n: usize, k: usize) -> i64 {
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

pub fn horner(c: &[Rational], t: &Rational) -> Rational {
    c.iter()
        .rev()
        .fold(Rational::zero(), |acc, x| acc * t.clone() + x.clone())
}
