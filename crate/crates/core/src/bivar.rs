//! Bivariate polynomials and the expansion of bivariate rational generating
//! functions into coefficient matrices.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::matrix::CoeffMatrix;
use crate::scalar::Scalar;
use crate::series::Series;

/// A polynomial in x and y; `terms[(i, j)]` is the coefficient of x^i y^j.
/// Zero coefficients are never stored.
#[derive(Clone, Debug, PartialEq)]
pub struct BivarPoly<T> {
    terms: BTreeMap<(usize, usize), T>,
}

impl<T: Scalar> BivarPoly<T> {
    pub fn zero() -> Self {
        BivarPoly { terms: BTreeMap::new() }
    }

    pub fn constant(c: T) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    pub fn x() -> Self {
        Self::monomial(T::one(), 1, 0)
    }

    pub fn y() -> Self {
        Self::monomial(T::one(), 0, 1)
    }

    pub fn monomial(c: T, i: usize, j: usize) -> Self {
        let mut p = Self::zero();
        p.add_term(i, j, c);
        p
    }

    /// Build from `(i, j, c)` triples meaning c·x^i·y^j.
    pub fn from_ints(terms: &[(usize, usize, i64)]) -> Self {
        let mut p = Self::zero();
        for &(i, j, c) in terms {
            p.add_term(i, j, T::from_int(c));
        }
        p
    }

    /// A polynomial in x alone.
    pub fn in_x(coeffs: &[T]) -> Self {
        let mut p = Self::zero();
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term(i, 0, c.clone());
        }
        p
    }

    /// A polynomial in y alone.
    pub fn in_y(coeffs: &[T]) -> Self {
        Self::in_x(coeffs).swap()
    }

    fn add_term(&mut self, i: usize, j: usize, c: T) {
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry((i, j)).or_insert_with(T::zero);
        *entry = entry.clone() + c;
        if entry.is_zero() {
            self.terms.remove(&(i, j));
        }
    }

    pub fn coeff(&self, i: usize, j: usize) -> T {
        self.terms.get(&(i, j)).cloned().unwrap_or_else(T::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (usize, usize, &T)> {
        self.terms.iter().map(|(&(i, j), c)| (i, j, c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Degree bounds (max x-exponent, max y-exponent); (0, 0) for zero.
    pub fn degrees(&self) -> (usize, usize) {
        self.terms.keys().fold((0, 0), |(dx, dy), &(i, j)| (dx.max(i), dy.max(j)))
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(i, j), c) in &other.terms {
            out.add_term(i, j, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        BivarPoly { terms: self.terms.iter().map(|(&k, c)| (k, -c.clone())).collect() }
    }

    pub fn scale(&self, s: &T) -> Self {
        let mut out = Self::zero();
        for (&(i, j), c) in &self.terms {
            out.add_term(i, j, c.clone() * s.clone());
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (&(i, j), a) in &self.terms {
            for (&(p, q), b) in &other.terms {
                out.add_term(i + p, j + q, a.clone() * b.clone());
            }
        }
        out
    }

    pub fn pow(&self, k: usize) -> Self {
        (0..k).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Exchange the roles of x and y.
    pub fn swap(&self) -> Self {
        BivarPoly { terms: self.terms.iter().map(|(&(i, j), c)| ((j, i), c.clone())).collect() }
    }

    /// Coefficient table truncated to N×N.
    pub fn to_matrix(&self, n: usize) -> CoeffMatrix<T> {
        let mut m = CoeffMatrix::zeros(n);
        for (&(i, j), c) in &self.terms {
            if i < n && j < n {
                m.set(i, j, c.clone());
            }
        }
        m
    }
}

/// P(x, y) / Q(x, y) with Q(0, 0) != 0.
#[derive(Clone, Debug, PartialEq)]
pub struct BivariateRational<T> {
    num: BivarPoly<T>,
    den: BivarPoly<T>,
}

impl<T: Scalar> BivariateRational<T> {
    pub fn new(num: BivarPoly<T>, den: BivarPoly<T>) -> Result<Self> {
        if den.coeff(0, 0).is_zero() {
            return Err(Error::ZeroConstant);
        }
        Ok(BivariateRational { num, den })
    }

    /// 1 / Q.
    pub fn reciprocal(den: BivarPoly<T>) -> Result<Self> {
        Self::new(BivarPoly::one(), den)
    }

    pub fn polynomial(num: BivarPoly<T>) -> Self {
        BivariateRational { num, den: BivarPoly::one() }
    }

    pub fn numerator(&self) -> &BivarPoly<T> {
        &self.num
    }

    pub fn denominator(&self) -> &BivarPoly<T> {
        &self.den
    }

    pub fn add(&self, other: &Self) -> Self {
        BivariateRational {
            num: self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            den: self.den.mul(&other.den),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        BivariateRational { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        BivariateRational { num: self.num.mul(&other.num), den: self.den.mul(&other.den) }
    }

    pub fn swap(&self) -> Self {
        BivariateRational { num: self.num.swap(), den: self.den.swap() }
    }

    /// Coefficients of x^n y^k for 0 <= n, k < N, from the recurrence
    /// s_{n,k} = (p_{n,k} - sum_{(i,j) != (0,0)} q_{i,j} s_{n-i,k-j}) / q_{0,0}.
    pub fn expand(&self, n: usize) -> CoeffMatrix<T> {
        let q00 = self.den.coeff(0, 0);
        let tail: Vec<(usize, usize, &T)> = self.den.terms().filter(|&(i, j, _)| (i, j) != (0, 0)).collect();
        let mut s: CoeffMatrix<T> = CoeffMatrix::zeros(n);
        for r in 0..n {
            for c in 0..n {
                let mut acc = self.num.coeff(r, c);
                for &(i, j, q) in &tail {
                    if i <= r && j <= c {
                        let prev = s.get(r - i, c - j);
                        if !prev.is_zero() {
                            acc = acc - q.clone() * prev.clone();
                        }
                    }
                }
                s.set(r, c, acc / q00.clone());
            }
        }
        s
    }

    /// Exact equality of rational functions: P1·Q2 == P2·Q1.
    pub fn same_function(&self, other: &Self) -> bool {
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

/// A bivariate generating function, either in closed rational form or as a
/// truncated coefficient table.
#[derive(Clone, Debug, PartialEq)]
pub enum BivariateGf<T> {
    Rational(BivariateRational<T>),
    Truncated(CoeffMatrix<T>),
}

impl<T: Scalar> BivariateGf<T> {
    /// N×N coefficient table. A truncated table smaller than N is returned
    /// as is.
    pub fn expand(&self, n: usize) -> CoeffMatrix<T> {
        match self {
            BivariateGf::Rational(r) => r.expand(n),
            BivariateGf::Truncated(m) => m.leading(n),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CheckMethod {
    /// Cross-multiplied numerators compared as polynomials; exact.
    CrossMultiplication,
    /// Expansions compared on an N×N window.
    Expansion { n: usize },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct IdentityCheck {
    pub equal: bool,
    pub method: CheckMethod,
}

/// Decide whether two generating functions agree. Two closed forms are
/// compared exactly; anything involving a truncated table falls back to
/// comparing N×N expansions.
pub fn gf_identity_check<T: Scalar>(lhs: &BivariateGf<T>, rhs: &BivariateGf<T>, n: usize) -> IdentityCheck {
    match (lhs, rhs) {
        (BivariateGf::Rational(a), BivariateGf::Rational(b)) => {
            IdentityCheck { equal: a.same_function(b), method: CheckMethod::CrossMultiplication }
        }
        _ => IdentityCheck { equal: lhs.expand(n) == rhs.expand(n), method: CheckMethod::Expansion { n } },
    }
}

/// The table of g(xy): g_k on the diagonal.
pub fn diagonal_table<T: Scalar>(g: &Series<T>, n: usize) -> CoeffMatrix<T> {
    CoeffMatrix::from_fn(n, |i, j| if i == j { g.coeff(i).clone() } else { T::zero() })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use proptest::prelude::*;

    type P = BivarPoly<BigRational>;
    type R = BivariateRational<BigRational>;
    type M = CoeffMatrix<BigRational>;

    fn p(terms: &[(usize, usize, i64)]) -> P {
        P::from_ints(terms)
    }

    fn recip(terms: &[(usize, usize, i64)]) -> R {
        R::reciprocal(p(terms)).unwrap()
    }

    #[test]
    fn polynomial_arithmetic() {
        let one_minus_x = p(&[(0, 0, 1), (1, 0, -1)]);
        let one_minus_y = one_minus_x.swap();
        assert_eq!(one_minus_x.mul(&one_minus_y), p(&[(0, 0, 1), (1, 0, -1), (0, 1, -1), (1, 1, 1)]));
        let a = p(&[(0, 0, 1), (1, 1, -1)]);
        let b = p(&[(0, 0, 1), (1, 0, -1), (0, 1, -1)]);
        assert_eq!(a.mul(&b), p(&[(0, 0, 1), (1, 0, -1), (0, 1, -1), (1, 1, -1), (2, 1, 1), (1, 2, 1)]));
        let c = p(&[(0, 0, 1), (0, 1, -1), (1, 1, 1)]);
        assert_eq!(c.add(&P::y()), p(&[(0, 0, 1), (1, 1, 1)]));
        assert_eq!(c.sub(&c), P::zero());
        assert_eq!(c.degrees(), (1, 1));
    }

    #[test]
    fn zero_constant_rejected() {
        assert_eq!(R::reciprocal(P::x()), Err(Error::ZeroConstant));
    }

    #[test]
    fn expand_example_one_symmetrization() {
        // 1/((1 - y + xy)(1 - x + xy))
        let den = p(&[(0, 0, 1), (0, 1, -1), (1, 1, 1)]).mul(&p(&[(0, 0, 1), (1, 0, -1), (1, 1, 1)]));
        let m = R::reciprocal(den).unwrap().expand(6);
        let expected = M::from_ints(&[
            &[1, 1, 1, 1, 1, 1],
            &[1, -1, -2, -3, -4, -5],
            &[1, -2, 0, 2, 5, 9],
            &[1, -3, 2, 1, -1, -6],
            &[1, -4, 5, -1, -1, 0],
            &[1, -5, 9, -6, 0, 0],
        ])
        .unwrap();
        assert_eq!(m, expected);
    }

    #[test]
    fn expand_twenty_vertex_symmetric_form() {
        // (1-x)(1-y) / ((1-xy)(1-x-y-xy))
        let num = p(&[(0, 0, 1), (1, 0, -1)]).mul(&p(&[(0, 0, 1), (0, 1, -1)]));
        let den = p(&[(0, 0, 1), (1, 1, -1)]).mul(&p(&[(0, 0, 1), (1, 0, -1), (0, 1, -1), (1, 1, -1)]));
        let m = R::new(num, den).unwrap().expand(6);
        let expected = M::from_ints(&[
            &[1, 0, 0, 0, 0, 0],
            &[0, 3, 2, 2, 2, 2],
            &[0, 2, 9, 12, 16, 20],
            &[0, 2, 12, 35, 62, 98],
            &[0, 2, 16, 62, 161, 320],
            &[0, 2, 20, 98, 320, 803],
        ])
        .unwrap();
        assert_eq!(m, expected);
    }

    #[test]
    fn expand_diagonal_geometric() {
        assert_eq!(recip(&[(0, 0, 1), (1, 1, -1)]).expand(5), M::identity(5));
    }

    #[test]
    fn twenty_vertex_gf_identity() {
        // 2y/((1-y)(1-x-y-xy)) + 1/(1-xy) = (1-x)(1+y^2)/((1-y)(1-xy)(1-x-y-xy))
        let lhs = R::new(
            p(&[(0, 1, 2)]),
            p(&[(0, 0, 1), (0, 1, -1)]).mul(&p(&[(0, 0, 1), (1, 0, -1), (0, 1, -1), (1, 1, -1)])),
        )
        .unwrap()
        .add(&recip(&[(0, 0, 1), (1, 1, -1)]));
        let rhs = R::new(
            p(&[(0, 0, 1), (1, 0, -1)]).mul(&p(&[(0, 0, 1), (0, 2, 1)])),
            p(&[(0, 0, 1), (0, 1, -1)]).mul(&p(&[(0, 0, 1), (1, 1, -1)])).mul(&p(&[
                (0, 0, 1),
                (1, 0, -1),
                (0, 1, -1),
                (1, 1, -1),
            ])),
        )
        .unwrap();
        let check = gf_identity_check(&BivariateGf::Rational(lhs.clone()), &BivariateGf::Rational(rhs.clone()), 10);
        assert_eq!(check, IdentityCheck { equal: true, method: CheckMethod::CrossMultiplication });
        assert_eq!(lhs.expand(10), rhs.expand(10));

        // with a last factor of (1 - x - xy) the two sides differ
        let misprint = R::new(
            rhs.numerator().clone(),
            p(&[(0, 0, 1), (0, 1, -1)]).mul(&p(&[(0, 0, 1), (1, 1, -1)])).mul(&p(&[(0, 0, 1), (1, 0, -1), (1, 1, -1)])),
        )
        .unwrap();
        assert!(!lhs.same_function(&misprint));
        assert_ne!(lhs.expand(10), misprint.expand(10));
    }

    #[test]
    fn identity_check_negative_and_reflexive() {
        let a = recip(&[(0, 0, 1), (1, 0, -1), (0, 1, -1)])
            .sub(&R::new(p(&[(0, 1, 1)]), p(&[(0, 0, 1), (1, 1, -1)])).unwrap());
        let ga = BivariateGf::Rational(a);
        assert!(gf_identity_check(&ga, &ga, 6).equal);
        let b = BivariateGf::Rational(recip(&[(0, 0, 1), (1, 0, -1), (0, 1, -1)]));
        let c = BivariateGf::Rational(recip(&[(0, 0, 1), (1, 0, -1), (0, 1, -1), (1, 1, -1)]));
        assert!(!gf_identity_check(&b, &c, 6).equal);
        // mixed representations fall back to expansion
        let t = BivariateGf::Truncated(b.expand(6));
        let check = gf_identity_check(&b, &t, 6);
        assert_eq!(check, IdentityCheck { equal: true, method: CheckMethod::Expansion { n: 6 } });
        assert!(!gf_identity_check(&c, &t, 6).equal);
    }

    fn small_poly(deg: usize) -> impl Strategy<Value = Vec<(usize, usize, i64)>> {
        prop::collection::vec((0..=deg, 0..=deg, -3i64..=3), 0..6)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn expansion_times_denominator_is_numerator(
            num in small_poly(3),
            den in small_poly(2),
            q00 in prop::sample::select(vec![-2i64, -1, 1, 2]),
        ) {
            let n = 7;
            let mut den = p(&den);
            den = den.sub(&P::constant(den.coeff(0, 0))).add(&P::constant(BigRational::from_integer(q00.into())));
            let num = p(&num);
            let r = R::new(num.clone(), den.clone()).unwrap();
            let s = r.expand(n);
            prop_assert_eq!(s.convolve(&den.to_matrix(n)).unwrap(), num.to_matrix(n));
        }

        #[test]
        fn expansion_is_linear_in_numerator(
            a in small_poly(3),
            b in small_poly(3),
            den in small_poly(2),
        ) {
            let n = 6;
            let den = p(&den).sub(&P::constant(p(&den).coeff(0, 0))).add(&P::one());
            let ra = R::new(p(&a), den.clone()).unwrap();
            let rb = R::new(p(&b), den.clone()).unwrap();
            let sum = R::new(p(&a).add(&p(&b)), den).unwrap();
            prop_assert_eq!(sum.expand(n), ra.expand(n).add(&rb.expand(n)).unwrap());
        }

        #[test]
        fn symmetric_gf_expands_symmetric(a in small_poly(2), b in small_poly(2)) {
            let num = p(&a).add(&p(&a).swap());
            let d = p(&b).sub(&P::constant(p(&b).coeff(0, 0))).add(&P::one());
            let den = d.mul(&d.swap());
            let m = R::new(num, den).unwrap().expand(7);
            prop_assert!(m.is_symmetric());
        }
    }
}
