//! The Riordan group.
//!
//! A pair (g, f) with g(0) != 0, f(0) = 0 and f'(0) != 0 acts as the
//! lower-triangular matrix t_{n,k} = [x^n] g f^k. Pairs hold truncated
//! series; operations work at the smaller truncation of their inputs, so a
//! caller that needs an N×N matrix must build pairs of order at least N.

use std::collections::HashMap;

use crate::bivar::{BivarPoly, BivariateGf, BivariateRational};
use crate::error::{Error, Result};
use crate::matrix::CoeffMatrix;
use crate::scalar::Scalar;
use crate::series::{RationalFn, Series};

#[derive(Clone, Debug)]
pub struct RiordanPair<T> {
    g: Series<T>,
    f: Series<T>,
    closed_form: Option<RationalPair<T>>,
    label: Option<String>,
}

/// Equality compares the truncated series only.
impl<T: Scalar> PartialEq for RiordanPair<T> {
    fn eq(&self, other: &Self) -> bool {
        self.g == other.g && self.f == other.f
    }
}

impl<T: Scalar> RiordanPair<T> {
    /// Validate and truncate both parts to their common order.
    pub fn new(g: Series<T>, f: Series<T>) -> Result<Self> {
        let order = g.order().min(f.order());
        if order < 2 {
            return Err(Error::InvalidPair("need at least two coefficients"));
        }
        if g.coeff(0).is_zero() {
            return Err(Error::InvalidPair("g(0) must be nonzero"));
        }
        if !f.coeff(0).is_zero() {
            return Err(Error::InvalidPair("f(0) must be zero"));
        }
        if f.coeff(1).is_zero() {
            return Err(Error::InvalidPair("f'(0) must be nonzero"));
        }
        Ok(RiordanPair { g: g.truncate(order), f: f.truncate(order), closed_form: None, label: None })
    }

    /// The identity (1, x).
    pub fn identity(order: usize) -> Self {
        Self::new(Series::one(order.max(2)), Series::x(order.max(2))).expect("(1, x) is valid")
    }

    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.label = Some(label.into());
        self
    }

    pub fn label(&self) -> Option<&str> {
        self.label.as_deref()
    }

    pub fn g(&self) -> &Series<T> {
        &self.g
    }

    pub fn f(&self) -> &Series<T> {
        &self.f
    }

    pub fn order(&self) -> usize {
        self.g.order()
    }

    pub fn closed_form(&self) -> Option<&RationalPair<T>> {
        self.closed_form.as_ref()
    }

    pub fn truncate(&self, order: usize) -> Result<Self> {
        let mut out = Self::new(self.g.truncate(order), self.f.truncate(order))?;
        out.closed_form = self.closed_form.clone();
        out.label = self.label.clone();
        Ok(out)
    }

    /// g(0) = 1 and f'(0) = 1: the matrix has unit diagonal.
    pub fn is_unipotent(&self) -> bool {
        self.g.coeff(0).is_one() && self.f.coeff(1).is_one()
    }

    pub fn require_unipotent(&self) -> Result<()> {
        if self.is_unipotent() {
            Ok(())
        } else {
            Err(Error::InvalidPair("expected a unipotent pair (g(0) = f'(0) = 1)"))
        }
    }

    fn require_order(&self, n: usize) -> Result<()> {
        if n > self.order() {
            return Err(Error::InsufficientOrder { needed: n, available: self.order() });
        }
        Ok(())
    }

    /// The N×N truncation of the array; column k holds g·f^k.
    pub fn matrix(&self, n: usize) -> Result<CoeffMatrix<T>> {
        self.require_order(n)?;
        let g = self.g.truncate(n);
        let f = self.f.truncate(n);
        let mut m = CoeffMatrix::zeros(n);
        let mut column = g;
        for k in 0..n {
            for row in k..n {
                m.set(row, k, column.coeff(row).clone());
            }
            column = column.mul(&f);
        }
        Ok(m)
    }

    /// (g, f)·(u, v) = (g·u(f), v(f)).
    pub fn product(&self, other: &Self) -> Result<Self> {
        let order = self.order().min(other.order());
        let f = self.f.truncate(order);
        let g = self.g.truncate(order).mul(&other.g.compose(&f)?);
        let v = other.f.compose(&f)?;
        Self::new(g, v)
    }

    /// (1 / g(f̄), f̄) where f̄ is the compositional inverse of f.
    pub fn inverse(&self) -> Result<Self> {
        let fbar = self.f.revert()?;
        let g = self.g.compose(&fbar)?.recip()?;
        Self::new(g, fbar)
    }

    /// The fundamental-theorem action g·h(f).
    pub fn apply(&self, h: &Series<T>) -> Result<Series<T>> {
        Ok(self.g.mul(&h.compose(&self.f)?))
    }

    /// Row sums g / (1 - f), to order N.
    pub fn row_sums(&self, n: usize) -> Result<Series<T>> {
        self.require_order(n)?;
        let one = Series::one(n);
        self.g.truncate(n).div(&one.sub(&self.f))
    }

    /// Anti-diagonal sums g / (1 - x f), to order N.
    pub fn diagonal_sums(&self, n: usize) -> Result<Series<T>> {
        self.require_order(n)?;
        let one = Series::one(n);
        self.g.truncate(n).div(&one.sub(&self.f.truncate(n).shift_up()))
    }

    /// g(x) / (1 - y f(x)), exact when the pair was built from rational
    /// closed forms, otherwise the table of g·f^k at full order.
    pub fn bivariate_gf(&self) -> Result<BivariateGf<T>> {
        match &self.closed_form {
            Some(rp) => Ok(BivariateGf::Rational(rp.bivariate_gf())),
            None => Ok(BivariateGf::Truncated(self.matrix(self.order())?)),
        }
    }
}

/// A Riordan pair whose parts are rational functions in closed form.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalPair<T> {
    pub g: RationalFn<T>,
    pub f: RationalFn<T>,
}

impl<T: Scalar> RationalPair<T> {
    pub fn new(g: RationalFn<T>, f: RationalFn<T>) -> Result<Self> {
        if g.num.first().is_none_or(|c| c.is_zero()) {
            return Err(Error::InvalidPair("g(0) must be nonzero"));
        }
        if f.num.first().is_some_and(|c| !c.is_zero()) {
            return Err(Error::InvalidPair("f(0) must be zero"));
        }
        if f.num.get(1).is_none_or(|c| c.is_zero()) {
            return Err(Error::InvalidPair("f'(0) must be nonzero"));
        }
        Ok(RationalPair { g, f })
    }

    /// `(g_num/g_den, f_num/f_den)` from integer coefficient lists.
    pub fn from_ints(g: (&[i64], &[i64]), f: (&[i64], &[i64])) -> Result<Self> {
        Self::new(RationalFn::from_ints(g.0, g.1)?, RationalFn::from_ints(f.0, f.1)?)
    }

    pub fn to_pair(&self, order: usize) -> Result<RiordanPair<T>> {
        let mut pair = RiordanPair::new(self.g.to_series(order), self.f.to_series(order))?;
        pair.closed_form = Some(self.clone());
        Ok(pair)
    }

    /// g/(1 - y f) = g_num f_den / (g_den (f_den - y f_num)).
    pub fn bivariate_gf(&self) -> BivariateRational<T> {
        let num = BivarPoly::in_x(&self.g.num).mul(&BivarPoly::in_x(&self.f.den));
        let den = BivarPoly::in_x(&self.g.den)
            .mul(&BivarPoly::in_x(&self.f.den).sub(&BivarPoly::y().mul(&BivarPoly::in_x(&self.f.num))));
        BivariateRational::new(num, den).expect("g_den(0) and f_den(0) are nonzero")
    }
}

/// A·M·Aᵀ with A the N×N matrix of `a`.
pub fn conjugate<T: Scalar>(m: &CoeffMatrix<T>, a: &RiordanPair<T>) -> Result<CoeffMatrix<T>> {
    let n = m.size();
    let am = a.matrix(n).map_err(|e| match e {
        Error::InsufficientOrder { .. } => {
            Error::DimensionMismatch(format!("pair of order {} cannot conjugate a {n}x{n} matrix", a.order()))
        }
        other => other,
    })?;
    am.mul(m)?.mul(&am.transpose())
}

/// Which side(s) of a coefficient matrix a Riordan matrix multiplies.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Side {
    X,
    Y,
}

struct Substitution<'a, T> {
    pair: &'a RationalPair<T>,
    side: Side,
}

impl<T: Scalar> Substitution<'_, T> {
    fn lift(&self, coeffs: &[T]) -> BivarPoly<T> {
        match self.side {
            Side::X => BivarPoly::in_x(coeffs),
            Side::Y => BivarPoly::in_y(coeffs),
        }
    }
}

/// Substitute q(x) for x and/or q(y) for y in P/Q and multiply by p(x)
/// and/or p(y), where each pair is (p, q) = (p_num/p_den, q_num/q_den).
fn transform<T: Scalar>(m: &BivariateRational<T>, subs: &[Substitution<'_, T>]) -> BivariateRational<T> {
    let (ndx, ndy) = m.numerator().degrees();
    let (ddx, ddy) = m.denominator().degrees();
    let bound = |s: &Substitution<'_, T>| match s.side {
        Side::X => ndx.max(ddx),
        Side::Y => ndy.max(ddy),
    };

    let mut cache: HashMap<(usize, bool, usize), BivarPoly<T>> = HashMap::new();
    let mut power = |idx: usize, numer: bool, k: usize| -> BivarPoly<T> {
        cache
            .entry((idx, numer, k))
            .or_insert_with(|| {
                let s = &subs[idx];
                let base = if numer { &s.pair.f.num } else { &s.pair.f.den };
                s.lift(base).pow(k)
            })
            .clone()
    };

    let mut substitute = |poly: &BivarPoly<T>| -> BivarPoly<T> {
        let mut out = BivarPoly::zero();
        for (i, j, c) in poly.terms() {
            let mut term = BivarPoly::constant(c.clone());
            let mut rest = (i, j);
            for (idx, s) in subs.iter().enumerate() {
                let e = match s.side {
                    Side::X => std::mem::replace(&mut rest.0, 0),
                    Side::Y => std::mem::replace(&mut rest.1, 0),
                };
                let d = bound(s);
                term = term.mul(&power(idx, true, e)).mul(&power(idx, false, d - e));
            }
            term = term.mul(&BivarPoly::monomial(T::one(), rest.0, rest.1));
            out = out.add(&term);
        }
        out
    };

    let mut num = substitute(m.numerator());
    let mut den = substitute(m.denominator());
    for s in subs {
        num = num.mul(&s.lift(&s.pair.g.num));
        den = den.mul(&s.lift(&s.pair.g.den));
    }
    BivariateRational::new(num, den).expect("substitution keeps the denominator nonzero at the origin")
}

/// Generating function of M·Aᵀ: p(y)·m(x, q(y)).
pub fn gf_right_transform<T: Scalar>(m: &BivariateRational<T>, a: &RationalPair<T>) -> BivariateRational<T> {
    transform(m, &[Substitution { pair: a, side: Side::Y }])
}

/// Generating function of A·M: p(x)·m(q(x), y).
pub fn gf_left_transform<T: Scalar>(m: &BivariateRational<T>, a: &RationalPair<T>) -> BivariateRational<T> {
    transform(m, &[Substitution { pair: a, side: Side::X }])
}

/// Generating function of A·M·Aᵀ: p(x)p(y)·m(q(x), q(y)).
pub fn gf_conjugate<T: Scalar>(m: &BivariateRational<T>, a: &RationalPair<T>) -> BivariateRational<T> {
    transform(m, &[Substitution { pair: a, side: Side::X }, Substitution { pair: a, side: Side::Y }])
}
