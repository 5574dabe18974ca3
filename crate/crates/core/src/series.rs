//! Truncated univariate formal power series.
//!
//! A `Series` stores the coefficients of x^0 .. x^(order-1); everything at or
//! above `order` is unknown. Binary operations return the smaller of the two
//! operand orders and never extend precision.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, Debug, PartialEq)]
pub struct Series<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Series<T> {
    /// Build from a coefficient list, zero-padding or truncating to `order`.
    pub fn poly(coeffs: &[T], order: usize) -> Self {
        let mut c: Vec<T> = coeffs.iter().take(order).cloned().collect();
        c.resize(order, T::zero());
        Series { coeffs: c }
    }

    pub fn from_ints(coeffs: &[i64], order: usize) -> Self {
        let c: Vec<T> = coeffs.iter().map(|&v| T::from_int(v)).collect();
        Self::poly(&c, order)
    }

    /// Take ownership of a full coefficient vector; the order is its length.
    pub fn from_coeffs(coeffs: Vec<T>) -> Self {
        Series { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Series { coeffs: vec![T::zero(); order] }
    }

    pub fn one(order: usize) -> Self {
        Self::monomial(T::one(), 0, order)
    }

    /// The series `x`.
    pub fn x(order: usize) -> Self {
        Self::monomial(T::one(), 1, order)
    }

    pub fn monomial(c: T, power: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if power < order {
            s.coeffs[power] = c;
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// Coefficient of x^n. Panics when n is beyond the truncation order.
    pub fn coeff(&self, n: usize) -> &T {
        assert!(n < self.order(), "coefficient of x^{n} unknown: series is only known to O(x^{})", self.order());
        &self.coeffs[n]
    }

    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<T> {
        self.coeffs
    }

    /// Lower the order to `min(self.order, order)`.
    pub fn truncate(&self, order: usize) -> Self {
        Series { coeffs: self.coeffs[..order.min(self.order())].to_vec() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// The constant term, or zero for an order-0 series.
    pub fn constant(&self) -> T {
        self.coeffs.first().cloned().unwrap_or_else(T::zero)
    }

    fn linear(&self) -> T {
        self.coeffs.get(1).cloned().unwrap_or_else(T::zero)
    }

    pub fn scale(&self, c: &T) -> Self {
        Series { coeffs: self.coeffs.iter().map(|a| a.clone() * c.clone()).collect() }
    }

    /// Multiply by x, dropping the top coefficient so the order is kept.
    pub fn shift_up(&self) -> Self {
        let n = self.order();
        if n == 0 {
            return self.clone();
        }
        let mut c = Vec::with_capacity(n);
        c.push(T::zero());
        c.extend_from_slice(&self.coeffs[..n - 1]);
        Series { coeffs: c }
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Series { coeffs: (0..n).map(|i| self.coeffs[i].clone() + other.coeffs[i].clone()).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        Series { coeffs: (0..n).map(|i| self.coeffs[i].clone() - other.coeffs[i].clone()).collect() }
    }

    pub fn neg(&self) -> Self {
        Series { coeffs: self.coeffs.iter().map(|c| -c.clone()).collect() }
    }

    /// Cauchy product truncated to the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let n = self.order().min(other.order());
        let mut out = vec![T::zero(); n];
        for (i, a) in self.coeffs.iter().take(n).enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().take(n - i).enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].clone() + a.clone() * b.clone();
                }
            }
        }
        Series { coeffs: out }
    }

    pub fn pow(&self, k: usize) -> Self {
        let mut acc = Self::one(self.order());
        for _ in 0..k {
            acc = acc.mul(self);
        }
        acc
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn recip(&self) -> Result<Self> {
        Self::one(self.order()).div(self)
    }

    /// The quotient q with q * divisor = self, to the shared order.
    pub fn div(&self, divisor: &Self) -> Result<Self> {
        let n = self.order().min(divisor.order());
        if n == 0 {
            return Ok(Self::zero(0));
        }
        let b0 = divisor.coeffs[0].clone();
        if b0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let mut q: Vec<T> = Vec::with_capacity(n);
        for k in 0..n {
            let mut acc = self.coeffs[k].clone();
            for i in 1..=k {
                let b = &divisor.coeffs[i];
                if !b.is_zero() {
                    acc = acc - b.clone() * q[k - i].clone();
                }
            }
            q.push(acc / b0.clone());
        }
        Ok(Series { coeffs: q })
    }

    /// `self(inner(x))` by Horner evaluation over the series ring.
    pub fn compose(&self, inner: &Self) -> Result<Self> {
        let n = self.order().min(inner.order());
        if n == 0 {
            return Ok(Self::zero(0));
        }
        if !inner.coeffs[0].is_zero() {
            return Err(Error::NonzeroLowOrder);
        }
        let inner = inner.truncate(n);
        let mut acc = Self::monomial(self.coeffs[n - 1].clone(), 0, n);
        for i in (0..n - 1).rev() {
            acc = acc.mul(&inner);
            acc.coeffs[0] = acc.coeffs[0].clone() + self.coeffs[i].clone();
        }
        Ok(acc)
    }

    /// Compositional inverse: the series v with v(0) = 0 and self(v) = x.
    ///
    /// Coefficients are solved one at a time from the x^n coefficient of
    /// self(v) = x. A table of the powers v^k is kept so that
    /// [x^n] v^k for k >= 2 only involves v_1 .. v_{n-1}.
    pub fn revert(&self) -> Result<Self> {
        let n = self.order();
        if n < 2 {
            return Err(Error::NotReversible);
        }
        let f1 = self.linear();
        if !self.coeffs[0].is_zero() || f1.is_zero() {
            return Err(Error::NotReversible);
        }
        // powers[k][m] = [x^m] v^k, for 1 <= k < n
        let mut powers: Vec<Vec<T>> = vec![vec![T::zero(); n]; n];
        powers[1][1] = T::one() / f1.clone();
        for m in 2..n {
            let mut rhs = T::zero();
            for k in 2..=m {
                let mut c = T::zero();
                for j in 1..=(m + 1 - k) {
                    let v = &powers[1][j];
                    let p = &powers[k - 1][m - j];
                    if !v.is_zero() && !p.is_zero() {
                        c = c + v.clone() * p.clone();
                    }
                }
                if !self.coeffs[k].is_zero() {
                    rhs = rhs + self.coeffs[k].clone() * c.clone();
                }
                powers[k][m] = c;
            }
            powers[1][m] = -rhs / f1.clone();
        }
        Ok(Series { coeffs: powers.swap_remove(1) })
    }

    /// Square root with constant term 1.
    pub fn sqrt(&self) -> Result<Self> {
        let n = self.order();
        if n == 0 {
            return Ok(Self::zero(0));
        }
        if !self.coeffs[0].is_one() {
            return Err(Error::BadConstantTerm);
        }
        let two = T::from_int(2);
        let mut s: Vec<T> = Vec::with_capacity(n);
        s.push(T::one());
        for k in 1..n {
            let mut acc = self.coeffs[k].clone();
            for i in 1..k {
                acc = acc - s[i].clone() * s[k - i].clone();
            }
            s.push(acc / two.clone());
        }
        Ok(Series { coeffs: s })
    }

    /// Termwise derivative; the order drops by one.
    pub fn derivative(&self) -> Self {
        Series {
            coeffs: self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c.clone() * T::from_int(i as i64)).collect(),
        }
    }

    /// Expansion of p(x)/q(x) to the given order.
    pub fn rational(p: &[T], q: &[T], order: usize) -> Result<Self> {
        Self::poly(p, order).div(&Self::poly(q, order))
    }
}

/// A univariate rational function p(x)/q(x) kept in closed form.
#[derive(Clone, Debug, PartialEq)]
pub struct RationalFn<T> {
    pub num: Vec<T>,
    pub den: Vec<T>,
}

impl<T: Scalar> RationalFn<T> {
    pub fn new(num: Vec<T>, den: Vec<T>) -> Result<Self> {
        if den.first().is_none_or(|c| c.is_zero()) {
            return Err(Error::ZeroConstantTerm);
        }
        Ok(RationalFn { num, den })
    }

    pub fn from_ints(num: &[i64], den: &[i64]) -> Result<Self> {
        Self::new(num.iter().map(|&c| T::from_int(c)).collect(), den.iter().map(|&c| T::from_int(c)).collect())
    }

    pub fn polynomial(num: Vec<T>) -> Self {
        RationalFn { num, den: vec![T::one()] }
    }

    pub fn to_series(&self, order: usize) -> Series<T> {
        Series::rational(&self.num, &self.den, order).expect("denominator checked at construction")
    }
}

impl<T: Scalar> Add for &Series<T> {
    type Output = Series<T>;
    fn add(self, rhs: Self) -> Series<T> {
        Series::add(self, rhs)
    }
}

impl<T: Scalar> Sub for &Series<T> {
    type Output = Series<T>;
    fn sub(self, rhs: Self) -> Series<T> {
        Series::sub(self, rhs)
    }
}

impl<T: Scalar> Mul for &Series<T> {
    type Output = Series<T>;
    fn mul(self, rhs: Self) -> Series<T> {
        Series::mul(self, rhs)
    }
}

impl<T: Scalar> Neg for &Series<T> {
    type Output = Series<T>;
    fn neg(self) -> Series<T> {
        Series::neg(self)
    }
}

impl<T: Scalar> fmt::Display for Series<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{i}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.order())
    }
}
