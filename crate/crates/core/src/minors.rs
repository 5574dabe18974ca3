//! Leading principal minors.
//!
//! `values[n]` of a `MinorSequence` is the determinant of the leading
//! (n+1)×(n+1) block. All minors come out of a single fraction-free
//! (Bareiss) elimination sweep: after step k the pivot a_{kk} equals the
//! leading (k+1)×(k+1) determinant. When a pivot vanishes the sweep cannot
//! continue, and each remaining minor is computed on its own (cofactor
//! expansion up to 8×8, pivoted Bareiss beyond).

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::{BigRational, Rational64};
use num_traits::{Num, One};

use crate::error::{Error, Result};
use crate::matrix::CoeffMatrix;
use crate::scalar::Scalar;

/// Blocks up to this size fall back to cofactor expansion.
const COFACTOR_LIMIT: usize = 8;

#[derive(Clone, Debug, PartialEq)]
pub struct MinorSequence<T> {
    values: Vec<T>,
}

impl<T: Scalar> MinorSequence<T> {
    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn into_values(self) -> Vec<T> {
        self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn to_integers(&self) -> Result<Vec<BigInt>> {
        self.values
            .iter()
            .enumerate()
            .map(|(i, v)| v.to_integer().ok_or_else(|| Error::NonIntegral { row: i, col: i, value: v.to_string() }))
            .collect()
    }
}

/// Scalars with a determinant kernel.
pub trait MinorKernel: Scalar {
    /// Determinants of the leading 1×1 .. count×count blocks.
    fn leading_minors(rows: &[Vec<Self>], count: usize) -> Vec<Self>;
}

impl MinorKernel for BigRational {
    /// Each row is scaled by the lcm of its denominators so elimination runs
    /// over `BigInt`; the m-th minor is then divided by the product of the
    /// first m scale factors.
    fn leading_minors(rows: &[Vec<Self>], count: usize) -> Vec<Self> {
        let scales: Vec<BigInt> =
            rows[..count].iter().map(|r| r[..count].iter().fold(BigInt::one(), |acc, v| acc.lcm(v.denom()))).collect();
        let ints: Vec<Vec<BigInt>> = rows[..count]
            .iter()
            .zip(&scales)
            .map(|(r, s)| r[..count].iter().map(|v| v.numer() * (s / v.denom())).collect())
            .collect();
        let mut scale = BigInt::one();
        leading_minors_exact(ints, count)
            .into_iter()
            .zip(&scales)
            .map(|(m, s)| {
                scale *= s;
                BigRational::new(m, scale.clone())
            })
            .collect()
    }
}

macro_rules! field_kernel {
    ($t:ty) => {
        impl MinorKernel for $t {
            fn leading_minors(rows: &[Vec<Self>], count: usize) -> Vec<Self> {
                leading_minors_exact(rows[..count].iter().map(|r| r[..count].to_vec()).collect(), count)
            }
        }
    };
}

field_kernel!(Rational64);
field_kernel!(f64);
field_kernel!(f32);

/// Bareiss sweep over any ring in which the Bareiss divisions are exact
/// (the integers, or a field).
fn leading_minors_exact<R: Num + Clone>(block: Vec<Vec<R>>, count: usize) -> Vec<R> {
    let original = block.clone();
    let mut a = block;
    let mut prev = R::one();
    let mut out = Vec::with_capacity(count);
    for k in 0..count {
        let pivot = a[k][k].clone();
        out.push(pivot.clone());
        if pivot.is_zero() {
            for m in k + 2..=count {
                let sub: Vec<Vec<R>> = original[..m].iter().map(|r| r[..m].to_vec()).collect();
                out.push(if m <= COFACTOR_LIMIT { cofactor_det(&sub) } else { pivoted_det(sub) });
            }
            break;
        }
        for i in k + 1..count {
            for j in k + 1..count {
                a[i][j] = (a[i][j].clone() * pivot.clone() - a[i][k].clone() * a[k][j].clone()) / prev.clone();
            }
        }
        prev = pivot;
    }
    out
}

/// Bareiss determinant with row pivoting.
pub fn pivoted_det<R: Num + Clone>(mut a: Vec<Vec<R>>) -> R {
    let n = a.len();
    let mut prev = R::one();
    let mut negate = false;
    for k in 0..n {
        let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
            return R::zero();
        };
        if p != k {
            a.swap(p, k);
            negate = !negate;
        }
        let pivot = a[k][k].clone();
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j].clone() * pivot.clone() - a[i][k].clone() * a[k][j].clone()) / prev.clone();
            }
        }
        prev = pivot;
    }
    let det = if n == 0 { R::one() } else { a[n - 1][n - 1].clone() };
    if negate {
        R::zero() - det
    } else {
        det
    }
}

/// Laplace expansion along the first row. Exponential; for small blocks
/// and as a reference value in tests.
pub fn cofactor_det<R: Num + Clone>(a: &[Vec<R>]) -> R {
    let n = a.len();
    match n {
        0 => R::one(),
        1 => a[0][0].clone(),
        2 => a[0][0].clone() * a[1][1].clone() - a[0][1].clone() * a[1][0].clone(),
        _ => {
            let mut total = R::zero();
            for (j, lead) in a[0].iter().enumerate() {
                if lead.is_zero() {
                    continue;
                }
                let minor: Vec<Vec<R>> = a[1..]
                    .iter()
                    .map(|r| r.iter().enumerate().filter(|&(c, _)| c != j).map(|(_, v)| v.clone()).collect())
                    .collect();
                let term = lead.clone() * cofactor_det(&minor);
                total = if j % 2 == 0 { total + term } else { total - term };
            }
            total
        }
    }
}

/// The first `count` leading principal minors of `m`.
pub fn principal_minors<T: MinorKernel>(m: &CoeffMatrix<T>, count: usize) -> Result<MinorSequence<T>> {
    if count > m.size() {
        return Err(Error::DimensionMismatch(format!("requested {count} minors of a {0}x{0} matrix", m.size())));
    }
    if count == 0 {
        return Ok(MinorSequence { values: Vec::new() });
    }
    Ok(MinorSequence { values: T::leading_minors(m.rows(), count) })
}

/// Exact determinant of a square matrix.
pub fn det<T: MinorKernel>(m: &CoeffMatrix<T>) -> T {
    let n = m.size();
    if n == 0 {
        return T::one();
    }
    T::leading_minors(m.rows(), n).pop().expect("n >= 1 minors")
}

/// (-1)^(m(m-1)/2), the sign pattern of the minors of diag(1, -1, 1, ...).
pub fn alternating_sign(m: usize) -> i64 {
    if (m * m.saturating_sub(1) / 2).is_multiple_of(2) {
        1
    } else {
        -1
    }
}
