//! Square symmetrization of Riordan arrays.
//!
//! The symmetrization of (g, f) has generating function
//! B(xy, 1/y) + B(xy, 1/x) - g(xy) with B(x, y) = g(x)/(1 - y f(x)).
//! Two routes are provided: `symmetrize_gf` expands that definition
//! directly, `symmetrize_matrix` reads the entries off the triangle
//! (row n reversed, mirrored across the diagonal). The matrix route is the
//! fast one; the gf route is the reference.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Pow, Zero};

use crate::bivar::diagonal_table;
use crate::error::{Error, Result};
use crate::matrix::CoeffMatrix;
use crate::riordan::RiordanPair;
use crate::scalar::Scalar;

/// A symmetric coefficient matrix plus the label of the pair it came from.
#[derive(Clone, Debug, PartialEq)]
pub struct SymmetrizedMatrix<T> {
    matrix: CoeffMatrix<T>,
    source: Option<String>,
}

impl<T: Scalar> SymmetrizedMatrix<T> {
    pub fn matrix(&self) -> &CoeffMatrix<T> {
        &self.matrix
    }

    pub fn into_matrix(self) -> CoeffMatrix<T> {
        self.matrix
    }

    pub fn source(&self) -> Option<&str> {
        self.source.as_deref()
    }

    /// Integer entries, or a diagnostic naming the first non-integer entry.
    pub fn integral(&self) -> Result<Vec<Vec<BigInt>>> {
        self.matrix.to_integers()
    }
}

/// N×N symmetrization expanded from its generating function.
///
/// B(xy, 1/y) = g(xy) / (1 - f(xy)/y), and f(xy)/y = sum_{k>=1} f_k x^k y^(k-1)
/// has positive x-degree in every monomial, so the geometric series in it
/// truncates after N terms. Requires pair order >= 2N.
pub fn symmetrize_gf<T: Scalar>(a: &RiordanPair<T>, n: usize) -> Result<SymmetrizedMatrix<T>> {
    if a.order() < 2 * n {
        return Err(Error::InsufficientOrder { needed: 2 * n, available: a.order() });
    }
    let g = diagonal_table(a.g(), n);
    let step = CoeffMatrix::from_fn(n, |i, j| if i >= 1 && j + 1 == i { a.f().coeff(i).clone() } else { T::zero() });
    let mut power = CoeffMatrix::zeros(n);
    if n > 0 {
        power.set(0, 0, T::one());
    }
    let mut geometric = CoeffMatrix::zeros(n);
    for _ in 0..n {
        geometric = geometric.add(&power)?;
        power = power.convolve(&step)?;
    }
    let upper = g.convolve(&geometric)?;
    let sym = CoeffMatrix::from_fn(n, |i, j| upper.get(i, j).clone() + upper.get(j, i).clone() - g.get(i, j).clone());
    Ok(SymmetrizedMatrix { matrix: sym, source: a.label().map(str::to_owned) })
}

/// Symmetrization read off a lower-triangular matrix:
/// s_{n,k} = t_{n,n-k} for k <= n and t_{k,k-n} for k > n.
pub fn symmetrize_matrix<T: Scalar>(t: &CoeffMatrix<T>) -> Result<SymmetrizedMatrix<T>> {
    if let Some((row, col)) = t.upper_violation() {
        return Err(Error::NotLowerTriangular { row, col });
    }
    let sym =
        CoeffMatrix::from_fn(t.size(), |n, k| if k <= n { t.get(n, n - k).clone() } else { t.get(k, k - n).clone() });
    Ok(SymmetrizedMatrix { matrix: sym, source: None })
}

/// Symmetrization of a pair through its N×N matrix.
pub fn symmetrize<T: Scalar>(a: &RiordanPair<T>, n: usize) -> Result<SymmetrizedMatrix<T>> {
    let mut s = symmetrize_matrix(&a.matrix(n)?)?;
    s.source = a.label().map(str::to_owned);
    Ok(s)
}

/// t_{n,k} of R_r: sum_{j=0}^{n-k} r^(n-j-k) C(k+2j, j), zero above the
/// diagonal.
pub fn closed_form_entry(r: i64, n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let r = BigInt::from(r);
    (0..=n - k)
        .map(|j| {
            let e = (n - j - k) as u32;
            let power = if e == 0 { BigInt::one() } else { Pow::pow(&r, e) };
            power * binomial(BigInt::from(k + 2 * j), BigInt::from(j))
        })
        .sum()
}

/// s_{n,k} of the symmetrized R_1:
/// [k <= n] sum_{j=0}^{k} C(n-k+2j, j) + [k > n] sum_{j=0}^{n} C(k-n+2j, j).
pub fn closed_form_sym_entry(n: usize, k: usize) -> BigInt {
    let (lo, hi) = if k <= n { (k, n) } else { (n, k) };
    (0..=lo).map(|j| binomial(BigInt::from(hi - lo + 2 * j), BigInt::from(j))).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bivar::{BivarPoly, BivariateRational};
    use crate::families;
    use crate::series::Series;
    use num_rational::BigRational;
    use proptest::prelude::*;

    type M = CoeffMatrix<BigRational>;
    type Pair = RiordanPair<BigRational>;

    fn r1_display() -> M {
        M::from_ints(&[
            &[1, 1, 1, 1, 1, 1],
            &[1, 3, 4, 5, 6, 7],
            &[1, 4, 9, 14, 20, 27],
            &[1, 5, 14, 29, 49, 76],
            &[1, 6, 20, 49, 99, 175],
            &[1, 7, 27, 76, 175, 351],
        ])
        .unwrap()
    }

    #[test]
    fn gf_route_examples() {
        let r1 = families::make_r::<BigRational>(1, 12);
        let s = symmetrize_gf(&r1, 6).unwrap();
        assert_eq!(s.matrix(), &r1_display());
        assert_eq!(s.source(), Some("R:1"));

        let id = symmetrize_gf(&Pair::identity(10), 5).unwrap();
        assert_eq!(id.matrix(), &M::from_fn(5, |i, j| BigRational::from_integer(((i == 0 || j == 0) as i64).into())));

        let ex = families::make_example1::<BigRational>(12);
        let expected = M::from_ints(&[
            &[1, 1, 1, 1, 1, 1],
            &[1, -1, -2, -3, -4, -5],
            &[1, -2, 0, 2, 5, 9],
            &[1, -3, 2, 1, -1, -6],
            &[1, -4, 5, -1, -1, 0],
            &[1, -5, 9, -6, 0, 0],
        ])
        .unwrap();
        assert_eq!(symmetrize_gf(&ex, 6).unwrap().matrix(), &expected);
    }

    #[test]
    fn gf_route_needs_double_order() {
        let r1 = families::make_r::<BigRational>(1, 11);
        assert_eq!(symmetrize_gf(&r1, 6), Err(Error::InsufficientOrder { needed: 12, available: 11 }));
    }

    #[test]
    fn matrix_route_examples() {
        let r1 = families::make_r::<BigRational>(1, 12);
        assert_eq!(symmetrize(&r1, 6).unwrap().matrix(), &r1_display());
        let id = symmetrize_matrix(&M::identity(4)).unwrap();
        assert_eq!(id.matrix(), symmetrize_gf(&Pair::identity(8), 4).unwrap().matrix());
        let r2 = families::make_r::<BigRational>(2, 4);
        assert_eq!(symmetrize(&r2, 2).unwrap().matrix(), &M::from_ints(&[&[1, 1], &[1, 4]]).unwrap());
        assert_eq!(
            symmetrize_matrix(&M::from_ints(&[&[1, 2], &[0, 1]]).unwrap()),
            Err(Error::NotLowerTriangular { row: 0, col: 1 })
        );
    }

    #[test]
    fn closed_form_examples() {
        assert_eq!(closed_form_entry(1, 4, 1), BigInt::from(49));
        assert_eq!(closed_form_entry(2, 5, 2), BigInt::from(110));
        for k in 0..10 {
            assert_eq!(closed_form_entry(1, k, k), BigInt::one());
        }
        assert_eq!(closed_form_entry(3, 2, 5), BigInt::zero());
        assert_eq!(closed_form_sym_entry(3, 2), BigInt::from(14));
        assert_eq!(closed_form_sym_entry(0, 5), BigInt::one());
        for n in 0..=10 {
            for k in 0..=10 {
                assert_eq!(closed_form_sym_entry(n, k), closed_form_sym_entry(k, n));
            }
        }
    }

    #[test]
    fn closed_forms_match_arrays() {
        for r in 0..=5 {
            let m = families::make_r::<BigRational>(r, 21).matrix(21).unwrap();
            for n in 0..21 {
                for k in 0..21 {
                    assert_eq!(
                        m.get(n, k),
                        &BigRational::from_integer(closed_form_entry(r, n, k)),
                        "r={r} n={n} k={k}"
                    );
                }
            }
        }
        let s = symmetrize_gf(&families::make_r::<BigRational>(1, 30), 15).unwrap();
        let ints = s.integral().unwrap();
        for n in 0..15 {
            for k in 0..15 {
                assert_eq!(ints[n][k], closed_form_sym_entry(n, k));
            }
        }
    }

    #[test]
    fn diagonal_is_first_column() {
        let a = families::make_tilde_r::<BigRational>(2, 16);
        let s = symmetrize(&a, 8).unwrap();
        let m = a.matrix(8).unwrap();
        for i in 0..8 {
            assert_eq!(s.matrix().get(i, i), m.get(i, 0));
        }
    }

    #[test]
    fn rational_entries_are_flagged() {
        let g = Series::from_coeffs(vec![
            BigRational::one(),
            BigRational::new(1.into(), 2.into()),
            BigRational::zero(),
            BigRational::zero(),
        ]);
        let a = Pair::new(g, Series::x(4)).unwrap();
        assert!(matches!(symmetrize(&a, 2).unwrap().integral(), Err(Error::NonIntegral { .. })));
    }

    #[test]
    fn symmetrization_gfs_of_named_arrays() {
        let n = 12;
        let one_minus_x_minus_y = BivarPoly::from_ints(&[(0, 0, 1), (1, 0, -1), (0, 1, -1)]);
        let target = |r: i64| {
            BivariateRational::<BigRational>::reciprocal(
                BivarPoly::from_ints(&[(0, 0, 1), (1, 1, -r)]).mul(&one_minus_x_minus_y),
            )
            .unwrap()
        };
        let r1 = symmetrize_gf(&families::make_r::<BigRational>(1, 2 * n), n).unwrap();
        assert_eq!(r1.matrix(), &target(1).expand(n));
        let r2 = symmetrize_gf(&families::make_r::<BigRational>(2, 2 * n), n).unwrap();
        assert_eq!(r2.matrix(), &target(2).expand(n));
        let ex = symmetrize_gf(&families::make_example1::<BigRational>(2 * n), n).unwrap();
        assert_eq!(ex.matrix(), &families::example1_symmetrization_gf().expand(n));
        for r in 0..=4 {
            let t = symmetrize_gf(&families::make_tilde_r::<BigRational>(r, 2 * n), n).unwrap();
            assert_eq!(t.matrix(), &families::tilde_symmetrization_gf(r).expand(n), "r = {r}");
        }
    }

    fn coeffs(len: usize) -> impl Strategy<Value = Vec<i64>> {
        prop::collection::vec(-3i64..=3, len)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn routes_agree(mut g in coeffs(16), mut f in coeffs(16), n in 1usize..=8,
                        g0 in prop::sample::select(vec![-2i64, 1, 3]), f1 in prop::sample::select(vec![-1i64, 1, 2])) {
            g[0] = g0;
            f[0] = 0;
            f[1] = f1;
            let a = Pair::new(Series::from_ints(&g, 16), Series::from_ints(&f, 16)).unwrap();
            let by_gf = symmetrize_gf(&a, n).unwrap();
            let by_matrix = symmetrize(&a, n).unwrap();
            prop_assert!(by_gf.matrix().is_symmetric());
            prop_assert_eq!(by_gf.matrix(), by_matrix.matrix());
        }
    }
}
