//! Named arrays, matrices and sequences, with independent oracles.
//!
//! Constructors take an explicit truncation order. Symmetrizing an N×N
//! block through the generating-function route needs order >= 2N, so
//! callers typically pass `2 * n + 4`.

use num_bigint::BigInt;
use num_integer::{binomial, Integer};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::bivar::{BivarPoly, BivariateRational};
use crate::error::{Error, Result};
use crate::matrix::CoeffMatrix;
use crate::minors::principal_minors;
use crate::reference;
use crate::riordan::{RationalPair, RiordanPair};
use crate::scalar::Scalar;
use crate::series::{RationalFn, Series};
use crate::symmetry::symmetrize;

/// Largest n accepted by `asm_count_bruteforce`.
pub const ASM_BRUTEFORCE_LIMIT: usize = 5;

fn pair<T: Scalar>(g: Series<T>, f: Series<T>, label: String) -> RiordanPair<T> {
    RiordanPair::new(g, f).expect("family parts satisfy the Riordan conditions").with_label(label)
}

fn rational_pair<T: Scalar>(g: (&[i64], &[i64]), f: (&[i64], &[i64])) -> RationalPair<T> {
    RationalPair::from_ints(g, f).expect("closed forms are valid pairs")
}

/// c(x) = (1 - sqrt(1 - 4x)) / (2x).
pub fn catalan_gf<T: Scalar>(order: usize) -> Series<T> {
    let root: Series<T> = Series::from_ints(&[1, -4], order + 1).sqrt().expect("constant term is 1");
    let numer = Series::one(order + 1).sub(&root);
    let half = T::one() / T::from_int(2);
    Series::from_coeffs(numer.coeffs()[1..].iter().map(|c| c.clone() * half.clone()).collect())
}

/// The Catalan matrix (c(x), x c(x)).
pub fn catalan_pair<T: Scalar>(order: usize) -> RiordanPair<T> {
    let order = order.max(2);
    let c = catalan_gf(order);
    let xc = c.shift_up();
    pair(c, xc, "catalan".into())
}

/// Pascal's triangle (1/(1-x), x/(1-x)).
pub fn pascal<T: Scalar>(order: usize) -> RiordanPair<T> {
    rational_pair::<T>((&[1], &[1, -1]), (&[0, 1], &[1, -1])).to_pair(order.max(2)).expect("valid").with_label("pascal")
}

/// R_r = (1/((1 - rx) sqrt(1 - 4x)), x c(x)).
pub fn make_r<T: Scalar>(r: i64, order: usize) -> RiordanPair<T> {
    let order = order.max(2);
    let root = Series::from_ints(&[1, -4], order).sqrt().expect("constant term is 1");
    let g = Series::from_ints(&[1, -r], order).mul(&root).recip().expect("constant term is 1");
    let f = catalan_gf(order).shift_up();
    pair(g, f, format!("R:{r}"))
}

/// ((1 - 2x)(1 - rx + rx^2), x(1 - x)) in closed form.
pub fn r_inverse_closed_form<T: Scalar>(r: i64) -> RationalPair<T> {
    // (1 - 2x)(1 - rx + rx^2) = 1 - (r+2)x + 3r x^2 - 2r x^3
    rational_pair((&[1, -(r + 2), 3 * r, -2 * r], &[1]), (&[0, 1, -1], &[1]))
}

/// The closed-form inverse of R_r as a pair.
pub fn make_r_inverse_closed<T: Scalar>(r: i64, order: usize) -> RiordanPair<T> {
    r_inverse_closed_form(r).to_pair(order.max(2)).expect("valid").with_label(format!("Rinv:{r}"))
}

/// The right factor in R_r = (c, x c) · ((1-x)/((1-2x)(1-rx+rx^2)), x).
pub fn catalan_cofactor<T: Scalar>(r: i64) -> RationalPair<T> {
    rational_pair((&[1, -1], &[1, -(r + 2), 3 * r, -2 * r]), (&[0, 1], &[1]))
}

/// sqrt(1 - 2(r+2)x + r^2 x^2).
fn tilde_root<T: Scalar>(r: i64, order: usize) -> Series<T> {
    Series::from_ints(&[1, -2 * (r + 2), r * r], order).sqrt().expect("constant term is 1")
}

/// The second family: (1/((1-x) sqrt(D)), (1 - rx - sqrt(D))/2) with
/// D = 1 - 2(r+2)x + r^2 x^2.
pub fn make_tilde_r<T: Scalar>(r: i64, order: usize) -> RiordanPair<T> {
    let order = order.max(2);
    let root = tilde_root::<T>(r, order);
    let g = Series::from_ints(&[1, -1], order).mul(&root).recip().expect("constant term is 1");
    let half = T::one() / T::from_int(2);
    let f = Series::from_ints(&[1, -r], order).sub(&root).scale(&half);
    pair(g, f, format!("tildeR:{r}"))
}

/// ((1 - x + rx + x^2) d/dx(x(1-x)/(1+sx)), x(1-x)/(1+rx)) for a given s.
fn tilde_inverse_form<T: Scalar>(r: i64, s: i64, order: usize) -> RiordanPair<T> {
    let order = order.max(2);
    let inner = Series::rational(&[0, 1, -1].map(T::from_int), &[1, s].map(T::from_int), order + 1)
        .expect("denominator 1 + sx");
    let g = Series::from_ints(&[1, r - 1, 1], order).mul(&inner.derivative());
    let f =
        Series::rational(&[0, 1, -1].map(T::from_int), &[1, r].map(T::from_int), order).expect("denominator 1 + rx");
    pair(g, f, format!("tildeRinv:{r}"))
}

/// The inverse of the second family with derivative term d/dx(x(1-x)/(1+rx)).
pub fn tilde_r_inverse<T: Scalar>(r: i64, order: usize) -> RiordanPair<T> {
    tilde_inverse_form(r, r, order)
}

/// The same expression with d/dx(x(1-x)/(1+x)) as the derivative term. It
/// agrees with the inverse of the second family only at r = 1.
pub fn tilde_r_inverse_misprint<T: Scalar>(r: i64, order: usize) -> RiordanPair<T> {
    tilde_inverse_form(r, 1, order)
}

/// (1/(1+x+x^2), x/(1+x)) in closed form.
pub fn example1_closed_form<T: Scalar>() -> RationalPair<T> {
    rational_pair((&[1], &[1, 1, 1]), (&[0, 1], &[1, 1]))
}

pub fn make_example1<T: Scalar>(order: usize) -> RiordanPair<T> {
    example1_closed_form().to_pair(order.max(2)).expect("valid").with_label("example1")
}

/// The pair whose inverse contains the A361654 triangle:
/// (((1-x)^3 - x^3)/(1-x), x(1-x))^(-1).
pub fn make_a361654_embed<T: Scalar>(order: usize) -> RiordanPair<T> {
    a361654_preimage::<T>(order).inverse().expect("x(1-x) is reversible").with_label("A361654")
}

/// (((1-x)^3 - x^3)/(1-x), x(1-x)) before inversion.
pub fn a361654_preimage<T: Scalar>(order: usize) -> RiordanPair<T> {
    rational_pair::<T>((&[1, -3, 3, -2], &[1, -1]), (&[0, 1, -1], &[1])).to_pair(order.max(2)).expect("valid")
}

fn poly<T: Scalar>(terms: &[(usize, usize, i64)]) -> BivarPoly<T> {
    BivarPoly::from_ints(terms)
}

fn one_minus_x_minus_y<T: Scalar>() -> BivarPoly<T> {
    poly(&[(0, 0, 1), (1, 0, -1), (0, 1, -1)])
}

/// 1/((1 - rxy)(1 - x - y)). For r = 1, 2 this is the symmetrization of R_r;
/// for other r it is only a conjecture.
pub fn r_symmetrization_gf<T: Scalar>(r: i64) -> BivariateRational<T> {
    BivariateRational::reciprocal(poly::<T>(&[(0, 0, 1), (1, 1, -r)]).mul(&one_minus_x_minus_y()))
        .expect("constant term 1")
}

/// 1/((1 - xy)(1 - x - y - rxy)), the symmetrization of the second family.
pub fn tilde_symmetrization_gf<T: Scalar>(r: i64) -> BivariateRational<T> {
    BivariateRational::reciprocal(poly::<T>(&[(0, 0, 1), (1, 1, -1)]).mul(&poly(&[
        (0, 0, 1),
        (1, 0, -1),
        (0, 1, -1),
        (1, 1, -r),
    ])))
    .expect("constant term 1")
}

/// 1/((1 - y + xy)(1 - x + xy)).
pub fn example1_symmetrization_gf<T: Scalar>() -> BivariateRational<T> {
    let a = poly::<T>(&[(0, 0, 1), (0, 1, -1), (1, 1, 1)]);
    BivariateRational::reciprocal(a.mul(&a.swap())).expect("constant term 1")
}

/// 1/(1 - x - y) - y/(1 - xy). Its x^i y^j table is the transpose of
/// `classical_asm_matrix`.
pub fn classical_asm_gf<T: Scalar>() -> BivariateRational<T> {
    BivariateRational::reciprocal(one_minus_x_minus_y())
        .expect("constant term 1")
        .sub(&BivariateRational::new(BivarPoly::y(), poly(&[(0, 0, 1), (1, 1, -1)])).expect("constant term 1"))
}

/// C(n+k, k) - [n = k+1].
pub fn classical_asm_matrix<T: Scalar>(n: usize) -> CoeffMatrix<T> {
    CoeffMatrix::from_fn(n, |i, j| {
        let b = T::from_bigint(&binomial(BigInt::from(i + j), BigInt::from(j)));
        if i == j + 1 {
            b - T::one()
        } else {
            b
        }
    })
}

/// The unipotent multiplier (1/(1 - y + y^2), y) taking the classical ASM
/// gf to 1/((1 - xy)(1 - x - y)) by right multiplication with its transpose.
pub fn asm_multiplier<T: Scalar>() -> RationalPair<T> {
    rational_pair((&[1], &[1, -1, 1]), (&[0, 1], &[1]))
}

/// 1/((1 - y)(1/(1 - y) - y)) expanded as a series, before simplification.
pub fn asm_multiplier_unsimplified<T: Scalar>(order: usize) -> Series<T> {
    let one_minus = Series::from_ints(&[1, -1], order);
    let inner = one_minus.recip().expect("constant term 1").sub(&Series::x(order));
    one_minus.mul(&inner).recip().expect("constant term 1")
}

/// 2y/((1-y)(1-x-y-xy)) + 1/(1-xy), the 20-vertex matrix gf.
pub fn twenty_vertex_gf<T: Scalar>() -> BivariateRational<T> {
    BivariateRational::new(
        poly(&[(0, 1, 2)]),
        poly::<T>(&[(0, 0, 1), (0, 1, -1)]).mul(&poly(&[(0, 0, 1), (1, 0, -1), (0, 1, -1), (1, 1, -1)])),
    )
    .expect("constant term 1")
    .add(&BivariateRational::reciprocal(poly(&[(0, 0, 1), (1, 1, -1)])).expect("constant term 1"))
}

/// (1-x)(1+y^2) / ((1-y)(1-xy)(1-x-y-xy)), the single-fraction form of
/// `twenty_vertex_gf`.
pub fn twenty_vertex_product_form<T: Scalar>() -> BivariateRational<T> {
    twenty_vertex_product_with(poly(&[(0, 0, 1), (1, 0, -1), (0, 1, -1), (1, 1, -1)]))
}

/// The product form with last factor (1 - x - xy); not equal to the sum.
pub fn twenty_vertex_product_misprint<T: Scalar>() -> BivariateRational<T> {
    twenty_vertex_product_with(poly(&[(0, 0, 1), (1, 0, -1), (1, 1, -1)]))
}

fn twenty_vertex_product_with<T: Scalar>(last: BivarPoly<T>) -> BivariateRational<T> {
    BivariateRational::new(
        poly::<T>(&[(0, 0, 1), (1, 0, -1)]).mul(&poly(&[(0, 0, 1), (0, 2, 1)])),
        poly::<T>(&[(0, 0, 1), (0, 1, -1)]).mul(&poly(&[(0, 0, 1), (1, 1, -1)])).mul(&last),
    )
    .expect("constant term 1")
}

/// (1-x)(1-y) / ((1-xy)(1-x-y-xy)), the symmetric 20-vertex matrix.
pub fn twenty_vertex_symmetric_gf<T: Scalar>() -> BivariateRational<T> {
    BivariateRational::new(
        poly::<T>(&[(0, 0, 1), (1, 0, -1)]).mul(&poly(&[(0, 0, 1), (0, 1, -1)])),
        poly::<T>(&[(0, 0, 1), (1, 1, -1)]).mul(&poly(&[(0, 0, 1), (1, 0, -1), (0, 1, -1), (1, 1, -1)])),
    )
    .expect("constant term 1")
}

/// 1/((1 - 2xy)(1 + sx + sy)) for s = +1 or -1.
pub fn twenty_vertex_conjugate_gf<T: Scalar>(sign: i64) -> BivariateRational<T> {
    BivariateRational::reciprocal(poly::<T>(&[(0, 0, 1), (1, 1, -2)]).mul(&poly(&[
        (0, 0, 1),
        (1, 0, sign),
        (0, 1, sign),
    ])))
    .expect("constant term 1")
}

pub fn twenty_vertex_matrix<T: Scalar>(n: usize) -> CoeffMatrix<T> {
    twenty_vertex_gf().expand(n)
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * k)
}

/// A_n = prod_{k=0}^{n-1} (3k+1)! / (n+k)!, the number of n×n alternating
/// sign matrices.
pub fn robbins(n: usize) -> BigInt {
    let numer = (0..n).fold(BigInt::one(), |acc, k| acc * factorial(3 * k + 1));
    let denom = (0..n).fold(BigInt::one(), |acc, k| acc * factorial(n + k));
    let (q, rem) = numer.div_rem(&denom);
    assert!(rem.is_zero(), "Robbins product is not integral at n = {n}");
    q
}

/// B_1 .. B_9 of the 20-vertex model.
pub fn reference_b20() -> Vec<BigInt> {
    reference::TWENTY_VERTEX.iter().map(|&v| BigInt::from(v)).collect()
}

/// Rows of length n with entries in {-1, 0, 1} whose nonzero entries
/// alternate in sign starting and ending with +1.
fn alternating_rows(n: usize) -> Vec<Vec<i8>> {
    fn extend(row: &mut Vec<i8>, n: usize, partial: i8, out: &mut Vec<Vec<i8>>) {
        if row.len() == n {
            if partial == 1 {
                out.push(row.clone());
            }
            return;
        }
        for v in [-1i8, 0, 1] {
            let next = partial + v;
            if next == 0 || next == 1 {
                row.push(v);
                extend(row, n, next, out);
                row.pop();
            }
        }
    }
    let mut out = Vec::new();
    extend(&mut Vec::with_capacity(n), n, 0, &mut out);
    out
}

/// Count n×n alternating sign matrices by exhaustive search over rows,
/// keeping every column's running sum in {0, 1}.
pub fn asm_count_bruteforce(n: usize) -> Result<u64> {
    if n > ASM_BRUTEFORCE_LIMIT {
        return Err(Error::TooLarge { n, limit: ASM_BRUTEFORCE_LIMIT });
    }
    let rows = alternating_rows(n);
    fn search(depth: usize, n: usize, rows: &[Vec<i8>], cols: &mut [i8]) -> u64 {
        if depth == n {
            return cols.iter().all(|&c| c == 1) as u64;
        }
        let mut count = 0;
        for row in rows {
            if row.iter().zip(cols.iter()).all(|(&v, &c)| c + v == 0 || c + v == 1) {
                for (c, &v) in cols.iter_mut().zip(row) {
                    *c += v;
                }
                count += search(depth + 1, n, rows, cols);
                for (c, &v) in cols.iter_mut().zip(row) {
                    *c -= v;
                }
            }
        }
        count
    }
    Ok(search(0, n, &rows, &mut vec![0; n]))
}

/// 1, r+1, r^3+2r^2+3r+1, r^6+3r^5+7r^4+13r^3+11r^2+6r+1.
pub fn minor_polynomials(r: i64) -> [BigInt; 4] {
    let eval = |coeffs: &[i64]| {
        let r = BigInt::from(r);
        coeffs.iter().fold(BigInt::zero(), |acc, &c| acc * &r + c)
    };
    [eval(&[1]), eval(&[1, 1]), eval(&[1, 2, 3, 1]), eval(&[1, 3, 7, 13, 11, 6, 1])]
}

/// Leading minors of the symmetrized R_r for r = 0..5, six per row.
pub fn minor_polynomial_table() -> Vec<Vec<BigInt>> {
    (0..=5)
        .map(|r| {
            let a = make_r::<BigRational>(r, 16);
            let s = symmetrize(&a, 6).expect("order 16 covers 6x6");
            principal_minors(s.matrix(), 6).and_then(|m| m.to_integers()).expect("integer matrix")
        })
        .collect()
}

/// Series of a closed-form rational function, convenience for callers that
/// only hold integer coefficient lists.
pub fn rational_series<T: Scalar>(num: &[i64], den: &[i64], order: usize) -> Result<Series<T>> {
    Ok(RationalFn::from_ints(num, den)?.to_series(order))
}
