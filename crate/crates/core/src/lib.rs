//! Exact Riordan arrays, their square symmetrizations and leading
//! principal-minor sequences.
//!
//! Every algorithm is generic over a coefficient field (`Scalar`). The
//! aliases at the crate root fix the field to `BigRational`, which is what
//! the families and the command-line tool use.

pub mod bivar;
pub mod error;
pub mod families;
pub mod matrix;
pub mod minors;
pub mod reference;
pub mod riordan;
pub mod scalar;
pub mod series;
pub mod symmetry;
pub mod verify;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

pub use bivar::{gf_identity_check, BivarPoly, BivariateGf, BivariateRational, CheckMethod, IdentityCheck};
pub use error::{Error, Result};
pub use matrix::CoeffMatrix;
pub use minors::{det, principal_minors, MinorKernel, MinorSequence};
pub use riordan::{conjugate, gf_conjugate, gf_left_transform, gf_right_transform, RationalPair, RiordanPair};
pub use scalar::Scalar;
pub use series::{RationalFn, Series};
pub use symmetry::{symmetrize, symmetrize_gf, symmetrize_matrix, SymmetrizedMatrix};

/// Exact rational coefficients.
pub type Rational = BigRational;
pub type QSeries = Series<Rational>;
pub type QRationalFn = RationalFn<Rational>;
pub type QMatrix = CoeffMatrix<Rational>;
pub type QPair = RiordanPair<Rational>;
pub type QRationalPair = RationalPair<Rational>;
pub type QBivarPoly = BivarPoly<Rational>;
pub type QBivariateRational = BivariateRational<Rational>;
pub type QMinors = MinorSequence<Rational>;
pub type QSymmetrized = SymmetrizedMatrix<Rational>;
