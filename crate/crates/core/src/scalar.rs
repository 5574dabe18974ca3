//! The coefficient field abstraction shared by every module.

use std::fmt::{Debug, Display};
use std::ops::Neg;

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{FromPrimitive, Num, ToPrimitive};

/// A field of coefficients.
///
/// All algorithms in this crate only use ring operations plus division by
/// nonzero elements, so any exact field works. `BigRational` is the type the
/// families and the CLI use; `Rational64` and the float types are supported
/// for quick experiments and carry their own overflow/rounding caveats.
pub trait Scalar: Clone + PartialEq + Debug + Display + Num + Neg<Output = Self> + FromPrimitive {
    /// The value as an exact integer, if it is one.
    fn to_integer(&self) -> Option<BigInt>;

    fn from_int(n: i64) -> Self {
        Self::from_i64(n).expect("every field contains the integers")
    }

    fn from_bigint(n: &BigInt) -> Self;
}

impl Scalar for BigRational {
    fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| self.numer().clone())
    }

    fn from_bigint(n: &BigInt) -> Self {
        BigRational::from_integer(n.clone())
    }
}

impl Scalar for Rational64 {
    fn to_integer(&self) -> Option<BigInt> {
        self.is_integer().then(|| BigInt::from(*self.numer()))
    }

    fn from_bigint(n: &BigInt) -> Self {
        Rational64::from_integer(n.to_i64().expect("integer exceeds i64 range"))
    }
}

macro_rules! float_scalar {
    ($t:ty) => {
        impl Scalar for $t {
            fn to_integer(&self) -> Option<BigInt> {
                if self.is_finite() && self.fract() == 0.0 {
                    BigInt::from_f64(*self as f64)
                } else {
                    None
                }
            }

            fn from_bigint(n: &BigInt) -> Self {
                n.to_f64().unwrap_or(f64::NAN) as $t
            }
        }
    };
}

float_scalar!(f32);
float_scalar!(f64);

/// Parse `p` or `p/q` into a `BigRational`.
pub fn parse_rational(text: &str) -> Option<BigRational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().ok()?;
            let d: BigInt = d.trim().parse().ok()?;
            if d == BigInt::from(0) {
                return None;
            }
            Some(BigRational::new(n, d))
        }
        None => text.parse::<BigInt>().ok().map(BigRational::from_integer),
    }
}
