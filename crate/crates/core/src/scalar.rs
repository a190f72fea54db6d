//! Numeric abstraction shared by every computation in the crate.

use std::fmt::{Debug, Display};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, Signed, ToPrimitive};

/// A signed scalar the distance machinery can run on.
///
/// Exact types (`BigRational`, `i64`, `i128`) report their value through
/// [`Scalar::to_ratio`]; floating point does not, which disables the
/// integer-scaled fast paths and exact LP serialization.
pub trait Scalar:
    Clone + Debug + Display + PartialOrd + Num + Signed + Send + Sync + 'static
{
    fn from_bigint(v: &BigInt) -> Option<Self>;

    /// Converts an exact rational, returning `None` when the value is not
    /// representable (a non-integer for the integer types).
    fn from_ratio(r: &BigRational) -> Option<Self>;

    fn to_ratio(&self) -> Option<BigRational>;

    fn from_i64(v: i64) -> Self {
        Self::from_bigint(&BigInt::from(v)).expect("i64 fits every scalar")
    }

    fn from_u64(v: u64) -> Self {
        Self::from_bigint(&BigInt::from(v)).expect("u64 fits every scalar")
    }
}

impl Scalar for BigRational {
    fn from_bigint(v: &BigInt) -> Option<Self> {
        Some(BigRational::from_integer(v.clone()))
    }

    fn from_ratio(r: &BigRational) -> Option<Self> {
        Some(r.clone())
    }

    fn to_ratio(&self) -> Option<BigRational> {
        Some(self.clone())
    }
}

impl Scalar for f64 {
    fn from_bigint(v: &BigInt) -> Option<Self> {
        v.to_f64()
    }

    fn from_ratio(r: &BigRational) -> Option<Self> {
        r.to_f64()
    }

    fn to_ratio(&self) -> Option<BigRational> {
        None
    }
}

macro_rules! integer_scalar {
    ($t:ty, $to:ident) => {
        impl Scalar for $t {
            fn from_bigint(v: &BigInt) -> Option<Self> {
                v.$to()
            }

            fn from_ratio(r: &BigRational) -> Option<Self> {
                if r.is_integer() {
                    r.numer().$to()
                } else {
                    None
                }
            }

            fn to_ratio(&self) -> Option<BigRational> {
                BigInt::from_i128(*self as i128).map(BigRational::from_integer)
            }
        }
    };
}

integer_scalar!(i64, to_i64);
integer_scalar!(i128, to_i128);

pub(crate) fn binomial_scalar<T: Scalar>(v: &BigInt) -> T {
    T::from_bigint(v).unwrap_or_else(|| panic!("binomial {v} overflows this scalar"))
}

pub(crate) fn two<T: Scalar>() -> T {
    T::one() + T::one()
}
