use std::fmt::{Debug, Display};
use std::hash::Hash;
use std::str::FromStr;

use num_integer::{Integer, Roots};
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// Exact signed integer usable as the scalar of rationals and continued fractions.
///
/// Fixed-width types (`i64`, `i128`) are accepted for speed in small cases;
/// they panic on overflow in debug builds. [`num_bigint::BigInt`] never overflows.
pub trait Scalar:
    Integer
    + Signed
    + Roots
    + Clone
    + Hash
    + Debug
    + Display
    + FromStr
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
    /// Lifts a machine integer; every supported scalar holds the full `i64` range.
    fn from_small(v: i64) -> Self {
        <Self as FromPrimitive>::from_i64(v).expect("scalar narrower than i64")
    }
}

impl<T> Scalar for T where
    T: Integer
        + Signed
        + Roots
        + Clone
        + Hash
        + Debug
        + Display
        + FromStr
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static
{
}
