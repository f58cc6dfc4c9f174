//! Reduced exact fractions.
//!
//! A [`Rational`] is always stored with a positive denominator and coprime
//! parts, so structural equality is numeric equality. Zero is `0/1`.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use thiserror::Error;

use crate::scalar::Scalar;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("reciprocal of zero")]
    ZeroReciprocal,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rational<T> {
    num: T,
    den: T,
}

impl<T: Scalar> Rational<T> {
    /// Reduced, sign-normalized `num/den`.
    pub fn new(num: T, den: T) -> Result<Self, ArithError> {
        if den.is_zero() {
            return Err(ArithError::ZeroDenominator);
        }
        let g = num.gcd(&den);
        let (mut num, mut den) = (num / g.clone(), den / g);
        if den.is_negative() {
            num = -num;
            den = -den;
        }
        Ok(Self::from_reduced(num, den))
    }

    pub fn from_integer(value: T) -> Self {
        Self::from_reduced(value, T::one())
    }

    pub fn zero() -> Self {
        Self::from_integer(T::zero())
    }

    pub fn one() -> Self {
        Self::from_integer(T::one())
    }

    fn from_reduced(num: T, den: T) -> Self {
        debug_assert!(den.is_positive(), "denominator must be positive");
        debug_assert!(num.gcd(&den).is_one(), "fraction must be reduced");
        Self { num, den }
    }

    pub fn numer(&self) -> &T {
        &self.num
    }

    pub fn denom(&self) -> &T {
        &self.den
    }

    pub fn into_parts(self) -> (T, T) {
        (self.num, self.den)
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_integer(&self) -> bool {
        self.den.is_one()
    }

    /// `self + a`. Adding a multiple of the denominator keeps the parts coprime,
    /// so no gcd is needed.
    pub fn add_int(&self, a: &T) -> Self {
        let num = self.num.clone() + a.clone() * self.den.clone();
        Self::from_reduced(num, self.den.clone())
    }

    pub fn recip(&self) -> Result<Self, ArithError> {
        if self.num.is_zero() {
            return Err(ArithError::ZeroReciprocal);
        }
        let (num, den) = if self.num.is_negative() {
            (-self.den.clone(), -self.num.clone())
        } else {
            (self.den.clone(), self.num.clone())
        };
        Ok(Self::from_reduced(num, den))
    }

    /// Floor of the fraction.
    pub fn floor(&self) -> T {
        self.num.div_floor(&self.den)
    }

    /// Decimal rendering with `digits` fractional digits, truncated toward zero.
    /// The flag is `true` when the rendering is the exact value.
    pub fn to_decimal(&self, digits: usize) -> (String, bool) {
        let ten = T::from_small(10);
        let negative = self.num.is_negative();
        let abs_num = self.num.abs();
        let (int_part, mut rem) = abs_num.div_rem(&self.den);
        let mut out = String::new();
        if negative {
            out.push('-');
        }
        out.push_str(&int_part.to_string());
        if digits > 0 {
            out.push('.');
            for _ in 0..digits {
                rem = rem * ten.clone();
                let (d, r) = rem.div_rem(&self.den);
                out.push_str(&d.to_string());
                rem = r;
            }
        }
        if negative
            && out
                .trim_start_matches('-')
                .chars()
                .all(|c| c == '0' || c == '.')
        {
            out.remove(0);
        }
        (out, rem.is_zero())
    }
}

impl<T: Scalar> From<T> for Rational<T> {
    fn from(value: T) -> Self {
        Self::from_integer(value)
    }
}

impl<T: Scalar> fmt::Display for Rational<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

impl<T: Scalar> Ord for Rational<T> {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num.clone() * other.den.clone()).cmp(&(other.num.clone() * self.den.clone()))
    }
}

impl<T: Scalar> PartialOrd for Rational<T> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<T: Scalar> Add for Rational<T> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        let num = self.num * rhs.den.clone() + rhs.num * self.den.clone();
        Self::new(num, self.den * rhs.den).expect("product of positive denominators")
    }
}

impl<T: Scalar> Sub for Rational<T> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<T: Scalar> Mul for Rational<T> {
    type Output = Self;

    fn mul(self, rhs: Self) -> Self {
        Self::new(self.num * rhs.num, self.den * rhs.den).expect("product of positive denominators")
    }
}

impl<T: Scalar> Neg for Rational<T> {
    type Output = Self;

    fn neg(self) -> Self {
        Self::from_reduced(-self.num, self.den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn big(n: i64, d: i64) -> Rational<BigInt> {
        Rational::new(BigInt::from(n), BigInt::from(d)).unwrap()
    }

    #[test]
    fn construction_reduces_and_normalizes_sign() {
        assert_eq!(big(51, 22).to_string(), "51/22");
        assert_eq!(big(-13, -3).to_string(), "13/3");
        assert_eq!(big(6765, 610).to_string(), "1353/122");
        assert_eq!(big(0, -7).to_string(), "0/1");
        assert_eq!(big(4, -6).to_string(), "-2/3");
        assert_eq!(
            Rational::new(BigInt::from(1), BigInt::from(0)),
            Err(ArithError::ZeroDenominator)
        );
    }

    #[test]
    fn add_int_examples() {
        assert_eq!(big(1, 3).add_int(&BigInt::from(4)), big(13, 3));
        assert_eq!(
            Rational::<BigInt>::zero()
                .add_int(&BigInt::from(7))
                .to_string(),
            "7/1"
        );
        assert_eq!(big(5, 19).add_int(&BigInt::from(4)), big(81, 19));
        assert_eq!(big(5, 19).add_int(&BigInt::from(-1)), big(-14, 19));
    }

    #[test]
    fn recip_examples() {
        assert_eq!(big(13, 3).recip().unwrap(), big(3, 13));
        assert_eq!(big(-3, 1).recip().unwrap().to_string(), "-1/3");
        assert_eq!(big(19, 5).recip().unwrap(), big(5, 19));
        assert_eq!(
            Rational::<BigInt>::zero().recip(),
            Err(ArithError::ZeroReciprocal)
        );
    }

    #[test]
    fn equality_is_structural() {
        assert_eq!(big(1353, 122), big(6765, 610));
        assert_eq!(big(0, 1), big(0, 5));
        assert_ne!(big(13, 3), big(13, 5));
    }

    #[test]
    fn ordering_and_floor() {
        assert!(big(-1, 2) < big(1, 3));
        assert_eq!(big(-7, 2).floor(), BigInt::from(-4));
        assert_eq!(big(7, 2).floor(), BigInt::from(3));
    }

    #[test]
    fn decimal_rendering_truncates() {
        assert_eq!(big(51, 22).to_decimal(5), ("2.31818".to_string(), false));
        assert_eq!(big(1, 4).to_decimal(2), ("0.25".to_string(), true));
        assert_eq!(big(-1, 3).to_decimal(3), ("-0.333".to_string(), false));
        assert_eq!(big(-1, 3000).to_decimal(2), ("0.00".to_string(), false));
        assert_eq!(big(7, 1).to_decimal(0), ("7".to_string(), true));
    }

    #[test]
    fn machine_scalars_work() {
        let r = Rational::<i64>::new(-6, -4).unwrap();
        assert_eq!(r.to_string(), "3/2");
        assert_eq!(r.recip().unwrap().add_int(&1), Rational::new(5, 3).unwrap());
    }

    proptest! {
        #[test]
        fn always_reduced(n in -10_000i64..10_000, d in -10_000i64..10_000) {
            prop_assume!(d != 0);
            let r = big(n, d);
            prop_assert!(r.denom() > &BigInt::from(0));
            prop_assert_eq!(num_integer::Integer::gcd(r.numer(), r.denom()), BigInt::from(1));
        }

        #[test]
        fn recip_is_involution(n in -10_000i64..10_000, d in 1i64..10_000) {
            prop_assume!(n != 0);
            let r = big(n, d);
            prop_assert_eq!(r.recip().unwrap().recip().unwrap(), r);
        }

        #[test]
        fn add_int_is_invertible(n in any::<i64>(), d in 1i64..i64::MAX, a in any::<i64>()) {
            let r = big(n, d);
            let a = BigInt::from(a);
            prop_assert_eq!(r.add_int(&a).add_int(&-a), r);
        }
    }
}
