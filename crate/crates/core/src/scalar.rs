//! The scalar field every structure is defined over.
//!
//! All identities in this crate are polynomial identities in structure
//! constants, so they are decided by exact equality. A [`Scalar`] is therefore
//! required to be an exact field; the provided implementations are the
//! rational numbers `num_rational::Ratio<T>` over any signed integer type.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, NumAssign, One, Signed, Zero};

/// An exact field element.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
    + for<'a> Add<&'a Self, Output = Self>
    + for<'a> Sub<&'a Self, Output = Self>
    + for<'a> Mul<&'a Self, Output = Self>
    + for<'a> Div<&'a Self, Output = Self>
    + for<'a> AddAssign<&'a Self>
    + for<'a> SubAssign<&'a Self>
{
    fn from_i64(value: i64) -> Self;

    /// `num / den`; panics when `den` is zero.
    fn from_fraction(num: i64, den: i64) -> Self {
        assert!(den != 0, "zero denominator");
        Self::from_i64(num) / Self::from_i64(den)
    }

    /// Parses `p`, `p/q` or `-p/q`.
    fn parse_literal(text: &str) -> Option<Self>;

    /// Canonical `p/q` form, always with an explicit positive denominator.
    fn to_literal(&self) -> String;
}

impl<I> Scalar for Ratio<I>
where
    I: Integer
        + Signed
        + NumAssign
        + Clone
        + FromPrimitive
        + FromStr
        + fmt::Display
        + fmt::Debug
        + Send
        + Sync
        + 'static,
{
    fn from_i64(value: i64) -> Self {
        Ratio::from_integer(I::from_i64(value).expect("integer out of range"))
    }

    fn parse_literal(text: &str) -> Option<Self> {
        let text = text.trim();
        if text.is_empty() {
            return None;
        }
        let (num, den) = match text.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (text, "1"),
        };
        let num: I = num.parse().ok()?;
        let den: I = den.parse().ok()?;
        if den.is_zero() {
            return None;
        }
        Some(Ratio::new(num, den))
    }

    fn to_literal(&self) -> String {
        format!("{}/{}", self.numer(), self.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    type Q = Ratio<BigInt>;

    #[test]
    fn literals_are_reduced_and_signed_in_the_numerator() {
        let q = Q::parse_literal("6/-4").unwrap();
        assert_eq!(q.to_literal(), "-3/2");
        assert_eq!(Q::parse_literal("0/7").unwrap().to_literal(), "0/1");
        assert_eq!(Q::parse_literal(" 5 ").unwrap().to_literal(), "5/1");
    }

    #[test]
    fn bad_literals_are_rejected() {
        assert!(Q::parse_literal("1/0").is_none());
        assert!(Q::parse_literal("x").is_none());
        assert!(Q::parse_literal("").is_none());
        assert!(Q::parse_literal("1.5").is_none());
    }

    #[test]
    fn fixed_width_rationals_share_the_interface() {
        let a = Ratio::<i64>::from_fraction(1, 3);
        let b = Ratio::<i64>::from_fraction(2, 3);
        assert_eq!((a + b).to_literal(), "1/1");
    }
}
