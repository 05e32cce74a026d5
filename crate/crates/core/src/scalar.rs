//! Coefficient traits.
//!
//! Polynomial arithmetic is written against [`Scalar`]; anything that needs
//! signs (Sturm sequences, root isolation) asks for [`OrderedScalar`]. The
//! decision procedures themselves run over [`Rational`](crate::Rational),
//! because every verdict they produce must be exact.

use std::fmt;
use std::ops::Neg;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{FromPrimitive, Num, One, Signed, Zero};

/// A coefficient field. Division is assumed exact for every nonzero divisor.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Num
    + Neg<Output = Self>
    + FromPrimitive
    + Send
    + Sync
    + 'static
{
    fn of_u64(n: u64) -> Self {
        <Self as FromPrimitive>::from_u64(n).expect("integer representable in scalar")
    }

    fn of_i64(n: i64) -> Self {
        <Self as FromPrimitive>::from_i64(n).expect("integer representable in scalar")
    }
}

impl<T> Scalar for T where
    T: Clone
        + PartialEq
        + fmt::Debug
        + fmt::Display
        + Num
        + Neg<Output = Self>
        + FromPrimitive
        + Send
        + Sync
        + 'static
{
}

/// An ordered coefficient field.
pub trait OrderedScalar: Scalar + PartialOrd + Signed {
    /// A positive scalar that divides every entry of `coeffs` "nicely".
    ///
    /// Dividing a remainder by this keeps its sign pattern and tames growth.
    fn positive_content(coeffs: &[Self]) -> Self {
        coeffs
            .iter()
            .rev()
            .find(|c| !c.is_zero())
            .map(|c| c.abs())
            .unwrap_or_else(Self::one)
    }

    /// Midpoint of two values.
    fn midpoint(a: &Self, b: &Self) -> Self {
        (a.clone() + b.clone()) / (Self::one() + Self::one())
    }
}

impl OrderedScalar for f64 {}
impl OrderedScalar for f32 {}

impl OrderedScalar for BigRational {
    fn positive_content(coeffs: &[Self]) -> Self {
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for c in coeffs.iter().filter(|c| !c.is_zero()) {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        if num.is_zero() {
            return BigRational::one();
        }
        BigRational::new(num, den)
    }
}
