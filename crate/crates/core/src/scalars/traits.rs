//! Coefficient-ring abstractions shared by every layer of the crate.
//!
//! All rings here are exact ℚ-algebras. The correspondence algebra and the
//! Fock ring are written against [`Ring`], so the same code runs with
//! Gaussian-rational, q-Laurent or ħ-series coefficients.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::GaussianRational;

/// An exact commutative ℚ-algebra.
pub trait Ring:
    Clone
    + fmt::Debug
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Send
    + Sync
    + 'static
{
    fn from_rational(r: &BigRational) -> Self;

    fn from_int(n: i64) -> Self {
        Self::from_rational(&BigRational::from_integer(BigInt::from(n)))
    }

    /// True when every coefficient lies in ℤ (or ℤ\[i\] for Gaussian coefficients).
    fn is_integral(&self) -> bool;

    /// True when `self / m` is integral.
    fn divisible_by(&self, m: u64) -> bool {
        assert!(m != 0, "divisibility by zero");
        let inv = BigRational::new(BigInt::one(), BigInt::from(m));
        (self.clone() * Self::from_rational(&inv)).is_integral()
    }
}

/// A [`Ring`] in which every nonzero element is invertible.
pub trait Field: Ring + Div<Output = Self> {
    fn checked_inv(&self) -> Option<Self>;
}

/// Rings containing ℚ\[i\] as constants.
pub trait GaussianScalar: Ring {
    fn from_gaussian(g: &GaussianRational) -> Self;
}

impl Ring for BigRational {
    fn from_rational(r: &BigRational) -> Self {
        r.clone()
    }

    fn is_integral(&self) -> bool {
        self.is_integer()
    }
}

impl Field for BigRational {
    fn checked_inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_divisibility() {
        let six = BigRational::from_int(6);
        assert!(six.divisible_by(3));
        assert!(!six.divisible_by(4));
        assert!(BigRational::zero().divisible_by(7));
    }
}
