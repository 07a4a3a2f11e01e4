//! Exact scalars. Rational functions of κ are built over either the
//! rationals or the Gaussian rationals.
//!
//! Everything above this layer is written against [`Scalar`], so the same
//! polynomial code runs with symbolic κ ([`KappaRational`]) or with κ fixed
//! to a rational number ([`Rational`]).

mod gauss;
mod kpoly;
mod kratio;
mod rational;

pub use gauss::GaussRational;
pub use kpoly::KappaPolynomial;
pub use kratio::RationalFunction;
pub use rational::{parse_rational, rat, Rational};

use std::fmt::{Debug, Display};
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use crate::error::Result;

/// A commutative field element with exact arithmetic.
pub trait Scalar:
    Clone
    + Debug
    + Display
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
    fn from_rational(r: &Rational) -> Self;

    fn from_int(i: i64) -> Self {
        Self::from_rational(&Rational::from_integer(i.into()))
    }

    fn checked_div(&self, rhs: &Self) -> Result<Self>;

    /// `true` when the value carries no imaginary part.
    fn is_real(&self) -> bool {
        true
    }
}

/// Coefficient field for polynomials in κ. Besides field arithmetic it
/// exposes its rational components so that canonical forms can clear
/// denominators and integer content.
pub trait KappaCoeff: Scalar {
    /// All rational components (one for a rational, two for a Gaussian rational).
    fn parts(&self) -> Vec<&Rational>;

    fn scale(&self, r: &Rational) -> Self;

    /// The value as a rational when it is real.
    fn as_real(&self) -> Option<&Rational>;
}
