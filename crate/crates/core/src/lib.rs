//! Exact construction of the generalized Gegenbauer polynomials of the
//! trigonometric Calogero–Sutherland model of type A_n, together with the
//! commuting quantum integrals that act on them.
//!
//! The polynomial and operator layers are generic over the coefficient
//! field ([`Scalar`]). The two instantiations used throughout are
//! symbolic κ ([`KappaRational`]) and κ fixed to a rational value
//! ([`Rational`]); the aliases below name the common concrete types.

pub mod error;
pub mod gegenbauer;
pub mod integrals;
pub mod latex;
pub mod scalars;
pub mod symfun;

pub use error::{Error, Result};
pub use scalars::{rat, GaussRational, KappaCoeff, KappaPolynomial, Rational, RationalFunction, Scalar};
pub use symfun::{Weight, XPolynomial, XRational, ZPolynomial};

/// Reduced rational function of κ with rational coefficients.
pub type KappaRational = RationalFunction<Rational>;
/// Rational function of κ over the Gaussian rationals.
pub type GaussKappaRational = RationalFunction<GaussRational>;
/// Polynomial in κ with rational coefficients.
pub type KappaPoly = KappaPolynomial<Rational>;
/// z-space polynomial with symbolic-κ coefficients.
pub type ZPoly = ZPolynomial<KappaRational>;
/// z-space polynomial at a fixed rational κ.
pub type ZPolyQ = ZPolynomial<Rational>;
/// x-space polynomial with rational coefficients (the engine's working type).
pub type XPolyQ = XPolynomial<Rational>;
