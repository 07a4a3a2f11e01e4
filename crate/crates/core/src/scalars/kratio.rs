use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{KappaCoeff, KappaPolynomial, Rational, Scalar};
use crate::error::{Error, Result};

/// A reduced fraction of κ-polynomials.
///
/// Canonical form: `gcd(num, den) = 1`, `den` has real coefficients with a
/// positive leading coefficient, and all rational components of `num` and
/// `den` are integers with joint content 1. Two values are equal iff their
/// canonical forms are equal, so `PartialEq` is structural.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction<C> {
    num: KappaPolynomial<C>,
    den: KappaPolynomial<C>,
}

impl<C: KappaCoeff> RationalFunction<C> {
    /// Builds the canonical form of `num / den`.
    pub fn new(num: KappaPolynomial<C>, den: KappaPolynomial<C>) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self::zero());
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_constant() {
                (num, den)
            } else {
                (num.div_rem(&g)?.0, den.div_rem(&g)?.0)
            }
        };
        let lead = den.leading().expect("nonzero").clone();
        let inv = C::one().checked_div(&lead)?;
        let (num, den) = (num.scale(&inv), den.scale(&inv));
        if !den.is_real() {
            return Err(Error::NonRealDenominator(den.to_string()));
        }
        let factor = content_factor(&num, &den);
        Ok(RationalFunction { num: num.scale_rational(&factor), den: den.scale_rational(&factor) })
    }

    pub fn from_poly(p: KappaPolynomial<C>) -> Self {
        Self::new(p, KappaPolynomial::one()).expect("unit denominator")
    }

    pub fn constant(c: C) -> Self {
        Self::from_poly(KappaPolynomial::constant(c))
    }

    pub fn kappa() -> Self {
        Self::from_poly(KappaPolynomial::kappa())
    }

    /// `a + b·κ`.
    pub fn affine(a: &Rational, b: &Rational) -> Self {
        Self::from_poly(KappaPolynomial::affine(a, b))
    }

    pub fn num(&self) -> &KappaPolynomial<C> {
        &self.num
    }

    pub fn den(&self) -> &KappaPolynomial<C> {
        &self.den
    }

    /// The value when it does not depend on κ.
    pub fn as_constant(&self) -> Option<C> {
        if self.num.is_constant() && self.den.is_constant() {
            Some(self.num.coeff(0).checked_div(&self.den.coeff(0)).expect("nonzero den"))
        } else {
            None
        }
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// Exact substitution of a value for κ.
    pub fn eval(&self, at: &C) -> Result<C> {
        let d = self.den.eval(at);
        if d.is_zero() {
            return Err(Error::KappaPole { kappa: at.to_string(), factor: format!("({})", self.den) });
        }
        self.num.eval(at).checked_div(&d)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc * self.clone())
    }

    pub fn map<D: KappaCoeff>(&self, f: impl Fn(&C) -> D) -> RationalFunction<D> {
        RationalFunction::new(self.num.map(&f), self.den.map(&f)).expect("mapped denominator")
    }
}

/// The positive rational that turns every component of `num`, `den` into an
/// integer with joint gcd 1.
fn content_factor<C: KappaCoeff>(num: &KappaPolynomial<C>, den: &KappaPolynomial<C>) -> Rational {
    let parts = num
        .coeffs()
        .iter()
        .chain(den.coeffs())
        .flat_map(|c| c.parts().into_iter().cloned().collect::<Vec<_>>())
        .filter(|r| !r.is_zero())
        .collect::<Vec<Rational>>();
    let lcm = parts.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let gcd = parts.iter().fold(BigInt::zero(), |acc, r| acc.gcd(&(r.numer() * (&lcm / r.denom()))));
    Rational::new(lcm, gcd.abs())
}

impl<C: KappaCoeff> Zero for RationalFunction<C> {
    fn zero() -> Self {
        RationalFunction { num: KappaPolynomial::zero(), den: KappaPolynomial::one() }
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl<C: KappaCoeff> One for RationalFunction<C> {
    fn one() -> Self {
        RationalFunction { num: KappaPolynomial::one(), den: KappaPolynomial::one() }
    }
}

impl<C: KappaCoeff> Add for RationalFunction<C> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        if self.is_zero() {
            return rhs;
        }
        if rhs.is_zero() {
            return self;
        }
        if self.den == rhs.den {
            return Self::new(self.num + rhs.num, self.den).expect("nonzero den");
        }
        if self.den.is_constant() || rhs.den.is_constant() {
            let num = self.num * rhs.den.clone() + rhs.num * self.den.clone();
            return Self::new(num, self.den * rhs.den).expect("nonzero den");
        }
        let g = self.den.gcd(&rhs.den);
        let a = self.den.div_rem(&g).expect("gcd divides").0;
        let b = rhs.den.div_rem(&g).expect("gcd divides").0;
        let num = self.num * b.clone() + rhs.num * a;
        Self::new(num, self.den * b).expect("nonzero den")
    }
}

impl<C: KappaCoeff> Neg for RationalFunction<C> {
    type Output = Self;
    fn neg(self) -> Self {
        RationalFunction { num: -self.num, den: self.den }
    }
}

impl<C: KappaCoeff> Sub for RationalFunction<C> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<C: KappaCoeff> Mul for RationalFunction<C> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        Self::new(self.num * rhs.num, self.den * rhs.den).expect("nonzero den")
    }
}

impl<C: KappaCoeff> Scalar for RationalFunction<C> {
    fn from_rational(r: &Rational) -> Self {
        Self::constant(C::from_rational(r))
    }

    fn checked_div(&self, rhs: &Self) -> Result<Self> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Self::new(self.num.clone() * rhs.den.clone(), self.den.clone() * rhs.num.clone())
    }

    fn is_real(&self) -> bool {
        self.num.is_real()
    }
}

impl<C: KappaCoeff> fmt::Display for RationalFunction<C> {
    /// `num/den` with parentheses around multi-term factors, e.g. `2/(1 + κ)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let wrap = |p: &KappaPolynomial<C>| {
            let s = p.to_string();
            if p.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 {
                format!("({s})")
            } else {
                s
            }
        };
        if self.den == KappaPolynomial::one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "{}/{}", wrap(&self.num), wrap(&self.den))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{rat, GaussRational};

    type K = RationalFunction<Rational>;
    type P = KappaPolynomial<Rational>;

    fn p(c: &[i64]) -> P {
        P::from_coeffs(c.iter().map(|&x| rat(x, 1)).collect())
    }

    fn k(num: &[i64], den: &[i64]) -> K {
        K::new(p(num), p(den)).unwrap()
    }

    #[test]
    fn normalize_cancels_common_factor() {
        // (2κ²+2κ)/(κ²+κ) = 2
        assert_eq!(k(&[0, 2, 2], &[0, 1, 1]), k(&[2], &[1]));
        assert_eq!(k(&[-1, 1], &[1]).num(), &p(&[-1, 1]));
        // 4κ(1+κ) / 2(1+κ)^2 = 2κ/(1+κ)
        let r = K::new(p(&[0, 4]) * p(&[1, 1]), p(&[2]) * p(&[1, 1]) * p(&[1, 1])).unwrap();
        assert_eq!(r.num(), &p(&[0, 2]));
        assert_eq!(r.den(), &p(&[1, 1]));
    }

    #[test]
    fn zero_denominator_is_an_error() {
        let e = K::new(p(&[1]), P::zero()).unwrap_err();
        assert_eq!(e.to_string(), "division by zero in κ-field");
    }

    #[test]
    fn content_is_cleared() {
        // (κ-1)/2 keeps integer entries: num κ-1, den 2
        let r = K::new(P::from_coeffs(vec![rat(-1, 2), rat(1, 2)]), p(&[1])).unwrap();
        assert_eq!(r.num(), &p(&[-1, 1]));
        assert_eq!(r.den(), &p(&[2]));
        // negative leading denominator flips sign
        let r = k(&[1], &[-1, -1]);
        assert_eq!(r.num(), &p(&[-1]));
        assert_eq!(r.den(), &p(&[1, 1]));
    }

    #[test]
    fn eval_and_pole() {
        let r = k(&[2], &[1, 1]);
        assert_eq!(r.eval(&rat(1, 1)).unwrap(), rat(1, 1));
        assert!(matches!(r.eval(&rat(-1, 1)), Err(Error::KappaPole { .. })));
        // c_1 at κ = 1/2: 2κ/((1+κ)κ) = 4/3
        let c1 = K::new(p(&[0, 2]), p(&[1, 1]) * p(&[0, 1])).unwrap();
        assert_eq!(c1.eval(&rat(1, 2)).unwrap(), rat(4, 3));
    }

    #[test]
    fn field_arithmetic_examples() {
        assert_eq!(k(&[1], &[1, 1]) + k(&[0, 1], &[1, 1]), K::one());
        assert_eq!(k(&[-1, 1], &[1]) * k(&[1, 1], &[1]), k(&[-1, 0, 1], &[1]));
        // 8/((1+κ)(1+3κ)) - 6(1+κ)/((1+2κ)(1+3κ)) = -2(κ-1)/((1+κ)(1+2κ))
        let a = K::new(p(&[8]), p(&[1, 1]) * p(&[1, 3])).unwrap();
        let b = K::new(p(&[6, 6]), p(&[1, 2]) * p(&[1, 3])).unwrap();
        let want = K::new(p(&[2, -2]), p(&[1, 1]) * p(&[1, 2])).unwrap();
        assert_eq!(a - b, want);
        assert!(K::one().checked_div(&K::zero()).is_err());
    }

    #[test]
    fn gaussian_coefficients() {
        type G = RationalFunction<GaussRational>;
        let i = G::constant(GaussRational::i());
        assert_eq!(i.clone() * i.clone(), -G::one());
        assert!(!i.is_real());
        // dividing by a non-real polynomial is rejected
        let nonreal = G::from_poly(KappaPolynomial::from_coeffs(vec![GaussRational::i(), GaussRational::one()]));
        assert!(matches!(G::one().checked_div(&nonreal), Err(Error::NonRealDenominator(_))));
    }
}
