use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{KappaCoeff, Rational, Scalar};
use crate::error::{Error, Result};

/// Dense univariate polynomial in κ, ascending powers, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct KappaPolynomial<C> {
    coeffs: Vec<C>,
}

impl<C: Scalar> KappaPolynomial<C> {
    pub fn from_coeffs(mut coeffs: Vec<C>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        KappaPolynomial { coeffs }
    }

    pub fn constant(c: C) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The polynomial `κ`.
    pub fn kappa() -> Self {
        Self::from_coeffs(vec![C::zero(), C::one()])
    }

    /// `a + b·κ` from rationals.
    pub fn affine(a: &Rational, b: &Rational) -> Self {
        Self::from_coeffs(vec![C::from_rational(a), C::from_rational(b)])
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> C {
        self.coeffs.get(k).cloned().unwrap_or_else(C::zero)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&C> {
        self.coeffs.last()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn eval(&self, at: &C) -> C {
        self.coeffs.iter().rev().fold(C::zero(), |acc, c| acc * at.clone() + c.clone())
    }

    pub fn scale(&self, c: &C) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|x| x.clone() * c.clone()).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc * self.clone())
    }

    /// Euclidean division over the coefficient field.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        let dd = divisor.degree().ok_or(Error::DivisionByZero)?;
        let lead = divisor.coeffs[dd].clone();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![C::zero(); rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            if rem[k].is_zero() {
                continue;
            }
            let q = rem[k].checked_div(&lead)?;
            for (i, d) in divisor.coeffs.iter().enumerate() {
                let t = rem[k - dd + i].clone() - q.clone() * d.clone();
                rem[k - dd + i] = t;
            }
            quot[k - dd] = q;
        }
        Ok((Self::from_coeffs(quot), Self::from_coeffs(rem)))
    }

    /// Monic greatest common divisor; `gcd(0, 0) = 0`.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).expect("nonzero divisor").1;
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => Self::zero(),
            Some(l) => {
                let inv = C::one().checked_div(l).expect("nonzero leading coefficient");
                self.scale(&inv)
            }
        }
    }

    pub fn map<D: Scalar>(&self, f: impl Fn(&C) -> D) -> KappaPolynomial<D> {
        KappaPolynomial::from_coeffs(self.coeffs.iter().map(f).collect())
    }
}

impl<C: KappaCoeff> KappaPolynomial<C> {
    pub fn is_real(&self) -> bool {
        self.coeffs.iter().all(|c| c.as_real().is_some())
    }

    pub fn scale_rational(&self, r: &Rational) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c.scale(r)).collect())
    }
}

impl<C: Scalar> Zero for KappaPolynomial<C> {
    fn zero() -> Self {
        KappaPolynomial { coeffs: Vec::new() }
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

impl<C: Scalar> One for KappaPolynomial<C> {
    fn one() -> Self {
        Self::constant(C::one())
    }
}

impl<C: Scalar> Add for KappaPolynomial<C> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let (mut long, short) =
            if self.coeffs.len() >= rhs.coeffs.len() { (self.coeffs, rhs.coeffs) } else { (rhs.coeffs, self.coeffs) };
        for (i, c) in short.into_iter().enumerate() {
            let t = std::mem::replace(&mut long[i], C::zero());
            long[i] = t + c;
        }
        Self::from_coeffs(long)
    }
}

impl<C: Scalar> Neg for KappaPolynomial<C> {
    type Output = Self;
    fn neg(self) -> Self {
        KappaPolynomial { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

impl<C: Scalar> Sub for KappaPolynomial<C> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<C: Scalar> Mul for KappaPolynomial<C> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![C::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let t = std::mem::replace(&mut out[i + j], C::zero());
                out[i + j] = t + a.clone() * b.clone();
            }
        }
        Self::from_coeffs(out)
    }
}

impl<C: Scalar> fmt::Display for KappaPolynomial<C> {
    /// Ascending powers, e.g. `1 + 3κ - κ^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let s = c.to_string();
            let (neg, body) = match s.strip_prefix('-') {
                Some(rest) if !rest.starts_with('(') => (true, rest.to_string()),
                _ => (false, s),
            };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let unit = body == "1";
            match (k, unit) {
                (0, _) => write!(f, "{body}")?,
                (1, true) => write!(f, "κ")?,
                (1, false) => write!(f, "{body}κ")?,
                (_, true) => write!(f, "κ^{k}")?,
                (_, false) => write!(f, "{body}κ^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;

    type P = KappaPolynomial<Rational>;

    fn p(c: &[i64]) -> P {
        P::from_coeffs(c.iter().map(|&x| rat(x, 1)).collect())
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        assert_eq!(p(&[1, 0, 0]).degree(), Some(0));
        assert!(p(&[0, 0]).is_zero());
    }

    #[test]
    fn gcd_of_shared_factor() {
        // (κ+1)(κ-2) and (κ+1)(κ+3)
        let a = p(&[1, 1]) * p(&[-2, 1]);
        let b = p(&[1, 1]) * p(&[3, 1]);
        assert_eq!(a.gcd(&b), p(&[1, 1]));
        assert_eq!(p(&[0, 2]).gcd(&P::zero()), p(&[0, 1]));
    }

    #[test]
    fn division_with_remainder() {
        let (q, r) = p(&[1, 0, 1]).div_rem(&p(&[1, 1])).unwrap();
        assert_eq!(q, p(&[-1, 1]));
        assert_eq!(r, p(&[2]));
        assert!(p(&[1]).div_rem(&P::zero()).is_err());
    }

    #[test]
    fn display_ascending() {
        assert_eq!(p(&[1, 3, -1]).to_string(), "1 + 3κ - κ^2");
        assert_eq!(p(&[0, -2]).to_string(), "-2κ");
    }
}
