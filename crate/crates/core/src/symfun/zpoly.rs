use std::collections::BTreeMap;
use std::fmt;

use super::{split_sign, Weight};
use crate::error::{Error, Result};
use crate::scalars::Scalar;

/// Polynomial in `z_1..z_n` (n = rank), terms keyed by exponent weight.
#[derive(Clone, Debug, PartialEq)]
pub struct ZPolynomial<F> {
    rank: usize,
    terms: BTreeMap<Weight, F>,
}

impl<F: Scalar> ZPolynomial<F> {
    pub fn zero(rank: usize) -> Self {
        ZPolynomial { rank, terms: BTreeMap::new() }
    }

    pub fn constant(rank: usize, c: F) -> Self {
        Self::monomial(Weight::zero(rank), c)
    }

    pub fn one(rank: usize) -> Self {
        Self::constant(rank, F::one())
    }

    pub fn monomial(w: Weight, c: F) -> Self {
        let mut p = Self::zero(w.rank());
        p.add_term(w, c);
        p
    }

    /// The variable `z_{i+1}`.
    pub fn var(rank: usize, i: usize) -> Self {
        Self::monomial(Weight::unit(rank, i), F::one())
    }

    pub fn from_terms(rank: usize, terms: impl IntoIterator<Item = (Weight, F)>) -> Self {
        let mut p = Self::zero(rank);
        for (w, c) in terms {
            assert_eq!(w.rank(), rank, "exponent length must equal rank");
            p.add_term(w, c);
        }
        p
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Terms in ascending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Weight, &F)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, w: &Weight) -> F {
        self.terms.get(w).cloned().unwrap_or_else(F::zero)
    }

    pub fn support(&self) -> impl Iterator<Item = &Weight> {
        self.terms.keys()
    }

    /// Largest monomial in the graded order together with its coefficient.
    pub fn leading(&self) -> Option<(&Weight, &F)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, w: Weight, c: F) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = std::mem::replace(o.get_mut(), F::zero()) + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// `self += c·other`.
    pub fn add_scaled(&mut self, other: &Self, c: &F) {
        if c.is_zero() {
            return;
        }
        for (w, a) in &other.terms {
            self.add_term(w.clone(), a.clone() * c.clone());
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &F::one());
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.add_scaled(other, &-F::one());
        out
    }

    pub fn neg(&self) -> Self {
        self.scale(&-F::one())
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.rank);
        }
        ZPolynomial {
            rank: self.rank,
            terms: self.terms.iter().map(|(w, a)| (w.clone(), a.clone() * c.clone())).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Weight, c: &F) -> Self {
        ZPolynomial::from_terms(
            self.rank,
            self.terms
                .iter()
                .map(|(w, a)| (Weight(w.0.iter().zip(&m.0).map(|(x, y)| x + y).collect()), a.clone() * c.clone())),
        )
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = Self::zero(self.rank);
        for (w, a) in &other.terms {
            out.add_scaled(&self.mul_monomial(w, a), &F::one());
        }
        out
    }

    /// ∂/∂z_{i+1}.
    pub fn derivative(&self, i: usize) -> Self {
        Self::from_terms(
            self.rank,
            self.terms.iter().filter(|(w, _)| w.0[i] > 0).map(|(w, c)| {
                let mut e = w.0.clone();
                e[i] -= 1;
                (Weight(e), c.clone() * F::from_int(w.0[i] as i64))
            }),
        )
    }

    /// Applies `∂^α` for a multi-index `alpha`.
    pub fn partial(&self, alpha: &[u32]) -> Self {
        let mut p = self.clone();
        for (i, &k) in alpha.iter().enumerate() {
            for _ in 0..k {
                p = p.derivative(i);
            }
        }
        p
    }

    pub fn eval(&self, point: &[F]) -> Result<F> {
        if point.len() != self.rank {
            return Err(Error::RankMismatch { expected: self.rank, found: point.len() });
        }
        Ok(self.terms.iter().fold(F::zero(), |acc, (w, c)| {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&w.0) {
                for _ in 0..e {
                    t = t * x.clone();
                }
            }
            acc + t
        }))
    }

    pub fn map_coeffs<G: Scalar>(&self, f: impl Fn(&F) -> G) -> ZPolynomial<G> {
        ZPolynomial::from_terms(self.rank, self.terms.iter().map(|(w, c)| (w.clone(), f(c))))
    }

    pub fn try_map_coeffs<G: Scalar>(&self, f: impl Fn(&F) -> Result<G>) -> Result<ZPolynomial<G>> {
        let mut out = ZPolynomial::zero(self.rank);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), f(c)?);
        }
        Ok(out)
    }

    pub fn max_weighted_degree(&self) -> u32 {
        self.terms.keys().map(|w| w.weighted_degree()).max().unwrap_or(0)
    }

    pub fn is_real(&self) -> bool {
        self.terms.values().all(|c| c.is_real())
    }
}

impl<F: Scalar> fmt::Display for ZPolynomial<F> {
    /// Plain text, descending order: `z1^2 - 4/3 z2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for (w, c) in self.terms.iter().rev() {
            let mono =
                w.0.iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| if e == 1 { format!("z{}", i + 1) } else { format!("z{}^{}", i + 1, e) })
                    .collect::<Vec<_>>()
                    .join(" ");
            let (neg, body) = split_sign(&c.to_string());
            let sign = match (first, neg) {
                (true, true) => "-".to_string(),
                (true, false) => String::new(),
                (false, true) => " - ".to_string(),
                (false, false) => " + ".to_string(),
            };
            first = false;
            let term = match (mono.is_empty(), body == "1") {
                (true, _) => body,
                (false, true) => mono,
                (false, false) => format!("{body} {mono}"),
            };
            write!(f, "{sign}{term}")?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{rat, Rational};

    type Z = ZPolynomial<Rational>;

    #[test]
    fn text_form() {
        let p = Z::from_terms(3, [(Weight(vec![2, 0, 0]), rat(1, 1)), (Weight(vec![0, 1, 0]), rat(-4, 3))]);
        assert_eq!(p.to_string(), "z1^2 - 4/3 z2");
        assert_eq!(Z::one(2).to_string(), "1");
    }

    #[test]
    fn derivatives_and_eval() {
        let z1 = Z::var(2, 0);
        let p = z1.mul(&z1).mul(&Z::var(2, 1));
        assert_eq!(p.derivative(0), z1.mul(&Z::var(2, 1)).scale(&rat(2, 1)));
        assert_eq!(p.partial(&[2, 1]), Z::constant(2, rat(2, 1)));
        assert_eq!(p.eval(&[rat(3, 1), rat(1, 2)]).unwrap(), rat(9, 2));
        assert!(p.eval(&[rat(1, 1)]).is_err());
        assert!(p.sub(&p).is_zero());
    }
}
