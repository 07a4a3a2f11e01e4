use std::collections::{BTreeMap, HashMap};
use std::fmt;

use crate::error::{Error, Result};
use crate::scalars::Scalar;

/// Maximum number of x-variables (particles) supported by the packed layout.
pub const MAX_VARS: usize = 8;
const BITS: u32 = 8;

/// Monomial `x_1^{a_1} ... x_N^{a_N}` packed into a `u64`, 8 bits per
/// exponent with `x_1` most significant, so integer order is lex order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct XMono(u64);

impl XMono {
    pub const ONE: XMono = XMono(0);

    fn shift(i: usize) -> u32 {
        BITS * (MAX_VARS as u32 - 1 - i as u32)
    }

    pub fn from_exponents(e: &[u32]) -> Self {
        assert!(e.len() <= MAX_VARS, "at most {MAX_VARS} variables");
        XMono(e.iter().enumerate().fold(0, |acc, (i, &a)| {
            assert!(a < 256, "x-exponent overflow");
            acc | ((a as u64) << Self::shift(i))
        }))
    }

    pub fn var(i: usize) -> Self {
        XMono(1 << Self::shift(i))
    }

    pub fn exponent(self, i: usize) -> u32 {
        ((self.0 >> Self::shift(i)) & 0xff) as u32
    }

    pub fn exponents(self, n: usize) -> Vec<u32> {
        (0..n).map(|i| self.exponent(i)).collect()
    }

    pub fn degree(self) -> u32 {
        (0..MAX_VARS).map(|i| self.exponent(i)).sum()
    }

    pub fn mul(self, other: XMono) -> XMono {
        debug_assert!((0..MAX_VARS).all(|i| self.exponent(i) + other.exponent(i) < 256));
        XMono(self.0 + other.0)
    }

    fn with_exponent(self, i: usize, a: u32) -> XMono {
        let s = Self::shift(i);
        XMono((self.0 & !(0xff << s)) | ((a as u64) << s))
    }

    /// Exchanges the exponents of `x_i` and `x_j`.
    pub fn swap(self, i: usize, j: usize) -> XMono {
        let (a, b) = (self.exponent(i), self.exponent(j));
        self.with_exponent(i, b).with_exponent(j, a)
    }
}

/// Sparse polynomial in `x_1..x_N`.
#[derive(Clone, Debug, PartialEq)]
pub struct XPolynomial<F> {
    n_vars: usize,
    terms: BTreeMap<XMono, F>,
}

impl<F: Scalar> XPolynomial<F> {
    pub fn zero(n_vars: usize) -> Self {
        assert!(n_vars <= MAX_VARS, "at most {MAX_VARS} variables");
        XPolynomial { n_vars, terms: BTreeMap::new() }
    }

    pub fn constant(n_vars: usize, c: F) -> Self {
        Self::monomial(n_vars, XMono::ONE, c)
    }

    pub fn monomial(n_vars: usize, m: XMono, c: F) -> Self {
        let mut p = Self::zero(n_vars);
        p.add_term(m, c);
        p
    }

    /// The variable `x_{i+1}`.
    pub fn var(n_vars: usize, i: usize) -> Self {
        Self::monomial(n_vars, XMono::var(i), F::one())
    }

    /// `x_i - x_j` (0-based).
    pub fn difference(n_vars: usize, i: usize, j: usize) -> Self {
        let mut p = Self::var(n_vars, i);
        p.add_term(XMono::var(j), -F::one());
        p
    }

    pub fn from_terms(n_vars: usize, terms: impl IntoIterator<Item = (XMono, F)>) -> Self {
        let mut p = Self::zero(n_vars);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn n_vars(&self) -> usize {
        self.n_vars
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&XMono, &F)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, m: XMono) -> F {
        self.terms.get(&m).cloned().unwrap_or_else(F::zero)
    }

    pub fn leading(&self) -> Option<(XMono, &F)> {
        self.terms.iter().next_back().map(|(m, c)| (*m, c))
    }

    pub fn add_term(&mut self, m: XMono, c: F) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
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
        for (m, a) in &other.terms {
            self.add_term(*m, a.clone() * c.clone());
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

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero(self.n_vars);
        }
        XPolynomial {
            n_vars: self.n_vars,
            terms: self.terms.iter().map(|(m, a)| (*m, a.clone() * c.clone())).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut acc: HashMap<XMono, F> = HashMap::with_capacity(self.len() * other.len());
        for (ma, a) in &self.terms {
            for (mb, b) in &other.terms {
                let e = acc.entry(ma.mul(*mb)).or_insert_with(F::zero);
                *e = std::mem::replace(e, F::zero()) + a.clone() * b.clone();
            }
        }
        XPolynomial { n_vars: self.n_vars, terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect() }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::constant(self.n_vars, F::one()), |acc, _| acc.mul(self))
    }

    pub fn map_terms(&self, f: impl Fn(XMono, &F) -> F) -> Self {
        Self::from_terms(self.n_vars, self.terms.iter().map(|(m, c)| (*m, f(*m, c))))
    }

    pub fn map_coeffs<G: Scalar>(&self, f: impl Fn(&F) -> G) -> XPolynomial<G> {
        XPolynomial::from_terms(self.n_vars, self.terms.iter().map(|(m, c)| (*m, f(c))))
    }

    /// Exchanges `x_i` and `x_j`.
    pub fn swap_vars(&self, i: usize, j: usize) -> Self {
        XPolynomial { n_vars: self.n_vars, terms: self.terms.iter().map(|(m, c)| (m.swap(i, j), c.clone())).collect() }
    }

    /// `Err((i, j))` naming an adjacent transposition that changes `self`.
    pub fn check_symmetric(&self) -> std::result::Result<(), (usize, usize)> {
        for i in 0..self.n_vars.saturating_sub(1) {
            if self.swap_vars(i, i + 1) != *self {
                return Err((i, i + 1));
            }
        }
        Ok(())
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(|m| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Homogeneous components keyed by total degree.
    pub fn homogeneous_parts(&self) -> BTreeMap<u32, Self> {
        let mut out: BTreeMap<u32, Self> = BTreeMap::new();
        for (m, c) in &self.terms {
            out.entry(m.degree()).or_insert_with(|| Self::zero(self.n_vars)).terms.insert(*m, c.clone());
        }
        out
    }

    /// Exact quotient by `x_a - x_b`; fails with a nonzero remainder.
    pub fn divide_by_difference(&self, a: usize, b: usize) -> Result<Self> {
        let (q, r) = self.div_rem_difference(a, b);
        if r.is_empty() {
            Ok(q)
        } else {
            Err(Error::NonPolynomial)
        }
    }

    /// Division by `x_a - x_b` as a polynomial in `x_a`; the remainder is
    /// `self` with `x_a := x_b`.
    pub fn div_rem_difference(&self, a: usize, b: usize) -> (Self, Self) {
        let max = self.terms.keys().map(|m| m.exponent(a)).max().unwrap_or(0) as usize;
        let mut buckets: Vec<HashMap<XMono, F>> = vec![HashMap::new(); max + 1];
        for (m, c) in &self.terms {
            let e = m.exponent(a);
            buckets[e as usize].insert(m.with_exponent(a, 0), c.clone());
        }
        let xb = XMono::var(b);
        let mut q = Self::zero(self.n_vars);
        for e in (1..=max).rev() {
            let bucket = std::mem::take(&mut buckets[e]);
            for (rest, c) in bucket {
                if c.is_zero() {
                    continue;
                }
                q.add_term(rest.with_exponent(a, e as u32 - 1), c.clone());
                let next = buckets[e - 1].entry(rest.mul(xb)).or_insert_with(F::zero);
                *next = std::mem::replace(next, F::zero()) + c;
            }
        }
        let r = Self::from_terms(self.n_vars, std::mem::take(&mut buckets[0]));
        (q, r)
    }

    /// Exact quotient by `x_a`.
    pub fn divide_by_var(&self, a: usize) -> Result<Self> {
        if self.terms.keys().any(|m| m.exponent(a) == 0) {
            return Err(Error::NonPolynomial);
        }
        Ok(XPolynomial {
            n_vars: self.n_vars,
            terms: self.terms.iter().map(|(m, c)| (m.with_exponent(a, m.exponent(a) - 1), c.clone())).collect(),
        })
    }

    pub fn eval(&self, point: &[F]) -> F {
        self.terms.iter().fold(F::zero(), |acc, (m, c)| {
            let mut t = c.clone();
            for (i, x) in point.iter().enumerate() {
                for _ in 0..m.exponent(i) {
                    t = t * x.clone();
                }
            }
            acc + t
        })
    }
}

impl<F: Scalar> fmt::Display for XPolynomial<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .rev()
            .map(|(m, c)| {
                let mono: Vec<String> = (0..self.n_vars)
                    .filter(|&i| m.exponent(i) > 0)
                    .map(|i| match m.exponent(i) {
                        1 => format!("x{}", i + 1),
                        e => format!("x{}^{}", i + 1, e),
                    })
                    .collect();
                if mono.is_empty() {
                    format!("({c})")
                } else {
                    format!("({c}) {}", mono.join(" "))
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{rat, Rational};

    type X = XPolynomial<Rational>;

    #[test]
    fn packed_order_is_lex() {
        let a = XMono::from_exponents(&[1, 0, 0]);
        let b = XMono::from_exponents(&[0, 5, 5]);
        assert!(a > b);
        assert_eq!(a.mul(b).exponents(3), vec![1, 5, 5]);
        assert_eq!(b.swap(0, 2).exponents(3), vec![5, 5, 0]);
    }

    #[test]
    fn divide_difference_of_squares() {
        let f = X::var(2, 0).pow(2).sub(&X::var(2, 1).pow(2));
        let q = f.divide_by_difference(0, 1).unwrap();
        assert_eq!(q, X::var(2, 0).add(&X::var(2, 1)));
        let g = X::var(2, 0).mul(&X::var(2, 1));
        assert!(matches!(g.divide_by_difference(0, 1), Err(Error::NonPolynomial)));
    }

    #[test]
    fn division_round_trip() {
        let f = X::var(3, 0).add(&X::var(3, 2).scale(&rat(3, 2))).pow(3).add(&X::var(3, 1));
        let d = X::difference(3, 1, 2);
        let (q, r) = f.div_rem_difference(1, 2);
        assert_eq!(q.mul(&d).add(&r), f);
        assert!(r.terms().all(|(m, _)| m.exponent(1) == 0));
    }

    #[test]
    fn symmetry_check_names_transposition() {
        let f = X::var(3, 0).add(&X::var(3, 1));
        assert_eq!(f.check_symmetric(), Err((1, 2)));
        assert!(f.add(&X::var(3, 2)).check_symmetric().is_ok());
    }
}
