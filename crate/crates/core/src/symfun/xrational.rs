use super::XPolynomial;
use crate::error::{Error, Result};
use crate::scalars::Scalar;

/// Index of the unordered pair `(i, j)`, `i < j`, among the `N(N-1)/2` pairs.
pub fn pair_index(n_vars: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n_vars);
    i * (2 * n_vars - i - 1) / 2 + (j - i - 1)
}

/// All pairs `(i, j)` with `i < j`, in [`pair_index`] order.
pub fn pairs(n_vars: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n_vars).flat_map(move |i| (i + 1..n_vars).map(move |j| (i, j)))
}

/// `num / (Π_{i<j} (x_i - x_j)^{den_pairs} · Π x_i^{den_mono})`.
///
/// Denominators only ever contain pairwise differences and single
/// variables; reduction is lazy and happens in [`XRational::reduce`] or
/// [`XRational::divide_exact`].
#[derive(Clone, Debug, PartialEq)]
pub struct XRational<F> {
    num: XPolynomial<F>,
    den_pairs: Vec<u32>,
    den_mono: Vec<u32>,
}

impl<F: Scalar> XRational<F> {
    pub fn new(num: XPolynomial<F>, den_pairs: Vec<u32>, den_mono: Vec<u32>) -> Self {
        let n = num.n_vars();
        assert_eq!(den_pairs.len(), n * n.saturating_sub(1) / 2);
        assert_eq!(den_mono.len(), n);
        XRational { num, den_pairs, den_mono }
    }

    pub fn from_poly(num: XPolynomial<F>) -> Self {
        let n = num.n_vars();
        Self::new(num, vec![0; n * n.saturating_sub(1) / 2], vec![0; n])
    }

    /// `num / (x_i - x_j)^k` for any `i != j`, sign-adjusted to the `i < j` factor.
    pub fn over_difference(num: XPolynomial<F>, i: usize, j: usize, k: u32) -> Self {
        let n = num.n_vars();
        let (a, b) = if i < j { (i, j) } else { (j, i) };
        let num = if i > j && k % 2 == 1 { num.scale(&-F::one()) } else { num };
        let mut r = Self::from_poly(num);
        r.den_pairs[pair_index(n, a, b)] = k;
        r
    }

    pub fn n_vars(&self) -> usize {
        self.num.n_vars()
    }

    pub fn numerator(&self) -> &XPolynomial<F> {
        &self.num
    }

    pub fn pair_exponents(&self) -> &[u32] {
        &self.den_pairs
    }

    pub fn mono_exponents(&self) -> &[u32] {
        &self.den_mono
    }

    pub fn is_polynomial(&self) -> bool {
        self.den_pairs.iter().chain(&self.den_mono).all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Self) -> Self {
        XRational {
            num: self.num.mul(&other.num),
            den_pairs: self.den_pairs.iter().zip(&other.den_pairs).map(|(a, b)| a + b).collect(),
            den_mono: self.den_mono.iter().zip(&other.den_mono).map(|(a, b)| a + b).collect(),
        }
    }

    pub fn mul_poly(&self, p: &XPolynomial<F>) -> Self {
        XRational { num: self.num.mul(p), ..self.clone() }
    }

    pub fn scale(&self, c: &F) -> Self {
        XRational { num: self.num.scale(c), ..self.clone() }
    }

    /// Rewrites over the larger denominator `(pairs, mono)` (componentwise ≥ own).
    fn numerator_over(&self, pairs_to: &[u32], mono_to: &[u32]) -> XPolynomial<F> {
        let n = self.n_vars();
        let mut num = self.num.clone();
        for (idx, (i, j)) in pairs(n).enumerate() {
            let extra = pairs_to[idx] - self.den_pairs[idx];
            if extra > 0 {
                num = num.mul(&XPolynomial::difference(n, i, j).pow(extra));
            }
        }
        for i in 0..n {
            let extra = mono_to[i] - self.den_mono[i];
            if extra > 0 {
                num = num.mul(&XPolynomial::var(n, i).pow(extra));
            }
        }
        num
    }

    /// Sum over the least common denominator.
    pub fn add(&self, other: &Self) -> Self {
        let pairs_to: Vec<u32> = self.den_pairs.iter().zip(&other.den_pairs).map(|(a, b)| *a.max(b)).collect();
        let mono_to: Vec<u32> = self.den_mono.iter().zip(&other.den_mono).map(|(a, b)| *a.max(b)).collect();
        let num = self.numerator_over(&pairs_to, &mono_to).add(&other.numerator_over(&pairs_to, &mono_to));
        XRational { num, den_pairs: pairs_to, den_mono: mono_to }
    }

    /// Sums many fractions over their common denominator in one pass.
    pub fn sum(n_vars: usize, items: &[Self]) -> Self {
        let np = n_vars * n_vars.saturating_sub(1) / 2;
        let mut pairs_to = vec![0; np];
        let mut mono_to = vec![0; n_vars];
        for it in items {
            for (a, b) in pairs_to.iter_mut().zip(&it.den_pairs) {
                *a = (*a).max(*b);
            }
            for (a, b) in mono_to.iter_mut().zip(&it.den_mono) {
                *a = (*a).max(*b);
            }
        }
        let mut num = XPolynomial::zero(n_vars);
        for it in items {
            num.add_scaled(&it.numerator_over(&pairs_to, &mono_to), &F::one());
        }
        XRational { num, den_pairs: pairs_to, den_mono: mono_to }
    }

    /// Cancels every denominator factor that divides the numerator.
    pub fn reduce(&mut self) {
        let n = self.n_vars();
        if self.num.is_empty() {
            self.den_pairs.iter_mut().for_each(|e| *e = 0);
            self.den_mono.iter_mut().for_each(|e| *e = 0);
            return;
        }
        for (idx, (i, j)) in pairs(n).enumerate() {
            while self.den_pairs[idx] > 0 {
                match self.num.divide_by_difference(i, j) {
                    Ok(q) => {
                        self.num = q;
                        self.den_pairs[idx] -= 1;
                    }
                    Err(_) => break,
                }
            }
        }
        for i in 0..n {
            while self.den_mono[i] > 0 {
                match self.num.divide_by_var(i) {
                    Ok(q) => {
                        self.num = q;
                        self.den_mono[i] -= 1;
                    }
                    Err(_) => break,
                }
            }
        }
    }

    /// The polynomial quotient; errors if any denominator factor survives.
    pub fn divide_exact(&self) -> Result<XPolynomial<F>> {
        let mut r = self.clone();
        r.reduce();
        if r.is_polynomial() {
            Ok(r.num)
        } else {
            Err(Error::NonPolynomial)
        }
    }

    /// Evaluation at a point where no denominator factor vanishes.
    pub fn eval(&self, point: &[F]) -> Result<F> {
        let n = self.n_vars();
        let mut den = F::one();
        for (idx, (i, j)) in pairs(n).enumerate() {
            for _ in 0..self.den_pairs[idx] {
                den = den * (point[i].clone() - point[j].clone());
            }
        }
        for i in 0..n {
            for _ in 0..self.den_mono[i] {
                den = den * point[i].clone();
            }
        }
        self.num.eval(point).checked_div(&den)
    }
}
