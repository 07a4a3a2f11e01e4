//! Closed-form spectral data. The `l`-vectors determine both the
//! second-order eigenvalues and the eigenvalue of Δ(t) on each `P_m`.

use std::fmt;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::scalars::{rat, KappaPolynomial, Rational};
use crate::symfun::Weight;
use crate::KappaRational;

type KPoly = KappaPolynomial<Rational>;

/// `A^{-1}_{jk} = min(j,k) - jk/N` (1-based indices).
pub fn inverse_cartan(n_vars: usize, j: usize, k: usize) -> Rational {
    rat(j.min(k) as i64, 1) - rat((j * k) as i64, n_vars as i64)
}

/// Eigenvalue of the normal-ordered `-Δ_2` on `P_m`:
/// `2 Σ A^{-1}_{jk} m_j m_k + 4κ Σ A^{-1}_{jk} m_j`.
pub fn epsilon2(m: &Weight, n_vars: usize) -> KPoly {
    let n = m.rank();
    let mut quad = Rational::zero();
    let mut lin = Rational::zero();
    for j in 1..=n {
        for k in 1..=n {
            let a = inverse_cartan(n_vars, j, k);
            quad += &a * rat((m.0[j - 1] * m.0[k - 1]) as i64, 1);
            lin += a * rat(m.0[j - 1] as i64, 1);
        }
    }
    KPoly::affine(&(quad * rat(2, 1)), &(lin * rat(4, 1)))
}

/// `E_0 = N(N+1)(N-1)κ²/6`.
pub fn ground_energy(n_vars: usize) -> KPoly {
    let n = n_vars as i64;
    KPoly::from_coeffs(vec![Rational::zero(), Rational::zero(), rat(n * (n + 1) * (n - 1), 6)])
}

/// The vector `l_m = 2(λ + κρ)` in N components, each affine in κ.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LVector(pub Vec<KPoly>);

impl LVector {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// 1-based component `l^{(j)}`.
    pub fn component(&self, j: usize) -> &KPoly {
        &self.0[j - 1]
    }

    pub fn sum(&self) -> KPoly {
        self.0.iter().fold(KPoly::zero(), |a, b| a + b.clone())
    }
}

impl fmt::Display for LVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|p| p.to_string()).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// `l^{(j)} = (2/N){Σ_k (N-k)m_k - N Σ_{k<j} m_k + N(N+1-2j)κ/2}`.
pub fn l_vector(m: &Weight, n_vars: usize) -> LVector {
    let n = n_vars as i64;
    let base: i64 = m.0.iter().enumerate().map(|(k, &mk)| (n - k as i64 - 1) * mk as i64).sum();
    let mut prefix = 0i64;
    let mut out = Vec::with_capacity(n_vars);
    for j in 1..=n {
        if j >= 2 {
            prefix += m.0[(j - 2) as usize] as i64;
        }
        let constant = rat(2 * (base - n * prefix), n);
        let slope = rat(n + 1 - 2 * j, 1);
        out.push(KPoly::affine(&constant, &slope));
    }
    LVector(out)
}

/// A shift `sign·(μ_{i_1} + ... + μ_{i_r})` with distinct 1-based indices,
/// where `μ_i = (δ_{k,i} - δ_{k,i-1})_k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ShiftVector {
    raising: bool,
    indices: Vec<usize>,
}

impl ShiftVector {
    pub fn new(raising: bool, mut indices: Vec<usize>, n_vars: usize) -> Result<Self> {
        indices.sort_unstable();
        indices.dedup();
        let r = indices.len();
        if r == 0 || r >= n_vars || indices.iter().any(|&i| i == 0 || i > n_vars) {
            return Err(Error::Unsupported(format!("invalid μ index set {indices:?} for N = {n_vars}")));
        }
        Ok(ShiftVector { raising, indices })
    }

    /// Finds the representation with the fewest μ's, preferring the raising
    /// form on ties, matching the tabulated step operators.
    pub fn from_vector(s: &[i64], n_vars: usize) -> Result<Self> {
        let mut best: Option<ShiftVector> = None;
        for r in 1..n_vars {
            for raising in [true, false] {
                for idx in subsets_1based(n_vars, r) {
                    let cand = ShiftVector { raising, indices: idx };
                    if cand.vector(n_vars) == s && best.is_none() {
                        best = Some(cand);
                    }
                }
            }
        }
        best.ok_or_else(|| Error::Unsupported(format!("{s:?} is not a signed sum of distinct μ's")))
    }

    pub fn is_raising(&self) -> bool {
        self.raising
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn r(&self) -> usize {
        self.indices.len()
    }

    /// The n-component integer shift.
    pub fn vector(&self, n_vars: usize) -> Vec<i64> {
        let sign = if self.raising { 1 } else { -1 };
        let mut v = vec![0i64; n_vars - 1];
        for &i in &self.indices {
            if i < n_vars {
                v[i - 1] += sign;
            }
            if i >= 2 {
                v[i - 2] -= sign;
            }
        }
        v
    }

    pub fn apply(&self, m: &Weight, n_vars: usize) -> Option<Weight> {
        m.shifted(&self.vector(n_vars))
    }
}

pub(crate) fn subsets_1based(n: usize, k: usize) -> Vec<Vec<usize>> {
    crate::integrals::table::subsets(n, k).into_iter().map(|s| s.into_iter().map(|i| i + 1).collect()).collect()
}

/// `l_{m ± Σμ}` via the shift identity `l^{(j)} ∓ 2r/N ± 2δ_{j∈I}`.
pub fn l_shift(m: &Weight, s: &ShiftVector, n_vars: usize) -> Result<LVector> {
    s.apply(m, n_vars).ok_or_else(|| Error::NonDominant(shifted_raw(m, s, n_vars)))?;
    let base = l_vector(m, n_vars);
    let sign = if s.is_raising() { rat(1, 1) } else { rat(-1, 1) };
    let step = rat(2 * s.r() as i64, n_vars as i64);
    let out = base
        .0
        .iter()
        .enumerate()
        .map(|(j, l)| {
            let mut c = -(&sign * &step);
            if s.indices().contains(&(j + 1)) {
                c += &sign * rat(2, 1);
            }
            l.clone() + KPoly::constant(c)
        })
        .collect();
    Ok(LVector(out))
}

fn shifted_raw(m: &Weight, s: &ShiftVector, n_vars: usize) -> Vec<i64> {
    m.0.iter().zip(s.vector(n_vars)).map(|(&a, b)| a as i64 + b).collect()
}

/// Coefficients (ascending in t) of `Π_j (t - l_m^{(j)})`.
pub fn char_eigenvalue(m: &Weight, n_vars: usize) -> Vec<KappaRational> {
    let l = l_vector(m, n_vars);
    let mut poly: Vec<KPoly> = vec![KPoly::one()];
    for lj in &l.0 {
        let mut next = vec![KPoly::zero(); poly.len() + 1];
        for (k, c) in poly.iter().enumerate() {
            next[k + 1] = next[k + 1].clone() + c.clone();
            next[k] = next[k].clone() - c.clone() * lj.clone();
        }
        poly = next;
    }
    poly.into_iter().map(KappaRational::from_poly).collect()
}

/// `e_k(l_m)`, the elementary symmetric functions of the l-vector.
pub fn l_elementary(m: &Weight, n_vars: usize, k: usize) -> KappaRational {
    let coeffs = char_eigenvalue(m, n_vars);
    let c = coeffs[n_vars - k].clone();
    if k.is_multiple_of(2) {
        c
    } else {
        -c
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[u32]) -> Weight {
        Weight(v.to_vec())
    }

    fn aff(a: (i64, i64), b: (i64, i64)) -> KPoly {
        KPoly::affine(&rat(a.0, a.1), &rat(b.0, b.1))
    }

    #[test]
    fn epsilon_examples() {
        assert_eq!(epsilon2(&w(&[1, 0]), 3), aff((4, 3), (4, 1)));
        assert_eq!(epsilon2(&w(&[1, 0, 0]), 4), aff((3, 2), (6, 1)));
        assert!(epsilon2(&w(&[0, 0, 0, 0]), 5).is_zero());
    }

    #[test]
    fn ground_energies() {
        assert_eq!(ground_energy(2).coeff(2), rat(1, 1));
        assert_eq!(ground_energy(3).coeff(2), rat(4, 1));
        assert_eq!(ground_energy(4).coeff(2), rat(10, 1));
    }

    #[test]
    fn l_vectors() {
        let l = l_vector(&w(&[0, 0]), 3);
        assert_eq!(l.0, vec![aff((0, 1), (2, 1)), KPoly::zero(), aff((0, 1), (-2, 1))]);
        let l = l_vector(&w(&[1, 0, 0]), 4);
        assert_eq!(l.0, vec![aff((3, 2), (3, 1)), aff((-1, 2), (1, 1)), aff((-1, 2), (-1, 1)), aff((-1, 2), (-3, 1))]);
        assert!(l_vector(&w(&[3, 1, 2]), 4).sum().is_zero());
    }

    #[test]
    fn shift_vectors() {
        let s = ShiftVector::new(true, vec![2], 3).unwrap();
        assert_eq!(s.vector(3), vec![-1, 1]);
        let s = ShiftVector::new(true, vec![1, 4], 4).unwrap();
        assert_eq!(s.vector(4), vec![1, 0, -1]);
        assert_eq!(ShiftVector::from_vector(&[0, 1, 0], 4).unwrap(), ShiftVector::new(true, vec![1, 2], 4).unwrap());
        assert_eq!(ShiftVector::from_vector(&[0, 1], 3).unwrap(), ShiftVector::new(false, vec![3], 3).unwrap());
        assert!(ShiftVector::new(true, vec![1, 2, 3], 3).is_err());
    }

    #[test]
    fn shift_identity() {
        let up = ShiftVector::new(true, vec![1], 3).unwrap();
        assert_eq!(l_shift(&w(&[0, 0]), &up, 3).unwrap(), l_vector(&w(&[1, 0]), 3));
        let down = ShiftVector::new(false, vec![1], 4).unwrap();
        assert_eq!(l_shift(&w(&[1, 0, 0]), &down, 4).unwrap(), l_vector(&w(&[0, 0, 0]), 4));
        assert!(l_shift(&w(&[0, 0]), &down_n3(), 3).is_err());
    }

    fn down_n3() -> ShiftVector {
        ShiftVector::new(false, vec![1], 3).unwrap()
    }

    #[test]
    fn characteristic_products() {
        let c = char_eigenvalue(&w(&[0, 0]), 3);
        let k2 = KappaRational::from_poly(KPoly::from_coeffs(vec![rat(0, 1), rat(0, 1), rat(-4, 1)]));
        assert_eq!(c, vec![KappaRational::zero(), k2, KappaRational::zero(), KappaRational::one()]);
        // (t² - 9κ²)(t² - κ²) = t⁴ - 10κ² t² + 9κ⁴
        let c = char_eigenvalue(&w(&[0, 0, 0]), 4);
        let kp = |k: usize, v: i64| {
            let mut cs = vec![rat(0, 1); k + 1];
            cs[k] = rat(v, 1);
            KappaRational::from_poly(KPoly::from_coeffs(cs))
        };
        assert_eq!(c[0], kp(4, 9));
        assert_eq!(c[2], kp(2, -10));
        assert!(c[1].is_zero() && c[3].is_zero());
        assert_eq!(l_elementary(&w(&[0, 0, 0]), 4, 2), kp(2, -10));
    }
}
