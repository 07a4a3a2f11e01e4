//! Raising and lowering operators built from shifted characteristic
//! operators acting on `z_r P_m`. The tabulated proportionality factors σ
//! live here too.

use num_traits::Zero;

use super::eigen::gen_eigen;
use super::recurrence::{coeff_a, coeff_c, coeff_d, coeff_f, coeff_g, Z2Reading};
use super::spectrum::{l_vector, subsets_1based, ShiftVector};
use crate::error::{Error, Result};
use crate::integrals::{char_apply_at, proportionality};
use crate::scalars::{rat, KappaPolynomial, Rational};
use crate::symfun::{Weight, ZPolynomial};
use crate::KappaRational;

type K = KappaRational;

/// Height `Σ_k k(N-k) ν_k`, strictly monotone along the dominance order.
fn height(w: &Weight, n_vars: usize) -> u64 {
    w.0.iter().enumerate().map(|(k, &e)| ((k + 1) * (n_vars - k - 1)) as u64 * e as u64).sum()
}

/// Decomposes `p` in the `P` basis, highest weights first.
pub fn decompose(p: &ZPolynomial<K>, n_vars: usize) -> Result<Vec<(Weight, K)>> {
    let mut rest = p.clone();
    let mut out = Vec::new();
    while let Some(top) = rest.support().max_by_key(|w| height(w, n_vars)).cloned() {
        let c = rest.coeff(&top);
        rest = rest.sub(&gen_eigen(&top, n_vars)?.scale(&c));
        if rest.coeff(&top) != K::zero() {
            return Err(Error::Internal(format!("decomposition did not clear {top}")));
        }
        out.push((top, c));
    }
    Ok(out)
}

/// `z_r P_m = Σ_I a_I P_{m+μ_I}` over all r-subsets I (raising), or
/// `z_{N-r} P_m = Σ_I b_I P_{m-μ_I}` (lowering). Subsets whose target is
/// absent carry coefficient 0.
pub fn expand_product(r: usize, raising: bool, m: &Weight, n_vars: usize) -> Result<Vec<(ShiftVector, K)>> {
    if r == 0 || r >= n_vars {
        return Err(Error::Unsupported(format!("z_{r} expansion for N = {n_vars}")));
    }
    let z_index = if raising { r } else { n_vars - r };
    let product = gen_eigen(m, n_vars)?.mul(&ZPolynomial::var(n_vars - 1, z_index - 1));
    let parts = decompose(&product, n_vars)?;
    let shifts: Vec<ShiftVector> = subsets_1based(n_vars, r)
        .into_iter()
        .map(|idx| ShiftVector::new(raising, idx, n_vars))
        .collect::<Result<_>>()?;
    for (w, _) in &parts {
        if !shifts.iter().any(|s| s.apply(m, n_vars).as_ref() == Some(w)) {
            return Err(Error::Internal(format!("z_{z_index} P_{m} has a component outside the μ-sums: {w}")));
        }
    }
    Ok(shifts
        .into_iter()
        .map(|s| {
            let target = s.apply(m, n_vars);
            let c = parts.iter().find(|(w, _)| Some(w) == target.as_ref()).map(|(_, c)| c.clone());
            (s, c.unwrap_or_else(K::zero))
        })
        .collect())
}

/// Applies `Π_{i∈I} Δ(l_m^{(i)} ∓ 2r/N)` to `z_r P_m` (raising) or
/// `z_{N-r} P_m` (lowering). Returns the image and σ with
/// `image = σ P_{m+s}`; both are zero when `m+s` is not dominant.
pub fn step(m: &Weight, s: &ShiftVector, n_vars: usize) -> Result<(ZPolynomial<K>, K)> {
    let rank = n_vars - 1;
    let r = s.r();
    let z_index = if s.is_raising() { r } else { n_vars - r };
    let l = l_vector(m, n_vars);
    let shift = rat(2 * r as i64, n_vars as i64);
    let shift = if s.is_raising() { -shift } else { shift };
    let mut q = gen_eigen(m, n_vars)?.mul(&ZPolynomial::var(rank, z_index - 1));
    for &i in s.indices() {
        let t = K::from_poly(l.component(i).clone() + KappaPolynomial::constant(shift.clone()));
        q = char_apply_at(&t, &q, n_vars)?;
    }
    match s.apply(m, n_vars) {
        None if q.is_zero() => Ok((q, K::zero())),
        None => Err(Error::NotProportional(format!("step {s:?} from {m} leaves a nonzero image"))),
        Some(target) => {
            let p = gen_eigen(&target, n_vars)?;
            let sigma = proportionality(&q, &p)?;
            Ok((q, sigma))
        }
    }
}

fn lin(c: i64, k: i64) -> KappaPolynomial<Rational> {
    KappaPolynomial::affine(&rat(c, 1), &rat(k, 1))
}

fn prod(scale: i64, f: &[(i64, i64)]) -> K {
    K::from_poly(f.iter().fold(KappaPolynomial::constant(rat(scale, 1)), |acc, &(c, k)| acc * lin(c, k)))
}

/// `h_{m,n}(κ) = 2³(m+n+2κ)(m+κ)`.
pub fn sigma_h(m: i64, n: i64) -> K {
    prod(8, &[(m + n, 2), (m, 1)])
}

/// `k_{m,n}(κ) = 2³(m+κ)(n+κ)`.
pub fn sigma_k(m: i64, n: i64) -> K {
    prod(8, &[(m, 1), (n, 1)])
}

pub fn sigma_q(m: i64, l: i64, n: i64) -> K {
    prod(16, &[(m, 1), (m + l, 2), (m + l + n, 3)])
}

pub fn sigma_r(m: i64, l: i64, n: i64) -> K {
    prod(16, &[(m, 1), (l, 1), (l + n, 2)])
}

pub fn sigma_p(m: i64, l: i64, n: i64) -> K {
    prod(256, &[(l, 1), (m + 1, 1), (m - 1, 1), (m + l, 2), (l + n, 2), (m + l + n, 3)])
}

pub fn sigma_t(m: i64, l: i64, n: i64) -> K {
    prod(256, &[(m, 1), (l, 1), (n, 1), (l + m + 1, 2), (m + l - 1, 2), (m + l + n, 3)])
}

pub fn sigma_w(m: i64, l: i64, n: i64) -> K {
    prod(256, &[(m, 1), (n, 1), (m + l, 2), (l + n, 2), (m + l + n + 1, 3), (m + l + n - 1, 3)])
}

pub fn sigma_x(m: i64, l: i64, n: i64) -> K {
    prod(256, &[(m, 1), (n, 1), (l + 1, 1), (l - 1, 1), (m + l, 2), (l + n, 2)])
}

/// The tabulated shifts: 6 for A_2 and 14 for A_3, in table order.
pub fn tabulated_shifts(n_vars: usize) -> Vec<ShiftVector> {
    let mk = |raising, idx: &[usize]| ShiftVector::new(raising, idx.to_vec(), n_vars).expect("valid table entry");
    match n_vars {
        3 => vec![mk(true, &[1]), mk(true, &[2]), mk(true, &[3]), mk(false, &[1]), mk(false, &[2]), mk(false, &[3])],
        4 => vec![
            mk(true, &[1]),
            mk(true, &[2]),
            mk(true, &[3]),
            mk(true, &[4]),
            mk(false, &[4]),
            mk(false, &[3]),
            mk(false, &[2]),
            mk(false, &[1]),
            mk(true, &[1, 2]),
            mk(true, &[1, 3]),
            mk(true, &[1, 4]),
            mk(true, &[2, 3]),
            mk(true, &[2, 4]),
            mk(true, &[3, 4]),
        ],
        _ => Vec::new(),
    }
}

/// Evaluation of the printed σ tables. With [`Z2Reading::Printed`] the
/// tables are taken literally. [`Z2Reading::Corrected`] exchanges `a_{l,m}`
/// and `a_{l,n}` in the `S_{1,0,-1}` and `S_{-1,0,1}` rows, the same exchange
/// the `z_2` recurrence row needs; those factors are the expansion
/// coefficients of the respective targets in `z_2 P_m`.
pub fn sigma_closed_form(m: &Weight, s: &ShiftVector, n_vars: usize, reading: Z2Reading) -> Result<K> {
    let v = m.signed();
    let swap = reading == Z2Reading::Corrected;
    let key = (s.is_raising(), s.indices());
    let out = match (v.as_slice(), key) {
        (&[m, n], (true, [1])) => -sigma_h(m, n),
        (&[m, n], (true, [2])) => sigma_k(m, n) * coeff_c(m),
        (&[m, n], (true, [3])) => -(sigma_h(n, m) * coeff_a(m, n)),
        (&[m, n], (false, [1])) => sigma_h(m, n) * coeff_a(n, m),
        (&[m, n], (false, [2])) => -(sigma_k(m, n) * coeff_c(n)),
        (&[m, n], (false, [3])) => sigma_h(n, m),
        (&[m, l, n], (true, [1])) => -sigma_q(m, l, n),
        (&[m, l, n], (true, [2])) => sigma_r(m, l, n) * coeff_c(m),
        (&[m, l, n], (true, [3])) => -(sigma_r(n, l, m) * coeff_a(m, l)),
        (&[m, l, n], (true, [4])) => sigma_q(n, l, m) * coeff_d(m, l, n),
        (&[m, l, n], (false, [4])) => -sigma_q(n, l, m),
        (&[m, l, n], (false, [3])) => sigma_r(n, l, m) * coeff_c(n),
        (&[m, l, n], (false, [2])) => -(sigma_r(m, l, n) * coeff_a(n, l)),
        (&[m, l, n], (false, [1])) => sigma_q(m, l, n) * coeff_d(n, l, m),
        (&[m, l, n], (true, [1, 2])) => -sigma_p(m, l, n),
        (&[m, l, n], (true, [1, 3])) => sigma_t(m, l, n) * coeff_c(l),
        (&[m, l, n], (true, [1, 4])) => -(sigma_w(m, l, n) * coeff_a(l, if swap { n } else { m })),
        (&[m, l, n], (true, [2, 3])) => -(sigma_x(m, l, n) * coeff_a(l, if swap { m } else { n })),
        (&[m, l, n], (true, [2, 4])) => sigma_t(n, l, m) * coeff_f(m, l, n),
        (&[m, l, n], (true, [3, 4])) => -(sigma_p(n, l, m) * coeff_g(m, l, n)),
        _ => return Err(Error::Unsupported(format!("shift {:?} is not tabulated for N = {n_vars}", s.vector(n_vars)))),
    };
    if v.len() + 1 != n_vars {
        return Err(Error::RankMismatch { expected: n_vars - 1, found: v.len() });
    }
    Ok(out)
}
