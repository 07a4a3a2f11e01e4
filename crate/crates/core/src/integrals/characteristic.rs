//! The shifted characteristic operator `Δ(t) = t^N + Σ_{j≥2} (-1)^j O_j t^{N-j}`
//! with `O_j = scale_j · apply_integral(j) + offset_j`, calibrated so that
//! `Δ(t) P_m = Π_j (t - l_m^{(j)}) P_m`.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::{One, Zero};

use super::engine::apply_integral;
use super::table::MAX_ORDER;
use crate::error::{Error, Result};
use crate::gegenbauer::{gen_eigen, l_elementary};
use crate::scalars::{Rational, Scalar};
use crate::symfun::{Weight, ZPolynomial};
use crate::KappaRational;

type K = KappaRational;

/// Affine normalization of one integral: `O_j = scale · apply_integral(j) + offset`.
#[derive(Clone, Debug, PartialEq)]
pub struct OrderCalibration {
    pub order: usize,
    pub scale: Rational,
    pub offset: K,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Calibration {
    pub n_vars: usize,
    pub orders: Vec<OrderCalibration>,
}

impl Calibration {
    pub fn get(&self, order: usize) -> Option<&OrderCalibration> {
        self.orders.iter().find(|o| o.order == order)
    }
}

/// The eigenvalue of `apply_integral(j)` on a known eigenvector, checked for
/// exact proportionality.
pub fn integral_eigenvalue(order: usize, p: &ZPolynomial<K>, n_vars: usize) -> Result<K> {
    let image = apply_integral(order, p, n_vars, &K::kappa())?;
    proportionality(&image, p)
}

/// `c` with `image = c · p`, or an error naming the first disagreeing term.
pub fn proportionality(image: &ZPolynomial<K>, p: &ZPolynomial<K>) -> Result<K> {
    let (w, lead) = p.leading().ok_or_else(|| Error::NotProportional("zero polynomial".into()))?;
    let c = image.coeff(w).checked_div(lead)?;
    if image != &p.scale(&c) {
        return Err(Error::NotProportional(format!("image is not a multiple of the input at {w}")));
    }
    Ok(c)
}

fn calibration_weights(n_vars: usize) -> [Weight; 4] {
    let rank = n_vars - 1;
    let first = Weight::unit(rank, 0);
    let last = Weight::unit(rank, rank - 1);
    let both = Weight(first.0.iter().zip(&last.0).map(|(a, b)| a + b).collect());
    [Weight::zero(rank), first, last, both]
}

/// Fixes `(scale_j, offset_j)` from `P_0` and `P_{ω_1}`, then checks the
/// result on `P_{ω_n}` and `P_{ω_1 + ω_n}`.
pub fn calibrate(n_vars: usize) -> Result<Arc<Calibration>> {
    static CACHE: OnceLock<Mutex<HashMap<usize, Arc<Calibration>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(c) = cache.lock().expect("calibration cache").get(&n_vars) {
        return Ok(c.clone());
    }
    if !(2..=MAX_ORDER).contains(&n_vars) {
        return Err(Error::Unsupported(format!("characteristic operator for N = {n_vars}")));
    }
    let weights = calibration_weights(n_vars);
    let polys = weights.iter().map(|w| gen_eigen(w, n_vars)).collect::<Result<Vec<_>>>()?;
    let mut orders = Vec::new();
    for j in 2..=n_vars {
        let target = |i: usize| l_elementary(&weights[i], n_vars, j);
        let raw = |i: usize| integral_eigenvalue(j, &polys[i], n_vars);
        let offset = target(0) - raw(0)?;
        let mut scale = None;
        for i in [1, 2] {
            let r = raw(i)?;
            if !r.is_zero() {
                scale = Some((target(i) - offset.clone()).checked_div(&r)?);
                break;
            }
        }
        let scale = scale
            .and_then(|s| s.as_constant())
            .filter(|s| !s.is_zero())
            .ok_or_else(|| Error::ConventionMismatch(format!("no constant scale fits order {j}")))?;
        for i in 2..4 {
            if K::constant(scale.clone()) * raw(i)? + offset.clone() != target(i) {
                return Err(Error::ConventionMismatch(format!("order {j} calibration fails on P_{}", weights[i])));
            }
        }
        orders.push(OrderCalibration { order: j, scale, offset });
    }
    let c = Arc::new(Calibration { n_vars, orders });
    cache.lock().expect("calibration cache").insert(n_vars, c.clone());
    Ok(c)
}

/// `O_j p`.
pub fn calibrated_integral(order: usize, p: &ZPolynomial<K>, n_vars: usize) -> Result<ZPolynomial<K>> {
    let cal = calibrate(n_vars)?;
    let o = cal.get(order).ok_or_else(|| Error::Unsupported(format!("order {order} for N = {n_vars}")))?;
    let raw = apply_integral(order, p, n_vars, &K::kappa())?;
    Ok(raw.scale(&K::constant(o.scale.clone())).add(&p.scale(&o.offset)))
}

/// `Δ(t) p` with symbolic t: entry `k` is the coefficient of `t^k`.
pub fn char_apply(p: &ZPolynomial<K>, n_vars: usize) -> Result<Vec<ZPolynomial<K>>> {
    let mut out = vec![ZPolynomial::zero(p.rank()); n_vars + 1];
    out[n_vars] = p.clone();
    for j in 2..=n_vars {
        let o = calibrated_integral(j, p, n_vars)?;
        out[n_vars - j] = if j % 2 == 0 { o } else { o.neg() };
    }
    Ok(out)
}

/// `Δ(t) p` at a given value of t.
pub fn char_apply_at(t: &K, p: &ZPolynomial<K>, n_vars: usize) -> Result<ZPolynomial<K>> {
    let coeffs = char_apply(p, n_vars)?;
    Ok(coeffs.iter().rev().fold(ZPolynomial::zero(p.rank()), |acc, c| acc.scale(t).add(c)))
}

/// Exact commutator check on every z-monomial of weighted degree ≤ `max_degree`.
#[derive(Clone, Debug, PartialEq)]
pub struct CommutatorReport {
    pub orders: (usize, usize),
    pub n_vars: usize,
    pub checked: usize,
    pub failures: Vec<Weight>,
}

impl CommutatorReport {
    pub fn is_zero(&self) -> bool {
        self.failures.is_empty()
    }
}

pub fn commutator_residual(j: usize, k: usize, n_vars: usize, max_degree: u32) -> Result<CommutatorReport> {
    let kappa = K::kappa();
    let mut failures = Vec::new();
    let monomials = Weight::all_up_to_weighted(n_vars - 1, max_degree);
    for w in &monomials {
        let p = ZPolynomial::monomial(w.clone(), K::one());
        let jk = apply_integral(j, &apply_integral(k, &p, n_vars, &kappa)?, n_vars, &kappa)?;
        let kj = apply_integral(k, &apply_integral(j, &p, n_vars, &kappa)?, n_vars, &kappa)?;
        if jk != kj {
            failures.push(w.clone());
        }
    }
    Ok(CommutatorReport { orders: (j, k), n_vars, checked: monomials.len(), failures })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gegenbauer::char_eigenvalue;
    use crate::scalars::{rat, KappaPolynomial};

    fn kpoly(c: &[i64]) -> K {
        K::from_poly(KappaPolynomial::from_coeffs(c.iter().map(|&x| rat(x, 1)).collect()))
    }

    #[test]
    fn calibration_values() {
        let c = calibrate(3).unwrap();
        assert_eq!(c.get(2).unwrap().scale, rat(-1, 1));
        assert_eq!(c.get(2).unwrap().offset, kpoly(&[0, 0, -4]));
        assert!(c.get(3).unwrap().offset.is_zero());
        let c = calibrate(4).unwrap();
        assert_eq!(c.get(2).unwrap().offset, kpoly(&[0, 0, -10]));
    }

    #[test]
    fn vacuum_and_first_level() {
        let one = ZPolynomial::<K>::one(2);
        let got = char_apply(&one, 3).unwrap();
        let expected: Vec<_> = char_eigenvalue(&Weight::zero(2), 3).into_iter().map(|c| one.scale(&c)).collect();
        assert_eq!(got, expected);
        let z1 = ZPolynomial::<K>::var(2, 0);
        let t = K::affine(&rat(-2, 3), &rat(2, 1));
        assert_eq!(char_apply_at(&t, &z1, 3).unwrap(), z1.scale(&kpoly(&[0, 0, -16])));
    }

    #[test]
    fn commutators_vanish() {
        assert!(commutator_residual(2, 3, 3, 4).unwrap().is_zero());
        assert!(commutator_residual(2, 4, 4, 3).unwrap().is_zero());
        assert!(commutator_residual(2, 2, 3, 2).unwrap().is_zero());
    }
}
