//! x-space realization of the integrals `Δ_j^κ`.
//!
//! Functions of the baricentric coordinates are represented by symmetric
//! polynomials in `x_j = e^{2iq_j}`. On a homogeneous component of degree
//! `d`, `-i ∂/∂q_j` acts as `2(x_j ∂_{x_j} - d/N)`; the Euler part without
//! the factor 2 is [`apply_momentum`].

use std::collections::{BTreeMap, HashMap};
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::One;

use super::table::{Factor, IntegralOperator};
use crate::error::{Error, Result};
use crate::scalars::{GaussRational, Rational, Scalar};
use crate::symfun::{lift, pair_index, project, Weight, XPolynomial, XRational, ZPolynomial};

/// Baricentric Euler operator `E_j = x_j ∂_{x_j} - d/N` on each homogeneous
/// component of degree `d` (0-based `j`).
pub fn apply_momentum<F: Scalar>(f: &XPolynomial<F>, j: usize) -> XPolynomial<F> {
    let n = f.n_vars() as i64;
    f.map_terms(|m, c| {
        let shift = Rational::new((n * m.exponent(j) as i64 - m.degree() as i64).into(), n.into());
        c.clone() * F::from_rational(&shift)
    })
}

/// `B_j = Σ_{k≠j} (x_j + x_k)/(x_j - x_k)`, the real form of the gauge
/// potential (`A_j = i·B_j`).
pub fn gauge_potential<F: Scalar>(n_vars: usize, j: usize) -> XRational<F> {
    let parts: Vec<XRational<F>> = (0..n_vars)
        .filter(|&k| k != j)
        .map(|k| {
            let num = XPolynomial::var(n_vars, j).add(&XPolynomial::var(n_vars, k));
            XRational::over_difference(num, j, k, 1)
        })
        .collect();
    XRational::sum(n_vars, &parts)
}

/// Multiplies by `A_j = i·B_j`.
pub fn apply_gauge_potential(f: &XRational<GaussRational>, j: usize) -> XRational<GaussRational> {
    f.mul(&gauge_potential(f.n_vars(), j)).scale(&GaussRational::i())
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
struct GroupKey {
    kappa_power: u32,
    momenta: Vec<usize>,
    den: Vec<u32>,
}

/// A term table with coefficient functions expanded into pair fractions and
/// grouped by (κ-power, derivative set, denominator).
#[derive(Debug)]
pub struct CompiledTable {
    n_vars: usize,
    order: usize,
    groups: Vec<(GroupKey, XPolynomial<Rational>)>,
}

impl CompiledTable {
    pub fn new(op: &IntegralOperator) -> Result<Self> {
        let n = op.n_vars;
        let npairs = n * (n - 1) / 2;
        let mut groups: BTreeMap<GroupKey, XPolynomial<Rational>> = BTreeMap::new();
        for term in &op.terms {
            let coeff = term.x_coefficient()?;
            // expand Π(coefficient functions) into a sum of pair-fraction products
            let mut expansion: Vec<(XPolynomial<Rational>, Vec<u32>)> =
                vec![(XPolynomial::constant(n, coeff), vec![0; npairs])];
            for f in &term.factors {
                let options: Vec<(XPolynomial<Rational>, usize, u32)> = match *f {
                    Factor::Momentum(_) => continue,
                    Factor::Pair(a, b) => {
                        let num = XPolynomial::var(n, a).mul(&XPolynomial::var(n, b));
                        vec![(num, pair_index(n, a.min(b), a.max(b)), 2)]
                    }
                    Factor::Gauge(a) => (0..n)
                        .filter(|&k| k != a)
                        .map(|k| {
                            let num = XPolynomial::var(n, a).add(&XPolynomial::var(n, k));
                            let num = if a < k { num } else { num.scale(&-Rational::one()) };
                            (num, pair_index(n, a.min(k), a.max(k)), 1)
                        })
                        .collect(),
                };
                expansion = expansion
                    .iter()
                    .flat_map(|(p, den)| {
                        options.iter().map(move |(num, idx, e)| {
                            let mut d = den.clone();
                            d[*idx] += e;
                            (p.mul(num), d)
                        })
                    })
                    .collect();
            }
            let mut momenta = term.momenta();
            momenta.sort_unstable();
            for (p, den) in expansion {
                let key = GroupKey { kappa_power: term.kappa_power, momenta: momenta.clone(), den };
                groups.entry(key).or_insert_with(|| XPolynomial::zero(n)).add_scaled(&p, &Rational::one());
            }
        }
        Ok(CompiledTable {
            n_vars: n,
            order: op.order,
            groups: groups.into_iter().filter(|(_, p)| !p.is_empty()).collect(),
        })
    }

    /// Applies the table to a polynomial, returning `Δ_j f` split by powers
    /// of κ (index = power).
    pub fn apply(&self, f: &XPolynomial<Rational>) -> Result<Vec<XPolynomial<Rational>>> {
        let n = self.n_vars;
        let mut derived: HashMap<Vec<usize>, XPolynomial<Rational>> = HashMap::new();
        let mut acc: BTreeMap<(u32, Vec<u32>), XPolynomial<Rational>> = BTreeMap::new();
        for (key, num) in &self.groups {
            let g = derived
                .entry(key.momenta.clone())
                .or_insert_with(|| key.momenta.iter().fold(f.clone(), |g, &j| apply_momentum(&g, j)));
            if g.is_empty() {
                continue;
            }
            let term = num.mul(g);
            acc.entry((key.kappa_power, key.den.clone()))
                .or_insert_with(|| XPolynomial::zero(n))
                .add_scaled(&term, &Rational::one());
        }
        let mut by_power: Vec<Vec<XRational<Rational>>> = vec![Vec::new(); self.order];
        for ((kp, den), num) in acc {
            if num.is_empty() {
                continue;
            }
            let mut r = XRational::new(num, den, vec![0; n]);
            r.reduce();
            by_power[kp as usize].push(r);
        }
        by_power.into_iter().map(|items| XRational::sum(n, &items).divide_exact()).collect()
    }
}

type TableKey = (usize, usize);
type ActionKey = (usize, usize, Weight);

fn tables() -> &'static Mutex<HashMap<TableKey, Arc<CompiledTable>>> {
    static T: OnceLock<Mutex<HashMap<TableKey, Arc<CompiledTable>>>> = OnceLock::new();
    T.get_or_init(Default::default)
}

fn actions() -> &'static Mutex<HashMap<ActionKey, Arc<Vec<ZPolynomial<Rational>>>>> {
    static A: OnceLock<Mutex<HashMap<ActionKey, Arc<Vec<ZPolynomial<Rational>>>>>> = OnceLock::new();
    A.get_or_init(Default::default)
}

/// The compiled table of `Δ_order` for `n_vars` particles, memoized.
pub fn compiled_table(order: usize, n_vars: usize) -> Result<Arc<CompiledTable>> {
    if let Some(t) = tables().lock().expect("table cache").get(&(order, n_vars)) {
        return Ok(t.clone());
    }
    let t = Arc::new(CompiledTable::new(&IntegralOperator::new(order, n_vars)?)?);
    tables().lock().expect("table cache").insert((order, n_vars), t.clone());
    Ok(t)
}

/// `Δ_order z^w` in z-space, split by powers of κ. Memoized per monomial.
pub fn monomial_action(order: usize, n_vars: usize, w: &Weight) -> Result<Arc<Vec<ZPolynomial<Rational>>>> {
    let key = (order, n_vars, w.clone());
    if let Some(a) = actions().lock().expect("action cache").get(&key) {
        return Ok(a.clone());
    }
    let table = compiled_table(order, n_vars)?;
    let x = lift(&ZPolynomial::monomial(w.clone(), Rational::one()), n_vars)?;
    let parts = table.apply(&x)?.iter().map(project).collect::<Result<Vec<_>>>()?;
    let a = Arc::new(parts);
    actions().lock().expect("action cache").insert(key, a.clone());
    Ok(a)
}

/// Sign relating the returned action to `Δ_j`: `-Δ_2` (the ε convention,
/// `-Δ_2 P_m = ε_m P_m`) and `+Δ_3` (the printed A_2 display), i.e.
/// `(-1)^{j+1} Δ_j`.
pub fn output_sign(order: usize) -> i64 {
    if order.is_multiple_of(2) {
        -1
    } else {
        1
    }
}

/// Applies the normal-ordered integral of the given order to a z-polynomial
/// with κ taking the value `kappa` in the coefficient field.
///
/// The constant produced on `1` is subtracted, so the result annihilates
/// constants; the overall sign is [`output_sign`].
pub fn apply_integral<F: Scalar>(order: usize, p: &ZPolynomial<F>, n_vars: usize, kappa: &F) -> Result<ZPolynomial<F>> {
    if p.rank() + 1 != n_vars {
        return Err(Error::RankMismatch { expected: n_vars - 1, found: p.rank() });
    }
    let sign = F::from_int(output_sign(order));
    let mut powers = vec![F::one()];
    for _ in 1..order {
        let next = powers.last().expect("nonempty").clone() * kappa.clone();
        powers.push(next);
    }
    let on_one = combine(&monomial_action(order, n_vars, &Weight::zero(n_vars - 1))?, &powers);
    let mut out = ZPolynomial::zero(p.rank());
    for (w, c) in p.terms() {
        let action = combine(&monomial_action(order, n_vars, w)?, &powers);
        out.add_scaled(&action, &(c.clone() * sign.clone()));
    }
    // normal ordering: drop the multiplicative constant
    if let Some(c0) = on_one.terms().find(|(w, _)| w.total() == 0).map(|(_, c)| c.clone()) {
        out.add_scaled(p, &-(c0 * sign));
    }
    Ok(out)
}

fn combine<F: Scalar>(parts: &[ZPolynomial<Rational>], powers: &[F]) -> ZPolynomial<F> {
    let rank = parts.first().map(|p| p.rank()).unwrap_or(0);
    let mut out = ZPolynomial::zero(rank);
    for (p, k) in parts.iter().zip(powers) {
        if k.is_zero() {
            continue;
        }
        for (w, c) in p.terms() {
            out.add_term(w.clone(), F::from_rational(c) * k.clone());
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{rat, RationalFunction};
    use crate::symfun::XMono;

    type K = RationalFunction<Rational>;

    fn kappa() -> K {
        K::kappa()
    }

    fn affine(a: i64, b: i64) -> K {
        K::affine(&rat(a, 1), &rat(b, 1))
    }

    #[test]
    fn second_integral_on_z1() {
        let z1 = ZPolynomial::<K>::var(2, 0);
        let out = apply_integral(2, &z1, 3, &kappa()).unwrap();
        let expected = z1.scale(&(affine(1, 3) * K::constant(rat(4, 3))));
        assert_eq!(out, expected);
    }

    #[test]
    fn third_integral_on_z1() {
        let z1 = ZPolynomial::<K>::var(2, 0);
        let out = apply_integral(3, &z1, 3, &kappa()).unwrap();
        let c = K::constant(rat(8, 27)) * affine(2, 3) * affine(1, 3);
        assert_eq!(out, z1.scale(&c));
    }

    #[test]
    fn constants_are_annihilated() {
        for (j, n) in [(2, 3), (3, 3), (2, 4), (3, 4), (4, 4)] {
            let one = ZPolynomial::<K>::one(n - 1);
            assert!(apply_integral(j, &one, n, &kappa()).unwrap().is_zero());
        }
    }

    #[test]
    fn momentum_sums_to_zero() {
        let f = XPolynomial::from_terms(3, [(XMono::from_exponents(&[2, 1, 0]), rat(1, 1))]);
        let total = (0..3).fold(XPolynomial::zero(3), |acc: XPolynomial<Rational>, j| acc.add(&apply_momentum(&f, j)));
        assert!(total.is_empty());
    }

    #[test]
    fn kappa_split_has_bounded_degree() {
        let w = Weight(vec![1, 1]);
        let parts = monomial_action(3, 3, &w).unwrap();
        assert_eq!(parts.len(), 3);
    }
}
