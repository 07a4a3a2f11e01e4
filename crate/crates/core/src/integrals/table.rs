//! Term tables of the gauge-transformed, normal-ordered integrals.
//!
//! For an index set `S` of size `j`, the integral contributes
//! `(-i)^j Σ_{T ⊊ S} κ^{|T|} F(T) Π_{s ∈ S∖T} ∂_s`, where `F(T)` sums over
//! all partial matchings of `T`: each matched pair `{a,b}` gives
//! `(∂_a A_b) = v_ab`, each unmatched index `a` gives `A_a`. Terms with no
//! derivative left are purely multiplicative and dropped by normal ordering.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::scalars::{rat, GaussRational, Rational, Scalar};

/// One factor of a table term, with 0-based particle indices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Factor {
    /// `∂/∂q_j`.
    Momentum(usize),
    /// The gauge potential `A_j = Σ_{k≠j} ctg(q_j - q_k)`.
    Gauge(usize),
    /// `(∂_j A_k) = v_jk = sin^{-2}(q_j - q_k)`.
    Pair(usize, usize),
}

/// A single product term.
#[derive(Clone, Debug, PartialEq)]
pub struct TableTerm {
    /// Prefactor in q-space, `(-i)^j`.
    pub phase: GaussRational,
    /// Power of κ; equals the number of gauge indices plus twice the pairs.
    pub kappa_power: u32,
    pub factors: Vec<Factor>,
}

impl TableTerm {
    pub fn momenta(&self) -> Vec<usize> {
        self.factors
            .iter()
            .filter_map(|f| match f {
                Factor::Momentum(j) => Some(*j),
                _ => None,
            })
            .collect()
    }

    /// Prefactor after the x-space dictionary
    /// `∂_j ↦ 2i·E_j`, `A_j ↦ i·B_j`, `v_jk ↦ -4·W_jk`,
    /// where `E_j` is the baricentric Euler operator,
    /// `B_j = Σ_k (x_j+x_k)/(x_j-x_k)` and `W_jk = x_j x_k/(x_j-x_k)^2`.
    /// The product must be real.
    pub fn x_coefficient(&self) -> Result<Rational> {
        let two_i = GaussRational::new(Rational::zero(), rat(2, 1));
        let minus_four = GaussRational::real(rat(-4, 1));
        let c = self.factors.iter().fold(self.phase.clone(), |acc, f| {
            acc * match f {
                Factor::Momentum(_) => two_i.clone(),
                Factor::Gauge(_) => GaussRational::i(),
                Factor::Pair(..) => minus_four.clone(),
            }
        });
        if !c.is_real() {
            return Err(Error::Internal(format!("non-real table coefficient {c}")));
        }
        Ok(c.re)
    }
}

/// The structured term table of `Δ_j^κ` for `N` particles.
#[derive(Clone, Debug, PartialEq)]
pub struct IntegralOperator {
    pub order: usize,
    pub n_vars: usize,
    pub terms: Vec<TableTerm>,
}

/// Highest order whose gauge-transformed expansion is tabulated.
pub const MAX_ORDER: usize = 4;

impl IntegralOperator {
    pub fn new(order: usize, n_vars: usize) -> Result<Self> {
        if !(2..=MAX_ORDER).contains(&order) || n_vars < order {
            return Err(Error::Unsupported(format!("integral of order {order} for N = {n_vars}")));
        }
        let phase = GaussRational::new(Rational::zero(), rat(-1, 1)).pow(order as u32);
        let mut terms = Vec::new();
        for s in subsets(n_vars, order) {
            // every proper subset T of S, as a bitmask over positions in s
            for mask in 0..(1u32 << order) - 1 {
                let t: Vec<usize> = (0..order).filter(|b| mask >> b & 1 == 1).map(|b| s[b]).collect();
                let rest: Vec<usize> = (0..order).filter(|b| mask >> b & 1 == 0).map(|b| s[b]).collect();
                for matching in partial_matchings(&t) {
                    let mut factors: Vec<Factor> = matching;
                    factors.extend(rest.iter().map(|&r| Factor::Momentum(r)));
                    terms.push(TableTerm { phase: phase.clone(), kappa_power: t.len() as u32, factors });
                }
            }
        }
        Ok(IntegralOperator { order, n_vars, terms })
    }
}

/// All `k`-subsets of `0..n` in lex order.
pub fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Every way to pair off some elements of `t`; unpaired elements become
/// gauge factors.
fn partial_matchings(t: &[usize]) -> Vec<Vec<Factor>> {
    match t.split_first() {
        None => vec![vec![]],
        Some((&first, rest)) => {
            let mut out: Vec<Vec<Factor>> = partial_matchings(rest)
                .into_iter()
                .map(|mut m| {
                    m.insert(0, Factor::Gauge(first));
                    m
                })
                .collect();
            for (idx, &partner) in rest.iter().enumerate() {
                let mut others = rest.to_vec();
                others.remove(idx);
                for mut m in partial_matchings(&others) {
                    m.insert(0, Factor::Pair(first, partner));
                    out.push(m);
                }
            }
            out
        }
    }
}
