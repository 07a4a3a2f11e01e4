//! Closed-form recurrence coefficients and generation of `P_m` from the
//! three-term (A_1, A_2) and multi-term (A_3) recurrences.

use std::collections::HashMap;

use num_traits::{One, Zero};

use super::eigen::gen_eigen;
use crate::error::{Error, Result};
use crate::scalars::{rat, KappaPolynomial, Rational};
use crate::symfun::{Weight, ZPolynomial};
use crate::KappaRational;

type K = KappaRational;

/// Product of factors `(a + bκ)` given as `(a, b)`.
fn product(factors: &[(i64, i64)]) -> KappaPolynomial<Rational> {
    factors.iter().fold(KappaPolynomial::one(), |acc, &(a, b)| acc * KappaPolynomial::affine(&rat(a, 1), &rat(b, 1)))
}

fn ratio(lead: i64, num: &[(i64, i64)], den: &[(i64, i64)]) -> K {
    if lead == 0 {
        return K::zero();
    }
    K::new(product(num).scale_rational(&rat(lead, 1)), product(den)).expect("nonzero denominator")
}

/// `a_{m,n}(κ)`.
pub fn coeff_a(m: i64, n: i64) -> K {
    ratio(n, &[(m + n, 1), (n - 1, 2), (m + n - 1, 3)], &[(n, 1), (n - 1, 1), (m + n, 2), (m + n - 1, 2)])
}

/// `c_m(κ)`.
pub fn coeff_c(m: i64) -> K {
    ratio(m, &[(m - 1, 2)], &[(m, 1), (m - 1, 1)])
}

/// `d_{m,l,n}(κ)`.
pub fn coeff_d(m: i64, l: i64, n: i64) -> K {
    let s = m + l + n;
    ratio(
        n,
        &[(l + n, 1), (n - 1, 2), (s, 2), (l + n - 1, 3), (s - 1, 4)],
        &[(n, 1), (n - 1, 1), (l + n, 2), (l + n - 1, 2), (s, 3), (s - 1, 3)],
    )
}

/// `f_{m,l,n}(κ)`.
pub fn coeff_f(m: i64, l: i64, n: i64) -> K {
    let s = m + l + n;
    ratio(
        m * n,
        &[(m - 1, 2), (n - 1, 2), (s, 2), (s - 1, 4)],
        &[(m, 1), (n, 1), (m - 1, 1), (n - 1, 1), (s, 3), (s - 1, 3)],
    )
}

/// `g_{m,l,n}(κ)`.
pub fn coeff_g(m: i64, l: i64, n: i64) -> K {
    let s = m + l + n;
    ratio(
        l,
        &[(m + l, 1), (l + n, 1), (l - 1, 2), (s, 2), (m + l - 1, 3), (l + n - 1, 3), (s - 1, 4)],
        &[(l, 1), (l - 1, 1), (m + l, 2), (m + l - 1, 2), (l + n, 2), (l + n - 1, 2), (s, 3), (s - 1, 3)],
    )
}

/// One recurrence row: `z_r P_m = Σ coefficient · P_{m + shift}`.
pub type Row = Vec<(K, Vec<i64>)>;

/// Which targets the `a` terms of the A_3 `z_2` row carry. The printed row
/// pairs `a_{l,m}` with `P_{m+1,l,n-1}`; the eigen-solve shows the pairing is
/// the other way round.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Z2Reading {
    Printed,
    Corrected,
}

/// The recurrence row for `z_r P_m` (r is 1-based), `N ∈ {2, 3, 4}`.
pub fn recurrence_row(r: usize, m: &Weight, reading: Z2Reading) -> Result<Row> {
    let v: Vec<i64> = m.signed();
    let row = match (v.as_slice(), r) {
        (&[m], 1) => vec![(K::one(), vec![1]), (coeff_c(m), vec![-1])],
        (&[m, n], 1) => vec![(K::one(), vec![1, 0]), (coeff_a(m, n), vec![0, -1]), (coeff_c(m), vec![-1, 1])],
        (&[m, n], 2) => vec![(K::one(), vec![0, 1]), (coeff_a(n, m), vec![-1, 0]), (coeff_c(n), vec![1, -1])],
        (&[m, l, n], 1) => vec![
            (K::one(), vec![1, 0, 0]),
            (coeff_c(m), vec![-1, 1, 0]),
            (coeff_a(m, l), vec![0, -1, 1]),
            (coeff_d(m, l, n), vec![0, 0, -1]),
        ],
        (&[m, l, n], 2) => {
            let (alm, aln) = (coeff_a(l, m), coeff_a(l, n));
            let (to_alm, to_aln) = match reading {
                Z2Reading::Printed => (vec![1, 0, -1], vec![-1, 0, 1]),
                Z2Reading::Corrected => (vec![-1, 0, 1], vec![1, 0, -1]),
            };
            vec![
                (K::one(), vec![0, 1, 0]),
                (coeff_c(l), vec![1, -1, 1]),
                (alm, to_alm),
                (aln, to_aln),
                (coeff_f(m, l, n), vec![-1, 1, -1]),
                (coeff_g(m, l, n), vec![0, -1, 0]),
            ]
        }
        (&[m, l, n], 3) => vec![
            (K::one(), vec![0, 0, 1]),
            (coeff_c(n), vec![0, 1, -1]),
            (coeff_a(n, l), vec![1, -1, 0]),
            (coeff_d(n, l, m), vec![-1, 0, 0]),
        ],
        _ => return Err(Error::Unsupported(format!("no recurrence for z_{r} at rank {}", m.rank()))),
    };
    Ok(row.into_iter().filter(|(c, _)| !c.is_zero()).collect())
}

/// Builds `P_m` from `P_0 = 1` with the recurrences, for `N ∈ {2, 3, 4}`.
pub fn gen_recurrence(m: &Weight, n_vars: usize) -> Result<ZPolynomial<K>> {
    gen_recurrence_with(m, n_vars, Z2Reading::Corrected)
}

/// As [`gen_recurrence`] with an explicit reading of the A_3 `z_2` row.
pub fn gen_recurrence_with(m: &Weight, n_vars: usize, reading: Z2Reading) -> Result<ZPolynomial<K>> {
    if !(2..=4).contains(&n_vars) || m.rank() + 1 != n_vars {
        return Err(Error::Unsupported(format!("recurrence generation for N = {n_vars}")));
    }
    let mut memo = HashMap::new();
    build(m, reading, &mut memo)
}

fn build(m: &Weight, reading: Z2Reading, memo: &mut HashMap<Weight, ZPolynomial<K>>) -> Result<ZPolynomial<K>> {
    if let Some(p) = memo.get(m) {
        return Ok(p.clone());
    }
    let rank = m.rank();
    let p = match m.0.iter().position(|&x| x > 0) {
        None => ZPolynomial::one(rank),
        Some(first) => {
            // z_r P_{m - e_r} = P_m + Σ (lower terms), with r the first nonzero slot
            let r = first + 1;
            let base = m.shifted(&unit_shift(rank, first, -1)).expect("positive entry");
            let mut p = build(&base, reading, memo)?.mul(&ZPolynomial::var(rank, first));
            for (c, shift) in recurrence_row(r, &base, reading)?.into_iter().skip(1) {
                if let Some(target) = base.shifted(&shift) {
                    let q = build(&target, reading, memo)?;
                    p = p.sub(&q.scale(&c));
                }
            }
            p
        }
    };
    memo.insert(m.clone(), p.clone());
    Ok(p)
}

fn unit_shift(rank: usize, i: usize, by: i64) -> Vec<i64> {
    let mut v = vec![0; rank];
    v[i] = by;
    v
}

/// The eigen oracle for cross-checks of the recurrence route.
pub fn routes_agree(m: &Weight, n_vars: usize) -> Result<bool> {
    Ok(gen_recurrence(m, n_vars)? == gen_eigen(m, n_vars)?)
}
