//! Generation of `P_m` as the triangular eigenvector of the second-order
//! integral.

use std::collections::{BTreeMap, HashMap};
use std::sync::{Mutex, OnceLock};

use super::spectrum::epsilon2;
use crate::error::{Error, Result};
use crate::scalars::{Rational, Scalar};
use crate::symfun::{Weight, ZPolynomial};
use crate::KappaRational;

type Memo = Mutex<HashMap<(usize, Weight), ZPolynomial<KappaRational>>>;

fn memo() -> &'static Memo {
    static M: OnceLock<Memo> = OnceLock::new();
    M.get_or_init(Default::default)
}

/// `P_m` with symbolic κ, memoized per `(N, m)`.
pub fn gen_eigen(m: &Weight, n_vars: usize) -> Result<ZPolynomial<KappaRational>> {
    let key = (n_vars, m.clone());
    if let Some(p) = memo().lock().expect("eigen memo").get(&key) {
        return Ok(p.clone());
    }
    let p = solve(m, n_vars, &KappaRational::kappa(), |_, _| None)?;
    memo().lock().expect("eigen memo").insert(key, p.clone());
    Ok(p)
}

/// `P_m` at a numeric κ, solved directly in the rationals. Fails if two
/// weights of the dominated set share the eigenvalue at this κ.
pub fn gen_eigen_at(m: &Weight, n_vars: usize, kappa: &Rational) -> Result<ZPolynomial<Rational>> {
    solve(m, n_vars, kappa, |a, b| {
        Some(Error::SpectralDegeneracy { kappa: kappa.to_string(), a: a.0.clone(), b: b.0.clone() })
    })
}

fn solve<F: Scalar>(
    m: &Weight,
    n_vars: usize,
    kappa: &F,
    degeneracy: impl Fn(&Weight, &Weight) -> Option<Error>,
) -> Result<ZPolynomial<F>> {
    if m.rank() + 1 != n_vars {
        return Err(Error::RankMismatch { expected: n_vars - 1, found: m.rank() });
    }
    let eps = |w: &Weight| -> F {
        let e = epsilon2(w, n_vars);
        e.coeffs().iter().rev().fold(F::zero(), |acc, c| acc * kappa.clone() + F::from_rational(c))
    };
    let top = eps(m);
    // contributions[ν] = Σ_{μ solved} c_μ [Δ z^μ]_ν
    let mut contributions: BTreeMap<Weight, F> = BTreeMap::new();
    let mut out = ZPolynomial::zero(m.rank());
    for nu in m.dominated_weights() {
        let c = if &nu == m {
            F::one()
        } else {
            let acc = contributions.remove(&nu).unwrap_or_else(F::zero);
            if acc.is_zero() {
                continue;
            }
            let gap = top.clone() - eps(&nu);
            if gap.is_zero() {
                return Err(degeneracy(m, &nu)
                    .unwrap_or_else(|| Error::Internal(format!("equal eigenvalues for {m} and {nu}"))));
            }
            acc.checked_div(&gap)?
        };
        let action = apply_second(&nu, n_vars, kappa)?;
        for (w, a) in action.terms() {
            if w == &nu {
                if a != &eps(&nu) {
                    return Err(Error::Internal(format!("diagonal of -Δ_2 at {nu} differs from ε")));
                }
                continue;
            }
            let slot = contributions.entry(w.clone()).or_insert_with(F::zero);
            *slot = slot.clone() + c.clone() * a.clone();
        }
        out.add_term(nu, c);
    }
    Ok(out)
}

fn apply_second<F: Scalar>(w: &Weight, n_vars: usize, kappa: &F) -> Result<ZPolynomial<F>> {
    crate::integrals::apply_integral(2, &ZPolynomial::monomial(w.clone(), F::one()), n_vars, kappa)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::{rat, KappaPolynomial};
    use num_traits::One;

    type K = KappaRational;

    fn w(v: &[u32]) -> Weight {
        Weight(v.to_vec())
    }

    fn frac(num: &[i64], den: &[i64]) -> K {
        let p = |c: &[i64]| KappaPolynomial::from_coeffs(c.iter().map(|&x| rat(x, 1)).collect());
        K::new(p(num), p(den)).unwrap()
    }

    #[test]
    fn appendix_examples() {
        let p = gen_eigen(&w(&[2, 0, 0]), 4).unwrap();
        let expected = ZPolynomial::from_terms(3, [(w(&[2, 0, 0]), K::one()), (w(&[0, 1, 0]), frac(&[-2], &[1, 1]))]);
        assert_eq!(p, expected);
        let p = gen_eigen(&w(&[1, 0, 1]), 4).unwrap();
        let expected = ZPolynomial::from_terms(3, [(w(&[1, 0, 1]), K::one()), (w(&[0, 0, 0]), frac(&[-4], &[1, 3]))]);
        assert_eq!(p, expected);
        let p = gen_eigen(&w(&[1, 1]), 3).unwrap();
        let expected = ZPolynomial::from_terms(2, [(w(&[1, 1]), K::one()), (w(&[0, 0]), frac(&[-3], &[1, 2]))]);
        assert_eq!(p, expected);
    }

    #[test]
    fn numeric_matches_substitution() {
        let m = w(&[2, 1]);
        let sym = gen_eigen(&m, 3).unwrap();
        let kappa = rat(3, 5);
        let num = gen_eigen_at(&m, 3, &kappa).unwrap();
        assert_eq!(sym.try_map_coeffs(|c| c.eval(&kappa)).unwrap(), num);
    }

    #[test]
    fn degenerate_kappa_is_reported() {
        // ε_{2,0} = ε_{0,1} at κ = -1
        let err = gen_eigen_at(&w(&[2, 0]), 3, &rat(-1, 1)).unwrap_err();
        assert!(matches!(err, Error::SpectralDegeneracy { .. }), "{err}");
    }
}
