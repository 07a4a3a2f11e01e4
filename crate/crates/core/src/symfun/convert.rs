//! Passage between z-space (elementary symmetric functions with `z_N = 1`)
//! and x-space symmetric polynomials.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::One;

use super::xpoly::XMono;
use super::{Weight, XPolynomial, ZPolynomial};
use crate::error::{Error, Result};
use crate::scalars::{Rational, Scalar};

type Key = (usize, Vec<u32>);

fn cache() -> &'static Mutex<HashMap<Key, Arc<XPolynomial<Rational>>>> {
    static CACHE: OnceLock<Mutex<HashMap<Key, Arc<XPolynomial<Rational>>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// `e_k(x_1..x_N)` for `1 ≤ k ≤ N`.
pub fn elementary(n_vars: usize, k: usize) -> XPolynomial<Rational> {
    let mut terms = Vec::new();
    let mut subset: Vec<usize> = (0..k).collect();
    loop {
        let mut e = vec![0; n_vars];
        for &i in &subset {
            e[i] = 1;
        }
        terms.push((XMono::from_exponents(&e), Rational::one()));
        // next k-subset in lex order
        let mut i = k;
        loop {
            if i == 0 {
                return XPolynomial::from_terms(n_vars, terms);
            }
            i -= 1;
            if subset[i] < n_vars - k + i {
                subset[i] += 1;
                for j in i + 1..k {
                    subset[j] = subset[j - 1] + 1;
                }
                break;
            }
        }
    }
}

/// `Π_k e_k^{gamma_k}` (gamma has length ≤ N), memoized.
pub fn e_power(n_vars: usize, gamma: &[u32]) -> Arc<XPolynomial<Rational>> {
    let key = (n_vars, gamma.to_vec());
    if let Some(p) = cache().lock().expect("e-power cache").get(&key) {
        return p.clone();
    }
    let value = match gamma.iter().rposition(|&g| g > 0) {
        None => XPolynomial::constant(n_vars, Rational::one()),
        Some(k) => {
            let mut lower = gamma.to_vec();
            lower[k] -= 1;
            e_power(n_vars, &lower).mul(&elementary(n_vars, k + 1))
        }
    };
    let value = Arc::new(value);
    cache().lock().expect("e-power cache").insert(key, value.clone());
    value
}

/// Substitutes `z_i ↦ e_i(x)` for `i = 1..n`, with `N = n + 1` variables.
pub fn lift<F: Scalar>(p: &ZPolynomial<F>, n_vars: usize) -> Result<XPolynomial<F>> {
    if p.rank() + 1 != n_vars {
        return Err(Error::RankMismatch { expected: n_vars - 1, found: p.rank() });
    }
    let mut out = XPolynomial::zero(n_vars);
    for (w, c) in p.terms() {
        let e = e_power(n_vars, w.as_slice());
        for (m, r) in e.terms() {
            out.add_term(*m, F::from_rational(r) * c.clone());
        }
    }
    Ok(out)
}

/// Rewrites a symmetric polynomial in `e_1..e_N` by leading-term elimination
/// under lex order, then sets `e_N = 1`.
pub fn project<F: Scalar>(f: &XPolynomial<F>) -> Result<ZPolynomial<F>> {
    let n = f.n_vars();
    if let Err((i, j)) = f.check_symmetric() {
        return Err(Error::NotSymmetric(i + 1, j + 1));
    }
    let mut rest = f.clone();
    let mut out = ZPolynomial::zero(n - 1);
    while let Some((m, c)) = rest.leading() {
        let c = c.clone();
        let a = m.exponents(n);
        let gamma: Vec<u32> = (0..n)
            .map(|k| if k + 1 < n { a[k].checked_sub(a[k + 1]) } else { Some(a[k]) })
            .collect::<Option<_>>()
            .ok_or_else(|| Error::Internal("leading exponent is not a partition".into()))?;
        for (mm, r) in e_power(n, &gamma).terms() {
            rest.add_term(*mm, -(F::from_rational(r) * c.clone()));
        }
        out.add_term(Weight(gamma[..n - 1].to_vec()), c);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::rat;

    type X = XPolynomial<Rational>;
    type Z = ZPolynomial<Rational>;

    #[test]
    fn lift_variables() {
        let z1 = lift(&Z::var(2, 0), 3).unwrap();
        assert_eq!(z1, X::var(3, 0).add(&X::var(3, 1)).add(&X::var(3, 2)));
        let z2 = lift(&Z::var(2, 1), 3).unwrap();
        assert_eq!(z2.len(), 3);
        assert!(lift(&Z::var(2, 0), 4).is_err());
    }

    #[test]
    fn project_examples() {
        assert_eq!(project(&elementary(3, 2)).unwrap(), Z::var(2, 1));
        let x = XMono::from_exponents(&[2, 2, 2]);
        assert_eq!(project(&X::monomial(3, x, rat(1, 1))).unwrap(), Z::one(2));
        // power sum p_2 = z1^2 - 2 z2
        let p2 = (0..3).fold(X::zero(3), |acc, i| acc.add(&X::var(3, i).pow(2)));
        let want = Z::var(2, 0).mul(&Z::var(2, 0)).sub(&Z::var(2, 1).scale(&rat(2, 1)));
        assert_eq!(project(&p2).unwrap(), want);
        assert!(matches!(project(&X::var(3, 0)), Err(Error::NotSymmetric(1, 2))));
    }
}
