//! Differential operators in the z variables, `Σ_β c_β(z) ∂^β`.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::engine::apply_integral;
use crate::error::{Error, Result};
use crate::latex::Latex;
use crate::scalars::{rat, KappaPolynomial, Rational, Scalar};
use crate::symfun::{Weight, ZPolynomial};
use crate::KappaRational;

/// `Σ_β c_β(z) ∂^β` with `β` a derivative multi-index over `z_1..z_{rank}`.
#[derive(Clone, Debug, PartialEq)]
pub struct ZOperator<F> {
    rank: usize,
    terms: BTreeMap<Weight, ZPolynomial<F>>,
}

impl<F: Scalar> ZOperator<F> {
    pub fn zero(rank: usize) -> Self {
        ZOperator { rank, terms: BTreeMap::new() }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Weight, &ZPolynomial<F>)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, beta: &Weight) -> ZPolynomial<F> {
        self.terms.get(beta).cloned().unwrap_or_else(|| ZPolynomial::zero(self.rank))
    }

    /// Adds `c(z) ∂^β`.
    pub fn add_term(&mut self, beta: Weight, c: ZPolynomial<F>) {
        let entry = self.terms.entry(beta.clone()).or_insert_with(|| ZPolynomial::zero(self.rank));
        *entry = entry.add(&c);
        if entry.is_zero() {
            self.terms.remove(&beta);
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        let mut out = Self::zero(self.rank);
        for (b, p) in &self.terms {
            out.add_term(b.clone(), p.scale(c));
        }
        out
    }

    pub fn apply(&self, p: &ZPolynomial<F>) -> Result<ZPolynomial<F>> {
        if p.rank() != self.rank {
            return Err(Error::RankMismatch { expected: self.rank, found: p.rank() });
        }
        let mut out = ZPolynomial::zero(self.rank);
        for (beta, c) in &self.terms {
            let mut d = p.clone();
            for (i, &e) in beta.0.iter().enumerate() {
                for _ in 0..e {
                    d = d.derivative(i);
                }
            }
            if !d.is_zero() {
                out = out.add(&c.mul(&d));
            }
        }
        Ok(out)
    }

    pub fn max_order(&self) -> u32 {
        self.terms.keys().map(|b| b.total()).max().unwrap_or(0)
    }
}

fn binomial_multi(beta: &Weight, alpha: &Weight) -> Rational {
    beta.0.iter().zip(&alpha.0).fold(Rational::one(), |acc, (&b, &a)| {
        let mut c = Rational::one();
        for k in 0..a {
            c *= rat((b - k) as i64, (k + 1) as i64);
        }
        acc * c
    })
}

fn factorial_multi(beta: &Weight) -> Rational {
    beta.0.iter().fold(Rational::one(), |acc, &b| acc * (1..=b as i64).fold(Rational::one(), |f, k| f * rat(k, 1)))
}

/// All `α ≤ β` componentwise with `α ≠ β`.
fn sub_indices(beta: &Weight) -> Vec<Weight> {
    let mut out = vec![Vec::new()];
    for &b in &beta.0 {
        out = out
            .into_iter()
            .flat_map(|a: Vec<u32>| {
                (0..=b).map(move |e| {
                    let mut a = a.clone();
                    a.push(e);
                    a
                })
            })
            .collect();
    }
    out.into_iter().map(Weight).filter(|a| a != beta).collect()
}

/// Recovers the z-space operator of `L` from its action on monomials,
/// assuming `L` has derivative order at most `max_order` and kills constants.
///
/// With `c_β = β!·(coefficient of ∂^β)`, `L z^β = Σ_{α≤β} C(β,α) c_α z^{β−α}`,
/// which is solved for `c_β` in order of increasing `|β|`.
pub fn derive_operator<F: Scalar>(
    rank: usize,
    max_order: u32,
    action: impl Fn(&ZPolynomial<F>) -> Result<ZPolynomial<F>>,
) -> Result<ZOperator<F>> {
    let mut c: BTreeMap<Weight, ZPolynomial<F>> = BTreeMap::new();
    let mut betas = Weight::all_up_to_total(rank, max_order);
    betas.sort_by_key(|b| b.total());
    for beta in betas {
        if beta.total() == 0 {
            continue;
        }
        let mut cb = action(&ZPolynomial::monomial(beta.clone(), F::one()))?;
        for alpha in sub_indices(&beta) {
            if let Some(ca) = c.get(&alpha) {
                let rest = Weight(beta.0.iter().zip(&alpha.0).map(|(b, a)| b - a).collect());
                let term = ca.mul_monomial(&rest, &F::from_rational(&binomial_multi(&beta, &alpha)));
                cb = cb.sub(&term);
            }
        }
        if !cb.is_zero() {
            c.insert(beta, cb);
        }
    }
    let mut op = ZOperator::zero(rank);
    for (beta, cb) in c {
        let inv = F::from_rational(&(Rational::one() / factorial_multi(&beta)));
        op.add_term(beta, cb.scale(&inv));
    }
    Ok(op)
}

/// The z-space form of the engine's integral of order `j` for `n_vars`
/// particles, with symbolic κ.
pub fn engine_operator(j: usize, n_vars: usize) -> Result<ZOperator<KappaRational>> {
    let kappa = KappaRational::kappa();
    derive_operator(n_vars - 1, j as u32, |p| apply_integral(j, p, n_vars, &kappa))
}

type K = KappaRational;

fn poly(rank: usize, terms: &[(i64, &[u32])]) -> ZPolynomial<K> {
    ZPolynomial::from_terms(rank, terms.iter().map(|(c, w)| (Weight(w.to_vec()), K::constant(rat(*c, 1)))))
}

fn k_affine(a: i64, b: i64) -> K {
    K::affine(&rat(a, 1), &rat(b, 1))
}

/// Literal transcriptions of the printed z-space operators: `-Δ_2` for
/// `N = 3, 4` and `Δ_3` for `N = 3`.
pub fn transcribed_operator(n_vars: usize, j: usize) -> Result<ZOperator<K>> {
    let mut op = ZOperator::zero(n_vars - 1);
    let mut add = |beta: &[u32], c: ZPolynomial<K>| op.add_term(Weight(beta.to_vec()), c);
    match (n_vars, j) {
        (3, 2) => {
            add(&[2, 0], poly(2, &[(1, &[2, 0]), (-3, &[0, 1])]));
            add(&[0, 2], poly(2, &[(1, &[0, 2]), (-3, &[1, 0])]));
            add(&[1, 1], poly(2, &[(1, &[1, 1]), (-9, &[0, 0])]));
            add(&[1, 0], poly(2, &[(1, &[1, 0])]).scale(&k_affine(1, 3)));
            add(&[0, 1], poly(2, &[(1, &[0, 1])]).scale(&k_affine(1, 3)));
            Ok(op.scale(&K::constant(rat(4, 3))))
        }
        (3, 3) => {
            let k2 = k_affine(2, 3);
            let k21 = k_affine(2, 3) * k_affine(1, 3);
            add(&[3, 0], poly(2, &[(2, &[3, 0]), (-9, &[1, 1]), (27, &[0, 0])]));
            add(&[2, 1], poly(2, &[(3, &[2, 1]), (-18, &[0, 2]), (27, &[1, 0])]));
            add(&[1, 2], poly(2, &[(-3, &[1, 2]), (18, &[2, 0]), (-27, &[0, 1])]));
            add(&[0, 3], poly(2, &[(-2, &[0, 3]), (9, &[1, 1]), (-27, &[0, 0])]));
            add(&[2, 0], poly(2, &[(3, &[2, 0]), (-9, &[0, 1])]).scale(&k2));
            add(&[0, 2], poly(2, &[(-3, &[0, 2]), (9, &[1, 0])]).scale(&k2));
            add(&[1, 0], poly(2, &[(1, &[1, 0])]).scale(&k21));
            add(&[0, 1], poly(2, &[(-1, &[0, 1])]).scale(&k21));
            Ok(op.scale(&K::constant(rat(8, 27))))
        }
        (4, 2) => {
            add(&[2, 0, 0], poly(3, &[(3, &[2, 0, 0]), (-8, &[0, 1, 0])]));
            add(&[0, 0, 2], poly(3, &[(3, &[0, 0, 2]), (-8, &[0, 1, 0])]));
            add(&[0, 2, 0], poly(3, &[(4, &[0, 2, 0]), (-8, &[1, 0, 1]), (-16, &[0, 0, 0])]));
            add(&[1, 1, 0], poly(3, &[(4, &[1, 1, 0]), (-24, &[0, 0, 1])]));
            add(&[0, 1, 1], poly(3, &[(4, &[0, 1, 1]), (-24, &[1, 0, 0])]));
            add(&[1, 0, 1], poly(3, &[(2, &[1, 0, 1]), (-32, &[0, 0, 0])]));
            let k = k_affine(1, 4);
            add(&[1, 0, 0], poly(3, &[(3, &[1, 0, 0])]).scale(&k));
            add(&[0, 0, 1], poly(3, &[(3, &[0, 0, 1])]).scale(&k));
            add(&[0, 1, 0], poly(3, &[(4, &[0, 1, 0])]).scale(&k));
            Ok(op.scale(&K::constant(rat(1, 2))))
        }
        _ => Err(Error::Unsupported(format!("no printed operator of order {j} for N = {n_vars}"))),
    }
}

/// The positive rational `c` such that every coefficient of `op / c` has
/// coprime integer content, used to factor the operator for display.
pub fn rational_content(op: &ZOperator<K>) -> Rational {
    let mut num = BigInt::zero();
    let mut den = BigInt::one();
    for (_, p) in op.terms() {
        for (_, c) in p.terms() {
            let content =
                |q: &KappaPolynomial<Rational>| q.coeffs().iter().fold(Rational::zero(), |g, x| rational_gcd(&g, x));
            let r = content(c.num()) / content(c.den());
            let g = rational_gcd(&Rational::new(num.clone(), den.clone()), &r);
            num = g.numer().clone();
            den = g.denom().clone();
        }
    }
    if num.is_zero() {
        Rational::one()
    } else {
        Rational::new(num, den)
    }
}

fn rational_gcd(a: &Rational, b: &Rational) -> Rational {
    if a.is_zero() {
        return b.abs();
    }
    if b.is_zero() {
        return a.abs();
    }
    Rational::new(a.numer().gcd(b.numer()), a.denom().lcm(b.denom()))
}

/// Display order: higher derivatives first, then `∂_1` before `∂_2`.
fn display_order<F>(op: &ZOperator<F>) -> Vec<(&Weight, &ZPolynomial<F>)>
where
    F: Scalar,
{
    let mut v: Vec<_> = op.terms().collect();
    v.sort_by(|a, b| b.0.total().cmp(&a.0.total()).then(b.0 .0.cmp(&a.0 .0)));
    v
}

fn render(
    op: &ZOperator<K>,
    coeff: impl Fn(&ZPolynomial<K>) -> String,
    deriv: impl Fn(usize, u32) -> String,
    content: impl Fn(&Rational) -> String,
    brace: (&str, &str),
) -> String {
    let c = rational_content(op);
    let inv = K::constant(Rational::one() / c.clone());
    let mut body = String::new();
    for (beta, p) in display_order(op) {
        let (neg, text) = crate::symfun::split_sign(&coeff(&p.scale(&inv)));
        let d = beta
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| deriv(i + 1, e))
            .collect::<Vec<_>>()
            .join(" ");
        match (body.is_empty(), neg) {
            (true, true) => body.push('-'),
            (true, false) => {}
            (false, true) => body.push_str(" - "),
            (false, false) => body.push_str(" + "),
        }
        if text != "1" {
            body.push_str(&text);
            body.push(' ');
        }
        body.push_str(&d);
    }
    if body.is_empty() {
        return "0".to_string();
    }
    if c.is_one() {
        body
    } else {
        format!("{} {}{body}{}", content(&c), brace.0, brace.1)
    }
}

impl ZOperator<K> {
    /// Plain text, e.g. `4/3 {(z1^2 - 3 z2) d2/dz1^2 + ...}`.
    pub fn to_text(&self) -> String {
        render(
            self,
            |p| p.to_string(),
            |i, e| if e == 1 { format!("d/dz{i}") } else { format!("d{e}/dz{i}^{e}") },
            |c| c.to_string(),
            ("{", "}"),
        )
    }

    /// LaTeX, e.g. `\frac{4}{3}\{(z_1^{2} - 3 z_2)\partial_{z_1}^{2} + ...\}`.
    pub fn to_latex(&self) -> String {
        render(
            self,
            |p| p.latex(),
            |i, e| if e == 1 { format!("\\partial_{{z_{i}}}") } else { format!("\\partial_{{z_{i}}}^{{{e}}}") },
            |c| c.latex(),
            ("\\{", "\\}"),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn engine_matches_printed_second_order() {
        for n in [3, 4] {
            assert_eq!(engine_operator(2, n).unwrap(), transcribed_operator(n, 2).unwrap(), "N = {n}");
        }
    }

    #[test]
    fn engine_matches_printed_third_order() {
        assert_eq!(engine_operator(3, 3).unwrap(), transcribed_operator(3, 3).unwrap());
    }

    #[test]
    fn text_rendering() {
        let op = transcribed_operator(3, 2).unwrap();
        let t = op.to_text();
        println!("{t}\n{}", op.to_latex());
        assert!(t.starts_with("4/3 {"));
        assert!(t.contains("(z1 z2 - 9) d/dz1 d/dz2"));
        let t = transcribed_operator(4, 2).unwrap().to_text();
        println!("{t}");
        assert!(t.starts_with("1/2 {"));
        assert!(t.contains("(3 z1^2 - 8 z2) d2/dz1^2"));
        println!("{}", transcribed_operator(3, 3).unwrap().to_text());
    }

    #[test]
    fn transcription_examples() {
        let k = KappaRational::kappa();
        let z2 = ZPolynomial::<K>::var(2, 1);
        let out = transcribed_operator(3, 2).unwrap().apply(&z2).unwrap();
        assert_eq!(out, z2.scale(&(K::constant(rat(4, 3)) * k_affine(1, 3))));
        let z2 = ZPolynomial::<K>::var(3, 1);
        let out = transcribed_operator(4, 2).unwrap().apply(&z2).unwrap();
        assert_eq!(out, z2.scale(&(K::constant(rat(2, 1)) * k_affine(1, 4))));
        assert!(transcribed_operator(3, 3).unwrap().apply(&ZPolynomial::one(2)).unwrap().is_zero());
        assert!(transcribed_operator(5, 2).is_err());
        let _ = k;
    }
}
