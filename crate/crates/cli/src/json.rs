//! The polynomial interchange format:
//! `{"rank":n,"weight":[...],"terms":[{"mono":[...],"num":["p/q",...],"den":["p/q",...]}]}`.
//!
//! `num` and `den` list κ-coefficients in ascending powers; terms are sorted
//! by descending graded-lex order (weighted degree, then lex), which is the
//! order the text and LaTeX renderings use.

use anyhow::{bail, Context, Result};
use gegenlab::scalars::parse_rational;
use gegenlab::{KappaPoly, KappaRational, Rational, Weight, ZPolynomial};
use serde::{Deserialize, Serialize};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TermDoc {
    pub mono: Vec<u32>,
    pub num: Vec<String>,
    pub den: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PolyDoc {
    pub rank: usize,
    pub weight: Vec<u32>,
    pub terms: Vec<TermDoc>,
}

/// `p` for integers, `p/q` otherwise.
pub fn rational_str(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn coeff_strs(p: &KappaPoly) -> Vec<String> {
    p.coeffs().iter().map(rational_str).collect()
}

pub fn symbolic_doc(weight: &Weight, p: &ZPolynomial<KappaRational>) -> PolyDoc {
    let terms = p
        .terms()
        .collect::<Vec<_>>()
        .into_iter()
        .rev()
        .map(|(w, c)| TermDoc { mono: w.0.clone(), num: coeff_strs(c.num()), den: coeff_strs(c.den()) })
        .collect();
    PolyDoc { rank: p.rank(), weight: weight.0.clone(), terms }
}

pub fn numeric_doc(weight: &Weight, p: &ZPolynomial<Rational>) -> PolyDoc {
    let terms = p
        .terms()
        .collect::<Vec<_>>()
        .into_iter()
        .rev()
        .map(|(w, c)| TermDoc { mono: w.0.clone(), num: vec![rational_str(c)], den: vec!["1".into()] })
        .collect();
    PolyDoc { rank: p.rank(), weight: weight.0.clone(), terms }
}

fn parse_poly(coeffs: &[String]) -> Result<KappaPoly> {
    let cs = coeffs
        .iter()
        .map(|s| parse_rational(s).with_context(|| format!("bad rational {s:?}")))
        .collect::<Result<Vec<_>>>()?;
    Ok(KappaPoly::from_coeffs(cs))
}

/// Reads a document back into canonical form. Term order in the input is
/// not significant.
pub fn from_doc(doc: &PolyDoc) -> Result<(Weight, ZPolynomial<KappaRational>)> {
    if doc.weight.len() != doc.rank {
        bail!("weight {:?} does not have rank {}", doc.weight, doc.rank);
    }
    let mut p = ZPolynomial::zero(doc.rank);
    for t in &doc.terms {
        if t.mono.len() != doc.rank {
            bail!("monomial {:?} does not have rank {}", t.mono, doc.rank);
        }
        let c = KappaRational::new(parse_poly(&t.num)?, parse_poly(&t.den)?)?;
        p.add_term(Weight(t.mono.clone()), c);
    }
    Ok((Weight(doc.weight.clone()), p))
}

pub fn to_string(doc: &PolyDoc) -> String {
    serde_json::to_string(doc).expect("plain data serializes")
}
