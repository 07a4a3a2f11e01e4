//! LaTeX rendering in the layout of the published tables: fractions in κ,
//! monomials in z, e.g. `z_1 z_3 - \frac{4}{1+3\kappa}`.

use num_traits::{One, Signed, Zero};

use crate::scalars::{KappaPolynomial, Rational, RationalFunction, Scalar};
use crate::symfun::ZPolynomial;

pub trait Latex {
    fn latex(&self) -> String;
}

/// Splits a rendered coefficient into (negative, body). Sums are wrapped in
/// parentheses and never reported negative.
fn split(s: &str) -> (bool, String) {
    let mut depth = 0i32;
    for (i, ch) in s.char_indices() {
        match ch {
            '{' | '(' => depth += 1,
            '}' | ')' => depth -= 1,
            '+' | '-' if depth == 0 && i > 0 => return (false, format!("({s})")),
            _ => {}
        }
    }
    match s.strip_prefix('-') {
        Some(rest) => (true, rest.to_string()),
        None => (false, s.to_string()),
    }
}

impl Latex for Rational {
    fn latex(&self) -> String {
        if self.is_integer() {
            self.numer().to_string()
        } else {
            let sign = if self.is_negative() { "-" } else { "" };
            format!("{sign}\\frac{{{}}}{{{}}}", self.numer().abs(), self.denom())
        }
    }
}

impl Latex for KappaPolynomial<Rational> {
    /// Ascending powers without spaces: `1+3\kappa`.
    fn latex(&self) -> String {
        let mut out = String::new();
        for (k, c) in self.coeffs().iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let kap = match k {
                0 => String::new(),
                1 => "\\kappa".to_string(),
                _ => format!("\\kappa^{{{k}}}"),
            };
            let (neg, body) = split(&c.latex());
            let body = if k > 0 && c.abs().is_one() { String::new() } else { body };
            if neg {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            out.push_str(&body);
            out.push_str(&kap);
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl Latex for RationalFunction<Rational> {
    fn latex(&self) -> String {
        let num = self.num();
        let den = self.den();
        if den.is_constant() {
            let d = den.coeff(0);
            return if d.is_one() {
                num.latex()
            } else {
                let n = num.latex();
                let (neg, body) = split(&n);
                let body = if num.coeffs().iter().filter(|c| !c.is_zero()).count() > 1 { n } else { body };
                let neg = neg && num.coeffs().iter().filter(|c| !c.is_zero()).count() == 1;
                format!("{}\\frac{{{body}}}{{{}}}", if neg { "-" } else { "" }, d.latex())
            };
        }
        // a single negative numerator term moves its sign in front
        let single = num.coeffs().iter().filter(|c| !c.is_zero()).count() == 1;
        let n = num.latex();
        if single {
            if let Some(rest) = n.strip_prefix('-') {
                return format!("-\\frac{{{rest}}}{{{}}}", den.latex());
            }
        }
        format!("\\frac{{{n}}}{{{}}}", den.latex())
    }
}

impl<F: Scalar + Latex> Latex for ZPolynomial<F> {
    /// Descending graded-lex order, matching the plain-text rendering.
    fn latex(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut out = String::new();
        for (w, c) in self.terms().collect::<Vec<_>>().into_iter().rev() {
            let mono =
                w.0.iter()
                    .enumerate()
                    .filter(|(_, &e)| e > 0)
                    .map(|(i, &e)| if e == 1 { format!("z_{}", i + 1) } else { format!("z_{}^{{{}}}", i + 1, e) })
                    .collect::<Vec<_>>()
                    .join(" ");
            let (neg, body) = split(&c.latex());
            match (out.is_empty(), neg) {
                (true, true) => out.push('-'),
                (true, false) => {}
                (false, true) => out.push_str(" - "),
                (false, false) => out.push_str(" + "),
            }
            let term = match (mono.is_empty(), body == "1") {
                (true, _) => body,
                (false, true) => mono,
                (false, false) => format!("{body} {mono}"),
            };
            out.push_str(&term);
        }
        out
    }
}
