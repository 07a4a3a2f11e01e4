//! Multivariate polynomials: z-space (elementary symmetric coordinates) and
//! x-space (`x_j = e^{2iq_j}`), with the conversions between them.

pub mod convert;
mod weight;
mod xpoly;
mod xrational;
mod zpoly;

pub use convert::{e_power, elementary, lift, project};
pub use weight::Weight;
pub use xpoly::{XMono, XPolynomial, MAX_VARS};
pub use xrational::{pair_index, pairs, XRational};
pub use zpoly::ZPolynomial;

/// Splits a rendered coefficient into (negative, body) when it is a single
/// signed factor; sums keep their sign inside and come back parenthesized.
pub(crate) fn split_sign(s: &str) -> (bool, String) {
    let top_level_sum = |t: &str| {
        let mut depth = 0i32;
        let b = t.as_bytes();
        for (i, &ch) in b.iter().enumerate() {
            match ch {
                b'(' => depth += 1,
                b')' => depth -= 1,
                b'+' | b'-' if depth == 0 && i > 0 && b[i - 1] == b' ' => return true,
                _ => {}
            }
        }
        false
    };
    if top_level_sum(s) {
        return (false, format!("({s})"));
    }
    match s.strip_prefix('-') {
        Some(rest) => (true, rest.to_string()),
        None => (false, s.to_string()),
    }
}
