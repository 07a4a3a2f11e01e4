//! Appendix entries rebuilt term by term from their printed factored form,
//! compared with both the bundled data and the eigen-solve.

use gegenlab::gegenbauer::gen_eigen;
use gegenlab::{rat, KappaPoly, KappaRational, Scalar, Weight, ZPolynomial};
use gegenlab_cli::golden::GoldenSet;
use num_traits::One;

type K = KappaRational;

/// `c + k κ`.
fn lin(c: i64, k: i64) -> K {
    K::affine(&rat(c, 1), &rat(k, 1))
}

fn frac(scale: i64, num: &[K], den: &[K]) -> K {
    let n = num.iter().fold(K::constant(rat(scale, 1)), |acc, f| acc * f.clone());
    let d = den.iter().fold(K::one(), |acc, f| acc * f.clone());
    n.checked_div(&d).unwrap()
}

fn poly(terms: Vec<(&[u32], K)>) -> ZPolynomial<K> {
    ZPolynomial::from_terms(3, terms.into_iter().map(|(w, c)| (Weight(w.to_vec()), c)))
}

fn golden(w: &[u32]) -> ZPolynomial<K> {
    let set = GoldenSet::appendix_a3().unwrap();
    set.entries.into_iter().find(|(v, _)| v.0 == w).map(|(_, p)| p).expect("entry present")
}

#[test]
fn p040_from_factored_form() {
    let (k1, k2, k3, k23) = (lin(1, 1), lin(2, 1), lin(3, 1), lin(3, 2));
    let expected = poly(vec![
        (&[0, 4, 0], K::one()),
        (&[1, 2, 1], frac(-12, &[], std::slice::from_ref(&k3))),
        (&[2, 0, 2], frac(12, &[], &[k2.clone(), k3.clone()])),
        (&[2, 1, 0], frac(24, &[], &[k2.clone(), k3.clone()])),
        (&[0, 1, 2], frac(24, &[], &[k2.clone(), k3.clone()])),
        (
            &[0, 2, 0],
            frac(
                -12,
                &[K::from_poly(KappaPoly::from_coeffs(vec![rat(6, 1), rat(3, 1), rat(1, 1)]))],
                &[k2.clone(), k3.clone(), k23.clone()],
            ),
        ),
        (&[1, 0, 1], frac(-24, &[lin(6, -1)], &[k2.clone(), k3.clone(), k23.clone()])),
        (
            &[0, 0, 0],
            frac(
                6,
                &[K::from_poly(KappaPoly::from_coeffs(vec![rat(18, 1), rat(1, 1), rat(1, 1)]))],
                &[k1, k2, k3, k23],
            ),
        ),
    ]);
    assert_eq!(golden(&[0, 4, 0]), expected);
    assert_eq!(gen_eigen(&Weight(vec![0, 4, 0]), 4).unwrap(), expected);
}

#[test]
fn low_degree_entries_from_factored_form() {
    let p101 = poly(vec![(&[1, 0, 1], K::one()), (&[0, 0, 0], frac(-4, &[], &[lin(1, 3)]))]);
    let p110 = poly(vec![(&[1, 1, 0], K::one()), (&[0, 0, 1], frac(-3, &[], &[lin(1, 2)]))]);
    let p200 = poly(vec![(&[2, 0, 0], K::one()), (&[0, 1, 0], frac(-2, &[], &[lin(1, 1)]))]);
    for (w, p) in [([1, 0, 1], p101), ([1, 1, 0], p110), ([2, 0, 0], p200)] {
        assert_eq!(golden(&w), p, "bundled {w:?}");
        assert_eq!(gen_eigen(&Weight(w.to_vec()), 4).unwrap(), p, "generated {w:?}");
    }
}

#[test]
fn bundled_set_shape() {
    let set = GoldenSet::appendix_a3().unwrap();
    assert_eq!(set.rank, 3);
    assert_eq!(set.entries.len(), 19);
    for (w, p) in &set.entries {
        assert!((2..=4).contains(&w.total()), "{w}");
        assert_eq!(p.coeff(w), K::one(), "{w}");
    }
}
