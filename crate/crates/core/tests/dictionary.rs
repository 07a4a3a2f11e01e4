//! The coordinate dictionary `x_j = e^{2iq_j}` checked at exact points.
//!
//! Points are parametrized by rational half-angle tangents `s = tan(q/2)`,
//! which makes `sin q`, `cos q` and hence `e^{2iq}` Gaussian rationals.

use gegenlab::integrals::{apply_gauge_potential, apply_momentum};
use gegenlab::{rat, GaussRational, Rational, Scalar, XPolynomial, XRational};
use num_traits::{One, Zero};

struct Angle {
    sin: Rational,
    cos: Rational,
}

impl Angle {
    fn from_half_tangent(s: Rational) -> Self {
        let d = Rational::one() + &s * &s;
        Angle { sin: rat(2, 1) * &s / &d, cos: (Rational::one() - &s * &s) / d }
    }

    fn minus(&self, other: &Angle) -> Angle {
        Angle {
            sin: &self.sin * &other.cos - &self.cos * &other.sin,
            cos: &self.cos * &other.cos + &self.sin * &other.sin,
        }
    }

    /// `e^{2iq}`.
    fn x(&self) -> GaussRational {
        GaussRational::new(&self.cos * &self.cos - &self.sin * &self.sin, rat(2, 1) * &self.sin * &self.cos)
    }
}

fn angles(ts: &[(i64, i64)]) -> Vec<Angle> {
    ts.iter().map(|&(p, q)| Angle::from_half_tangent(rat(p, q))).collect()
}

const POINTS: [[(i64, i64); 3]; 3] = [[(1, 2), (-1, 3), (2, 1)], [(3, 7), (1, 5), (-4, 3)], [(0, 1), (5, 2), (-2, 9)]];

#[test]
fn cotangent_and_inverse_sine_squared() {
    for pt in POINTS {
        let q = angles(&pt);
        let x: Vec<GaussRational> = q.iter().map(Angle::x).collect();
        for j in 0..3 {
            for k in 0..3 {
                if j == k {
                    continue;
                }
                let d = q[j].minus(&q[k]);
                let cot = &d.cos / &d.sin;
                let inv_sin2 = Rational::one() / (&d.sin * &d.sin);
                let sum = x[j].clone() + x[k].clone();
                let diff = x[j].clone() - x[k].clone();
                let via_x = GaussRational::i() * sum.checked_div(&diff).unwrap();
                assert_eq!(via_x, GaussRational::real(cot));
                let prod = x[j].clone() * x[k].clone();
                let via_x = GaussRational::real(rat(-4, 1)) * prod.checked_div(&(diff.clone() * diff)).unwrap();
                assert_eq!(via_x, GaussRational::real(inv_sin2));
            }
        }
    }
}

#[test]
fn gauge_potential_matches_cotangent_sum() {
    for pt in POINTS {
        let q = angles(&pt);
        let x: Vec<GaussRational> = q.iter().map(Angle::x).collect();
        for j in 0..3 {
            let expected = (0..3)
                .filter(|&k| k != j)
                .map(|k| {
                    let d = q[j].minus(&q[k]);
                    &d.cos / &d.sin
                })
                .fold(Rational::zero(), |a, b| a + b);
            let one = XRational::from_poly(XPolynomial::constant(3, GaussRational::one()));
            let a = apply_gauge_potential(&one, j);
            assert_eq!(a.eval(&x).unwrap(), GaussRational::real(expected));
        }
    }
}

/// `(∂_j A_k) = v_{jk}` with `∂_q ↦ 2i x∂_x`, via the quotient rule on
/// `A_k ∋ i(x_k + x_j)/(x_k - x_j)`.
#[test]
fn derivative_of_potential_is_pair_term() {
    let n = 3;
    let (j, k) = (0, 2);
    let num = XPolynomial::<Rational>::var(n, k).add(&XPolynomial::var(n, j));
    let den = XPolynomial::var(n, k).sub(&XPolynomial::var(n, j));
    // the degree shifts of the Euler operator cancel in the quotient rule
    let top = apply_momentum(&num, j).mul(&den).sub(&num.mul(&apply_momentum(&den, j)));
    // 2i · i · top = -2 top must equal -4 x_j x_k
    let lhs = top.scale(&rat(-2, 1));
    let rhs = XPolynomial::var(n, j).mul(&XPolynomial::var(n, k)).scale(&rat(-4, 1));
    assert_eq!(lhs, rhs);
}

#[test]
fn momentum_example() {
    let f = XPolynomial::<Rational>::var(3, 0).mul(&XPolynomial::var(3, 1));
    assert_eq!(apply_momentum(&f, 0), f.scale(&rat(1, 3)));
    assert!(apply_momentum(&XPolynomial::<Rational>::constant(3, rat(5, 1)), 1).is_empty());
}

#[test]
fn gauge_examples_two_particles() {
    let one = XRational::from_poly(XPolynomial::constant(2, GaussRational::one()));
    let a = apply_gauge_potential(&one, 0);
    let expected = XRational::over_difference(
        XPolynomial::var(2, 0).add(&XPolynomial::var(2, 1)).scale(&GaussRational::i()),
        0,
        1,
        1,
    );
    assert_eq!(a.eval(&pt2()).unwrap(), expected.eval(&pt2()).unwrap());
    // the swapped potential negates the pair factor
    let b = apply_gauge_potential(&one, 1);
    assert_eq!(b.eval(&pt2()).unwrap(), -a.eval(&pt2()).unwrap());

    let d = XPolynomial::<GaussRational>::difference(2, 0, 1);
    let sq = XRational::from_poly(d.mul(&d));
    let mut r = apply_gauge_potential(&sq, 0);
    r.reduce();
    assert!(r.is_polynomial());
    let poly = r.divide_exact().unwrap();
    let expected = XPolynomial::var(2, 0).add(&XPolynomial::var(2, 1)).mul(&d).scale(&GaussRational::i());
    assert_eq!(poly, expected);
}

fn pt2() -> Vec<GaussRational> {
    vec![GaussRational::new(rat(3, 5), rat(4, 5)), GaussRational::new(rat(5, 13), rat(-12, 13))]
}
