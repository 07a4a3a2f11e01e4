use gegenlab::gegenbauer::{
    char_eigenvalue, coeff_a, coeff_c, coeff_d, coeff_f, coeff_g, epsilon2, l_shift, l_vector, ShiftVector,
};
use gegenlab::integrals::apply_integral;
use gegenlab::symfun::{lift, project};
use gegenlab::{rat, KappaPoly, KappaRational, Rational, Scalar, Weight, ZPolynomial};
use num_traits::{One, Zero};
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| rat(p, q))
}

fn kappa_poly() -> impl Strategy<Value = KappaPoly> {
    proptest::collection::vec(small_rational(), 0..4).prop_map(KappaPoly::from_coeffs)
}

fn kappa_rational() -> impl Strategy<Value = KappaRational> {
    (kappa_poly(), kappa_poly())
        .prop_filter("nonzero denominator", |(_, d)| !d.is_zero())
        .prop_map(|(n, d)| KappaRational::new(n, d).unwrap())
}

fn weight(rank: usize, max: u32) -> impl Strategy<Value = Weight> {
    proptest::collection::vec(0..=max, rank).prop_map(Weight)
}

fn zpoly(rank: usize) -> impl Strategy<Value = ZPolynomial<Rational>> {
    proptest::collection::vec((weight(rank, 2), small_rational()), 0..5)
        .prop_map(move |terms| ZPolynomial::from_terms(rank, terms))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn kappa_field_axioms(a in kappa_rational(), b in kappa_rational(), c in kappa_rational()) {
        prop_assert_eq!((a.clone() + b.clone()) - b.clone(), a.clone());
        prop_assert_eq!(a.clone() * (b.clone() + c.clone()), a.clone() * b.clone() + a.clone() * c.clone());
        if !b.is_zero() {
            prop_assert_eq!((a.clone() * b.clone()).checked_div(&b).unwrap(), a);
        }
    }

    #[test]
    fn canonical_form_is_unique(n in kappa_poly(), d in kappa_poly(), k in kappa_poly()) {
        prop_assume!(!d.is_zero() && !k.is_zero());
        let direct = KappaRational::new(n.clone(), d.clone()).unwrap();
        let scaled = KappaRational::new(n * k.clone(), d * k).unwrap();
        prop_assert_eq!(direct, scaled);
    }

    #[test]
    fn lift_project_round_trip(p in zpoly(2)) {
        prop_assert_eq!(project(&lift(&p, 3).unwrap()).unwrap(), p);
    }

    #[test]
    fn lift_is_multiplicative(p in zpoly(2), q in zpoly(2)) {
        let lp = lift(&p, 3).unwrap();
        let lq = lift(&q, 3).unwrap();
        prop_assert_eq!(lift(&p.mul(&q), 3).unwrap(), lp.mul(&lq));
    }

    #[test]
    fn l_vectors_sum_to_zero(m in weight(3, 5)) {
        prop_assert!(l_vector(&m, 4).sum().is_zero());
        let c = char_eigenvalue(&m, 4);
        prop_assert!(c[3].is_zero());
    }

    #[test]
    fn shift_identity_matches_direct(m in weight(3, 3), raising in any::<bool>(), mask in 1usize..15) {
        let idx: Vec<usize> = (0..4).filter(|i| mask >> i & 1 == 1).map(|i| i + 1).collect();
        let s = ShiftVector::new(raising, idx, 4).unwrap();
        match s.apply(&m, 4) {
            Some(t) => prop_assert_eq!(l_shift(&m, &s, 4).unwrap(), l_vector(&t, 4)),
            None => prop_assert!(l_shift(&m, &s, 4).is_err()),
        }
    }

    #[test]
    fn epsilon_is_invariant_under_diagram_flip(m in weight(3, 6)) {
        let flipped = Weight(m.0.iter().rev().cloned().collect());
        prop_assert_eq!(epsilon2(&m, 4), epsilon2(&flipped, 4));
    }

    #[test]
    fn integrals_do_not_raise_weighted_degree(w in weight(2, 3), j in 2usize..=3) {
        let p = ZPolynomial::monomial(w.clone(), KappaRational::one());
        let out = apply_integral(j, &p, 3, &KappaRational::kappa()).unwrap();
        prop_assert!(out.max_weighted_degree() <= w.weighted_degree());
        prop_assert!(out.is_real());
    }

    #[test]
    fn recurrence_coefficients_at_kappa_one(m in 0i64..6, l in 0i64..6, n in 0i64..6) {
        let one = Rational::one();
        let check = |c: KappaRational, lead: i64| -> Result<(), TestCaseError> {
            if lead != 0 {
                prop_assert_eq!(c.eval(&one).unwrap(), one.clone());
            } else {
                prop_assert!(c.is_zero());
            }
            Ok(())
        };
        check(coeff_a(m, n), n)?;
        check(coeff_c(m), m)?;
        check(coeff_d(m, l, n), n)?;
        check(coeff_f(m, l, n), m * n)?;
        check(coeff_g(m, l, n), l)?;
    }
}
