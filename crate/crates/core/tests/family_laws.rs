use num_traits::{One, Signed, Zero};
use proptest::prelude::*;
use tangential::family::{FamilyGerm, Variant};
use tangential::jet::{rational, Multidegree, Rational, TruncatedPoly, VarSet};

fn nonzero() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=7).prop_filter_map("nonzero", |(n, d)| (n != 0).then(|| rational(n, d)))
}

fn any_rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=7).prop_map(|(n, d)| rational(n, d))
}

fn tail(min_degree: u16) -> impl Strategy<Value = TruncatedPoly> {
    prop::collection::vec(((0u16..=4, 2u16..=6), any_rational()), 0..4).prop_map(move |terms| {
        TruncatedPoly::from_terms(
            VarSet::Source,
            8,
            terms.into_iter().filter_map(|((i, j), c)| {
                (i + j >= min_degree).then(|| (Multidegree::source(i, j), c))
            }),
        )
    })
}

fn sign_of(v: &Variant) -> Option<i8> {
    match v {
        Variant::A1Plus => Some(1),
        Variant::A1Minus => Some(-1),
        _ => None,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn invariant_identity(k1 in nonzero(), alpha in any_rational()) {
        let g = FamilyGerm::from_invariants(8, Rational::zero(), k1.clone(), alpha.clone(), None).unwrap();
        let a = g.invariant_a().unwrap();
        let three = rational(3, 1);
        let rhs = {
            let d = &three * &alpha - rational(2, 1) * &k1;
            &d * &d / (&k1 * &k1)
        };
        prop_assert_eq!(Rational::one() - &three * &a, rhs);
        prop_assert!(a < rational(1, 3) || a == rational(1, 3));
    }

    #[test]
    fn label_sign_matches_a(k1 in nonzero(), alpha in any_rational()) {
        let g = FamilyGerm::from_invariants(8, Rational::zero(), k1.clone(), alpha.clone(), None).unwrap();
        let generic = k1 != alpha && k1 != &alpha * rational(3, 2) && k1 != &alpha * rational(3, 1);
        prop_assume!(generic);
        let label = g.classify(5);
        let a = g.invariant_a().unwrap();
        prop_assert_eq!(sign_of(&label.variant), Some(if a.is_positive() { 1 } else { -1 }));
        prop_assert!(a < rational(1, 3));
    }

    #[test]
    fn high_order_terms_do_not_change_generic_labels(k1 in nonzero(), alpha in any_rational(), extra in tail(4)) {
        let generic = k1 != alpha && k1 != &alpha * rational(3, 2) && k1 != &alpha * rational(3, 1);
        prop_assume!(generic);
        let plain = FamilyGerm::from_invariants(8, Rational::zero(), k1.clone(), alpha.clone(), None).unwrap();
        let perturbed = FamilyGerm::from_invariants(8, Rational::zero(), k1, alpha, Some(extra)).unwrap();
        prop_assert_eq!(plain.classify(5), perturbed.classify(5));
    }

    #[test]
    fn type_one_ignores_cubic_and_higher(k0 in nonzero(), extra in tail(3)) {
        let u = TruncatedPoly::from_terms(VarSet::Source, 8, [(Multidegree::source(0, 2), k0)]);
        let base = FamilyGerm::from_u(u.clone()).unwrap().classify(5);
        let bumped = FamilyGerm::from_u(u.add(&extra).unwrap()).unwrap().classify(5);
        prop_assert_eq!(base.variant, Variant::TypeI);
        prop_assert_eq!(bumped.variant, Variant::TypeI);
    }

    #[test]
    fn parameterization_shape(k0 in any_rational(), k1 in any_rational(), alpha in any_rational(), extra in tail(4)) {
        let g = FamilyGerm::from_invariants(8, k0.clone(), k1, alpha, Some(extra)).unwrap();
        let f = g.legendrian_parameterization();
        prop_assert_eq!(f.component(0), &TruncatedPoly::parse(VarSet::Source, 8, "xi").unwrap());
        let y = f.component(1);
        prop_assert!(y.jet(1).is_zero());
        prop_assert_eq!(y.coeff(&Multidegree::source(0, 2)), k0.clone());
        prop_assert!(y.coeff(&Multidegree::source(2, 0)).is_zero() && y.coeff(&Multidegree::source(1, 1)).is_zero());
        let z = f.component(2);
        prop_assert_eq!(z.jet(1), TruncatedPoly::from_terms(VarSet::Source, 8, [(Multidegree::source(0, 1), &k0 * rational(2, 1))]));
    }
}
