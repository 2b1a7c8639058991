use proptest::prelude::*;
use tangential::jet::{rational, MapGerm, Multidegree, Rational, TruncatedPoly, VarSet};

const CAP: u32 = 8;

fn coeff() -> impl Strategy<Value = Rational> {
    (-6i64..=6, 1i64..=5).prop_map(|(n, d)| rational(n, d))
}

fn jet(vars: VarSet, lo: u16, hi: u16, max_terms: usize) -> impl Strategy<Value = TruncatedPoly> {
    let exps = proptest::collection::vec(0..=hi, vars.arity());
    prop::collection::vec((exps, coeff()), 0..=max_terms).prop_map(move |terms| {
        TruncatedPoly::from_terms(
            vars,
            CAP,
            terms.into_iter().filter_map(|(e, c)| {
                let m = Multidegree::new(vars, &e);
                (m.degree() >= u32::from(lo)).then_some((m, c))
            }),
        )
    })
}

fn source() -> impl Strategy<Value = TruncatedPoly> {
    jet(VarSet::Source, 0, 5, 5)
}

fn germ() -> impl Strategy<Value = MapGerm> {
    prop::collection::vec(jet(VarSet::Source, 1, 3, 3), 3).prop_map(|c| MapGerm::new(c).unwrap())
}

fn target() -> impl Strategy<Value = TruncatedPoly> {
    jet(VarSet::Target, 0, 2, 4)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn ring_laws(p in source(), q in source(), r in source()) {
        prop_assert_eq!(p.add(&q).unwrap(), q.add(&p).unwrap());
        prop_assert_eq!(p.mul(&q).unwrap(), q.mul(&p).unwrap());
        prop_assert_eq!(p.mul(&q).unwrap().mul(&r).unwrap(), p.mul(&q.mul(&r).unwrap()).unwrap());
        prop_assert_eq!(
            p.mul(&q.add(&r).unwrap()).unwrap(),
            p.mul(&q).unwrap().add(&p.mul(&r).unwrap()).unwrap()
        );
        prop_assert!(p.sub(&p).unwrap().is_zero());
    }

    #[test]
    fn leibniz(p in source(), q in source(), var in 0usize..2) {
        let lhs = p.mul(&q).unwrap().derive(var).unwrap();
        let rhs = p.derive(var).unwrap().mul(&q).unwrap().add(&p.mul(&q.derive(var).unwrap()).unwrap()).unwrap();
        prop_assert_eq!(lhs.jet(CAP - 1), rhs.jet(CAP - 1));
    }

    #[test]
    fn composition_is_multiplicative(g1 in target(), g2 in target(), f in germ()) {
        let lhs = g1.mul(&g2).unwrap().compose(f.components()).unwrap();
        let rhs = g1.compose(f.components()).unwrap().mul(&g2.compose(f.components()).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn chain_rule(g in target(), f in germ(), var in 0usize..2) {
        let lhs = g.compose(f.components()).unwrap().derive(var).unwrap();
        let mut rhs = TruncatedPoly::zero(VarSet::Source, CAP);
        for (i, fi) in f.components().iter().enumerate() {
            let dg = g.derive(i).unwrap().compose(f.components()).unwrap();
            rhs = rhs.add(&dg.mul(&fi.derive(var).unwrap()).unwrap()).unwrap();
        }
        prop_assert_eq!(lhs.jet(CAP - 1), rhs.jet(CAP - 1));
    }

    #[test]
    fn jet_truncation_composes(p in source(), m in 0u32..=CAP, n in 0u32..=CAP) {
        prop_assert_eq!(p.jet(m).jet(n), p.jet(m.min(n)));
    }

    #[test]
    fn text_round_trip(p in source()) {
        let back = TruncatedPoly::parse(VarSet::Source, CAP, &p.to_string()).unwrap();
        prop_assert_eq!(back, p);
    }
}

#[test]
fn mixed_variable_sets_are_rejected() {
    let p = TruncatedPoly::parse(VarSet::Source, CAP, "xi").unwrap();
    let q = TruncatedPoly::parse(VarSet::Target, CAP, "x").unwrap();
    assert!(p.add(&q).is_err());
    assert!(p.mul(&q).is_err());
    let r = TruncatedPoly::parse(VarSet::Source, 4, "t").unwrap();
    assert!(p.add(&r).is_err());
}
