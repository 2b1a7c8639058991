mod common;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::Rng;
use tangential::jet::MapGerm;
use tangential::linalg::Echelon;
use tangential::tangent::{build_extended, build_reduced, JetLayout, SpaceKind, TangentSpaceBasis};

const SAMPLES: usize = 12;

fn germs(seed: u64) -> Vec<MapGerm> {
    let mut rng = common::rng(seed);
    (0..SAMPLES).map(|_| common::random_germ(&mut rng, 8, 3, 3, 3)).collect()
}

fn rows(t: &TangentSpaceBasis) -> Vec<Vec<BigRational>> {
    t.echelon().rows().map(|r| r.iter().cloned().map(BigRational::from_integer).collect()).collect()
}

/// Truncates a row flattened in `from` to the columns of `to`.
fn restrict(row: &[BigRational], from: JetLayout, to: JetLayout) -> Vec<BigRational> {
    let mut out = vec![BigRational::from_integer(BigInt::from(0)); to.dim()];
    for (c, v) in row.iter().enumerate() {
        let (slot, m) = from.monomial_at(c);
        if let Some(d) = to.column(slot, &m) {
            out[d] = v.clone();
        }
    }
    out
}

#[test]
fn truncating_a_higher_order_space_contains_the_lower_one() {
    for f in germs(1) {
        for kind in [SpaceKind::AExtended, SpaceKind::AStarExtended, SpaceKind::AStarReduced] {
            let (lo, hi) = (build_extended(&f, kind, 3).unwrap(), build_extended(&f, kind, 5).unwrap());
            let mut projected = Echelon::new(lo.layout().dim());
            for r in rows(&hi) {
                projected.insert_rational(&restrict(&r, hi.layout(), lo.layout()));
            }
            for r in rows(&lo) {
                assert!(projected.contains(&r), "{f} {kind:?}");
            }
        }
    }
}

#[test]
fn redundant_generators_do_not_change_rank() {
    let mut rng = common::rng(2);
    for f in germs(2) {
        let t = build_extended(&f, SpaceKind::AStarExtended, 4).unwrap();
        let basis = rows(&t);
        let mut e = t.echelon().clone();
        for _ in 0..5 {
            let mut combo = vec![BigRational::from_integer(BigInt::from(0)); t.ambient_dim()];
            for r in &basis {
                let k = BigRational::from_integer(BigInt::from(rng.gen_range(-3i64..=3)));
                for (x, y) in combo.iter_mut().zip(r) {
                    *x += &k * y;
                }
            }
            assert!(e.insert_rational(&combo).is_none());
        }
        assert_eq!(e.rank(), t.rank());
    }
}

#[test]
fn fibered_space_lies_in_the_full_one() {
    for f in germs(3) {
        let full = build_extended(&f, SpaceKind::AExtended, 4).unwrap();
        let fibered = build_extended(&f, SpaceKind::AStarExtended, 4).unwrap();
        let reduced = build_reduced(&f, 4).unwrap();
        assert!(fibered.rank() <= full.rank());
        for r in rows(&fibered) {
            assert!(full.echelon().contains(&r));
        }
        for r in rows(&reduced) {
            assert!(fibered.echelon().contains(&r));
        }
    }
}

#[test]
fn construction_is_deterministic() {
    for f in germs(4).into_iter().take(4) {
        let a = build_extended(&f, SpaceKind::AStarExtended, 5).unwrap();
        let b = build_extended(&f, SpaceKind::AStarExtended, 5).unwrap();
        assert_eq!(a.echelon(), b.echelon());
        assert_eq!(a.provenance(), b.provenance());
    }
}

#[test]
fn ranks_match_the_brute_force_oracle() {
    let mut rng = common::rng(5);
    for _ in 0..10 {
        let terms: Vec<Vec<((u32, u32), i64)>> = (0..3)
            .map(|_| {
                (0..rng.gen_range(1..=3))
                    .map(|_| {
                        let d = rng.gen_range(1..=3u32);
                        let i = rng.gen_range(0..=d);
                        ((i, d - i), rng.gen_range(1..=4i64) * if rng.gen_bool(0.5) { 1 } else { -1 })
                    })
                    .collect()
            })
            .collect();
        let f = common::germ_from_terms(8, &terms);
        let naive: [common::oracle::Poly; 3] = std::array::from_fn(|k| common::oracle::from_terms(&terms[k]));
        for w in 1..=3 {
            assert_eq!(
                build_extended(&f, SpaceKind::AStarExtended, w).unwrap().rank(),
                common::oracle::rank(&naive, common::oracle::Kind::Fibered, w),
                "{f} at {w}"
            );
        }
    }
}
