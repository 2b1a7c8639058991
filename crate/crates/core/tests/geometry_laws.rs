mod common;

use rand::Rng;
use tangential::family::a1_normal_form_unchecked;
use tangential::geometry::{
    legendrian_lift, render_frame, trace_criminant, Chart, DeformationMode, DeformationParams, FloatMap,
    GridSpec, DEFAULT_CHART_EPS, DEFAULT_CUSP_ANGLE_DEG,
};
use tangential::jet::{rational, MapGerm};

fn float_map(x: &str, y: &str) -> FloatMap {
    FloatMap::from_germ(&MapGerm::parse(8, &[x, y]).unwrap()).unwrap()
}

#[test]
fn determinant_matches_finite_differences() {
    let mut rng = common::rng(11);
    let h = 1e-5;
    for _ in 0..5 {
        let f = FloatMap::from_germ(&common::random_germ(&mut rng, 8, 2, 4, 4)).unwrap();
        let det = f.jacobian_det();
        for _ in 0..100 {
            let (u, v) = (rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            let d = |k: usize, du: f64, dv: f64| {
                (f.project(u + du, v + dv)[k] - f.project(u - du, v - dv)[k]) / (2.0 * h)
            };
            let fd = d(0, h, 0.0) * d(1, 0.0, h) - d(0, 0.0, h) * d(1, h, 0.0);
            let exact = det.eval(u, v);
            assert!((fd - exact).abs() <= 1e-6 * exact.abs().max(1.0), "{fd} vs {exact} at ({u}, {v})");
        }
    }
}

#[test]
fn support_belongs_to_the_criminant() {
    let grid = GridSpec::square(1.0, 256).unwrap();
    for (x, y) in [("xi + t", "t^2"), ("xi + t", "t^2 xi")] {
        let c = trace_criminant(&float_map(x, y), &grid);
        let on_support = c.branches.iter().filter(|b| b.points.iter().all(|p| p[1].abs() < 1e-12)).count();
        assert_eq!(on_support, 1, "{x}, {y}");
    }
}

#[test]
fn lift_charts_agree() {
    let mut rng = common::rng(12);
    let grid = GridSpec::square(1.0, 41).unwrap();
    for _ in 0..20 {
        let f = FloatMap::from_germ(&common::random_germ(&mut rng, 8, 2, 4, 3)).unwrap();
        for s in legendrian_lift(&f, &grid, DEFAULT_CHART_EPS).samples {
            if let (Some(p), Some(q)) = (s.p, s.q) {
                assert!((p * q - 1.0).abs() <= 1e-9);
            }
            if s.chart == Chart::Invalid {
                assert!(s.p.is_none() && s.q.is_none());
            }
        }
    }
    let vertical = legendrian_lift(&float_map("t^2", "t"), &grid, DEFAULT_CHART_EPS);
    assert!(vertical.samples.iter().any(|s| s.chart == Chart::Reciprocal));
}

#[test]
fn counts_are_stable_under_refinement() {
    let counts = |n: usize| {
        let mut out = Vec::new();
        let grid = GridSpec::square(1.0, n).unwrap();
        for (x, y) in [("xi + t", "t^2"), ("xi + t", "t^2 xi")] {
            out.push((trace_criminant(&float_map(x, y), &grid).len(), 0));
        }
        let grid = GridSpec::square(1.5, n).unwrap();
        for a in [rational(-1, 2), rational(1, 4)] {
            let base = a1_normal_form_unchecked(8, &a, &rational(1, 1));
            for lambda in [-0.1, 0.0, 0.1] {
                let frame =
                    render_frame(&base, DeformationParams::beaks(lambda), DeformationMode::Beaks, &grid, DEFAULT_CUSP_ANGLE_DEG)
                        .unwrap();
                out.push((frame.criminant.len(), frame.cusps.len()));
            }
        }
        out
    };
    assert_eq!(counts(256), counts(512));
}
