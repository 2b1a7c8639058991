use serde::Serialize;

use super::marching::zero_level_polylines;
use super::{Branch, FloatMap, FloatPoly, GridSpec, PlaneCurveSet, Point};
use crate::error::Result;
use crate::jet::{MapGerm, TruncatedPoly};

pub const DEFAULT_CUSP_ANGLE_DEG: f64 = 2.0;

const PROJECTION_TOL: f64 = 1e-12;

/// Exact Jacobian determinant of the (x, y) part of `f`, computed at twice
/// the cap so that polynomial inputs lose nothing to truncation.
pub fn exact_jacobian_det(f: &MapGerm) -> Result<TruncatedPoly> {
    let planar = f.planar_projection()?.with_cap(2 * f.cap());
    let (x, y) = (planar.component(0), planar.component(1));
    let lhs = x.derive(0)?.mul(&y.derive(1)?)?;
    let rhs = x.derive(1)?.mul(&y.derive(0)?)?;
    lhs.sub(&rhs)
}

pub fn jacobian_det(map: &FloatMap) -> FloatPoly {
    map.jacobian_det()
}

/// Critical set of the planar projection, as source-plane polylines.
pub fn trace_criminant(map: &FloatMap, grid: &GridSpec) -> PlaneCurveSet {
    let det = map.jacobian_det();
    let branches = zero_level_polylines(&det, grid)
        .into_iter()
        .enumerate()
        .map(|(k, points)| Branch { tag: format!("branch-{k}"), points })
        .collect();
    PlaneCurveSet { branches, cusps: Vec::new() }
}

/// Image of a criminant under the planar projection; tags are kept.
pub fn envelope(map: &FloatMap, criminant: &PlaneCurveSet) -> PlaneCurveSet {
    let image = |p: &Point| map.project(p[0], p[1]);
    PlaneCurveSet {
        branches: criminant
            .branches
            .iter()
            .map(|b| Branch { tag: b.tag.clone(), points: b.points.iter().map(image).collect() })
            .collect(),
        cusps: criminant.cusps.iter().map(image).collect(),
    }
}

/// A criminant point where the kernel of the Jacobian is tangent to the criminant.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Cusp {
    pub tag: String,
    pub source: Point,
    pub target: Point,
    /// Angle between the kernel and the criminant at the located point.
    pub angle_deg: f64,
}

/// Unit kernel direction of a rank-one 2×2 matrix.
fn kernel(j: [[f64; 2]; 2]) -> Option<[f64; 2]> {
    let a = [-j[0][1], j[0][0]];
    let b = [-j[1][1], j[1][0]];
    let (na, nb) = (a[0].hypot(a[1]), b[0].hypot(b[1]));
    let (k, n) = if na >= nb { (a, na) } else { (b, nb) };
    (n > 1e-12).then(|| [k[0] / n, k[1] / n])
}

struct CuspProbe<'a> {
    map: &'a FloatMap,
    det: FloatPoly,
    grad: [FloatPoly; 2],
}

impl CuspProbe<'_> {
    /// Pulls a point near the criminant onto it by Newton steps along `∇det`.
    /// `None` if the steps do not settle on a regular point of the criminant.
    fn project(&self, mut p: Point) -> Option<Point> {
        for _ in 0..6 {
            let g = [self.grad[0].eval(p[0], p[1]), self.grad[1].eval(p[0], p[1])];
            let n2 = g[0] * g[0] + g[1] * g[1];
            if n2 < 1e-24 {
                return None;
            }
            let d = self.det.eval(p[0], p[1]) / n2;
            p = [p[0] - d * g[0], p[1] - d * g[1]];
            if (d * d * n2).sqrt() < PROJECTION_TOL {
                return Some(p);
            }
        }
        None
    }

    /// Sine of the angle between the kernel and the criminant at `p`, i.e. the
    /// cosine between the kernel and `∇det`, with the kernel oriented along `reference`.
    fn measure(&self, p: Point, reference: Option<[f64; 2]>) -> Option<(f64, [f64; 2])> {
        let mut k = kernel(self.map.jacobian(p[0], p[1]))?;
        if let Some(r) = reference {
            if k[0] * r[0] + k[1] * r[1] < 0.0 {
                k = [-k[0], -k[1]];
            }
        }
        let g = [self.grad[0].eval(p[0], p[1]), self.grad[1].eval(p[0], p[1])];
        let n = g[0].hypot(g[1]);
        (n > 1e-12).then(|| ((g[0] * k[0] + g[1] * k[1]) / n, k))
    }
}

/// Finds criminant points where the kernel becomes tangent to the
/// criminant, i.e. the cusps of the envelope.
///
/// Each sign change of the kernel/gradient cosine along a polyline is
/// refined by bisection, with midpoints projected back onto the criminant,
/// and accepted if the refined angle is below `angle_deg`. Sign flips across
/// rank drops or singular criminant points never refine below the threshold
/// and are discarded.
pub fn count_cusps(map: &FloatMap, criminant: &PlaneCurveSet, angle_deg: f64) -> Vec<Cusp> {
    let det = map.jacobian_det();
    let grad = [det.derive(0), det.derive(1)];
    let probe = CuspProbe { map, det, grad };
    let tol = angle_deg.to_radians().sin();
    let mut out = Vec::new();
    for branch in &criminant.branches {
        let mut prev: Option<(Point, f64, [f64; 2])> = None;
        for &p in &branch.points {
            let cur = probe.measure(p, prev.map(|(_, _, k)| k));
            let Some((h, k)) = cur else {
                prev = None;
                continue;
            };
            if let Some((q, hq, kq)) = prev {
                if (hq > 0.0 && h <= 0.0) || (hq < 0.0 && h >= 0.0) {
                    if let Some(c) = refine(&probe, q, hq, kq, p, tol) {
                        let target = map.project(c.0[0], c.0[1]);
                        out.push(Cusp {
                            tag: branch.tag.clone(),
                            source: c.0,
                            target,
                            angle_deg: c.1.abs().asin().to_degrees(),
                        });
                    }
                }
            }
            prev = Some((p, h, k));
        }
    }
    out
}

fn refine(
    probe: &CuspProbe,
    mut a: Point,
    mut ha: f64,
    ka: [f64; 2],
    mut b: Point,
    tol: f64,
) -> Option<(Point, f64)> {
    let mut best = (a, ha);
    for _ in 0..40 {
        let mid = [(a[0] + b[0]) / 2.0, (a[1] + b[1]) / 2.0];
        let m = probe.project(mid)?;
        let (hm, _) = probe.measure(m, Some(ka))?;
        if hm.abs() < best.1.abs() {
            best = (m, hm);
        }
        if hm == 0.0 {
            break;
        }
        if (ha > 0.0) == (hm > 0.0) {
            a = mid;
            ha = hm;
        } else {
            b = mid;
        }
    }
    (best.1.abs() < tol).then_some(best)
}

/// Least-squares `c` in `y = c·x³` together with the RMS residual.
pub fn fit_cubic(points: &[Point]) -> Option<(f64, f64)> {
    let (num, den) = points
        .iter()
        .fold((0.0, 0.0), |(n, d), p| (n + p[0].powi(3) * p[1], d + p[0].powi(6)));
    if den == 0.0 {
        return None;
    }
    let c = num / den;
    let rss: f64 = points.iter().map(|p| (p[1] - c * p[0].powi(3)).powi(2)).sum();
    Some((c, (rss / points.len() as f64).sqrt()))
}

#[cfg(test)]
fn det_at(det: &FloatPoly, p: Point) -> f64 {
    det.eval(p[0], p[1])
}
