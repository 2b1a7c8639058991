//! Zero-level polylines of a scalar field on a regular grid.
//!
//! Crossings are placed on cell edges by linear interpolation, polished by a
//! few false-position steps against the field itself. Cells with
//! four crossings are resolved by pairing the crossings so that each chord
//! best follows the level-set tangent at its ends; this keeps transversal
//! branches apart where two zero curves cross inside a cell.

use std::collections::BTreeMap;

use super::{GridSpec, Point, Polyline};

/// A smooth scalar field with an analytic gradient.
pub trait ScalarField {
    fn value(&self, xi: f64, t: f64) -> f64;
    fn gradient(&self, xi: f64, t: f64) -> [f64; 2];
}

impl ScalarField for super::FloatPoly {
    fn value(&self, xi: f64, t: f64) -> f64 {
        self.eval(xi, t)
    }

    fn gradient(&self, xi: f64, t: f64) -> [f64; 2] {
        [self.derive(0).eval(xi, t), self.derive(1).eval(xi, t)]
    }
}

/// Edge key: `(kind, i, j)` with kind 0 = horizontal from node (i, j) to
/// (i+1, j), kind 1 = vertical from (i, j) to (i, j+1).
type EdgeKey = (u8, usize, usize);

pub fn zero_level_polylines<F: ScalarField + ?Sized>(field: &F, grid: &GridSpec) -> Vec<Polyline> {
    let (nx, ny) = (grid.nx, grid.ny);
    let values: Vec<f64> = (0..ny)
        .flat_map(|j| (0..nx).map(move |i| (i, j)))
        .map(|(i, j)| field.value(grid.xi(i), grid.t(j)))
        .collect();
    let val = |i: usize, j: usize| values[j * nx + i];
    let pos = |v: f64| v >= 0.0;

    let mut points: BTreeMap<EdgeKey, Point> = BTreeMap::new();
    let mut crossing = |key: EdgeKey| -> Option<Point> {
        let (kind, i, j) = key;
        let (i2, j2) = if kind == 0 { (i + 1, j) } else { (i, j + 1) };
        let (a, b) = (val(i, j), val(i2, j2));
        if pos(a) == pos(b) {
            return None;
        }
        let (p0, p1) = ([grid.xi(i), grid.t(j)], [grid.xi(i2), grid.t(j2)]);
        let at = |s: f64| [p0[0] + s * (p1[0] - p0[0]), p0[1] + s * (p1[1] - p0[1])];
        let s = edge_root(|s| field.value(at(s)[0], at(s)[1]), a, b);
        let p = at(s);
        points.insert(key, p);
        Some(p)
    };

    let mut segments: Vec<(EdgeKey, EdgeKey)> = Vec::new();
    for j in 0..ny - 1 {
        for i in 0..nx - 1 {
            // bottom, right, top, left
            let keys = [(0, i, j), (1, i + 1, j), (0, i, j + 1), (1, i, j)];
            let hits: Vec<(EdgeKey, Point)> =
                keys.iter().filter_map(|&k| crossing(k).map(|p| (k, p))).collect();
            match hits.len() {
                2 => segments.push((hits[0].0, hits[1].0)),
                4 => {
                    let [p0, p1, p2, p3] = [hits[0].1, hits[1].1, hits[2].1, hits[3].1];
                    let pairing = resolve_saddle(field, [p0, p1, p2, p3]);
                    for (a, b) in pairing {
                        segments.push((hits[a].0, hits[b].0));
                    }
                }
                _ => {}
            }
        }
    }
    link(&segments, &points)
}

/// Root of `g` on `[0, 1]` given `g(0) = a`, `g(1) = b` of opposite signs,
/// by the Illinois variant of false position. The first iterate is the
/// linear interpolant.
fn edge_root(g: impl Fn(f64) -> f64, a: f64, b: f64) -> f64 {
    let (mut lo, mut hi, mut glo, mut ghi) = (0.0, 1.0, a, b);
    let mut side = 0i8;
    let mut s = glo / (glo - ghi);
    for _ in 0..32 {
        s = (lo * ghi - hi * glo) / (ghi - glo);
        let gs = g(s);
        if gs == 0.0 || hi - lo < 1e-14 {
            break;
        }
        if (gs >= 0.0) == (glo >= 0.0) {
            lo = s;
            glo = gs;
            if side == -1 {
                ghi /= 2.0;
            }
            side = -1;
        } else {
            hi = s;
            ghi = gs;
            if side == 1 {
                glo /= 2.0;
            }
            side = 1;
        }
    }
    s
}

/// Picks among the three perfect matchings of the four crossings.
fn resolve_saddle<F: ScalarField + ?Sized>(field: &F, p: [Point; 4]) -> [(usize, usize); 2] {
    let tangent = |q: Point| {
        let g = field.gradient(q[0], q[1]);
        let n = g[0].hypot(g[1]);
        if n == 0.0 {
            [0.0, 0.0]
        } else {
            [-g[1] / n, g[0] / n]
        }
    };
    let tangents = p.map(tangent);
    let misfit = |a: usize, b: usize| {
        let d = [p[b][0] - p[a][0], p[b][1] - p[a][1]];
        let n = d[0].hypot(d[1]);
        if n == 0.0 {
            return 0.0;
        }
        let d = [d[0] / n, d[1] / n];
        let cross = |u: [f64; 2]| (u[0] * d[1] - u[1] * d[0]).abs();
        cross(tangents[a]) + cross(tangents[b])
    };
    // the first two candidates are the corner-cutting pairings, the last one crosses
    let candidates = [[(0, 1), (2, 3)], [(0, 3), (1, 2)], [(0, 2), (1, 3)]];
    let score = |c: &[(usize, usize); 2]| misfit(c[0].0, c[0].1) + misfit(c[1].0, c[1].1);
    let mut best = candidates[0];
    for c in &candidates[1..] {
        if score(c) < score(&best) - 1e-12 {
            best = *c;
        }
    }
    best
}

/// Chains segments sharing edge crossings into polylines: open chains first
/// (starting from boundary ends in edge order), then closed loops.
fn link(segments: &[(EdgeKey, EdgeKey)], points: &BTreeMap<EdgeKey, Point>) -> Vec<Polyline> {
    let mut adj: BTreeMap<EdgeKey, Vec<usize>> = BTreeMap::new();
    for (s, (a, b)) in segments.iter().enumerate() {
        adj.entry(*a).or_default().push(s);
        adj.entry(*b).or_default().push(s);
    }
    let mut used = vec![false; segments.len()];
    let mut out = Vec::new();
    let walk = |start: EdgeKey, used: &mut Vec<bool>| -> Option<Polyline> {
        let mut chain = vec![points[&start]];
        let mut at = start;
        loop {
            let next = adj[&at].iter().copied().find(|&s| !used[s]);
            let Some(s) = next else { break };
            used[s] = true;
            let (a, b) = segments[s];
            at = if a == at { b } else { a };
            chain.push(points[&at]);
            if at == start {
                break;
            }
        }
        (chain.len() >= 2).then_some(chain)
    };
    let ends: Vec<EdgeKey> =
        adj.iter().filter(|(_, s)| s.len() == 1).map(|(k, _)| *k).collect();
    for e in ends {
        if adj[&e].iter().all(|&s| used[s]) {
            continue;
        }
        if let Some(c) = walk(e, &mut used) {
            out.push(c);
        }
    }
    let keys: Vec<EdgeKey> = adj.keys().copied().collect();
    for k in keys {
        if adj[&k].iter().any(|&s| !used[s]) {
            if let Some(c) = walk(k, &mut used) {
                out.push(c);
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::FloatPoly;

    fn grid(n: usize) -> GridSpec {
        GridSpec::new([-1.0, 1.0], [-1.0, 1.0], n, n).unwrap()
    }

    #[test]
    fn circle_is_one_closed_loop() {
        // ξ² + t² − 1/4
        let f = FloatPoly::from_terms([([2, 0], 1.0), ([0, 2], 1.0), ([0, 0], -0.25)]);
        let lines = zero_level_polylines(&f, &grid(64));
        assert_eq!(lines.len(), 1);
        let l = &lines[0];
        assert_eq!(l.first(), l.last());
        for p in l {
            assert!((p[0].hypot(p[1]) - 0.5).abs() < 1e-3);
        }
    }

    #[test]
    fn crossing_lines_stay_separate() {
        // t (2ξ − t)
        let f = FloatPoly::from_terms([([1, 1], 2.0), ([0, 2], -1.0)]);
        let lines = zero_level_polylines(&f, &grid(128));
        assert_eq!(lines.len(), 2);
        for l in &lines {
            let horizontal = l.iter().all(|p| p[1].abs() < 1e-2);
            let slanted = l.iter().all(|p| (p[1] - 2.0 * p[0]).abs() < 1e-2);
            assert!(horizontal || slanted, "mixed branch");
        }
    }

    #[test]
    fn no_zero_set() {
        assert!(zero_level_polylines(&FloatPoly::constant(1.0), &grid(16)).is_empty());
    }
}
