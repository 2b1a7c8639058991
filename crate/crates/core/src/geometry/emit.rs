//! Deterministic SVG and OBJ writers.

use std::fmt::Write as _;
use std::path::Path;

use super::{Chart, LiftSurface, PlaneCurveSet};
use crate::error::Result;

const SVG_SIZE: f64 = 512.0;
const SVG_MARGIN: f64 = 16.0;
const PALETTE: [&str; 6] = ["#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#17becf"];

/// Renders the curve set as an SVG 1.1 document, `y` pointing up.
pub fn svg_string(curves: &PlaneCurveSet) -> String {
    let pts = curves.branches.iter().flat_map(|b| b.points.iter()).chain(curves.cusps.iter());
    let (mut lo, mut hi) = ([f64::INFINITY; 2], [f64::NEG_INFINITY; 2]);
    for p in pts.filter(|p| p[0].is_finite() && p[1].is_finite()) {
        for k in 0..2 {
            lo[k] = lo[k].min(p[k]);
            hi[k] = hi[k].max(p[k]);
        }
    }
    if lo[0] > hi[0] {
        (lo, hi) = ([-1.0; 2], [1.0; 2]);
    }
    let span = (hi[0] - lo[0]).max(hi[1] - lo[1]).max(1e-12);
    let scale = (SVG_SIZE - 2.0 * SVG_MARGIN) / span;
    let map = |p: &[f64; 2]| {
        (SVG_MARGIN + (p[0] - lo[0]) * scale, SVG_SIZE - SVG_MARGIN - (p[1] - lo[1]) * scale)
    };

    let mut s = String::new();
    let _ = writeln!(s, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    let _ = writeln!(
        s,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{SVG_SIZE}" height="{SVG_SIZE}" viewBox="0 0 {SVG_SIZE} {SVG_SIZE}">"#
    );
    let _ = writeln!(s, r#"<rect width="100%" height="100%" fill="white"/>"#);
    for (k, b) in curves.branches.iter().enumerate() {
        let mut d = String::new();
        for (n, p) in b.points.iter().enumerate() {
            let (u, v) = map(p);
            let _ = write!(d, "{}{u:.3} {v:.3}", if n == 0 { "M" } else { " L" });
        }
        let _ = writeln!(
            s,
            r#"<path id="{}" d="{d}" fill="none" stroke="{}" stroke-width="1.5"/>"#,
            b.tag,
            PALETTE[k % PALETTE.len()]
        );
    }
    for c in &curves.cusps {
        let (u, v) = map(c);
        let _ = writeln!(s, r#"<circle class="cusp" cx="{u:.3}" cy="{v:.3}" r="4" fill="black"/>"#);
    }
    s.push_str("</svg>\n");
    s
}

pub fn emit_svg(curves: &PlaneCurveSet, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, svg_string(curves))?;
    Ok(())
}

/// Wavefront OBJ of the lifted surface: one `v x y θ` per grid node, `θ`
/// the tangent angle in `(-π/2, π/2]`, and two triangles per grid cell.
/// Cells touching a singular sample are left open.
pub fn obj_string(surface: &LiftSurface) -> String {
    let (nx, ny) = (surface.grid.nx, surface.grid.ny);
    let mut s = String::new();
    for v in &surface.samples {
        let theta = v.angle().unwrap_or(0.0);
        let _ = writeln!(s, "v {:.9} {:.9} {:.9}", v.x, v.y, theta);
    }
    let valid = |i: usize, j: usize| surface.at(i, j).chart != Chart::Invalid;
    for j in 0..ny - 1 {
        for i in 0..nx - 1 {
            if !(valid(i, j) && valid(i + 1, j) && valid(i, j + 1) && valid(i + 1, j + 1)) {
                continue;
            }
            let id = |i: usize, j: usize| j * nx + i + 1;
            let _ = writeln!(s, "f {} {} {}", id(i, j), id(i + 1, j), id(i + 1, j + 1));
            let _ = writeln!(s, "f {} {} {}", id(i, j), id(i + 1, j + 1), id(i, j + 1));
        }
    }
    s
}

pub fn emit_obj(surface: &LiftSurface, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, obj_string(surface))?;
    Ok(())
}
