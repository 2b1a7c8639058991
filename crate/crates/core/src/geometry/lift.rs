use serde::Serialize;

use super::{FloatMap, GridSpec};

/// Relative threshold below which `∂_t x` counts as vanishing against `∂_t y`.
pub const DEFAULT_CHART_EPS: f64 = 1e-8;

/// Which affine chart of the projective slope line a sample lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Chart {
    /// `p = ∂_t y / ∂_t x`.
    Affine,
    /// `q = ∂_t x / ∂_t y`, used near vertical tangents.
    Reciprocal,
    /// Both derivatives vanish; the family curve is singular here.
    Invalid,
}

/// A point of the Legendrian graph with its slope in whichever charts are valid.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct LiftSample {
    pub xi: f64,
    pub t: f64,
    pub x: f64,
    pub y: f64,
    pub chart: Chart,
    pub p: Option<f64>,
    pub q: Option<f64>,
}

impl LiftSample {
    /// Tangent direction as an angle in `(-π/2, π/2]`, or `None` if singular.
    pub fn angle(&self) -> Option<f64> {
        match self.chart {
            Chart::Affine => self.p.map(f64::atan),
            Chart::Reciprocal => {
                let q = self.q?;
                let a = std::f64::consts::FRAC_PI_2 - q.atan();
                Some(if a > std::f64::consts::FRAC_PI_2 { a - std::f64::consts::PI } else { a })
            }
            Chart::Invalid => None,
        }
    }
}

/// Lift sampled on a grid, row-major in `t` then `ξ`.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LiftSurface {
    pub grid: GridSpec,
    pub samples: Vec<LiftSample>,
}

impl LiftSurface {
    pub fn at(&self, i: usize, j: usize) -> &LiftSample {
        &self.samples[j * self.grid.nx + i]
    }
}

/// Samples the Legendrian lift of the family `t ↦ (x(ξ, t), y(ξ, t))`.
pub fn legendrian_lift(map: &FloatMap, grid: &GridSpec, eps: f64) -> LiftSurface {
    let comps = map.components();
    let (xt, yt) = (comps[0].derive(1), comps[1].derive(1));
    let mut samples = Vec::with_capacity(grid.nx * grid.ny);
    for j in 0..grid.ny {
        for i in 0..grid.nx {
            let (xi, t) = (grid.xi(i), grid.t(j));
            let [x, y] = map.project(xi, t);
            let (dx, dy) = (xt.eval(xi, t), yt.eval(xi, t));
            let p = (dx != 0.0).then(|| dy / dx);
            let q = (dy != 0.0).then(|| dx / dy);
            let chart = if dx == 0.0 && dy == 0.0 {
                Chart::Invalid
            } else if dx.abs() < eps * dy.abs() {
                Chart::Reciprocal
            } else {
                Chart::Affine
            };
            samples.push(LiftSample { xi, t, x, y, chart, p, q });
        }
    }
    LiftSurface { grid: *grid, samples }
}
