//! Floating-point geometry of families and their Legendrian graphs:
//! criminants, envelopes, slope lifts, deformation sweeps, cusps, and
//! SVG/OBJ output.

mod deform;
mod emit;
mod envelope;
mod fpoly;
mod lift;
mod marching;

pub use deform::{apply_deformation, render_frame, sweep, DeformationMode, DeformationParams, Frame, SweepSpec};
pub use emit::{emit_obj, emit_svg, obj_string, svg_string};
pub use envelope::{
    count_cusps, envelope, exact_jacobian_det, fit_cubic, jacobian_det, trace_criminant, Cusp,
    DEFAULT_CUSP_ANGLE_DEG,
};
pub use fpoly::{FloatMap, FloatPoly};
pub use lift::{legendrian_lift, Chart, LiftSample, LiftSurface, DEFAULT_CHART_EPS};
pub use marching::{zero_level_polylines, ScalarField};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub type Point = [f64; 2];
pub type Polyline = Vec<Point>;

pub const DEFAULT_RESOLUTION: usize = 512;

/// Rectangle in the (ξ, t) plane sampled by `nx × ny` nodes.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct GridSpec {
    pub xi_range: [f64; 2],
    pub t_range: [f64; 2],
    pub nx: usize,
    pub ny: usize,
}

impl GridSpec {
    pub fn new(xi_range: [f64; 2], t_range: [f64; 2], nx: usize, ny: usize) -> Result<Self> {
        if nx < 2 || ny < 2 {
            return Err(Error::Usage(format!("grid resolution must be at least 2, got {nx}x{ny}")));
        }
        let ok = |r: [f64; 2]| r[0].is_finite() && r[1].is_finite() && r[0] < r[1];
        if !ok(xi_range) || !ok(t_range) {
            return Err(Error::Usage("grid rectangle is degenerate".into()));
        }
        Ok(GridSpec { xi_range, t_range, nx, ny })
    }

    /// Square `[-r, r]²` at `n × n`.
    pub fn square(r: f64, n: usize) -> Result<Self> {
        Self::new([-r, r], [-r, r], n, n)
    }

    pub fn xi(&self, i: usize) -> f64 {
        lerp(self.xi_range, i, self.nx)
    }

    pub fn t(&self, j: usize) -> f64 {
        lerp(self.t_range, j, self.ny)
    }

    /// Largest cell diagonal.
    pub fn cell_diameter(&self) -> f64 {
        let dx = (self.xi_range[1] - self.xi_range[0]) / (self.nx - 1) as f64;
        let dt = (self.t_range[1] - self.t_range[0]) / (self.ny - 1) as f64;
        dx.hypot(dt)
    }

    pub fn with_resolution(&self, n: usize) -> Result<Self> {
        Self::new(self.xi_range, self.t_range, n, n)
    }
}

impl Default for GridSpec {
    fn default() -> Self {
        GridSpec::square(1.0, DEFAULT_RESOLUTION).expect("valid default grid")
    }
}

fn lerp(r: [f64; 2], i: usize, n: usize) -> f64 {
    if i + 1 == n {
        r[1]
    } else {
        r[0] + (r[1] - r[0]) * i as f64 / (n - 1) as f64
    }
}

/// A tagged polyline.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Branch {
    pub tag: String,
    pub points: Polyline,
}

/// Polylines plus detected cusp points, in either source or target coordinates.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct PlaneCurveSet {
    pub branches: Vec<Branch>,
    pub cusps: Vec<Point>,
}

impl PlaneCurveSet {
    pub fn is_empty(&self) -> bool {
        self.branches.is_empty()
    }

    pub fn len(&self) -> usize {
        self.branches.len()
    }
}
