use serde::{Deserialize, Serialize};

use super::envelope::{count_cusps, envelope, trace_criminant, Cusp, DEFAULT_CUSP_ANGLE_DEG};
use super::{FloatMap, FloatPoly, GridSpec, PlaneCurveSet};
use crate::error::{Error, Result};
use crate::jet::MapGerm;

/// Coefficients of the unfolding `(x + μ₁z, y + λt + μ₂z, z)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct DeformationParams {
    pub lambda: f64,
    pub mu1: f64,
    pub mu2: f64,
}

impl DeformationParams {
    pub fn beaks(lambda: f64) -> Self {
        DeformationParams { lambda, mu1: 0.0, mu2: 0.0 }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum DeformationMode {
    /// All three parameters are used.
    Versal,
    /// Only `λ`; the direction of projection is left unchanged.
    Beaks,
}

/// Deforms a three-component base map. `z` is the base's third component
/// pulled back to the source, so `μ` terms move the map along it.
pub fn apply_deformation(base: &MapGerm, d: DeformationParams, mode: DeformationMode) -> Result<FloatMap> {
    if base.arity() != 3 {
        return Err(Error::Arity { expected: 3, got: base.arity() });
    }
    let f = FloatMap::from_germ(base)?;
    let d = match mode {
        DeformationMode::Versal => d,
        DeformationMode::Beaks => DeformationParams::beaks(d.lambda),
    };
    let [x, y, z] = [0, 1, 2].map(|k| f.components()[k].clone());
    let t = FloatPoly::from_terms([([0, 1], 1.0)]);
    FloatMap::new(vec![
        x.add(&z.scale(d.mu1)),
        y.add(&t.scale(d.lambda)).add(&z.scale(d.mu2)),
        z,
    ])
}

/// A one-parameter sweep over `λ` with fixed `μ₁, μ₂`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepSpec {
    pub mode: DeformationMode,
    pub lambdas: Vec<f64>,
    pub mu1: f64,
    pub mu2: f64,
    pub grid: GridSpec,
    pub cusp_angle_deg: f64,
}

impl SweepSpec {
    /// `steps` evenly spaced values of `λ` from `lo` to `hi` inclusive.
    pub fn linear(mode: DeformationMode, lo: f64, hi: f64, steps: usize) -> Result<Self> {
        if steps == 0 || !lo.is_finite() || !hi.is_finite() || lo > hi {
            return Err(Error::Usage(format!("bad sweep range [{lo}, {hi}] with {steps} steps")));
        }
        let lambdas = match steps {
            1 => vec![lo],
            _ => {
                let n = (steps - 1) as f64;
                (0..steps).map(|k| (lo * (n - k as f64) + hi * k as f64) / n).collect()
            }
        };
        Ok(SweepSpec { mode, lambdas, ..Self::base() })
    }

    pub fn params(&self) -> impl Iterator<Item = DeformationParams> + '_ {
        self.lambdas.iter().map(|&lambda| DeformationParams { lambda, mu1: self.mu1, mu2: self.mu2 })
    }
}

impl Default for SweepSpec {
    /// Beaks sweep over `λ ∈ [-0.25, 0.25]` in 11 steps.
    fn default() -> Self {
        Self::linear(DeformationMode::Beaks, -0.25, 0.25, 11).expect("valid range")
    }
}

impl SweepSpec {
    fn base() -> Self {
        SweepSpec {
            mode: DeformationMode::Beaks,
            lambdas: Vec::new(),
            mu1: 0.0,
            mu2: 0.0,
            grid: GridSpec::default(),
            cusp_angle_deg: DEFAULT_CUSP_ANGLE_DEG,
        }
    }
}

/// Criminant, envelope and cusps of one deformed map.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Frame {
    pub params: DeformationParams,
    pub criminant: PlaneCurveSet,
    pub envelope: PlaneCurveSet,
    pub cusps: Vec<Cusp>,
}

pub fn render_frame(
    base: &MapGerm,
    params: DeformationParams,
    mode: DeformationMode,
    grid: &GridSpec,
    cusp_angle_deg: f64,
) -> Result<Frame> {
    let map = apply_deformation(base, params, mode)?;
    let mut criminant = trace_criminant(&map, grid);
    let cusps = count_cusps(&map, &criminant, cusp_angle_deg);
    criminant.cusps = cusps.iter().map(|c| c.source).collect();
    let envelope = envelope(&map, &criminant);
    let params = match mode {
        DeformationMode::Versal => params,
        DeformationMode::Beaks => DeformationParams::beaks(params.lambda),
    };
    Ok(Frame { params, criminant, envelope, cusps })
}

/// Renders every frame of the sweep in order.
pub fn sweep(base: &MapGerm, spec: &SweepSpec) -> Result<Vec<Frame>> {
    spec.params()
        .map(|p| render_frame(base, p, spec.mode, &spec.grid, spec.cusp_angle_deg))
        .collect()
}
