use serde::Serialize;
use tangential::family::{a1_normal_form_unchecked, classify_u};
use tangential::geometry::{
    count_cusps, envelope as trace_envelope, render_frame, svg_string, trace_criminant, DeformationMode,
    DeformationParams, FloatMap, GridSpec, DEFAULT_CUSP_ANGLE_DEG,
};
use tangential::jet::{parse_rational, TruncatedPoly, VarSet};
use tangential::{DEFAULT_CAP, DEFAULT_ORDER};

/// Largest grid the page may request.
pub const MAX_RESOLUTION: usize = 1024;

#[derive(Serialize)]
struct Picture {
    svg: String,
    branches: usize,
    cusps: usize,
}

fn err(e: impl ToString) -> String {
    e.to_string()
}

fn grid(radius: f64, resolution: usize) -> Result<GridSpec, String> {
    GridSpec::square(radius, resolution.min(MAX_RESOLUTION)).map_err(err)
}

fn parse_u(u: &str) -> Result<TruncatedPoly, String> {
    TruncatedPoly::parse(VarSet::Source, DEFAULT_CAP, u).map_err(err)
}

pub fn classify(u: &str) -> Result<String, String> {
    serde_json::to_string(&classify_u(parse_u(u)?, DEFAULT_ORDER)).map_err(err)
}

pub fn envelope(u: &str, radius: f64, resolution: usize) -> Result<String, String> {
    let family = tangential::family::FamilyGerm::from_u(parse_u(u)?).map_err(err)?;
    let map = FloatMap::from_germ(&family.family_map()).map_err(err)?;
    let mut criminant = trace_criminant(&map, &grid(radius, resolution)?);
    let cusps = count_cusps(&map, &criminant, DEFAULT_CUSP_ANGLE_DEG);
    criminant.cusps = cusps.iter().map(|c| c.source).collect();
    let env = trace_envelope(&map, &criminant);
    let picture = Picture { svg: svg_string(&env), branches: env.len(), cusps: cusps.len() };
    serde_json::to_string(&picture).map_err(err)
}

pub fn beaks_frame(a: &str, b: &str, lambda: f64, radius: f64, resolution: usize) -> Result<String, String> {
    let (a, b) = (parse_rational(a).map_err(err)?, parse_rational(b).map_err(err)?);
    let base = a1_normal_form_unchecked(DEFAULT_CAP, &a, &b);
    let frame = render_frame(
        &base,
        DeformationParams::beaks(lambda),
        DeformationMode::Beaks,
        &grid(radius, resolution)?,
        DEFAULT_CUSP_ANGLE_DEG,
    )
    .map_err(err)?;
    let picture =
        Picture { svg: svg_string(&frame.envelope), branches: frame.envelope.len(), cusps: frame.cusps.len() };
    serde_json::to_string(&picture).map_err(err)
}
