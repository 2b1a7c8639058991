use std::process::ExitCode;

use clap::{Args, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;
use tangential::family::a1_normal_form_unchecked;
use tangential::geometry::{
    count_cusps, emit_obj, emit_svg, envelope as trace_envelope, fit_cubic, legendrian_lift, render_frame,
    trace_criminant, Cusp, DeformationMode, DeformationParams, FloatMap, GridSpec, SweepSpec,
    DEFAULT_CHART_EPS, DEFAULT_CUSP_ANGLE_DEG,
};
use tangential::jet::parse_rational;

use crate::config::RunConfig;
use crate::input::Input;
use crate::output::emit;
use crate::CliError;

#[derive(Debug, Serialize)]
struct Fit {
    branch: String,
    c: f64,
    rms: f64,
}

#[derive(Debug, Serialize)]
struct EnvelopeSummary {
    map: Vec<String>,
    grid: GridSpec,
    branches: Vec<String>,
    cusps: Vec<Cusp>,
    /// Least-squares `y = c x^3` on the branch reaching farthest from `y = 0`.
    fit: Option<Fit>,
    note: Option<String>,
    svg: String,
    obj: Option<String>,
}

pub fn envelope(cfg: &RunConfig, input: &str, obj: bool, name: &str) -> Result<ExitCode, CliError> {
    let germ = Input::load(input)?.map(cfg.cap)?;
    let grid = cfg.grid_spec()?;
    let map = FloatMap::from_germ(&germ)?;
    let mut criminant = trace_criminant(&map, &grid);
    let cusps = count_cusps(&map, &criminant, DEFAULT_CUSP_ANGLE_DEG);
    criminant.cusps = cusps.iter().map(|c| c.source).collect();
    let env = trace_envelope(&map, &criminant);

    let reach = |pts: &[[f64; 2]]| pts.iter().map(|p| p[1].abs()).fold(0.0, f64::max);
    let fit = env
        .branches
        .iter()
        .max_by(|a, b| reach(&a.points).total_cmp(&reach(&b.points)))
        .filter(|b| reach(&b.points) > 0.0)
        .and_then(|b| fit_cubic(&b.points).map(|(c, rms)| Fit { branch: b.tag.clone(), c, rms }));

    cfg.create_out_dir()?;
    let svg = cfg.out.join(format!("{name}.svg"));
    emit_svg(&env, &svg)?;
    let obj = if obj {
        let path = cfg.out.join(format!("{name}.obj"));
        emit_obj(&legendrian_lift(&map, &grid, DEFAULT_CHART_EPS), &path)?;
        Some(path.display().to_string())
    } else {
        None
    };
    let summary = EnvelopeSummary {
        map: germ.components().iter().map(ToString::to_string).collect(),
        grid,
        branches: env.branches.iter().map(|b| b.tag.clone()).collect(),
        cusps,
        fit,
        note: env.is_empty().then(|| "no criminant in the sampled domain".to_string()),
        svg: svg.display().to_string(),
        obj,
    };
    emit(&summary, cfg.format)?;
    Ok(ExitCode::SUCCESS)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Beaks,
    Versal,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub a: String,
    #[arg(long, allow_hyphen_values = true, default_value = "1")]
    pub b: String,
    #[arg(long, value_enum, default_value_t = Mode::Beaks)]
    pub mode: Mode,
    #[arg(long, allow_hyphen_values = true, default_value_t = -0.25)]
    pub from: f64,
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.25)]
    pub to: f64,
    #[arg(long, default_value_t = 11)]
    pub steps: usize,
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
    pub mu1: f64,
    #[arg(long, allow_hyphen_values = true, default_value_t = 0.0)]
    pub mu2: f64,
}

#[derive(Debug, Serialize)]
struct FrameEntry {
    index: usize,
    file: String,
    params: DeformationParams,
    branches: usize,
    cusps: usize,
}

#[derive(Debug, Serialize)]
struct Manifest {
    mode: DeformationMode,
    a: String,
    b: String,
    grid: GridSpec,
    cusp_angle_deg: f64,
    frames: Vec<FrameEntry>,
}

pub fn sweep(cfg: &RunConfig, args: &SweepArgs) -> Result<ExitCode, CliError> {
    let a = parse_rational(&args.a)?;
    let b = parse_rational(&args.b)?;
    let base = a1_normal_form_unchecked(cfg.cap, &a, &b);
    let mode = match args.mode {
        Mode::Beaks => DeformationMode::Beaks,
        Mode::Versal => DeformationMode::Versal,
    };
    let spec = SweepSpec {
        mu1: args.mu1,
        mu2: args.mu2,
        grid: cfg.grid_spec()?,
        ..SweepSpec::linear(mode, args.from, args.to, args.steps)?
    };
    let params: Vec<DeformationParams> = spec.params().collect();
    let frames = params
        .par_iter()
        .map(|p| render_frame(&base, *p, mode, &spec.grid, spec.cusp_angle_deg))
        .collect::<Result<Vec<_>, _>>()?;

    cfg.create_out_dir()?;
    let mut entries = Vec::with_capacity(frames.len());
    for (index, frame) in frames.iter().enumerate() {
        let file = format!("frame_{index:03}.svg");
        emit_svg(&frame.envelope, cfg.out.join(&file))?;
        entries.push(FrameEntry {
            index,
            file,
            params: frame.params,
            branches: frame.envelope.len(),
            cusps: frame.cusps.len(),
        });
    }
    let manifest = Manifest {
        mode,
        a: a.to_string(),
        b: b.to_string(),
        grid: spec.grid,
        cusp_angle_deg: spec.cusp_angle_deg,
        frames: entries,
    };
    let mut text = serde_json::to_string_pretty(&manifest)?;
    text.push('\n');
    std::fs::write(cfg.out.join("manifest.json"), text)?;
    emit(&manifest, cfg.format)?;
    Ok(ExitCode::SUCCESS)
}
