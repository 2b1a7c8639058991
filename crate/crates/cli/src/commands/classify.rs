use std::process::ExitCode;

use serde::Serialize;
use tangential::family::{classify_u, SingularityLabel, Variant};
use tangential::jet::{TruncatedPoly, VarSet};
use tangential::Error;

use crate::config::RunConfig;
use crate::input::Input;
use crate::output::emit;
use crate::CliError;

#[derive(Debug, Serialize)]
struct ClassifyReport {
    #[serde(flatten)]
    label: SingularityLabel,
    /// Legendrian graph parameterization, canonical text per component.
    parameterization: Option<[String; 3]>,
    order: u32,
}

pub fn run(cfg: &RunConfig, input: &str) -> Result<ExitCode, CliError> {
    let order = cfg.order()?;
    let input = Input::load(input)?;
    let (label, parameterization) = match input.family(cfg.cap) {
        Ok(g) => {
            let p = g.legendrian_parameterization();
            let text = std::array::from_fn(|k| p.component(k).to_string());
            (g.classify(order), Some(text))
        }
        Err(CliError::Core(Error::NotTangential(_))) => {
            let u = match &input {
                Input::Family { u } => TruncatedPoly::parse(VarSet::Source, cfg.cap, u)?,
                _ => unreachable!("invariant inputs are tangential by construction"),
            };
            (classify_u(u, order), None)
        }
        Err(e) => return Err(e),
    };
    let code = match label.variant {
        Variant::IndeterminateAtOrder { .. } => 2,
        Variant::NotTangential => 1,
        _ => 0,
    };
    emit(&ClassifyReport { label, parameterization, order }, cfg.format)?;
    Ok(ExitCode::from(code))
}
