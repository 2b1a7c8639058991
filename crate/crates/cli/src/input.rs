//! JSON inputs describing a family or a planar map.

use serde::Deserialize;
use tangential::family::{a1_normal_form_unchecked, FamilyGerm};
use tangential::jet::{parse_rational, MapGerm, Rational, TruncatedPoly, VarSet};

use crate::CliError;

/// A rational given either as text (`"1/5"`) or as a JSON number.
#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum Number {
    Text(String),
    Int(i64),
    Float(f64),
}

impl Number {
    pub fn to_rational(&self) -> Result<Rational, CliError> {
        let text = match self {
            Number::Text(s) => s.clone(),
            Number::Int(i) => i.to_string(),
            Number::Float(x) => x.to_string(),
        };
        Ok(parse_rational(&text)?)
    }
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct NormalFormParams {
    pub a: Number,
    pub b: Number,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(untagged)]
pub enum Input {
    Family { u: String },
    Invariants { k0: Number, k1: Number, alpha: Number, higher: Option<String> },
    Map { map: Vec<String> },
    NormalForm { normal_form: NormalFormParams },
}

impl Input {
    /// Reads inline JSON (text starting with `{`) or a JSON file.
    pub fn load(arg: &str) -> Result<Self, CliError> {
        let text = if arg.trim_start().starts_with('{') {
            arg.to_string()
        } else {
            std::fs::read_to_string(arg)?
        };
        serde_json::from_str(&text).map_err(|e| CliError::Input(format!("unrecognized input: {e}")))
    }

    pub fn family(&self, cap: u32) -> Result<FamilyGerm, CliError> {
        match self {
            Input::Family { u } => Ok(FamilyGerm::from_u(TruncatedPoly::parse(VarSet::Source, cap, u)?)?),
            Input::Invariants { k0, k1, alpha, higher } => {
                let tail = higher.as_deref().map(|h| TruncatedPoly::parse(VarSet::Source, cap, h)).transpose()?;
                Ok(FamilyGerm::from_invariants(cap, k0.to_rational()?, k1.to_rational()?, alpha.to_rational()?, tail)?)
            }
            _ => Err(CliError::Input("expected {\"u\": ...} or {\"k0\", \"k1\", \"alpha\"}".into())),
        }
    }

    /// The map whose (x, y) part is traced. Families use `(ξ + t, u)`, normal
    /// forms the three-component `F_{a,b}`.
    pub fn map(&self, cap: u32) -> Result<MapGerm, CliError> {
        match self {
            Input::Family { .. } | Input::Invariants { .. } => Ok(self.family(cap)?.family_map()),
            Input::Map { map } => {
                if !(2..=3).contains(&map.len()) {
                    return Err(CliError::Input(format!("map needs 2 or 3 components, got {}", map.len())));
                }
                Ok(MapGerm::parse(cap, &map.iter().map(String::as_str).collect::<Vec<_>>())?)
            }
            Input::NormalForm { normal_form } => Ok(a1_normal_form_unchecked(
                cap,
                &normal_form.a.to_rational()?,
                &normal_form.b.to_rational()?,
            )),
        }
    }
}
