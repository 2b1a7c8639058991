use std::process::ExitCode;

use clap::Subcommand;
use num_traits::{One, Zero};
use serde::Serialize;
use tangential::family::{a1_normal_form_unchecked, fold_normal_form};
use tangential::jet::{parse_rational, rational, Rational};
use tangential::tangent::{
    build_extended, build_reduced_with, contains_ideal_block, miniversality_of, JetLayout, JetVector,
    MiniversalVerdict, SpaceKind, TangentVerdict, DEFAULT_REDUCED_THRESHOLD,
};

use crate::config::RunConfig;
use crate::output::emit;
use crate::CliError;

/// Ideal block certified for the normal form.
pub const NORMAL_FORM_BLOCK: [u32; 3] = [3, 5, 4];
/// Ideal block certified for the fold.
pub const FOLD_BLOCK: [u32; 3] = [2, 3, 2];
const DEFAULT_COMPLEMENT: [&str; 3] = ["0|t|0", "t^2 + t^3|0|0", "0|t^2 + t^3|0"];

#[derive(Debug, Subcommand)]
pub enum VerifyCommand {
    /// m^3 x m^5 x m^4 inside the extended tangent space of F_{a,b}.
    Eq2 {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true, default_value = "1")]
        b: String,
    },
    /// m^2 x m^3 x m^2 inside the reduced tangent space of (xi, t^2, t).
    FoldSufficiency {
        /// Least multiplier degree of the source vector fields.
        #[arg(long, default_value_t = DEFAULT_REDUCED_THRESHOLD)]
        threshold: u32,
    },
    /// Whether the complement completes the extended tangent space of F_{a,b} to a direct sum.
    Miniversal {
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        #[arg(long, allow_hyphen_values = true, default_value = "1")]
        b: String,
        /// Complement vector as `slot1|slot2|slot3`; repeatable.
        #[arg(long = "complement")]
        complement: Vec<String>,
    },
}

#[derive(Debug, Serialize)]
struct Params {
    #[serde(skip_serializing_if = "Option::is_none")]
    a: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    b: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    reduced_threshold: Option<u32>,
}

#[derive(Debug, Serialize)]
struct VerifyReport {
    check: &'static str,
    params: Params,
    verdict: TangentVerdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    miniversality: Option<MiniversalVerdict>,
    /// Whether the checked statement holds at this order.
    outcome: bool,
    /// The outcome predicted for these parameters.
    predicted: bool,
    agrees: bool,
}

/// Values of `a` for which the block inclusion is predicted to fail.
fn is_excluded(a: &Rational) -> bool {
    a.is_zero() || *a == -Rational::one() || *a == rational(1, 3)
}

fn rational_arg(name: &str, text: &str) -> Result<Rational, CliError> {
    parse_rational(text).map_err(|e| CliError::Input(format!("--{name}: {e}")))
}

pub fn run(cfg: &RunConfig, check: &VerifyCommand) -> Result<ExitCode, CliError> {
    let order = cfg.order()?;
    let report = match check {
        VerifyCommand::Eq2 { a, b } => {
            let (a, b) = (rational_arg("a", a)?, rational_arg("b", b)?);
            let f = a1_normal_form_unchecked(cfg.cap, &a, &b);
            let t = build_extended(&f, SpaceKind::AStarExtended, order)?;
            let cert = contains_ideal_block(&t, NORMAL_FORM_BLOCK);
            let predicted = !is_excluded(&a);
            VerifyReport {
                check: "eq2",
                params: Params { a: Some(a.to_string()), b: Some(b.to_string()), reduced_threshold: None },
                outcome: cert.holds,
                verdict: TangentVerdict::new(&t, &cert),
                miniversality: None,
                predicted,
                agrees: cert.holds == predicted,
            }
        }
        VerifyCommand::FoldSufficiency { threshold } => {
            let t = build_reduced_with(&fold_normal_form(cfg.cap), JetLayout::uniform(order), *threshold)?;
            let cert = contains_ideal_block(&t, FOLD_BLOCK);
            VerifyReport {
                check: "fold-sufficiency",
                params: Params { a: None, b: None, reduced_threshold: Some(*threshold) },
                outcome: cert.holds,
                verdict: TangentVerdict::new(&t, &cert),
                miniversality: None,
                predicted: true,
                agrees: cert.holds,
            }
        }
        VerifyCommand::Miniversal { a, b, complement } => {
            let (a, b) = (rational_arg("a", a)?, rational_arg("b", b)?);
            let f = a1_normal_form_unchecked(cfg.cap, &a, &b);
            let t = build_extended(&f, SpaceKind::AStarExtended, order)?;
            let vectors = parse_complement(cfg.cap, complement)?;
            let m = miniversality_of(&t, &vectors);
            let cert = contains_ideal_block(&t, NORMAL_FORM_BLOCK);
            let predicted = !b.is_zero();
            VerifyReport {
                check: "miniversal",
                params: Params { a: Some(a.to_string()), b: Some(b.to_string()), reduced_threshold: None },
                outcome: m.spans,
                verdict: TangentVerdict::new(&t, &cert),
                predicted,
                agrees: m.spans == predicted,
                miniversality: Some(m),
            }
        }
    };
    let agrees = report.agrees;
    emit(&report, cfg.format)?;
    Ok(ExitCode::from(if agrees { 0 } else { 3 }))
}

fn parse_complement(cap: u32, given: &[String]) -> Result<Vec<JetVector>, CliError> {
    let texts: Vec<&str> =
        if given.is_empty() { DEFAULT_COMPLEMENT.to_vec() } else { given.iter().map(String::as_str).collect() };
    texts
        .into_iter()
        .map(|v| {
            let parts: Vec<&str> = v.split('|').map(str::trim).collect();
            let slots: [&str; 3] = parts
                .try_into()
                .map_err(|_| CliError::Input(format!("complement vector {v:?} needs three slots")))?;
            Ok(JetVector::parse(cap, slots)?)
        })
        .collect()
}
