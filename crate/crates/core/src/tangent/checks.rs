use serde::Serialize;

use super::space::{build_reduced_with, JetLayout, JetVector, SpaceKind, TangentSpaceBasis};
use super::space::{build_extended, DEFAULT_REDUCED_THRESHOLD};
use crate::error::{Error, Result};
use crate::jet::{monomial_basis, MapGerm, VarSet};

/// A monomial triple `(μ, 0, 0)`, `(0, μ, 0)` or `(0, 0, μ)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SlotMonomial {
    pub slot: usize,
    pub monomial: String,
}

impl SlotMonomial {
    /// Serialized triple, e.g. `(0, t^5, 0)`.
    pub fn triple(&self) -> String {
        let mut parts = ["0"; 3].map(String::from);
        parts[self.slot] = self.monomial.clone();
        format!("({}, {}, {})", parts[0], parts[1], parts[2])
    }
}

/// Outcome of an ideal-block inclusion test. The inclusion is certified
/// only modulo degree `order + 1` in every slot.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockCertificate {
    pub holds: bool,
    pub block: [u32; 3],
    pub order: u32,
    pub witness: Option<SlotMonomial>,
}

/// Tests `m^p × m^q × m^r ⊆ T` at the order of `T`.
pub fn contains_ideal_block(t: &TangentSpaceBasis, block: [u32; 3]) -> BlockCertificate {
    let orders = t.layout().orders();
    for slot in 0..3 {
        if block[slot] > orders[slot] {
            continue;
        }
        for m in monomial_basis(VarSet::Source, block[slot], orders[slot]) {
            if !t.contains_monomial(slot, m) {
                return BlockCertificate {
                    holds: false,
                    block,
                    order: t.order(),
                    witness: Some(SlotMonomial { slot, monomial: m.to_string() }),
                };
            }
        }
    }
    BlockCertificate { holds: true, block, order: t.order(), witness: None }
}

/// Decides whether `R ∈ T_r A*(f)` modulo `m^{p+1} × m^{q+1} × m^{r+1}`,
/// where slot `i` of `R` is homogeneous of degree `degrees[i]` (or zero).
/// When it holds, the `(p, q, r)`-jets of `f` and `f + R` are A*-equivalent.
pub fn jet_sufficiency_step(f: &MapGerm, r: &JetVector, degrees: [u32; 3]) -> Result<bool> {
    jet_sufficiency_step_with(f, r, degrees, DEFAULT_REDUCED_THRESHOLD)
}

pub fn jet_sufficiency_step_with(
    f: &MapGerm,
    r: &JetVector,
    degrees: [u32; 3],
    threshold: u32,
) -> Result<bool> {
    for (slot, p) in r.slots().iter().enumerate() {
        if p.terms().any(|(m, _)| m.degree() != degrees[slot]) {
            return Err(Error::Usage(format!(
                "slot {} of the increment is not homogeneous of degree {}",
                slot + 1,
                degrees[slot]
            )));
        }
    }
    if r.is_zero() {
        return Ok(true);
    }
    let t = build_reduced_with(f, JetLayout::per_slot(degrees), threshold)?;
    Ok(t.contains(r))
}

/// Result of a complement check against `T_e A*(f)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MiniversalVerdict {
    pub order: u32,
    pub ambient_dim: usize,
    pub rank: usize,
    /// `dim J^W − rank T_e A*(f)`; exact when `saturated`.
    pub codimension: usize,
    /// Per slot, the least degree from which all monomials lie in the space.
    pub saturation: [Option<u32>; 3],
    /// Every slot's top degree is covered, so no quotient direction is hidden above `W`.
    pub saturated: bool,
    /// Number of complement vectors that enlarged the span.
    pub independent: usize,
    /// The sum with the complement is direct.
    pub direct: bool,
    /// The sum fills the whole jet space and is direct.
    pub spans: bool,
    /// Monomial triples completing `T + span(complement)`.
    pub defect: Vec<SlotMonomial>,
}

/// Checks `E³ = T_e A*(f) ⊕ span(complement)` modulo degree `W + 1`.
pub fn miniversality_check(
    f: &MapGerm,
    complement: &[JetVector],
    order: u32,
) -> Result<MiniversalVerdict> {
    let t = build_extended(f, SpaceKind::AStarExtended, order)?;
    Ok(miniversality_of(&t, complement))
}

pub fn miniversality_of(t: &TangentSpaceBasis, complement: &[JetVector]) -> MiniversalVerdict {
    let layout = t.layout();
    let saturation = t.saturation();
    let mut sum = t.echelon().clone();
    let independent = complement
        .iter()
        .filter(|v| sum.insert_rational(&layout.flatten(v)).is_some())
        .count();
    sum.fully_reduce();
    let defect: Vec<_> = sum
        .non_pivot_columns()
        .into_iter()
        .map(|c| {
            let (slot, m) = layout.monomial_at(c);
            SlotMonomial { slot, monomial: m.to_string() }
        })
        .collect();
    let direct = independent == complement.len();
    MiniversalVerdict {
        order: t.order(),
        ambient_dim: layout.dim(),
        rank: t.rank(),
        codimension: t.codimension(),
        saturation,
        saturated: saturation.iter().all(Option::is_some),
        independent,
        direct,
        spans: direct && defect.is_empty(),
        defect,
    }
}

/// Compact verdict emitted by the command-line front end.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TangentVerdict {
    pub kind: SpaceKind,
    #[serde(rename = "W")]
    pub order: u32,
    pub rank: usize,
    pub codimension: usize,
    pub certified_block: [u32; 3],
    pub holds: bool,
    pub witness: Option<String>,
}

impl TangentVerdict {
    pub fn new(t: &TangentSpaceBasis, cert: &BlockCertificate) -> Self {
        TangentVerdict {
            kind: t.kind(),
            order: t.order(),
            rank: t.rank(),
            codimension: t.codimension(),
            certified_block: cert.block,
            holds: cert.holds,
            witness: cert.witness.as_ref().map(SlotMonomial::triple),
        }
    }
}
