use std::fmt;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::jet::{monomial_basis, source_jet_dim, MapGerm, Multidegree, Rational, TruncatedPoly, VarSet, T, XI};
use crate::linalg::Echelon;

/// Which tangent space to build.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpaceKind {
    /// `T_e A(f)`: every slot pulls back functions of (x, y, z).
    AExtended,
    /// `T_e A*(f)`: slots 1–2 pull back functions of (x, y) only.
    AStarExtended,
    /// `T_r A*(f) = g₊ + M*`.
    AStarReduced,
}

impl fmt::Display for SpaceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SpaceKind::AExtended => "A-extended",
            SpaceKind::AStarExtended => "A*-extended",
            SpaceKind::AStarReduced => "A*-reduced",
        })
    }
}

/// Flattening of `E³_{ξ,t}` modulo `m^{o₁+1} × m^{o₂+1} × m^{o₃+1}`.
///
/// Columns are slot-major; inside a slot they follow [`monomial_basis`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct JetLayout {
    orders: [u32; 3],
}

impl JetLayout {
    pub fn uniform(order: u32) -> Self {
        JetLayout { orders: [order; 3] }
    }

    pub fn per_slot(orders: [u32; 3]) -> Self {
        JetLayout { orders }
    }

    pub fn orders(&self) -> [u32; 3] {
        self.orders
    }

    pub fn max_order(&self) -> u32 {
        self.orders.into_iter().max().unwrap_or(0)
    }

    pub fn slot_dim(&self, slot: usize) -> usize {
        source_jet_dim(self.orders[slot])
    }

    pub fn dim(&self) -> usize {
        (0..3).map(|s| self.slot_dim(s)).sum()
    }

    fn offset(&self, slot: usize) -> usize {
        (0..slot).map(|s| self.slot_dim(s)).sum()
    }

    pub fn column(&self, slot: usize, m: &Multidegree) -> Option<usize> {
        (m.degree() <= self.orders[slot]).then(|| self.offset(slot) + m.source_index())
    }

    pub fn monomial_at(&self, col: usize) -> (usize, Multidegree) {
        let mut c = col;
        for slot in 0..3 {
            let d = self.slot_dim(slot);
            if c < d {
                let m = monomial_basis(VarSet::Source, 0, self.orders[slot])[c];
                return (slot, m);
            }
            c -= d;
        }
        panic!("column {col} outside a layout of dimension {}", self.dim());
    }

    /// Coefficient vector of a jet triple; terms above a slot's order are dropped.
    pub fn flatten(&self, v: &JetVector) -> Vec<Rational> {
        let mut row = vec![Rational::zero(); self.dim()];
        for (slot, p) in v.slots.iter().enumerate() {
            for (m, c) in p.terms() {
                if let Some(col) = self.column(slot, m) {
                    row[col] = c.clone();
                }
            }
        }
        row
    }
}

/// An element of `E³_{ξ,t}` truncated at a common cap.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct JetVector {
    slots: [TruncatedPoly; 3],
}

impl JetVector {
    pub fn new(a: TruncatedPoly, b: TruncatedPoly, c: TruncatedPoly) -> Result<Self> {
        for p in [&a, &b, &c] {
            if p.vars() != VarSet::Source {
                return Err(Error::VarSetMismatch(VarSet::Source, p.vars()));
            }
            if p.cap() != a.cap() {
                return Err(Error::CapMismatch(a.cap(), p.cap()));
            }
        }
        Ok(JetVector { slots: [a, b, c] })
    }

    pub fn parse(cap: u32, slots: [&str; 3]) -> Result<Self> {
        let [a, b, c] = slots.map(|s| TruncatedPoly::parse(VarSet::Source, cap, s));
        Self::new(a?, b?, c?)
    }

    pub fn zero(cap: u32) -> Self {
        let z = TruncatedPoly::zero(VarSet::Source, cap);
        JetVector { slots: [z.clone(), z.clone(), z] }
    }

    /// `m` placed in `slot`, zero elsewhere.
    pub fn unit(cap: u32, slot: usize, m: Multidegree) -> Self {
        let mut v = Self::zero(cap);
        v.slots[slot] = TruncatedPoly::monomial(cap, m, Rational::from_integer(1.into()));
        v
    }

    /// `p` placed in `slot`, zero elsewhere.
    pub fn in_slot(slot: usize, p: TruncatedPoly) -> Self {
        let mut v = Self::zero(p.cap());
        v.slots[slot] = p;
        v
    }

    pub fn slots(&self) -> &[TruncatedPoly; 3] {
        &self.slots
    }

    pub fn slot(&self, i: usize) -> &TruncatedPoly {
        &self.slots[i]
    }

    pub fn cap(&self) -> u32 {
        self.slots[0].cap()
    }

    pub fn is_zero(&self) -> bool {
        self.slots.iter().all(TruncatedPoly::is_zero)
    }
}

impl fmt::Display for JetVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {}, {})", self.slots[0], self.slots[1], self.slots[2])
    }
}

/// Where a basis row came from.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum Generator {
    /// `μ · ∂_var f` for a source monomial `μ`.
    SourceMultiple { var: String, multiplier: String },
    /// `(m ∘ f)` placed in one slot, `m` a target monomial.
    Pullback { slot: usize, monomial: String },
}

/// Source-part multiplier degree threshold defining `g₊` in the reduced space.
pub const DEFAULT_REDUCED_THRESHOLD: u32 = 2;

/// An exact, fully reduced echelon basis of a tangent space at finite order.
#[derive(Clone, Debug)]
pub struct TangentSpaceBasis {
    kind: SpaceKind,
    germ: MapGerm,
    layout: JetLayout,
    reduced_threshold: Option<u32>,
    echelon: Echelon,
    provenance: Vec<(usize, Generator)>,
}

impl TangentSpaceBasis {
    pub fn kind(&self) -> SpaceKind {
        self.kind
    }

    pub fn germ(&self) -> &MapGerm {
        &self.germ
    }

    pub fn layout(&self) -> JetLayout {
        self.layout
    }

    /// Working order `W` (largest slot order).
    pub fn order(&self) -> u32 {
        self.layout.max_order()
    }

    /// Multiplier degree threshold used for `g₊`, for reduced spaces.
    pub fn reduced_threshold(&self) -> Option<u32> {
        self.reduced_threshold
    }

    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }

    pub fn ambient_dim(&self) -> usize {
        self.layout.dim()
    }

    pub fn codimension(&self) -> usize {
        self.ambient_dim() - self.rank()
    }

    pub fn echelon(&self) -> &Echelon {
        &self.echelon
    }

    /// Pivot column and generator that created it, one per basis row.
    pub fn provenance(&self) -> &[(usize, Generator)] {
        &self.provenance
    }

    pub fn contains(&self, v: &JetVector) -> bool {
        self.echelon.contains(&self.layout.flatten(v))
    }

    pub fn contains_monomial(&self, slot: usize, m: Multidegree) -> bool {
        match self.layout.column(slot, &m) {
            Some(_) => self.contains(&JetVector::unit(self.layout.max_order(), slot, m)),
            None => true,
        }
    }

    /// For each slot, the least degree `d` such that every monomial of degree
    /// `d..=order` lies in the space; `None` if the top degree is not covered.
    pub fn saturation(&self) -> [Option<u32>; 3] {
        let mut out = [None; 3];
        for (slot, o) in self.layout.orders().into_iter().enumerate() {
            let mut d = o + 1;
            while d > 0
                && monomial_basis(VarSet::Source, d - 1, d - 1)
                    .into_iter()
                    .all(|m| self.contains_monomial(slot, m))
            {
                d -= 1;
            }
            out[slot] = (d <= o).then_some(d);
        }
        out
    }
}

/// Builds `T_e A(f)` or `T_e A*(f)` modulo `m^{W+1}` in every slot.
pub fn build_extended(f: &MapGerm, kind: SpaceKind, order: u32) -> Result<TangentSpaceBasis> {
    if kind == SpaceKind::AStarReduced {
        return build_reduced(f, order);
    }
    build(f, kind, JetLayout::uniform(order), None)
}

/// Builds `T_r A*(f)` with the default `g₊` threshold.
pub fn build_reduced(f: &MapGerm, order: u32) -> Result<TangentSpaceBasis> {
    build_reduced_with(f, JetLayout::uniform(order), DEFAULT_REDUCED_THRESHOLD)
}

/// Builds `T_r A*(f)` over an arbitrary layout; the source part uses
/// multipliers of degree at least `threshold`.
pub fn build_reduced_with(
    f: &MapGerm,
    layout: JetLayout,
    threshold: u32,
) -> Result<TangentSpaceBasis> {
    build(f, SpaceKind::AStarReduced, layout, Some(threshold))
}

fn build(
    f: &MapGerm,
    kind: SpaceKind,
    layout: JetLayout,
    threshold: Option<u32>,
) -> Result<TangentSpaceBasis> {
    if f.arity() != 3 {
        return Err(Error::Arity { expected: 3, got: f.arity() });
    }
    let w = layout.max_order();
    let cap = f.cap();
    if w + 1 > cap {
        return Err(Error::OrderTooLarge { order: w, trusted: cap.saturating_sub(1), cap });
    }
    let fw = f.with_cap(w);
    let mut echelon = Echelon::new(layout.dim());
    let mut provenance = Vec::new();
    let mut push = |row: JetVector, gen: Generator, echelon: &mut Echelon| {
        if let Some(col) = echelon.insert_rational(&layout.flatten(&row)) {
            provenance.push((col, gen));
        }
    };

    // source part: μ·∂_ξ f, μ·∂_t f
    let partials = [f.derive(XI)?, f.derive(T)?]
        .map(|d| d.into_iter().map(|p| p.with_cap(w)).collect::<Vec<_>>());
    let min_mult = threshold.unwrap_or(0);
    for mu in monomial_basis(VarSet::Source, min_mult, w) {
        let mu_poly = TruncatedPoly::monomial(w, mu, Rational::from_integer(1.into()));
        for (var, partial) in [XI, T].into_iter().zip(&partials) {
            let slots: Vec<_> = partial.iter().map(|p| mu_poly.mul(p)).collect::<Result<_>>()?;
            let [a, b, c]: [TruncatedPoly; 3] = slots.try_into().expect("three slots");
            let gen = Generator::SourceMultiple {
                var: VarSet::Source.names()[var].to_string(),
                multiplier: mu.to_string(),
            };
            push(JetVector::new(a, b, c)?, gen, &mut echelon);
        }
    }

    // pullback part
    let pull = Pullbacks::new(&fw, w);
    for slot in 0..3 {
        for m in pullback_monomials(kind, slot, w) {
            let row = JetVector::in_slot(slot, pull.of(&m)?);
            push(row, Generator::Pullback { slot, monomial: m.to_string() }, &mut echelon);
        }
    }

    echelon.fully_reduce();
    provenance.sort_by_key(|(c, _)| *c);
    Ok(TangentSpaceBasis {
        kind,
        germ: f.clone(),
        layout,
        reduced_threshold: threshold,
        echelon,
        provenance,
    })
}

/// Target monomials whose pullbacks generate the given slot.
fn pullback_monomials(kind: SpaceKind, slot: usize, w: u32) -> Vec<Multidegree> {
    let all = monomial_basis(VarSet::Target, 0, w);
    let no_z = |m: &Multidegree| m.exponent(2) == 0;
    match kind {
        SpaceKind::AExtended => all,
        SpaceKind::AStarExtended if slot < 2 => all.into_iter().filter(no_z).collect(),
        SpaceKind::AStarExtended => all,
        SpaceKind::AStarReduced => {
            // M* = f*(m²_{x,y} ⊕ ⟨y⟩) × f*(m²_{x,y} ⊕ ⟨x⟩) × f*(m²_{x,y,z} ⊕ ⟨x, y⟩)
            let extra: &[Multidegree] = match slot {
                0 => &[Multidegree::target(0, 1, 0)],
                1 => &[Multidegree::target(1, 0, 0)],
                _ => &[Multidegree::target(1, 0, 0), Multidegree::target(0, 1, 0)],
            };
            let mut out: Vec<_> = extra.to_vec();
            out.extend(
                all.into_iter()
                    .filter(|m| m.degree() >= 2 && (slot == 2 || no_z(m))),
            );
            out
        }
    }
}

/// Cached powers of the germ components for monomial pullbacks.
struct Pullbacks {
    powers: [Vec<TruncatedPoly>; 3],
}

impl Pullbacks {
    fn new(f: &MapGerm, w: u32) -> Self {
        let powers = [0, 1, 2].map(|i| {
            let mut v = vec![TruncatedPoly::one(VarSet::Source, w)];
            for _ in 0..w {
                let next = v.last().unwrap().mul(f.component(i)).expect("same ring");
                v.push(next);
            }
            v
        });
        Pullbacks { powers }
    }

    fn of(&self, m: &Multidegree) -> Result<TruncatedPoly> {
        let mut acc = self.powers[0][usize::from(m.exponent(0))].clone();
        for i in 1..3 {
            acc = acc.mul(&self.powers[i][usize::from(m.exponent(i))])?;
        }
        Ok(acc)
    }
}
