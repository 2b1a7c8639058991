//! Legendrian graphs of tangential families in adapted form.
//!
//! A family is given over the support `y = 0` as `(ξ, t) ↦ (ξ + t, u(ξ, t))`
//! with `u(ξ, 0) = ∂_t u(ξ, 0) = 0`. Writing
//! `u = k₀t² + αt³ + k₁t²ξ + …`, the Legendrian graph is parameterized by
//! `(ξ + t, u, ∂_t u)` and, after `(ξ, t) ↦ (ξ − t, t)`, by
//! `(ξ, k₀t² + (α − k₁)t³ + k₁t²ξ + …, 2k₀t + (3α − 2k₁)t² + 2k₁tξ + …)`.

use num_traits::{One, Signed, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::jet::{rational, MapGerm, Multidegree, Rational, TruncatedPoly, VarSet, T, XI};
use crate::tangent::{build_extended, SpaceKind};

/// Adapted tangential-family germ with its low-order invariants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FamilyGerm {
    u: TruncatedPoly,
    k0: Rational,
    k1: Rational,
    alpha: Rational,
}

impl FamilyGerm {
    /// Reads `k₀ = [t²]u`, `α = [t³]u`, `k₁ = [t²ξ]u`, rejecting families
    /// that are not tangent to the support at every base point.
    pub fn from_u(u: TruncatedPoly) -> Result<Self> {
        if u.vars() != VarSet::Source {
            return Err(Error::VarSetMismatch(VarSet::Source, u.vars()));
        }
        if let Some((m, _)) = u.terms().find(|(m, _)| m.exponent(T) < 2) {
            let what = if m.exponent(T) == 0 { "u(xi, 0)" } else { "d_t u(xi, 0)" };
            return Err(Error::NotTangential(format!("{what} has the term {m}")));
        }
        Ok(FamilyGerm {
            k0: u.coeff(&Multidegree::source(0, 2)),
            alpha: u.coeff(&Multidegree::source(0, 3)),
            k1: u.coeff(&Multidegree::source(1, 2)),
            u,
        })
    }

    /// `u = k₀t² + αt³ + k₁t²ξ + tail`, the tail holding only terms of degree ≥ 4.
    pub fn from_invariants(
        cap: u32,
        k0: Rational,
        k1: Rational,
        alpha: Rational,
        tail: Option<TruncatedPoly>,
    ) -> Result<Self> {
        let mut u = TruncatedPoly::from_terms(
            VarSet::Source,
            cap,
            [
                (Multidegree::source(0, 2), k0),
                (Multidegree::source(0, 3), alpha),
                (Multidegree::source(1, 2), k1),
            ],
        );
        if let Some(tail) = tail {
            if tail.order().is_some_and(|d| d < 4) {
                return Err(Error::Usage("the higher-order tail must start in degree 4".into()));
            }
            u = u.add(&tail.with_cap(cap))?;
        }
        Self::from_u(u)
    }

    pub fn u(&self) -> &TruncatedPoly {
        &self.u
    }

    pub fn k0(&self) -> &Rational {
        &self.k0
    }

    pub fn k1(&self) -> &Rational {
        &self.k1
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    /// The family map `(ξ + t, u)`.
    pub fn family_map(&self) -> MapGerm {
        let cap = self.u.cap();
        let x = TruncatedPoly::parse(VarSet::Source, cap, "xi + t").expect("literal");
        MapGerm::new(vec![x, self.u.clone()]).expect("u vanishes at the origin")
    }

    /// Legendrian lift `(ξ + t, u, ∂_t u)` reparameterized by `ξ ↦ ξ − t`.
    pub fn legendrian_parameterization(&self) -> MapGerm {
        let cap = self.u.cap();
        let p = |s: &str| TruncatedPoly::parse(VarSet::Source, cap, s).expect("literal");
        let lift = [p("xi + t"), self.u.clone(), self.u.derive(T).expect("source var")];
        let shear = [p("xi - t"), p("t")];
        let comps = lift
            .iter()
            .map(|c| c.compose(&shear))
            .collect::<Result<Vec<_>>>()
            .expect("shear vanishes at the origin");
        MapGerm::new(comps).expect("lift vanishes at the origin")
    }

    /// `a = (α − k₁)(k₁ − 3α)/k₁²`, defined for second-type candidates (`k₀ = 0`, `k₁ ≠ 0`).
    pub fn invariant_a(&self) -> Option<Rational> {
        if !self.k0.is_zero() || self.k1.is_zero() {
            return None;
        }
        let three = rational(3, 1);
        let num = (&self.alpha - &self.k1) * (&self.k1 - &three * &self.alpha);
        Some(num / (&self.k1 * &self.k1))
    }

    /// Classifies the Legendrian graph germ. Degenerate branch indices are
    /// probed up to working order `order` (at most `cap − 1`).
    pub fn classify(&self, order: u32) -> SingularityLabel {
        let invariants = Invariants::of(self);
        let label = |variant, a: Option<Rational>| SingularityLabel {
            projection_normal_form_applicable: a.as_ref().is_some_and(projection_applicable),
            a: a.map(|a| a.to_string()),
            variant,
            invariants: Some(invariants.clone()),
        };
        if !self.k0.is_zero() {
            return label(Variant::TypeI, None);
        }
        if self.k1.is_zero() || self.k1 == self.alpha {
            return label(Variant::IndeterminateAtOrder { order }, self.invariant_a());
        }
        let a = self.invariant_a().expect("k0 = 0, k1 != 0");
        let three_halves_alpha = &self.alpha * rational(3, 2);
        let three_alpha = &self.alpha * rational(3, 1);
        if self.k1 == three_halves_alpha {
            label(Variant::HBranch { index: self.branch_index(order) }, Some(a))
        } else if self.k1 == three_alpha {
            label(Variant::ABranch { index: self.branch_index(order) }, Some(a))
        } else if a.is_positive() {
            label(Variant::A1Plus, Some(a))
        } else {
            label(Variant::A1Minus, Some(a))
        }
    }

    /// `n` for `A_n` / `H_n`, read off as the A_e-codimension of the
    /// Legendrian parameterization, which is exact once the top degree is
    /// swallowed by the tangent space.
    fn branch_index(&self, order: u32) -> BranchIndex {
        let order = order.min(self.u.cap().saturating_sub(1));
        let germ = self.legendrian_parameterization();
        let t = build_extended(&germ, SpaceKind::AExtended, order).expect("order within cap");
        let codim = t.codimension() as u32;
        if t.saturation().iter().all(Option::is_some) {
            BranchIndex::Resolved { n: codim, order }
        } else {
            BranchIndex::Unresolved { at_least: codim.max(2), order }
        }
    }
}

/// Builds the adapted family from `u` (alias of [`FamilyGerm::from_u`]).
pub fn extract_invariants(u: TruncatedPoly) -> Result<FamilyGerm> {
    FamilyGerm::from_u(u)
}

/// Classification from raw `u`; non-tangential input yields [`Variant::NotTangential`].
pub fn classify_u(u: TruncatedPoly, order: u32) -> SingularityLabel {
    match FamilyGerm::from_u(u) {
        Ok(g) => g.classify(order),
        Err(_) => SingularityLabel {
            variant: Variant::NotTangential,
            a: None,
            projection_normal_form_applicable: false,
            invariants: None,
        },
    }
}

fn projection_applicable(a: &Rational) -> bool {
    !a.is_zero() && *a != -Rational::one() && *a < rational(1, 3)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum BranchIndex {
    Resolved { n: u32, order: u32 },
    Unresolved { at_least: u32, order: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "label")]
pub enum Variant {
    TypeI,
    A1Plus,
    A1Minus,
    HBranch { index: BranchIndex },
    ABranch { index: BranchIndex },
    NotTangential,
    IndeterminateAtOrder { order: u32 },
}

impl Variant {
    /// Whether the classifier reached a definite verdict.
    pub fn is_definite(&self) -> bool {
        !matches!(self, Variant::NotTangential | Variant::IndeterminateAtOrder { .. })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Invariants {
    pub k0: String,
    pub k1: String,
    pub alpha: String,
}

impl Invariants {
    fn of(g: &FamilyGerm) -> Self {
        Invariants { k0: g.k0.to_string(), k1: g.k1.to_string(), alpha: g.alpha.to_string() }
    }
}

/// Classifier verdict. `a` is present for second-type germs; the
/// projection flag reports whether the A₁ projection normal form applies
/// (`a ∉ {−1, 0}`, `a < 1/3`), independently of the graph label.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SingularityLabel {
    #[serde(flatten)]
    pub variant: Variant,
    pub a: Option<String>,
    pub projection_normal_form_applicable: bool,
    pub invariants: Option<Invariants>,
}

/// `(ξ, t², t)`.
pub fn fold_normal_form(cap: u32) -> MapGerm {
    MapGerm::parse(cap, &["xi", "t^2", "t"]).expect("literal")
}

/// `F_{a,b} = (ξ, t³ + t²ξ + atξ², t² + bt³)` with `a ∉ {−1, 0}`, `a < 1/3`.
pub fn a1_normal_form(cap: u32, a: &Rational, b: &Rational) -> Result<MapGerm> {
    if a.is_zero() {
        return Err(Error::Restricted("a must differ from 0".into()));
    }
    if *a == -Rational::one() {
        return Err(Error::Restricted("a must differ from -1".into()));
    }
    if *a >= rational(1, 3) {
        return Err(Error::Restricted(format!("a must be below 1/3, got {a}")));
    }
    Ok(a1_normal_form_unchecked(cap, a, b))
}

/// `F_{a,b}` without the parameter restrictions, for probing excluded values.
pub fn a1_normal_form_unchecked(cap: u32, a: &Rational, b: &Rational) -> MapGerm {
    let one = Rational::one;
    let y = TruncatedPoly::from_terms(
        VarSet::Source,
        cap,
        [
            (Multidegree::source(0, 3), one()),
            (Multidegree::source(1, 2), one()),
            (Multidegree::source(2, 1), a.clone()),
        ],
    );
    let z = TruncatedPoly::from_terms(
        VarSet::Source,
        cap,
        [(Multidegree::source(0, 2), one()), (Multidegree::source(0, 3), b.clone())],
    );
    let x = TruncatedPoly::var(VarSet::Source, cap, XI).expect("xi");
    MapGerm::new(vec![x, y, z]).expect("vanishes at the origin")
}
