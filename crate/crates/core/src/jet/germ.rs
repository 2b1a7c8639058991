use std::fmt;

use num_traits::Zero;

use super::monomial::{Multidegree, VarSet};
use super::poly::TruncatedPoly;
use crate::error::{Error, Result};

/// A map germ (ℝ², 0) → (ℝᵏ, 0) given by k source jets sharing one cap.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MapGerm {
    components: Vec<TruncatedPoly>,
}

impl MapGerm {
    pub fn new(components: Vec<TruncatedPoly>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::Usage("a map germ needs at least one component".into()));
        }
        let cap = components[0].cap();
        for (i, c) in components.iter().enumerate() {
            if c.vars() != VarSet::Source {
                return Err(Error::VarSetMismatch(VarSet::Source, c.vars()));
            }
            if c.cap() != cap {
                return Err(Error::CapMismatch(cap, c.cap()));
            }
            if !c.coeff(&Multidegree::one(VarSet::Source)).is_zero() {
                return Err(Error::NotAtOrigin(i));
            }
        }
        Ok(MapGerm { components })
    }

    /// Parses each component as a source jet at `cap`.
    pub fn parse(cap: u32, components: &[&str]) -> Result<Self> {
        let comps = components
            .iter()
            .map(|s| TruncatedPoly::parse(VarSet::Source, cap, s))
            .collect::<Result<Vec<_>>>()?;
        Self::new(comps)
    }

    pub fn components(&self) -> &[TruncatedPoly] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &TruncatedPoly {
        &self.components[i]
    }

    pub fn arity(&self) -> usize {
        self.components.len()
    }

    pub fn cap(&self) -> u32 {
        self.components[0].cap()
    }

    /// Componentwise derivative in source variable `var` (0 = ξ, 1 = t).
    /// The result is a vector of jets, not a germ: it need not vanish at 0.
    pub fn derive(&self, var: usize) -> Result<Vec<TruncatedPoly>> {
        self.components.iter().map(|c| c.derive(var)).collect()
    }

    pub fn with_cap(&self, n: u32) -> Self {
        MapGerm { components: self.components.iter().map(|c| c.with_cap(n)).collect() }
    }

    /// The first two components, i.e. the germ followed by (x, y, z) ↦ (x, y).
    pub fn planar_projection(&self) -> Result<MapGerm> {
        if self.arity() < 2 {
            return Err(Error::Arity { expected: 2, got: self.arity() });
        }
        Ok(MapGerm { components: self.components[..2].to_vec() })
    }

    pub fn eval_f64(&self, point: &[f64]) -> Vec<f64> {
        self.components.iter().map(|c| c.eval_f64(point)).collect()
    }
}

impl fmt::Display for MapGerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, c) in self.components.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}
