use crate::error::{Error, Result};
use crate::jet::{rational_to_f64, MapGerm, TruncatedPoly, VarSet};

/// Polynomial in (ξ, t) with double coefficients, used for evaluation only.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct FloatPoly {
    terms: Vec<([u16; 2], f64)>,
}

impl FloatPoly {
    pub fn zero() -> Self {
        FloatPoly::default()
    }

    pub fn constant(c: f64) -> Self {
        Self::from_terms([([0, 0], c)])
    }

    pub fn from_terms(terms: impl IntoIterator<Item = ([u16; 2], f64)>) -> Self {
        let mut p = FloatPoly::zero();
        for (e, c) in terms {
            p.add_term(e, c);
        }
        p
    }

    pub fn from_jet(p: &TruncatedPoly) -> Result<Self> {
        if p.vars() != VarSet::Source {
            return Err(Error::VarSetMismatch(VarSet::Source, p.vars()));
        }
        Ok(Self::from_terms(p.terms().map(|(m, c)| {
            ([m.exponent(0), m.exponent(1)], rational_to_f64(c))
        })))
    }

    fn add_term(&mut self, e: [u16; 2], c: f64) {
        if c == 0.0 {
            return;
        }
        match self.terms.iter_mut().find(|(f, _)| *f == e) {
            Some((_, a)) => *a += c,
            None => self.terms.push((e, c)),
        }
    }

    pub fn terms(&self) -> &[([u16; 2], f64)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.iter().all(|(_, c)| *c == 0.0)
    }

    pub fn eval(&self, xi: f64, t: f64) -> f64 {
        self.terms
            .iter()
            .map(|&([i, j], c)| c * xi.powi(i32::from(i)) * t.powi(i32::from(j)))
            .sum()
    }

    pub fn derive(&self, var: usize) -> FloatPoly {
        FloatPoly::from_terms(self.terms.iter().filter(|(e, _)| e[var] > 0).map(|&(e, c)| {
            let mut d = e;
            d[var] -= 1;
            (d, c * f64::from(e[var]))
        }))
    }

    pub fn add(&self, other: &FloatPoly) -> FloatPoly {
        let mut out = self.clone();
        for &(e, c) in &other.terms {
            out.add_term(e, c);
        }
        out
    }

    pub fn scale(&self, k: f64) -> FloatPoly {
        FloatPoly::from_terms(self.terms.iter().map(|&(e, c)| (e, c * k)))
    }

    pub fn sub(&self, other: &FloatPoly) -> FloatPoly {
        self.add(&other.scale(-1.0))
    }

    pub fn mul(&self, other: &FloatPoly) -> FloatPoly {
        let mut out = FloatPoly::zero();
        for &(a, ca) in &self.terms {
            for &(b, cb) in &other.terms {
                out.add_term([a[0] + b[0], a[1] + b[1]], ca * cb);
            }
        }
        out
    }
}

/// A polynomial map (ξ, t) ↦ (x, y) or (x, y, z) evaluated in floats.
#[derive(Clone, Debug, PartialEq)]
pub struct FloatMap {
    comps: Vec<FloatPoly>,
}

impl FloatMap {
    pub fn new(comps: Vec<FloatPoly>) -> Result<Self> {
        if comps.len() < 2 {
            return Err(Error::Arity { expected: 2, got: comps.len() });
        }
        Ok(FloatMap { comps })
    }

    pub fn from_germ(f: &MapGerm) -> Result<Self> {
        Self::new(f.components().iter().map(FloatPoly::from_jet).collect::<Result<_>>()?)
    }

    pub fn components(&self) -> &[FloatPoly] {
        &self.comps
    }

    pub fn arity(&self) -> usize {
        self.comps.len()
    }

    pub fn eval(&self, xi: f64, t: f64) -> Vec<f64> {
        self.comps.iter().map(|c| c.eval(xi, t)).collect()
    }

    /// Image in the (x, y) plane.
    pub fn project(&self, xi: f64, t: f64) -> [f64; 2] {
        [self.comps[0].eval(xi, t), self.comps[1].eval(xi, t)]
    }

    /// Planar Jacobian `[[x_ξ, x_t], [y_ξ, y_t]]`.
    pub fn jacobian(&self, xi: f64, t: f64) -> [[f64; 2]; 2] {
        let d = |c: &FloatPoly, v| c.derive(v).eval(xi, t);
        [
            [d(&self.comps[0], 0), d(&self.comps[0], 1)],
            [d(&self.comps[1], 0), d(&self.comps[1], 1)],
        ]
    }

    /// `x_ξ y_t − x_t y_ξ` as a polynomial.
    pub fn jacobian_det(&self) -> FloatPoly {
        let (x, y) = (&self.comps[0], &self.comps[1]);
        x.derive(0).mul(&y.derive(1)).sub(&x.derive(1).mul(&y.derive(0)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic() {
        let p = FloatPoly::from_terms([([1, 0], 1.0), ([0, 1], 1.0)]);
        let sq = p.mul(&p);
        assert_eq!(sq.eval(2.0, 3.0), 25.0);
        assert_eq!(sq.derive(1).eval(2.0, 3.0), 10.0);
        assert!(p.sub(&p).is_zero());
        assert_eq!(FloatPoly::constant(2.5).eval(9.0, 9.0), 2.5);
    }
}
