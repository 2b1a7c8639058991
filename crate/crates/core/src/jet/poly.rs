use std::collections::BTreeMap;

use num_traits::{One, Zero};

use super::monomial::{Multidegree, VarSet};
use super::Rational;
use crate::error::{Error, Result};

/// A polynomial jet: exact rational coefficients, every term of total degree
/// at most `cap`, no zero coefficients stored.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TruncatedPoly {
    vars: VarSet,
    cap: u32,
    terms: BTreeMap<Multidegree, Rational>,
}

impl TruncatedPoly {
    pub fn zero(vars: VarSet, cap: u32) -> Self {
        TruncatedPoly { vars, cap, terms: BTreeMap::new() }
    }

    pub fn constant(vars: VarSet, cap: u32, c: Rational) -> Self {
        Self::monomial(cap, Multidegree::one(vars), c)
    }

    pub fn one(vars: VarSet, cap: u32) -> Self {
        Self::constant(vars, cap, Rational::one())
    }

    /// `c · m`, or zero if `m` lies above the cap.
    pub fn monomial(cap: u32, m: Multidegree, c: Rational) -> Self {
        let mut p = Self::zero(m.vars(), cap);
        p.add_term(m, c);
        p
    }

    /// The coordinate function with index `var`.
    pub fn var(vars: VarSet, cap: u32, var: usize) -> Result<Self> {
        if var >= vars.arity() {
            return Err(Error::UnknownVariable(format!("#{var} in {vars}")));
        }
        let mut exps = [0u16; 3];
        exps[var] = 1;
        Ok(Self::monomial(cap, Multidegree::new(vars, &exps[..vars.arity()]), Rational::one()))
    }

    pub fn from_terms<I>(vars: VarSet, cap: u32, terms: I) -> Self
    where
        I: IntoIterator<Item = (Multidegree, Rational)>,
    {
        let mut p = Self::zero(vars, cap);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn vars(&self) -> VarSet {
        self.vars
    }

    pub fn cap(&self) -> u32 {
        self.cap
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Multidegree, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Multidegree) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    /// Lowest total degree present, `None` for the zero jet.
    pub fn order(&self) -> Option<u32> {
        self.terms.keys().next().map(Multidegree::degree)
    }

    pub fn max_degree(&self) -> Option<u32> {
        self.terms.keys().map(Multidegree::degree).max()
    }

    /// Adds `c · m` in place, dropping it if above the cap; keeps the table canonical.
    pub fn add_term(&mut self, m: Multidegree, c: Rational) {
        assert_eq!(m.vars(), self.vars, "monomial over a foreign variable set");
        if m.degree() > self.cap || c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.vars != other.vars {
            return Err(Error::VarSetMismatch(self.vars, other.vars));
        }
        if self.cap != other.cap {
            return Err(Error::CapMismatch(self.cap, other.cap));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&-Rational::one())
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars, self.cap);
        }
        TruncatedPoly {
            vars: self.vars,
            cap: self.cap,
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    /// Product truncated at the common cap.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = Self::zero(self.vars, self.cap);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if ma.degree() + mb.degree() > self.cap {
                    // terms are graded, nothing later in `other` fits either
                    break;
                }
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.vars, self.cap);
        for _ in 0..k {
            acc = acc.mul(self).expect("same ring");
        }
        acc
    }

    /// Formal partial derivative in the variable with index `var`.
    ///
    /// The stored cap is unchanged, but only degrees `< cap` of the result
    /// carry information when `self` is itself a truncation.
    pub fn derive(&self, var: usize) -> Result<Self> {
        if var >= self.vars.arity() {
            return Err(Error::UnknownVariable(format!("#{var} in {}", self.vars)));
        }
        let mut out = Self::zero(self.vars, self.cap);
        for (m, c) in &self.terms {
            let e = m.exponent(var);
            if e == 0 {
                continue;
            }
            let mut exps = [0u16; 3];
            exps[..self.vars.arity()].copy_from_slice(m.exponents());
            exps[var] -= 1;
            out.add_term(
                Multidegree::new(self.vars, &exps[..self.vars.arity()]),
                c * Rational::from_integer(e.into()),
            );
        }
        Ok(out)
    }

    pub fn derive_by_name(&self, name: &str) -> Result<Self> {
        let idx = self
            .vars
            .index_of(name)
            .ok_or_else(|| Error::UnknownVariable(name.to_string()))?;
        self.derive(idx)
    }

    /// Substitutes `subs[i]` for variable `i`. All substitutes must share a
    /// variable set and cap and vanish at the origin; the result lives there.
    pub fn compose(&self, subs: &[TruncatedPoly]) -> Result<Self> {
        if subs.len() != self.vars.arity() {
            return Err(Error::Arity { expected: self.vars.arity(), got: subs.len() });
        }
        let first = &subs[0];
        for s in &subs[1..] {
            first.check_compatible(s)?;
        }
        for (i, s) in subs.iter().enumerate() {
            if !s.coeff(&Multidegree::one(s.vars)).is_zero() {
                return Err(Error::NotAtOrigin(i));
            }
        }
        let (vars, cap) = (first.vars, first.cap);
        // powers[i][k] = subs[i]^k, computed lazily up to the largest exponent used
        let mut powers: Vec<Vec<TruncatedPoly>> =
            subs.iter().map(|_| vec![TruncatedPoly::one(vars, cap)]).collect();
        let mut out = Self::zero(vars, cap);
        for (m, c) in &self.terms {
            if m.degree() > cap {
                continue;
            }
            let mut term = TruncatedPoly::constant(vars, cap, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                let e = usize::from(e);
                while powers[i].len() <= e {
                    let next = powers[i].last().unwrap().mul(&subs[i])?;
                    powers[i].push(next);
                }
                term = term.mul(&powers[i][e])?;
            }
            out = out.add(&term)?;
        }
        Ok(out)
    }

    /// Drops every term of total degree above `n`, keeping the cap.
    pub fn jet(&self, n: u32) -> Self {
        TruncatedPoly {
            vars: self.vars,
            cap: self.cap,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() <= n)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    /// Re-homes the jet at cap `n`; terms above `n` are dropped.
    pub fn with_cap(&self, n: u32) -> Self {
        let mut p = self.jet(n);
        p.cap = n;
        p
    }

    /// Part of exact total degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> Self {
        TruncatedPoly {
            vars: self.vars,
            cap: self.cap,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (*m, c.clone()))
                .collect(),
        }
    }

    pub fn eval_f64(&self, point: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|(m, c)| {
                let c = super::rational_to_f64(c);
                m.exponents()
                    .iter()
                    .zip(point)
                    .fold(c, |acc, (&e, &x)| acc * x.powi(i32::from(e)))
            })
            .sum()
    }
}
