use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// The two variable sets a jet can live over.
///
/// `Source` is the germ source plane with coordinates (ξ, t); `Target` is
/// the 3-space (x, y, z) containing the Legendrian graph chart.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VarSet {
    Source,
    Target,
}

impl VarSet {
    pub const fn arity(self) -> usize {
        match self {
            VarSet::Source => 2,
            VarSet::Target => 3,
        }
    }

    pub fn names(self) -> &'static [&'static str] {
        match self {
            VarSet::Source => &["xi", "t"],
            VarSet::Target => &["x", "y", "z"],
        }
    }

    pub fn index_of(self, name: &str) -> Option<usize> {
        let alias = match name {
            "ξ" => "xi",
            other => other,
        };
        self.names().iter().position(|n| *n == alias)
    }
}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarSet::Source => f.write_str("source(xi,t)"),
            VarSet::Target => f.write_str("target(x,y,z)"),
        }
    }
}

/// Exponent vector of a monomial over a fixed variable set.
///
/// Ordered graded-lexicographically: lower total degree first, and within a
/// degree the first variable dominates (ξ² < ξt < t², x before y before z).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Multidegree {
    vars: VarSet,
    exps: [u16; 3],
}

impl Multidegree {
    /// Panics if `exps` does not match the arity of `vars`.
    pub fn new(vars: VarSet, exps: &[u16]) -> Self {
        assert_eq!(
            exps.len(),
            vars.arity(),
            "exponent vector length must match the variable count"
        );
        let mut e = [0u16; 3];
        e[..exps.len()].copy_from_slice(exps);
        Multidegree { vars, exps: e }
    }

    pub fn source(xi: u16, t: u16) -> Self {
        Multidegree { vars: VarSet::Source, exps: [xi, t, 0] }
    }

    pub fn target(x: u16, y: u16, z: u16) -> Self {
        Multidegree { vars: VarSet::Target, exps: [x, y, z] }
    }

    pub fn one(vars: VarSet) -> Self {
        Multidegree { vars, exps: [0; 3] }
    }

    pub fn vars(&self) -> VarSet {
        self.vars
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps[..self.vars.arity()]
    }

    pub fn exponent(&self, var: usize) -> u16 {
        self.exps[var]
    }

    pub fn degree(&self) -> u32 {
        self.exps.iter().map(|&e| u32::from(e)).sum()
    }

    pub fn mul(&self, other: &Multidegree) -> Multidegree {
        debug_assert_eq!(self.vars, other.vars);
        let mut exps = self.exps;
        for (e, o) in exps.iter_mut().zip(other.exps) {
            *e += o;
        }
        Multidegree { vars: self.vars, exps }
    }

    /// Position of a source monomial inside the graded basis starting at degree 0.
    pub(crate) fn source_index(&self) -> usize {
        debug_assert_eq!(self.vars, VarSet::Source);
        let d = self.degree() as usize;
        d * (d + 1) / 2 + usize::from(self.exps[1])
    }
}

impl Ord for Multidegree {
    fn cmp(&self, other: &Self) -> Ordering {
        self.vars
            .cmp(&other.vars)
            .then(self.degree().cmp(&other.degree()))
            .then_with(|| other.exps.cmp(&self.exps))
    }
}

impl PartialOrd for Multidegree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Multidegree {
    /// Factors are written last variable first (`t^2 xi`, `z y x`); the unit prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names = self.vars.names();
        let mut first = true;
        for (i, &e) in self.exponents().iter().enumerate().rev() {
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str(" ")?;
            }
            first = false;
            f.write_str(names[i])?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// All multidegrees with `lo <= degree <= hi`, in graded-lex order.
pub fn monomial_basis(vars: VarSet, lo: u32, hi: u32) -> Vec<Multidegree> {
    let mut out = Vec::new();
    for d in lo..=hi {
        let d16 = d as u16;
        match vars {
            VarSet::Source => {
                for xi in (0..=d16).rev() {
                    out.push(Multidegree::source(xi, d16 - xi));
                }
            }
            VarSet::Target => {
                for x in (0..=d16).rev() {
                    for y in (0..=d16 - x).rev() {
                        out.push(Multidegree::target(x, y, d16 - x - y));
                    }
                }
            }
        }
    }
    out
}

/// Number of monomials of degree at most `n` in two variables.
pub const fn source_jet_dim(n: u32) -> usize {
    let n = n as usize;
    (n + 1) * (n + 2) / 2
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_bases() {
        assert_eq!(
            monomial_basis(VarSet::Source, 1, 1),
            vec![Multidegree::source(1, 0), Multidegree::source(0, 1)]
        );
        assert_eq!(
            monomial_basis(VarSet::Source, 2, 2),
            vec![
                Multidegree::source(2, 0),
                Multidegree::source(1, 1),
                Multidegree::source(0, 2)
            ]
        );
    }

    #[test]
    fn basis_counts_match_direct_enumeration() {
        for n in 0..10u32 {
            let mut direct = 0;
            for i in 0..=n {
                for j in 0..=n {
                    if i + j <= n {
                        direct += 1;
                    }
                }
            }
            let basis = monomial_basis(VarSet::Source, 0, n);
            assert_eq!(basis.len(), direct);
            assert_eq!(basis.len(), ((n + 1) * (n + 2) / 2) as usize);
            assert_eq!(source_jet_dim(n), basis.len());
        }
        // three variables: C(n+3, 3)
        assert_eq!(monomial_basis(VarSet::Target, 0, 4).len(), 35);
    }

    #[test]
    fn basis_is_sorted_and_indexed() {
        let basis = monomial_basis(VarSet::Source, 0, 7);
        assert!(basis.windows(2).all(|w| w[0] < w[1]));
        for (i, m) in basis.iter().enumerate() {
            assert_eq!(m.source_index(), i);
        }
        let tb = monomial_basis(VarSet::Target, 0, 5);
        assert!(tb.windows(2).all(|w| w[0] < w[1]));
    }

    #[test]
    fn display() {
        assert_eq!(Multidegree::source(1, 2).to_string(), "t^2 xi");
        assert_eq!(Multidegree::source(0, 0).to_string(), "1");
        assert_eq!(Multidegree::target(1, 0, 3).to_string(), "z^3 x");
        assert_eq!(Multidegree::source(2, 1).degree(), 3);
    }
}
