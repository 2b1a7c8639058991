//! Exact arithmetic on truncated polynomial jets.

mod germ;
mod monomial;
mod poly;
mod text;

pub use germ::MapGerm;
pub use monomial::{monomial_basis, source_jet_dim, Multidegree, VarSet};
pub use poly::TruncatedPoly;
pub use text::parse_rational;

use num_bigint::BigInt;
use num_traits::ToPrimitive;

pub type Rational = num_rational::BigRational;

/// Source variable indices.
pub const XI: usize = 0;
pub const T: usize = 1;

pub fn rational(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn rational_to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

/// Exact binary value of a finite float.
pub fn rational_from_f64(x: f64) -> Option<Rational> {
    Rational::from_float(x)
}

#[cfg(test)]
pub(crate) fn q(n: i64, d: i64) -> Rational {
    rational(n, d)
}

#[cfg(test)]
pub(crate) fn src(s: &str) -> TruncatedPoly {
    TruncatedPoly::parse(VarSet::Source, crate::DEFAULT_CAP, s).unwrap()
}

#[cfg(test)]
pub(crate) fn tgt(s: &str) -> TruncatedPoly {
    TruncatedPoly::parse(VarSet::Target, crate::DEFAULT_CAP, s).unwrap()
}
