//! Fraction-free row echelon forms over the integers.
//!
//! Rows are kept primitive (content 1) with a positive leading entry, so the
//! fully reduced form of a row space is unique.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::jet::Rational;

pub type IntRow = Vec<BigInt>;

/// Clears denominators and divides out the content, making the leading entry positive.
pub fn primitive_row(row: &[Rational]) -> IntRow {
    let lcm = row
        .iter()
        .filter(|c| !c.is_zero())
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let mut ints: IntRow = row.iter().map(|c| (c * &lcm).to_integer()).collect();
    normalize(&mut ints);
    ints
}

fn normalize(row: &mut IntRow) {
    let g = row.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if g.is_zero() {
        return;
    }
    let lead_neg = row.iter().find(|c| !c.is_zero()).is_some_and(|c| c.is_negative());
    let g = if lead_neg { -g } else { g };
    if !g.is_one() {
        for c in row.iter_mut() {
            *c = &*c / &g;
        }
    }
}

fn leading(row: &[BigInt]) -> Option<usize> {
    row.iter().position(|c| !c.is_zero())
}

/// `row ← p·row − c·pivot_row` for the pivot column `col`, then made primitive.
fn eliminate(row: &mut IntRow, pivot_row: &[BigInt], col: usize) {
    let c = row[col].clone();
    if c.is_zero() {
        return;
    }
    let p = &pivot_row[col];
    let g = c.gcd(p);
    let (mp, mc) = (p / &g, &c / &g);
    for (r, s) in row.iter_mut().zip(pivot_row) {
        if s.is_zero() {
            *r *= &mp;
        } else {
            *r = &*r * &mp - &mc * s;
        }
    }
    normalize(row);
}

/// An incrementally built echelon basis of a row space in `Q^ncols`.
///
/// Pivots are the leftmost nonzero column of each row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Echelon {
    ncols: usize,
    /// `pivots[c]` holds the basis row whose leading column is `c`.
    pivots: Vec<Option<IntRow>>,
    rank: usize,
}

impl Echelon {
    pub fn new(ncols: usize) -> Self {
        Echelon { ncols, pivots: vec![None; ncols], rank: 0 }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Forward-reduces `row` against the current pivots; returns the residue.
    pub fn reduce(&self, mut row: IntRow) -> IntRow {
        let mut start = 0;
        while let Some(col) = leading(&row[start..]).map(|c| c + start) {
            match &self.pivots[col] {
                Some(p) => eliminate(&mut row, p, col),
                None => return row,
            }
            start = col + 1;
        }
        row
    }

    /// Inserts a row; returns its new pivot column if it enlarged the span.
    pub fn insert(&mut self, row: IntRow) -> Option<usize> {
        assert_eq!(row.len(), self.ncols, "row length mismatch");
        let r = self.reduce(row);
        let col = leading(&r)?;
        self.pivots[col] = Some(r);
        self.rank += 1;
        Some(col)
    }

    pub fn insert_rational(&mut self, row: &[Rational]) -> Option<usize> {
        self.insert(primitive_row(row))
    }

    pub fn contains(&self, row: &[Rational]) -> bool {
        leading(&self.reduce(primitive_row(row))).is_none()
    }

    pub fn contains_int(&self, row: IntRow) -> bool {
        leading(&self.reduce(row)).is_none()
    }

    /// Pivot columns in increasing order.
    pub fn pivot_columns(&self) -> Vec<usize> {
        (0..self.ncols).filter(|&c| self.pivots[c].is_some()).collect()
    }

    pub fn non_pivot_columns(&self) -> Vec<usize> {
        (0..self.ncols).filter(|&c| self.pivots[c].is_none()).collect()
    }

    /// Back-substitutes so every pivot column has a single nonzero entry.
    pub fn fully_reduce(&mut self) {
        let cols = self.pivot_columns();
        for (i, &c) in cols.iter().enumerate().rev() {
            let pivot = self.pivots[c].clone().expect("pivot");
            for &above in &cols[..i] {
                let row = self.pivots[above].as_mut().expect("pivot");
                if !row[c].is_zero() {
                    eliminate(row, &pivot, c);
                }
            }
        }
    }

    /// Basis rows ordered by pivot column.
    pub fn rows(&self) -> impl Iterator<Item = &IntRow> {
        self.pivots.iter().flatten()
    }
}
