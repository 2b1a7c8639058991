//! Shared helpers for integration tests: seeded random jets and a naive
//! tangent-space rank oracle that shares no code with the library.
#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tangential::jet::{MapGerm, Multidegree, TruncatedPoly, VarSet};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn small_rational(rng: &mut impl Rng) -> BigRational {
    let n: i64 = rng.gen_range(-5..=5);
    let d: i64 = rng.gen_range(1..=4);
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

pub fn random_monomial(rng: &mut impl Rng, vars: VarSet, lo: u32, hi: u32) -> Multidegree {
    let deg = rng.gen_range(lo..=hi);
    let mut exps = [0u16; 3];
    let mut left = deg as u16;
    for e in exps.iter_mut().take(vars.arity() - 1) {
        *e = rng.gen_range(0..=left);
        left -= *e;
    }
    exps[vars.arity() - 1] = left;
    Multidegree::new(vars, &exps[..vars.arity()])
}

/// Sparse jet with up to `terms` monomials of degree in `lo..=hi`.
pub fn random_jet(rng: &mut impl Rng, vars: VarSet, cap: u32, terms: usize, lo: u32, hi: u32) -> TruncatedPoly {
    let n = rng.gen_range(0..=terms);
    TruncatedPoly::from_terms(
        vars,
        cap,
        (0..n).map(|_| (random_monomial(rng, vars, lo, hi), small_rational(rng))).collect::<Vec<_>>(),
    )
}

/// Source map germ with `dim` components vanishing at the origin.
pub fn random_germ(rng: &mut impl Rng, cap: u32, dim: usize, terms: usize, hi: u32) -> MapGerm {
    let comps = (0..dim).map(|_| random_jet(rng, VarSet::Source, cap, terms, 1, hi)).collect();
    MapGerm::new(comps).expect("no constant terms")
}

/// Germ from `((deg_ξ, deg_t), coefficient)` lists, one per component.
pub fn germ_from_terms(cap: u32, terms: &[Vec<((u32, u32), i64)>]) -> MapGerm {
    let comps = terms
        .iter()
        .map(|comp| {
            TruncatedPoly::from_terms(
                VarSet::Source,
                cap,
                comp.iter().map(|&((i, j), c)| {
                    (Multidegree::source(i as u16, j as u16), BigRational::from_integer(BigInt::from(c)))
                }),
            )
        })
        .collect();
    MapGerm::new(comps).expect("no constant terms")
}

pub mod oracle {
    //! Brute-force tangent spaces: dense generator enumeration and plain
    //! Gaussian elimination over the rationals.

    use super::*;

    /// Polynomial in (ξ, t) keyed by `(deg_ξ, deg_t)`.
    pub type Poly = BTreeMap<(u32, u32), BigRational>;

    pub fn from_terms(terms: &[((u32, u32), i64)]) -> Poly {
        let mut p = Poly::new();
        for &(e, c) in terms {
            *p.entry(e).or_insert_with(BigRational::zero) += BigRational::from_integer(c.into());
        }
        p.retain(|_, c| !c.is_zero());
        p
    }

    fn mul(a: &Poly, b: &Poly, w: u32) -> Poly {
        let mut out = Poly::new();
        for (&(i, j), c) in a {
            for (&(k, l), d) in b {
                if i + j + k + l <= w {
                    *out.entry((i + k, j + l)).or_insert_with(BigRational::zero) += c * d;
                }
            }
        }
        out.retain(|_, c| !c.is_zero());
        out
    }

    fn pow(a: &Poly, e: u32, w: u32) -> Poly {
        let mut out = Poly::from([((0, 0), BigRational::one())]);
        for _ in 0..e {
            out = mul(&out, a, w);
        }
        out
    }

    fn diff(a: &Poly, var: usize) -> Poly {
        a.iter()
            .filter_map(|(&(i, j), c)| match var {
                0 if i > 0 => Some(((i - 1, j), c * BigRational::from_integer(i.into()))),
                1 if j > 0 => Some(((i, j - 1), c * BigRational::from_integer(j.into()))),
                _ => None,
            })
            .collect()
    }

    #[derive(Clone, Copy, PartialEq, Eq, Debug)]
    pub enum Kind {
        /// All target diffeomorphisms.
        Extended,
        /// Target diffeomorphisms preserving the (x, y) projection.
        Fibered,
        /// Fibered, with source fields of order ≥ `threshold` and the reduced target module.
        Reduced { threshold: u32 },
    }

    /// Rank of the tangent space of `f` modulo degree `w + 1`.
    pub fn rank(f: &[Poly; 3], kind: Kind, w: u32) -> usize {
        let monos: Vec<(u32, u32)> = (0..=w).flat_map(|d| (0..=d).rev().map(move |i| (i, d - i))).collect();
        let n = monos.len();
        let col = |s: usize, e: (u32, u32)| s * n + monos.iter().position(|&m| m == e).unwrap();
        let flatten = |v: [&Poly; 3]| {
            let mut row = vec![BigRational::zero(); 3 * n];
            for (s, p) in v.iter().enumerate() {
                for (&e, c) in p.iter() {
                    if e.0 + e.1 <= w {
                        row[col(s, e)] = c.clone();
                    }
                }
            }
            row
        };
        let zero = Poly::new();
        let mut rows = Vec::new();

        let lo = match kind {
            Kind::Reduced { threshold } => threshold,
            _ => 0,
        };
        for var in 0..2 {
            let d: Vec<Poly> = f.iter().map(|c| diff(c, var)).collect();
            for &(i, j) in monos.iter().filter(|(i, j)| i + j >= lo) {
                let mu = Poly::from([((i, j), BigRational::one())]);
                let v: Vec<Poly> = d.iter().map(|c| mul(&mu, c, w)).collect();
                rows.push(flatten([&v[0], &v[1], &v[2]]));
            }
        }
        for s in 0..3 {
            for a in 0..=w {
                for b in 0..=w - a {
                    for c in 0..=w - a - b {
                        let deg = a + b + c;
                        let allowed = match kind {
                            Kind::Extended => true,
                            Kind::Fibered => s == 2 || c == 0,
                            Kind::Reduced { .. } => {
                                let big = deg >= 2 && (s == 2 || c == 0);
                                let extra = match s {
                                    0 => (a, b, c) == (0, 1, 0),
                                    1 => (a, b, c) == (1, 0, 0),
                                    _ => deg == 1 && c == 0,
                                };
                                big || extra
                            }
                        };
                        if !allowed {
                            continue;
                        }
                        let g = mul(&mul(&pow(&f[0], a, w), &pow(&f[1], b, w), w), &pow(&f[2], c, w), w);
                        let mut v = [&zero, &zero, &zero];
                        v[s] = &g;
                        rows.push(flatten(v));
                    }
                }
            }
        }
        gaussian_rank(rows)
    }

    pub fn gaussian_rank(mut rows: Vec<Vec<BigRational>>) -> usize {
        let ncols = rows.first().map_or(0, Vec::len);
        let mut r = 0;
        for c in 0..ncols {
            let Some(p) = (r..rows.len()).find(|&k| !rows[k][c].is_zero()) else { continue };
            rows.swap(r, p);
            let pivot = rows[r].clone();
            for row in rows.iter_mut().skip(r + 1) {
                if !row[c].is_zero() {
                    let f = &row[c] / &pivot[c];
                    for (x, y) in row.iter_mut().zip(&pivot) {
                        *x -= &f * y;
                    }
                }
            }
            r += 1;
        }
        r
    }
}
