//! Tangent spaces of map germs (ℝ², 0) → (ℝ³, 0) as exact subspaces of
//! truncated jet space, and the inclusion and complement checks built on them.
//!
//! `T_e A*(f) = ⟨∂_ξ f, ∂_t f⟩_{E_{ξ,t}} + f*(E_{x,y}) × f*(E_{x,y}) × f*(E_{x,y,z})`.
//! The fibered target diffeomorphisms of A* show up only structurally: the
//! first two slots never pull back functions involving z.
//!
//! All inclusions are certified modulo `m^{W+1}` and every verdict carries `W`.

mod checks;
mod space;

pub use checks::{
    contains_ideal_block, jet_sufficiency_step, jet_sufficiency_step_with, miniversality_check,
    miniversality_of, BlockCertificate, MiniversalVerdict, SlotMonomial, TangentVerdict,
};
pub use space::{
    build_extended, build_reduced, build_reduced_with, Generator, JetLayout, JetVector,
    SpaceKind, TangentSpaceBasis, DEFAULT_REDUCED_THRESHOLD,
};
