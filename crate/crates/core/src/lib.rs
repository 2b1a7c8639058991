//! Computational tools for Legendrian graphs of tangential families.
//!
//! - [`jet`]: exact truncated polynomial jets and map germs.
//! - [`tangent`]: extended and reduced tangent spaces as exact row spaces,
//!   with ideal-block inclusion, jet-sufficiency and miniversality checks.
//! - [`family`]: Legendrian parameterization of adapted tangential families
//!   and their classification.
//! - [`geometry`]: floating-point criminants, envelopes, lifts, deformation
//!   sweeps, cusp counting and SVG/OBJ output.

pub mod error;
pub mod family;
pub mod geometry;
pub mod jet;
pub mod linalg;
pub mod tangent;

pub use error::{Error, Result};

/// Default jet degree cap.
pub const DEFAULT_CAP: u32 = 8;

/// Default working order for tangent-space computations (`DEFAULT_CAP - 1`).
pub const DEFAULT_ORDER: u32 = DEFAULT_CAP - 1;
