use thiserror::Error;

use crate::jet::VarSet;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("variable set mismatch: {0} vs {1}")]
    VarSetMismatch(VarSet, VarSet),
    #[error("degree cap mismatch: {0} vs {1}")]
    CapMismatch(u32, u32),
    #[error("arity mismatch: expected {expected} components, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("germ component {0} has a nonzero constant term")]
    NotAtOrigin(usize),
    #[error("working order {order} exceeds the trusted order {trusted} of a cap-{cap} germ")]
    OrderTooLarge { order: u32, trusted: u32, cap: u32 },
    #[error("family is not tangential to the support: {0}")]
    NotTangential(String),
    #[error("normal form restriction violated: {0}")]
    Restricted(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
