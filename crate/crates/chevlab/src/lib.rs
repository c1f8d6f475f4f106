//! chevlab: elementary Chevalley groups over finite commutative rings as
//! explicit matrix groups, plus exhaustive desk-scale verification of the
//! generation and sandwich properties of their relative elementary subgroups
//! and mixed commutator subgroups.
//!
//! The verification targets rank-2 systems (A2, C2, G2) and A3 over `Z/n`
//! and `F_p[t]/(t^2)`. Every claim is decided by exhaustive enumeration of
//! the relevant subgroups in a fixed faithful representation, never by
//! appeal to the statement being tested.

pub mod chevgen;
pub mod cli;
pub mod engine;
pub mod mat;
pub mod report;
pub mod rings;
pub mod rootsys;
pub mod theorems;

#[derive(thiserror::Error, Debug)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("enumeration budget exceeded: frontier reached {frontier} elements (budget {budget})")]
    Budget { frontier: usize, budget: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("cache file corrupt: {0}")]
    Corrupt(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}
