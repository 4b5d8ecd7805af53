//! Finite Coxeter groups, Bruhat order, reflection orderings and Bruhat
//! interval polytopes.
//!
//! The crate is `no_std` and only needs `alloc`. Group elements are stored
//! exactly as signed permutations of the positive roots, so equality and
//! hashing never depend on floating point; coordinates are only used where
//! geometry is unavoidable (root enumeration, polytopes, cone tests).
//!
//! Module map:
//!
//! * [`coxroot`]: diagrams, root systems, group elements, enumerated groups.
//! * [`bruhat`]: covers, Bruhat order, intervals, chains, parabolic cosets.
//! * [`reforder`]: reflection orderings from dual bases, increasing chains.
//! * [`geomkit`]: dense simplex LP, cone predicates, convex hulls and face
//!   lattices.
//! * [`moxpoly`]: interval polytopes, Coxeter matroid certification, lifting
//!   analysis and face/interval structure.

#![no_std]

extern crate alloc;

pub mod bruhat;
pub mod coxroot;
mod error;
pub mod geomkit;
pub mod linalg;
pub mod moxpoly;
pub mod reforder;
pub mod sampling;

pub use error::{Error, Result};

/// Numerical tolerances used throughout the crate.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Root snapping and root-system invariants.
    pub root: f64,
    /// LP feasibility and strict-inequality margins.
    pub lp: f64,
    /// Relative tolerance for coplanarity and incidence in hulls.
    pub geom: f64,
    /// Relative tolerance for numeric rank.
    pub rank: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            root: 1e-9,
            lp: 1e-7,
            geom: 1e-7,
            rank: 1e-6,
        }
    }
}

impl Tolerances {
    pub fn validate(&self) -> Result<()> {
        let ok = [self.root, self.lp, self.geom, self.rank]
            .iter()
            .all(|t| t.is_finite() && *t > 0.0);
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidTolerance)
        }
    }
}
