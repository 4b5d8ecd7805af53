use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::{base_point, coset_polytope};
use crate::bruhat::{Bruhat, Coset};
use crate::coxroot::GeneratorSet;
use crate::geomkit::Polytope;
use crate::{Error, Result};

/// Faces as `(dim, sorted vertex labels)`.
pub type LabeledFaces = BTreeSet<(usize, Vec<usize>)>;

pub fn labeled_faces(poly: &Polytope) -> LabeledFaces {
    poly.faces().iter().map(|f| (f.dim, poly.face_labels(f))).collect()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilityReport {
    pub seeds: Vec<u64>,
    pub face_counts: Vec<usize>,
    /// Every base point produced the same labeled face set.
    pub identical: bool,
}

/// Compares the labeled face lattices of `Δ_M(p)` across base points.
pub fn face_lattice_stability(
    bruhat: &Bruhat,
    m: &[Coset],
    j: GeneratorSet,
    seeds: &[u64],
    eps_geom: f64,
) -> Result<StabilityReport> {
    if seeds.is_empty() {
        return Err(Error::EmptyInput("base point seeds"));
    }
    let sys = bruhat.group().system();
    let mut lattices = Vec::with_capacity(seeds.len());
    for &seed in seeds {
        let p = base_point(sys, j, seed)?;
        lattices.push(labeled_faces(&coset_polytope(bruhat, m, &p, eps_geom)?));
    }
    Ok(StabilityReport {
        seeds: seeds.to_vec(),
        face_counts: lattices.iter().map(BTreeSet::len).collect(),
        identical: lattices.windows(2).all(|w| w[0] == w[1]),
    })
}
