use alloc::vec::Vec;

use super::{orbit_points, BasePoint};
use crate::bruhat::Bruhat;
use crate::coxroot::ElemId;
use crate::linalg::{affine_rank, rank};
use crate::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpanReport {
    pub u: ElemId,
    pub v: ElemId,
    pub atoms: usize,
    pub coatoms: usize,
    /// Along one maximal chain.
    pub chain: usize,
    /// All cover labels inside the interval.
    pub all: usize,
    pub polytope_dim: usize,
    pub holds: bool,
}

/// Root indices labelling covers inside `[u, v]`.
pub fn interval_roots(bruhat: &Bruhat, u: ElemId, v: ElemId) -> Vec<usize> {
    let mut roots: Vec<usize> = bruhat
        .interval_elements(u, v)
        .into_iter()
        .flat_map(|x| {
            bruhat
                .covers(x)
                .iter()
                .filter(|(y, _)| bruhat.leq(*y, v))
                .map(|&(_, t)| t)
                .collect::<Vec<_>>()
        })
        .collect();
    roots.sort_unstable();
    roots.dedup();
    roots
}

/// Dimensions of the spans of atom labels, coatom labels, one chain's
/// labels and all labels, against the affine dimension of `δ_p([u, v])`.
pub fn span_invariants(bruhat: &Bruhat, u: ElemId, v: ElemId, p: &BasePoint, rank_tol: f64) -> Result<SpanReport> {
    if !bruhat.leq(u, v) {
        return Err(Error::NotComparable);
    }
    let sys = bruhat.group().system();
    let dim_of = |roots: &mut dyn Iterator<Item = usize>| -> usize {
        let vs: Vec<Vec<f64>> = roots.map(|i| sys.root(i).to_vec()).collect();
        rank(&vs, rank_tol)
    };
    let atoms = dim_of(
        &mut bruhat
            .covers(u)
            .iter()
            .filter(|(y, _)| bruhat.leq(*y, v))
            .map(|&(_, t)| t),
    );
    let coatoms = dim_of(
        &mut bruhat
            .lower_covers(v)
            .iter()
            .filter(|(x, _)| bruhat.leq(u, *x))
            .map(|&(_, t)| t),
    );
    let chain_elems = bruhat.some_chain(u, v)?;
    let chain = dim_of(
        &mut chain_elems
            .windows(2)
            .map(|w| bruhat.cover_root(w[0], w[1]).expect("chain steps are covers")),
    );
    let all = dim_of(&mut interval_roots(bruhat, u, v).into_iter());
    let pts = orbit_points(bruhat, &bruhat.interval_elements(u, v), p);
    let polytope_dim = affine_rank(&pts, rank_tol);
    let holds = atoms == coatoms && coatoms == chain && chain == all && all == polytope_dim;
    Ok(SpanReport {
        u,
        v,
        atoms,
        coatoms,
        chain,
        all,
        polytope_dim,
        holds,
    })
}
