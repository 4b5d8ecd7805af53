use alloc::format;
use alloc::vec::Vec;

use super::{base_point, coset_polytope};
use crate::bruhat::{Bruhat, Coset};
use crate::coxroot::{CoxeterSystem, ElemId, GeneratorSet};
use crate::geomkit::Polytope;
use crate::linalg::{dot, sub};
use crate::{Error, Result};

/// Largest group on which the maximality property is brute-forced.
pub const MAXIMALITY_GROUP_LIMIT: usize = 1200;

/// Outcome of scanning `M` for a `≤^w`-maximum.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MaximumOutcome {
    /// Index into `M` of the unique maximum.
    Unique(usize),
    None,
    /// Several elements dominate `M`; reported as a violation.
    Multiple(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaximalityReport {
    pub holds: bool,
    /// Per `w` (by id), the index into `M` of its maximum, when unique.
    pub chosen: Vec<Option<usize>>,
    pub first_violation: Option<(ElemId, MaximumOutcome)>,
}

/// For every `w ∈ W`, looks for a unique `A ∈ M` with `B ≤^w A` for all
/// `B ∈ M`, comparing cosets through `min^w`.
pub fn check_maximality(bruhat: &Bruhat, m: &[Coset]) -> Result<MaximalityReport> {
    if m.is_empty() {
        return Err(Error::EmptyInput("coset set"));
    }
    if m.iter().any(|c| c.j != m[0].j) {
        return Err(Error::ParabolicMismatch);
    }
    let g = bruhat.group();
    if g.order() > MAXIMALITY_GROUP_LIMIT {
        return Err(Error::GuardExceeded(format!(
            "maximality scan limited to groups of order {MAXIMALITY_GROUP_LIMIT}"
        )));
    }
    let mut chosen = Vec::with_capacity(g.order());
    let mut first_violation = None;
    let mut keys = Vec::with_capacity(m.len());
    for w in g.ids() {
        let wi = g.inv(w);
        keys.clear();
        keys.extend(m.iter().map(|a| g.mul(wi, bruhat.coset_min_w(a, w))));
        let maxima: Vec<usize> = (0..m.len())
            .filter(|&a| keys.iter().all(|&k| bruhat.leq(k, keys[a])))
            .collect();
        let outcome = match maxima.len() {
            0 => MaximumOutcome::None,
            1 => MaximumOutcome::Unique(maxima[0]),
            _ => MaximumOutcome::Multiple(maxima),
        };
        match outcome {
            MaximumOutcome::Unique(a) => chosen.push(Some(a)),
            other => {
                chosen.push(None);
                if first_violation.is_none() {
                    first_violation = Some((w, other));
                }
            }
        }
    }
    Ok(MaximalityReport {
        holds: first_violation.is_none(),
        chosen,
        first_violation,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeReport {
    pub holds: bool,
    /// Each edge as a pair of vertex labels, with the index of a parallel
    /// positive root when one exists.
    pub edges: Vec<((usize, usize), Option<usize>)>,
}

/// Index of a positive root parallel to `d`, by `sin²θ ≤ eps²`.
pub fn parallel_root(sys: &CoxeterSystem, d: &[f64], eps_geom: f64) -> Option<usize> {
    let dd = dot(d, d);
    sys.positive_roots().iter().position(|r| {
        let rr = dot(r, r);
        let dr = dot(d, r);
        dd * rr - dr * dr <= eps_geom * eps_geom * dd * rr
    })
}

/// Tests every edge of the face lattice against the positive roots.
pub fn check_edges_root_parallel(sys: &CoxeterSystem, poly: &Polytope, eps_geom: f64) -> EdgeReport {
    let vs = poly.vertices();
    let edges: Vec<((usize, usize), Option<usize>)> = poly
        .edges()
        .into_iter()
        .map(|(a, b)| {
            let d = sub(&vs[b].coords, &vs[a].coords);
            ((vs[a].label, vs[b].label), parallel_root(sys, &d, eps_geom))
        })
        .collect();
    EdgeReport {
        holds: edges.iter().all(|(_, r)| r.is_some()),
        edges,
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatroidReport {
    pub size: usize,
    pub maximality: MaximalityReport,
    /// Edge check for each sampled base point.
    pub edges: Vec<EdgeReport>,
    pub maximality_holds: bool,
    pub edges_root_parallel: bool,
    pub agree: bool,
}

/// Both matroid clauses for `M`, with the edge clause evaluated at one base
/// point per seed. Disagreement between the clauses is an error.
pub fn certify_matroid(
    bruhat: &Bruhat,
    m: &[Coset],
    j: GeneratorSet,
    seeds: &[u64],
    eps_geom: f64,
) -> Result<MatroidReport> {
    if m.iter().any(|c| c.j != j) {
        return Err(Error::ParabolicMismatch);
    }
    if seeds.is_empty() {
        return Err(Error::EmptyInput("base point seeds"));
    }
    let maximality = check_maximality(bruhat, m)?;
    let sys = bruhat.group().system();
    let mut edges = Vec::with_capacity(seeds.len());
    for &seed in seeds {
        let p = base_point(sys, j, seed)?;
        let poly = coset_polytope(bruhat, m, &p, eps_geom)?;
        edges.push(check_edges_root_parallel(sys, &poly, eps_geom));
    }
    let maximality_holds = maximality.holds;
    let agree = edges.iter().all(|e| e.holds == maximality_holds);
    if !agree {
        return Err(Error::DisagreementDetected);
    }
    Ok(MatroidReport {
        size: m.len(),
        maximality,
        edges,
        maximality_holds,
        edges_root_parallel: maximality_holds,
        agree,
    })
}
