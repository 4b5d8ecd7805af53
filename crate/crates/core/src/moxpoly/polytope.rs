use alloc::vec::Vec;

use super::BasePoint;
use crate::bruhat::{Bruhat, Coset};
use crate::coxroot::ElemId;
use crate::geomkit::{convex_hull, Polytope};
use crate::{Error, Result};

/// Orbit points `z(p)` for the given elements.
pub fn orbit_points(bruhat: &Bruhat, elems: &[ElemId], p: &BasePoint) -> Vec<Vec<f64>> {
    elems.iter().map(|&z| bruhat.group().apply(z, &p.coords)).collect()
}

fn hull_of(bruhat: &Bruhat, elems: &[ElemId], p: &BasePoint, eps_geom: f64) -> Result<Polytope> {
    let labels: Vec<usize> = elems.iter().map(|z| z.index()).collect();
    let poly = convex_hull(&labels, &orbit_points(bruhat, elems, p), eps_geom)?;
    if poly.vertices().len() != elems.len() {
        return Err(Error::NumericalFailure(alloc::format!(
            "{} of {} orbit points are vertices",
            poly.vertices().len(),
            elems.len()
        )));
    }
    Ok(poly)
}

/// Hull of `{z(p) : z ∈ [u, v]}`; vertex labels are element ids.
pub fn interval_polytope(bruhat: &Bruhat, u: ElemId, v: ElemId, p: &BasePoint, eps_geom: f64) -> Result<Polytope> {
    if !p.j.is_empty() {
        return Err(Error::ParabolicMismatch);
    }
    if !bruhat.leq(u, v) {
        return Err(Error::NotComparable);
    }
    hull_of(bruhat, &bruhat.interval_elements(u, v), p, eps_geom)
}

/// Hull of `δ_p(M)` for a set of cosets; labels are minimal representatives.
pub fn coset_polytope(bruhat: &Bruhat, m: &[Coset], p: &BasePoint, eps_geom: f64) -> Result<Polytope> {
    if m.iter().any(|c| c.j != p.j) {
        return Err(Error::ParabolicMismatch);
    }
    let reps: Vec<ElemId> = m.iter().map(|c| c.min_rep).collect();
    hull_of(bruhat, &reps, p, eps_geom)
}

/// Hull of `δ_p([A, B])`.
pub fn parabolic_polytope(bruhat: &Bruhat, a: &Coset, b: &Coset, p: &BasePoint, eps_geom: f64) -> Result<Polytope> {
    if a.j != p.j || b.j != p.j {
        return Err(Error::ParabolicMismatch);
    }
    let cosets = bruhat.parabolic_interval(a, b)?;
    coset_polytope(bruhat, &cosets, p, eps_geom)
}
