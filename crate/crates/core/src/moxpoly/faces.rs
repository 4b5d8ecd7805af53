use alloc::vec;
use alloc::vec::Vec;

use super::{orbit_points, BasePoint};
use crate::bruhat::{Bruhat, Coset};
use crate::coxroot::{ElemId, GeneratorSet};
use crate::geomkit::{Face, LinearProgram, LpSolution, Polytope, Relation};
use crate::linalg::{dot, norm};
use crate::{Error, Result};

fn face_elements(poly: &Polytope, face: &Face) -> Vec<ElemId> {
    poly.face_labels(face).into_iter().map(|l| ElemId(l as u32)).collect()
}

fn extremes(bruhat: &Bruhat, elems: &[ElemId]) -> Option<(ElemId, ElemId)> {
    let x = elems.iter().copied().find(|&x| elems.iter().all(|&z| bruhat.leq(x, z)))?;
    let y = elems.iter().copied().find(|&y| elems.iter().all(|&z| bruhat.leq(z, y)))?;
    Some((x, y))
}

/// The interval `[x, y]` whose orbit points are the vertices of `face`.
pub fn face_to_interval(bruhat: &Bruhat, poly: &Polytope, face: &Face) -> Result<(ElemId, ElemId)> {
    let elems = face_elements(poly, face);
    let (x, y) = extremes(bruhat, &elems).ok_or(Error::FaceNotInterval)?;
    if bruhat.interval_elements(x, y) == elems {
        Ok((x, y))
    } else {
        Err(Error::FaceNotInterval)
    }
}

/// The parabolic interval `[C, D]` whose points are the vertices of `face`.
/// Labels are minimal coset representatives.
pub fn face_to_parabolic_interval(bruhat: &Bruhat, poly: &Polytope, face: &Face, a: &Coset) -> Result<(Coset, Coset)> {
    let elems = face_elements(poly, face);
    let (x, y) = extremes(bruhat, &elems).ok_or(Error::FaceNotInterval)?;
    let c = Coset { min_rep: x, ..*a };
    let d = Coset { min_rep: y, ..*a };
    let reps: Vec<ElemId> = bruhat.parabolic_interval(&c, &d)?.iter().map(|k| k.min_rep).collect();
    if reps == elems {
        Ok((c, d))
    } else {
        Err(Error::FaceNotInterval)
    }
}

/// An interval `[x, y]` of `W` whose cosets are exactly the vertices of
/// `face`. Unlike [`face_to_parabolic_interval`], this always exists: the
/// cosets met by `[x, y]` can be fewer than the parabolic interval
/// `[xW_J, yW_J]`.
pub fn face_to_projected_interval(bruhat: &Bruhat, poly: &Polytope, face: &Face, j: GeneratorSet) -> Result<(ElemId, ElemId)> {
    let reps = face_elements(poly, face);
    let mut members: Vec<ElemId> = reps
        .iter()
        .flat_map(|&m| bruhat.coset_members(&bruhat.coset_of(m, j)))
        .collect();
    members.sort_unstable();
    for &x in &members {
        for &y in &members {
            if !bruhat.leq(x, y) {
                continue;
            }
            let mut image: Vec<ElemId> = bruhat
                .interval_elements(x, y)
                .iter()
                .map(|&z| bruhat.min_rep(z, j))
                .collect();
            image.sort_unstable();
            image.dedup();
            if image == reps {
                return Ok((x, y));
            }
        }
    }
    Err(Error::FaceNotInterval)
}

/// `f(z(p)) = c` on `[x, y]`, `f(w(p)) < c` on the covers of `y` and the
/// cocovers of `x` inside `[u, v]`.
#[derive(Debug, Clone, PartialEq)]
pub struct FaceCertificate {
    pub f: Vec<f64>,
    pub c: f64,
    pub inner: (ElemId, ElemId),
    pub outer: (ElemId, ElemId),
    /// The hyperplane `f = c` supports all of `δ_p([u, v])` and touches it
    /// exactly in `δ_p([x, y])`.
    pub supports_exactly: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub enum FaceVerdict {
    Face(FaceCertificate),
    NotAFace,
}

impl FaceVerdict {
    pub fn is_face(&self) -> bool {
        matches!(self, FaceVerdict::Face(_))
    }
}

/// Decides by LP whether `δ_p([x, y])` spans a face of `Δ_{[u,v]}(p)`
/// through the local certificate, then checks the certificate globally.
#[allow(clippy::too_many_arguments)]
pub fn is_face(
    bruhat: &Bruhat,
    x: ElemId,
    y: ElemId,
    u: ElemId,
    v: ElemId,
    p: &BasePoint,
    eps_lp: f64,
    eps_geom: f64,
) -> Result<FaceVerdict> {
    if !(bruhat.leq(u, x) && bruhat.leq(x, y) && bruhat.leq(y, v)) {
        return Err(Error::NotComparable);
    }
    let inner = bruhat.interval_elements(x, y);
    let mut strict: Vec<ElemId> = bruhat
        .covers(y)
        .iter()
        .filter(|(w, _)| bruhat.leq(*w, v))
        .map(|&(w, _)| w)
        .collect();
    strict.extend(
        bruhat
            .lower_covers(x)
            .iter()
            .filter(|(w, _)| bruhat.leq(u, *w))
            .map(|&(w, _)| w),
    );
    let n = bruhat.group().rank();
    let pts = orbit_points(bruhat, &inner, p);
    let out_pts = orbit_points(bruhat, &strict, p);

    let (f, c) = if strict.is_empty() {
        (vec![0.0; n], 0.0)
    } else {
        // Variables f_1..f_n, c. The system is homogeneous, so strict rows
        // are normalized to a unit gap.
        let mut lp = LinearProgram::new(n + 1);
        for q in &pts {
            let mut row = q.clone();
            row.push(-1.0);
            lp.add(row, Relation::Eq, 0.0)?;
        }
        for q in &out_pts {
            let mut row: Vec<f64> = q.iter().map(|t| -t).collect();
            row.push(1.0);
            lp.add(row, Relation::Ge, 1.0)?;
        }
        match lp.solve(eps_lp)? {
            LpSolution::Optimal { mut x, .. } => {
                let c = x.pop().expect("offset variable");
                let s = norm(&x);
                (x.iter().map(|t| t / s).collect(), c / s)
            }
            LpSolution::Infeasible => return Ok(FaceVerdict::NotAFace),
            LpSolution::Unbounded => {
                return Err(Error::NumericalFailure("feasibility problem unbounded".into()))
            }
        }
    };

    let all = bruhat.interval_elements(u, v);
    let all_pts = orbit_points(bruhat, &all, p);
    let scale = all_pts.iter().map(|q| norm(q)).fold(1.0, f64::max);
    let tol = eps_geom * scale;
    let supports_exactly = all.iter().zip(&all_pts).all(|(z, q)| {
        let s = dot(&f, q) - c;
        let on = inner.binary_search(z).is_ok();
        if on {
            s.abs() <= tol
        } else {
            s < -tol
        }
    });
    Ok(FaceVerdict::Face(FaceCertificate {
        f,
        c,
        inner: (x, y),
        outer: (u, v),
        supports_exactly,
    }))
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ChainInFaceReport {
    pub faces: usize,
    pub pairs: usize,
    /// `(face index, x, y)` where some `z ∈ [x, y]` is missing from the face.
    pub violations: Vec<(usize, ElemId, ElemId)>,
}

/// For every face and every comparable pair of its labels, the whole
/// interval between them lies in the face.
pub fn chain_in_face_check(bruhat: &Bruhat, poly: &Polytope) -> ChainInFaceReport {
    let mut report = ChainInFaceReport::default();
    for (i, face) in poly.faces().iter().enumerate() {
        report.faces += 1;
        let elems = face_elements(poly, face);
        for &x in &elems {
            for &y in &elems {
                if x != y && bruhat.leq(x, y) {
                    report.pairs += 1;
                    let inside = bruhat
                        .interval_elements(x, y)
                        .iter()
                        .all(|z| elems.binary_search(z).is_ok());
                    if !inside {
                        report.violations.push((i, x, y));
                    }
                }
            }
        }
    }
    report
}
