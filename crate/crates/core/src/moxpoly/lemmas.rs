//! Sampled checks of the face-extension implications.
//!
//! Functionals are drawn from a standard normal distribution and projected
//! onto the annihilator of the relevant root span, so they are constant on
//! the prescribed orbit points by construction.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::{diamond, interval_roots, orbit_points, BasePoint, Diamond};
use crate::bruhat::Bruhat;
use crate::coxroot::ElemId;
use crate::linalg::{dot, norm, orthonormal_basis, project_out, sub};
use crate::sampling::{normal_vector, rng, SeededRng};
use crate::{Error, Result};

const SPAN_TOL: f64 = 1e-9;

struct Points {
    map: BTreeMap<ElemId, Vec<f64>>,
    tol: f64,
}

impl Points {
    fn new(bruhat: &Bruhat, u: ElemId, v: ElemId, p: &BasePoint, eps_geom: f64) -> Self {
        let elems = bruhat.interval_elements(u, v);
        let pts = orbit_points(bruhat, &elems, p);
        let scale = pts.iter().map(|q| norm(q)).fold(1.0, f64::max);
        Points {
            map: elems.into_iter().zip(pts).collect(),
            tol: eps_geom * scale,
        }
    }

    fn at(&self, z: ElemId) -> &[f64] {
        &self.map[&z]
    }
}

fn annihilator_sample(rng: &mut SeededRng, basis: &[Vec<f64>], dim: usize) -> Vec<f64> {
    project_out(&normal_vector(rng, dim), basis)
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct ExtensionReport {
    /// Functionals tried (each sample contributes `f` and `-f`).
    pub functionals: usize,
    pub hypothesis_met: usize,
    pub conclusions_checked: usize,
    /// `(f, q)`: `f(q(p)) > c` although the hypothesis held.
    pub counterexamples: Vec<(Vec<f64>, ElemId)>,
}

/// If `f` is constant `c` on `δ_p([x, y])` and `f ≤ c` on the covers of `y`
/// in `[u, v]`, then `f ≤ c` on every `q ∈ [u, v]` covering some `o ∈ [x, y]`.
#[allow(clippy::too_many_arguments)]
pub fn face_extension_lemma_check(
    bruhat: &Bruhat,
    u: ElemId,
    v: ElemId,
    x: ElemId,
    y: ElemId,
    p: &BasePoint,
    samples: usize,
    seed: u64,
    eps_geom: f64,
) -> Result<ExtensionReport> {
    if !(bruhat.leq(u, x) && bruhat.leq(x, y) && bruhat.leq(y, v)) {
        return Err(Error::NotComparable);
    }
    let sys = bruhat.group().system();
    let n = sys.rank();
    let pts = Points::new(bruhat, u, v, p, eps_geom);
    let u_xy: Vec<Vec<f64>> = interval_roots(bruhat, x, y)
        .into_iter()
        .map(|i| sys.root(i).to_vec())
        .collect();
    let basis = orthonormal_basis(&u_xy, SPAN_TOL);
    let hyp: Vec<ElemId> = bruhat
        .covers(y)
        .iter()
        .filter(|(w, _)| bruhat.leq(*w, v))
        .map(|&(w, _)| w)
        .collect();
    let mut concl: Vec<ElemId> = bruhat
        .interval_elements(x, y)
        .into_iter()
        .flat_map(|o| {
            bruhat
                .covers(o)
                .iter()
                .filter(|(q, _)| bruhat.leq(*q, v))
                .map(|&(q, _)| q)
                .collect::<Vec<_>>()
        })
        .collect();
    concl.sort_unstable();
    concl.dedup();

    let mut r = rng(seed);
    let mut report = ExtensionReport::default();
    for _ in 0..samples {
        let f0 = annihilator_sample(&mut r, &basis, n);
        for sign in [1.0, -1.0] {
            let f: Vec<f64> = f0.iter().map(|t| sign * t).collect();
            report.functionals += 1;
            let c = dot(&f, pts.at(x));
            if hyp.iter().any(|&w| dot(&f, pts.at(w)) > c + pts.tol) {
                continue;
            }
            report.hypothesis_met += 1;
            for &q in &concl {
                report.conclusions_checked += 1;
                if dot(&f, pts.at(q)) > c + pts.tol {
                    report.counterexamples.push((f.clone(), q));
                }
            }
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct DiamondFunctionalReport {
    pub diamonds: usize,
    /// Cases in which each clause's hypothesis held.
    pub clause_cases: [usize; 3],
    /// `(diamond, clause number 1..=3)`.
    pub violations: Vec<(Diamond, u8)>,
}

/// On every diamond inside `[u, v]`, with functionals built for each clause:
/// (1) constant on three corners implies constant on the fourth;
/// (2) `f(u) = f(x) = c`, `f(v) < c` implies `f(y) < c`;
/// (3) `f(u) = f(x) = c`, `f(y) < c` implies `f(v) < c`.
/// Clauses (2) and (3) are also run with `x` and `y` exchanged.
pub fn diamond_functional_check(
    bruhat: &Bruhat,
    u: ElemId,
    v: ElemId,
    p: &BasePoint,
    samples_per_diamond: usize,
    seed: u64,
    eps_geom: f64,
) -> Result<DiamondFunctionalReport> {
    if !bruhat.leq(u, v) {
        return Err(Error::NotComparable);
    }
    let g = bruhat.group();
    let n = g.rank();
    let pts = Points::new(bruhat, u, v, p, eps_geom);
    let tol = pts.tol;
    let mut r = rng(seed);
    let mut report = DiamondFunctionalReport::default();
    for a in bruhat.interval_elements(u, v) {
        for b in bruhat.interval_elements(a, v) {
            if g.length(b) != g.length(a) + 2 {
                continue;
            }
            let d = diamond(bruhat, a, b)?;
            report.diamonds += 1;
            let corners = [pts.at(d.u), pts.at(d.x), pts.at(d.y), pts.at(d.v)];
            for _ in 0..samples_per_diamond {
                // Clause 1, each corner left out in turn.
                for out in 0..4 {
                    let rest: Vec<usize> = (0..4).filter(|&k| k != out).collect();
                    let diffs = [
                        sub(corners[rest[1]], corners[rest[0]]),
                        sub(corners[rest[2]], corners[rest[0]]),
                    ];
                    let basis = orthonormal_basis(&diffs, SPAN_TOL);
                    let f = annihilator_sample(&mut r, &basis, n);
                    let c = dot(&f, corners[rest[0]]);
                    report.clause_cases[0] += 1;
                    if (dot(&f, corners[out]) - c).abs() > tol * norm(&f).max(1.0) {
                        report.violations.push((d, 1));
                    }
                }
                // Clauses 2 and 3, for both orientations of the middles.
                for (side, other) in [(1usize, 2usize), (2, 1)] {
                    let basis = orthonormal_basis(&[sub(corners[side], corners[0])], SPAN_TOL);
                    let f0 = annihilator_sample(&mut r, &basis, n);
                    for sign in [1.0, -1.0] {
                        let f: Vec<f64> = f0.iter().map(|t| sign * t).collect();
                        let t = tol * norm(&f).max(1.0);
                        let c = dot(&f, corners[0]);
                        let fo = dot(&f, corners[other]) - c;
                        let fv = dot(&f, corners[3]) - c;
                        if fv < -t {
                            report.clause_cases[1] += 1;
                            if fo >= -t {
                                report.violations.push((d, 2));
                            }
                        }
                        if fo < -t {
                            report.clause_cases[2] += 1;
                            if fv >= -t {
                                report.violations.push((d, 3));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}
