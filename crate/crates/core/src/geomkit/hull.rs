//! Convex hulls by supporting-hyperplane enumeration.
//!
//! Every affinely independent `d`-subset of the input (where `d` is the
//! affine dimension) spans a candidate hyperplane; it is kept when all points
//! lie on one side. Coplanar vertex sets are detected with a relative
//! tolerance instead of being perturbed.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::lp::{lp_feasible, LinearProgram, LpStatus, Relation};
use crate::linalg::{affine_rank, dot, norm, orthonormal_basis, project_out, sub};
use crate::{Error, Result};

pub const MAX_HULL_POINTS: usize = 2000;
pub const MAX_HULL_DIM: usize = 6;
/// Upper bound on candidate hyperplanes examined.
pub const MAX_HULL_CANDIDATES: u64 = 20_000_000;

const RANK_TOL: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq)]
pub struct Vertex {
    pub label: usize,
    pub coords: Vec<f64>,
}

/// `normal · v ≤ offset` for every vertex, with equality on `vertices`.
#[derive(Debug, Clone, PartialEq)]
pub struct Facet {
    pub normal: Vec<f64>,
    pub offset: f64,
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct Face {
    pub dim: usize,
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Polytope {
    ambient_dim: usize,
    dim: usize,
    vertices: Vec<Vertex>,
    facets: Vec<Facet>,
    faces: Vec<Face>,
}

impl Polytope {
    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertices(&self) -> &[Vertex] {
        &self.vertices
    }

    pub fn facets(&self) -> &[Facet] {
        &self.facets
    }

    /// Nonempty faces sorted by `(dim, vertices)`; the last one is the
    /// polytope itself.
    pub fn faces(&self) -> &[Face] {
        &self.faces
    }

    pub fn labels(&self) -> Vec<usize> {
        self.vertices.iter().map(|v| v.label).collect()
    }

    pub fn vertex_of_label(&self, label: usize) -> Option<usize> {
        self.vertices.iter().position(|v| v.label == label)
    }

    pub fn faces_of_dim(&self, dim: usize) -> impl Iterator<Item = &Face> {
        self.faces.iter().filter(move |f| f.dim == dim)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.faces_of_dim(1)
            .map(|f| (f.vertices[0], f.vertices[1]))
            .collect()
    }

    /// Number of faces of each dimension `0..=dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        let mut f = vec![0; self.dim + 1];
        for face in &self.faces {
            f[face.dim] += 1;
        }
        f
    }

    pub fn face_labels(&self, face: &Face) -> Vec<usize> {
        let mut l: Vec<usize> = face.vertices.iter().map(|&i| self.vertices[i].label).collect();
        l.sort_unstable();
        l
    }

    /// The face whose vertex labels are exactly `labels`.
    pub fn face_with_labels(&self, labels: &[usize]) -> Option<&Face> {
        let mut idx: Vec<usize> = labels
            .iter()
            .map(|&l| self.vertex_of_label(l))
            .collect::<Option<_>>()?;
        idx.sort_unstable();
        idx.dedup();
        self.faces.iter().find(|f| f.vertices == idx)
    }

    /// Checks that each facet supports the polytope exactly on its vertex set.
    pub fn facets_support(&self, eps_geom: f64) -> bool {
        let scale = self.scale();
        self.facets.iter().all(|f| {
            self.vertices.iter().enumerate().all(|(i, v)| {
                let s = dot(&f.normal, &v.coords) - f.offset;
                let on = f.vertices.binary_search(&i).is_ok();
                s <= eps_geom * scale && (on == (s.abs() <= eps_geom * scale))
            })
        })
    }

    fn scale(&self) -> f64 {
        self.vertices
            .iter()
            .map(|v| norm(&v.coords))
            .fold(1.0, f64::max)
    }
}

/// Whether `x` lies in the convex hull of `points`.
pub fn in_convex_hull(x: &[f64], points: &[Vec<f64>], eps_lp: f64) -> Result<bool> {
    if points.is_empty() {
        return Ok(false);
    }
    let mut lp = LinearProgram::new(points.len());
    lp.set_all_nonnegative();
    for (k, &xk) in x.iter().enumerate() {
        lp.add(points.iter().map(|p| p[k]).collect(), Relation::Eq, xk)?;
    }
    lp.add(vec![1.0; points.len()], Relation::Eq, 1.0)?;
    Ok(matches!(lp_feasible(&lp, eps_lp)?, LpStatus::Feasible(_)))
}

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Bits(Vec<u64>);

impl Bits {
    fn new(n: usize) -> Self {
        Bits(vec![0; n.div_ceil(64)])
    }
    fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }
    fn get(&self, i: usize) -> bool {
        self.0[i / 64] >> (i % 64) & 1 == 1
    }
    fn and(&self, o: &Bits) -> Bits {
        Bits(self.0.iter().zip(&o.0).map(|(a, b)| a & b).collect())
    }
    fn is_empty(&self) -> bool {
        self.0.iter().all(|&w| w == 0)
    }
    fn ones(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().enumerate().flat_map(|(k, &w)| {
            (0..64).filter(move |b| w >> b & 1 == 1).map(move |b| k * 64 + b)
        })
    }
    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
}

fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let mut r: u128 = 1;
    for i in 0..k {
        r = r * (n - i) as u128 / (i + 1) as u128;
        if r > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    r as u64
}

/// Unit normal to the hyperplane through `pts` (exactly `d` points in `R^d`).
fn hyperplane_normal(pts: &[&Vec<f64>], d: usize) -> Option<Vec<f64>> {
    let diffs: Vec<Vec<f64>> = pts[1..].iter().map(|p| sub(p, pts[0])).collect();
    let basis = orthonormal_basis(&diffs, RANK_TOL);
    if basis.len() + 1 != d {
        return None;
    }
    let mut best: Option<Vec<f64>> = None;
    let mut best_norm = 0.0;
    for k in 0..d {
        let mut e = vec![0.0; d];
        e[k] = 1.0;
        let r = project_out(&e, &basis);
        let n = norm(&r);
        if n > best_norm {
            best_norm = n;
            best = Some(r);
        }
    }
    best.map(|r| r.iter().map(|x| x / best_norm).collect())
}

/// Convex hull of labeled points.
///
/// Input points must be pairwise distinct. Vertices keep input order.
pub fn convex_hull(labels: &[usize], points: &[Vec<f64>], eps_geom: f64) -> Result<Polytope> {
    let n = points.len();
    if n == 0 {
        return Err(Error::EmptyInput("points"));
    }
    if labels.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: labels.len(),
        });
    }
    if n > MAX_HULL_POINTS {
        return Err(Error::GuardExceeded(format!("{n} points exceeds {MAX_HULL_POINTS}")));
    }
    let ambient = points[0].len();
    if ambient > MAX_HULL_DIM {
        return Err(Error::GuardExceeded(format!(
            "ambient dimension {ambient} exceeds {MAX_HULL_DIM}"
        )));
    }
    if let Some(p) = points.iter().find(|p| p.len() != ambient) {
        return Err(Error::DimensionMismatch {
            expected: ambient,
            got: p.len(),
        });
    }

    let centroid: Vec<f64> = (0..ambient)
        .map(|k| points.iter().map(|p| p[k]).sum::<f64>() / n as f64)
        .collect();
    let centered: Vec<Vec<f64>> = points.iter().map(|p| sub(p, &centroid)).collect();
    let scale = centered.iter().map(|p| norm(p)).fold(0.0, f64::max).max(
        points.iter().map(|p| norm(p)).fold(0.0, f64::max) * 1e-3,
    );
    let tol = eps_geom * scale.max(f64::MIN_POSITIVE);
    for j in 1..n {
        for i in 0..j {
            if crate::linalg::distance(&points[i], &points[j]) <= tol {
                return Err(Error::DuplicatePoint(j));
            }
        }
    }

    let chart = orthonormal_basis(&centered, RANK_TOL);
    let d = chart.len();
    let local: Vec<Vec<f64>> = centered
        .iter()
        .map(|p| chart.iter().map(|b| dot(b, p)).collect())
        .collect();

    if d == 0 {
        return Ok(Polytope {
            ambient_dim: ambient,
            dim: 0,
            vertices: vec![Vertex {
                label: labels[0],
                coords: points[0].clone(),
            }],
            facets: Vec::new(),
            faces: vec![Face {
                dim: 0,
                vertices: vec![0],
            }],
        });
    }

    let candidates = binomial(n, d);
    if candidates > MAX_HULL_CANDIDATES {
        return Err(Error::GuardExceeded(format!(
            "{candidates} candidate hyperplanes exceeds {MAX_HULL_CANDIDATES}"
        )));
    }

    // (incidence, local normal, local offset)
    let mut found: Vec<(Bits, Vec<f64>, f64)> = Vec::new();
    let mut seen: BTreeSet<Bits> = BTreeSet::new();
    let mut comb: Vec<usize> = (0..d).collect();
    loop {
        let covered = found
            .iter()
            .any(|(inc, _, _)| comb.iter().all(|&i| inc.get(i)));
        if !covered {
            let pts: Vec<&Vec<f64>> = comb.iter().map(|&i| &local[i]).collect();
            if let Some(mut normal) = hyperplane_normal(&pts, d) {
                let off = dot(&normal, pts[0]);
                let mut above = false;
                let mut below = false;
                for q in &local {
                    let s = dot(&normal, q) - off;
                    above |= s > tol;
                    below |= s < -tol;
                    if above && below {
                        break;
                    }
                }
                if !(above && below) {
                    let mut offset = off;
                    if above {
                        normal.iter_mut().for_each(|x| *x = -*x);
                        offset = -off;
                    }
                    let mut inc = Bits::new(n);
                    for (j, q) in local.iter().enumerate() {
                        if (dot(&normal, q) - offset).abs() <= tol {
                            inc.set(j);
                        }
                    }
                    if !seen.contains(&inc) {
                        let on: Vec<Vec<f64>> = inc.ones().map(|j| local[j].clone()).collect();
                        if affine_rank(&on, RANK_TOL) + 1 == d {
                            seen.insert(inc.clone());
                            found.push((inc, normal, offset));
                        }
                    }
                }
            }
        }
        // Next combination in lexicographic order.
        let mut i = d;
        while i > 0 && comb[i - 1] == n - d + i - 1 {
            i -= 1;
        }
        if i == 0 {
            break;
        }
        comb[i - 1] += 1;
        for k in i..d {
            comb[k] = comb[k - 1] + 1;
        }
    }

    // A point is a vertex iff the facets through it meet only in it.
    let mut is_vertex = vec![false; n];
    for (j, flag) in is_vertex.iter_mut().enumerate() {
        let mut meet: Option<Bits> = None;
        for (inc, _, _) in &found {
            if inc.get(j) {
                meet = Some(match meet {
                    None => inc.clone(),
                    Some(m) => m.and(inc),
                });
            }
        }
        *flag = meet.is_some_and(|m| m.count() == 1);
    }
    let mut new_index = vec![usize::MAX; n];
    let mut vertices = Vec::new();
    for j in 0..n {
        if is_vertex[j] {
            new_index[j] = vertices.len();
            vertices.push(Vertex {
                label: labels[j],
                coords: points[j].clone(),
            });
        }
    }
    let nv = vertices.len();
    let restrict = |inc: &Bits| -> Bits {
        let mut b = Bits::new(nv);
        for j in inc.ones() {
            if is_vertex[j] {
                b.set(new_index[j]);
            }
        }
        b
    };

    let mut facets: Vec<Facet> = found
        .iter()
        .map(|(inc, normal, offset)| {
            let mut amb = vec![0.0; ambient];
            for (c, b) in normal.iter().zip(&chart) {
                for (a, x) in amb.iter_mut().zip(b) {
                    *a += c * x;
                }
            }
            let offset = offset + dot(&amb, &centroid);
            Facet {
                normal: amb,
                offset,
                vertices: restrict(inc).ones().collect(),
            }
        })
        .collect();
    facets.sort_by(|a, b| a.vertices.cmp(&b.vertices));

    // Face lattice: facets closed under intersection, plus the whole polytope.
    let facet_bits: Vec<Bits> = found.iter().map(|(inc, _, _)| restrict(inc)).collect();
    let mut lattice: BTreeMap<Bits, ()> = BTreeMap::new();
    let mut queue: Vec<Bits> = Vec::new();
    for b in &facet_bits {
        if lattice.insert(b.clone(), ()).is_none() {
            queue.push(b.clone());
        }
    }
    while let Some(f) = queue.pop() {
        for b in &facet_bits {
            let m = f.and(b);
            if !m.is_empty() && !lattice.contains_key(&m) {
                lattice.insert(m.clone(), ());
                queue.push(m);
            }
        }
    }
    let mut all = Bits::new(nv);
    (0..nv).for_each(|i| all.set(i));
    lattice.insert(all, ());
    let vlocal: Vec<Vec<f64>> = (0..n).filter(|&j| is_vertex[j]).map(|j| local[j].clone()).collect();
    let mut faces: Vec<Face> = lattice
        .into_keys()
        .map(|b| {
            let vs: Vec<usize> = b.ones().collect();
            let pts: Vec<Vec<f64>> = vs.iter().map(|&i| vlocal[i].clone()).collect();
            Face {
                dim: affine_rank(&pts, RANK_TOL),
                vertices: vs,
            }
        })
        .collect();
    faces.sort();

    Ok(Polytope {
        ambient_dim: ambient,
        dim: d,
        vertices,
        facets,
        faces,
    })
}

/// Outcome of the degenerating quadrilateral check.
#[derive(Debug, Clone, PartialEq)]
pub struct FaceLimitReport {
    /// `[x1, x3]` is a face of the hull at `t = 0`.
    pub segment_is_face_at_zero: bool,
    /// For each positive `t`: whether some face has vertex set `{x1, x3}`.
    pub segment_is_face: Vec<(f64, bool)>,
    /// Edge label pairs of the hull at each `t` (including `0`).
    pub edges: Vec<(f64, Vec<(usize, usize)>)>,
    pub passed: bool,
}

/// Points `x1 = (-1,0)`, `x2 = (0,-1)`, `x3 = (1,0)`, `x4 = (0,t)`, labels 1..4.
pub fn quadrilateral(t: f64) -> (Vec<usize>, Vec<Vec<f64>>) {
    (
        vec![1, 2, 3, 4],
        vec![
            vec![-1.0, 0.0],
            vec![0.0, -1.0],
            vec![1.0, 0.0],
            vec![0.0, t],
        ],
    )
}

/// A face of a limit polytope need not be a limit of faces: `[x1, x3]` is an
/// edge of the hull at `t = 0` but of no hull for `t` in `(0, 1)`.
pub fn face_limit_regression(eps_geom: f64) -> Result<FaceLimitReport> {
    let mut edges = Vec::new();
    let mut segment_is_face = Vec::new();
    let mut at_zero = false;
    for t in [0.0, 0.1, 0.5, 0.9] {
        let (labels, pts) = quadrilateral(t);
        let hull = convex_hull(&labels, &pts, eps_geom)?;
        let present = hull.face_with_labels(&[1, 3]).is_some();
        let mut e: Vec<(usize, usize)> = hull
            .edges()
            .iter()
            .map(|&(a, b)| {
                let (la, lb) = (hull.vertices[a].label, hull.vertices[b].label);
                (la.min(lb), la.max(lb))
            })
            .collect();
        e.sort_unstable();
        edges.push((t, e));
        if t == 0.0 {
            at_zero = present;
        } else {
            segment_is_face.push((t, present));
        }
    }
    let passed = at_zero && segment_is_face.iter().all(|&(_, p)| !p);
    Ok(FaceLimitReport {
        segment_is_face_at_zero: at_zero,
        segment_is_face,
        edges,
        passed,
    })
}
