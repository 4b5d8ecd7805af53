use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::sync::atomic::{AtomicU64, Ordering};

use super::{CoxeterDiagram, GroupElement, SignedPerm};
use crate::linalg::{self, dot};
use crate::{Error, Result};

pub const DEFAULT_ROOT_CAP: usize = 10_000;

static NEXT_SYSTEM_ID: AtomicU64 = AtomicU64::new(1);

/// Identity of a constructed system; elements of different systems never
/// multiply.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SystemId(u64);

/// `roots[mid] = a * roots[low] + b * roots[high]` with `a, b > 0` and
/// `low < high`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootTriple {
    pub low: usize,
    pub high: usize,
    pub mid: usize,
    pub a: f64,
    pub b: f64,
}

/// A finite Coxeter system realized by its standard geometric
/// representation. Vectors are written in simple-root coordinates.
#[derive(Debug, Clone)]
pub struct CoxeterSystem {
    id: SystemId,
    diagram: CoxeterDiagram,
    form: Vec<Vec<f64>>,
    roots: Vec<Vec<f64>>,
    simple_actions: Vec<SignedPerm>,
    reflection_actions: Vec<SignedPerm>,
    triples: Vec<RootTriple>,
    eps_root: f64,
}

/// Builds the root system with the default orbit cap.
pub fn build_system(diagram: CoxeterDiagram, eps_root: f64) -> Result<CoxeterSystem> {
    CoxeterSystem::new(diagram, eps_root, DEFAULT_ROOT_CAP)
}

impl CoxeterSystem {
    pub fn new(diagram: CoxeterDiagram, eps_root: f64, cap: usize) -> Result<Self> {
        if !(eps_root.is_finite() && eps_root > 0.0) {
            return Err(Error::InvalidTolerance);
        }
        let n = diagram.rank();
        let form: Vec<Vec<f64>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| match diagram.m(i, j) {
                        1 => 1.0,
                        2 => 0.0,
                        m => -libm::cos(core::f64::consts::PI / m as f64),
                    })
                    .collect()
            })
            .collect();

        // Orbit closure of the simple roots under the simple reflections.
        let mut all: Vec<Vec<f64>> = (0..n)
            .map(|i| {
                let mut e = vec![0.0; n];
                e[i] = 1.0;
                e
            })
            .collect();
        let mut head = 0;
        while head < all.len() {
            for s in 0..n {
                let img = reflect_simple(&form, &all[head], s);
                if !all.iter().any(|r| linalg::distance(r, &img) <= eps_root) {
                    if all.len() >= cap {
                        return Err(Error::InfiniteTypeSuspected { cap });
                    }
                    all.push(img);
                }
            }
            head += 1;
        }

        let mut roots = Vec::new();
        for r in &all {
            let pos = r.iter().all(|&x| x >= -eps_root);
            let neg = r.iter().all(|&x| x <= eps_root);
            match (pos, neg) {
                (true, false) => roots.push(r.clone()),
                (false, true) => {}
                _ => {
                    return Err(Error::DegenerateDiagram(format!(
                        "root {r:?} is neither positive nor negative"
                    )))
                }
            }
        }
        for i in 0..all.len() {
            for j in i + 1..all.len() {
                if linalg::distance(&all[i], &all[j]) <= 1e3 * eps_root {
                    return Err(Error::NumericalFailure(format!(
                        "roots {i} and {j} closer than the separation guard"
                    )));
                }
            }
        }

        let mut sys = CoxeterSystem {
            id: SystemId(NEXT_SYSTEM_ID.fetch_add(1, Ordering::Relaxed)),
            diagram,
            form,
            roots,
            simple_actions: Vec::new(),
            reflection_actions: Vec::new(),
            triples: Vec::new(),
            eps_root,
        };
        sys.simple_actions = (0..n)
            .map(|s| {
                let col = sys.roots[s].clone();
                sys.reflection_perm(&col)
            })
            .collect::<Result<_>>()?;
        sys.reflection_actions = (0..sys.roots.len())
            .map(|i| {
                let r = sys.roots[i].clone();
                sys.reflection_perm(&r)
            })
            .collect::<Result<_>>()?;
        sys.triples = sys.compute_triples();
        Ok(sys)
    }

    fn reflection_perm(&self, alpha: &[f64]) -> Result<SignedPerm> {
        let images = self
            .roots
            .iter()
            .map(|x| {
                let c = 2.0 * self.pairing(x, alpha);
                let img: Vec<f64> = x.iter().zip(alpha).map(|(xi, ai)| xi - c * ai).collect();
                self.locate(&img)
                    .ok_or_else(|| Error::NumericalFailure(format!("root image {img:?} not found")))
            })
            .collect::<Result<Vec<_>>>()?;
        SignedPerm::from_images(&images)
    }

    fn compute_triples(&self) -> Vec<RootTriple> {
        let n = self.roots.len();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let (ri, rj) = (&self.roots[i], &self.roots[j]);
                let g = [[dot(ri, ri), dot(ri, rj)], [dot(ri, rj), dot(rj, rj)]];
                let det = g[0][0] * g[1][1] - g[0][1] * g[1][0];
                if det.abs() <= self.eps_root {
                    continue;
                }
                for k in 0..n {
                    if k == i || k == j {
                        continue;
                    }
                    let rk = &self.roots[k];
                    let (bi, bj) = (dot(ri, rk), dot(rj, rk));
                    let a = (bi * g[1][1] - bj * g[0][1]) / det;
                    let b = (g[0][0] * bj - g[1][0] * bi) / det;
                    let fit: Vec<f64> = ri.iter().zip(rj).map(|(x, y)| a * x + b * y).collect();
                    if linalg::distance(&fit, rk) <= 1e3 * self.eps_root
                        && a > self.eps_root
                        && b > self.eps_root
                    {
                        out.push(RootTriple { low: i, high: j, mid: k, a, b });
                    }
                }
            }
        }
        out
    }

    /// Index and sign of the stored positive root equal to `±v`.
    pub fn locate(&self, v: &[f64]) -> Option<(usize, bool)> {
        for (i, r) in self.roots.iter().enumerate() {
            let (mut dp, mut dn) = (0.0, 0.0);
            for (x, y) in v.iter().zip(r) {
                dp += (x - y) * (x - y);
                dn += (x + y) * (x + y);
            }
            let tol = self.eps_root * self.eps_root;
            if dp <= tol {
                return Some((i, false));
            }
            if dn <= tol {
                return Some((i, true));
            }
        }
        None
    }

    pub fn id(&self) -> SystemId {
        self.id
    }

    pub fn diagram(&self) -> &CoxeterDiagram {
        &self.diagram
    }

    pub fn rank(&self) -> usize {
        self.diagram.rank()
    }

    pub fn eps_root(&self) -> f64 {
        self.eps_root
    }

    /// Gram matrix `B(alpha_s, alpha_t) = -cos(pi / m(s, t))`.
    pub fn form(&self) -> &[Vec<f64>] {
        &self.form
    }

    /// `B(x, y)` for vectors in simple-root coordinates.
    pub fn pairing(&self, x: &[f64], y: &[f64]) -> f64 {
        let mut acc = 0.0;
        for (i, xi) in x.iter().enumerate() {
            if *xi != 0.0 {
                acc += xi * dot(&self.form[i], y);
            }
        }
        acc
    }

    pub fn positive_roots(&self) -> &[Vec<f64>] {
        &self.roots
    }

    pub fn num_positive_roots(&self) -> usize {
        self.roots.len()
    }

    pub fn root(&self, i: usize) -> &[f64] {
        &self.roots[i]
    }

    /// Positive-combination triples used by the betweenness check.
    pub fn triples(&self) -> &[RootTriple] {
        &self.triples
    }

    pub fn identity(&self) -> GroupElement {
        GroupElement::from_action(self.id, SignedPerm::identity(self.roots.len()))
    }

    pub fn simple_reflection(&self, s: usize) -> GroupElement {
        GroupElement::from_action(self.id, self.simple_actions[s].clone())
    }

    /// The reflection `t` whose root is positive root `i`.
    pub fn reflection(&self, i: usize) -> GroupElement {
        GroupElement::from_action(self.id, self.reflection_actions[i].clone())
    }

    /// Product of simple reflections `s_{w[0]} s_{w[1]} ...`.
    pub fn from_word(&self, word: &[usize]) -> Result<GroupElement> {
        let mut acc = self.identity();
        for &s in word {
            if s >= self.rank() {
                return Err(Error::InvalidElement(format!("generator index {s} out of range")));
            }
            acc = acc.multiply(&self.simple_reflection(s))?;
        }
        Ok(acc)
    }

    /// Image of the simple root `alpha_s` under `w`, as a vector.
    fn image_of_simple(&self, w: &GroupElement, s: usize) -> Vec<f64> {
        let (j, neg) = w.action().image(s);
        let sign = if neg { -1.0 } else { 1.0 };
        self.roots[j].iter().map(|x| sign * x).collect()
    }

    /// Matrix of `w` in simple-root coordinates (columns are images of the
    /// simple roots).
    pub fn matrix(&self, w: &GroupElement) -> Vec<Vec<f64>> {
        let n = self.rank();
        let cols: Vec<Vec<f64>> = (0..n).map(|s| self.image_of_simple(w, s)).collect();
        linalg::transpose(&cols)
    }

    /// `w(x)` for `x` in simple-root coordinates.
    pub fn apply(&self, w: &GroupElement, x: &[f64]) -> Vec<f64> {
        let n = self.rank();
        let mut out = vec![0.0; n];
        for (s, &xs) in x.iter().enumerate().take(n) {
            if xs == 0.0 {
                continue;
            }
            let (j, neg) = w.action().image(s);
            let c = if neg { -xs } else { xs };
            linalg::axpy(&mut out, c, &self.roots[j]);
        }
        out
    }

    /// Checks the stored signed permutation against the reconstructed
    /// matrix on every positive root.
    pub fn action_consistent(&self, w: &GroupElement) -> bool {
        (0..self.roots.len()).all(|i| {
            let img = self.apply(w, &self.roots[i]);
            self.locate(&img) == Some(w.action().image(i))
        })
    }

    /// `B(w x, w y) = B(x, y)` on all pairs of simple roots.
    pub fn preserves_form(&self, w: &GroupElement) -> bool {
        let n = self.rank();
        let imgs: Vec<Vec<f64>> = (0..n).map(|s| self.image_of_simple(w, s)).collect();
        (0..n).all(|i| {
            (0..n).all(|j| (self.pairing(&imgs[i], &imgs[j]) - self.form[i][j]).abs() <= 1e3 * self.eps_root)
        })
    }
}

/// `s(x) = x - 2 B(x, alpha_s) alpha_s`
fn reflect_simple(form: &[Vec<f64>], x: &[f64], s: usize) -> Vec<f64> {
    let c = 2.0 * dot(x, &form[s]);
    let mut out = x.to_vec();
    out[s] -= c;
    out
}
