//! Reflection orderings.
//!
//! An ordering of the positive roots is a reflection ordering when every
//! positive combination `a·α + b·β` of two roots lies between them. Any basis
//! `f_1, …, f_n` of the dual space gives one: sort the roots normalized to
//! coordinate sum one lexicographically by `(f_1(ᾱ), …, f_n(ᾱ))`.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;

use crate::bruhat::Bruhat;
use crate::coxroot::{CoxeterSystem, ElemId, RootTriple, SystemId};
use crate::geomkit::{cones_meet, separating_functional};
use crate::linalg::{determinant, dot, norm, project_out, scale};
use crate::{Error, Result};

/// A total order on the positive roots of one system.
#[derive(Debug, Clone, PartialEq)]
pub struct ReflectionOrdering {
    system: SystemId,
    order: Vec<usize>,
    position: Vec<usize>,
    basis: Option<Vec<Vec<f64>>>,
}

impl ReflectionOrdering {
    /// `order` lists positive-root indices, smallest first.
    pub fn new(sys: &CoxeterSystem, order: Vec<usize>, basis: Option<Vec<Vec<f64>>>) -> Result<Self> {
        let n = sys.num_positive_roots();
        if order.len() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                got: order.len(),
            });
        }
        let mut position = vec![usize::MAX; n];
        for (p, &r) in order.iter().enumerate() {
            if r >= n || position[r] != usize::MAX {
                return Err(Error::InvalidElement(alloc::format!(
                    "not a permutation of root indices: {order:?}"
                )));
            }
            position[r] = p;
        }
        Ok(ReflectionOrdering {
            system: sys.id(),
            order,
            position,
            basis,
        })
    }

    pub fn system(&self) -> SystemId {
        self.system
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn position(&self, root: usize) -> usize {
        self.position[root]
    }

    pub fn precedes(&self, a: usize, b: usize) -> bool {
        self.position[a] < self.position[b]
    }

    /// Rows `f_1, …, f_n` when the ordering came from a basis.
    pub fn basis(&self) -> Option<&[Vec<f64>]> {
        self.basis.as_deref()
    }

    pub fn reversed(&self) -> Self {
        let order: Vec<usize> = self.order.iter().rev().copied().collect();
        let n = order.len();
        ReflectionOrdering {
            system: self.system,
            position: self.position.iter().map(|p| n - 1 - p).collect(),
            order,
            basis: self
                .basis
                .as_ref()
                .map(|b| b.iter().map(|f| scale(f, -1.0)).collect()),
        }
    }
}

/// Scales a positive root so its simple-root coordinates sum to one.
pub fn normalize_root(alpha: &[f64]) -> Result<Vec<f64>> {
    let s: f64 = alpha.iter().sum();
    if s.is_nan() || s <= 0.0 {
        return Err(Error::NonPositiveSum);
    }
    Ok(scale(alpha, 1.0 / s))
}

fn lex_cmp(a: &[f64], b: &[f64], eps: f64) -> Ordering {
    for (x, y) in a.iter().zip(b) {
        if (x - y).abs() > eps {
            return x.total_cmp(y);
        }
    }
    Ordering::Equal
}

/// Sorts the positive roots by the lex key `(f_1(ᾱ), …, f_n(ᾱ))`.
pub fn ordering_from_basis(sys: &CoxeterSystem, basis: &[Vec<f64>], eps_lp: f64) -> Result<ReflectionOrdering> {
    let n = sys.rank();
    if basis.len() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: basis.len(),
        });
    }
    if let Some(f) = basis.iter().find(|f| f.len() != n) {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: f.len(),
        });
    }
    if determinant(basis).abs() <= eps_lp {
        return Err(Error::SingularBasis);
    }
    let keys: Vec<Vec<f64>> = sys
        .positive_roots()
        .iter()
        .map(|r| {
            let r = normalize_root(r)?;
            Ok(basis.iter().map(|f| dot(f, &r)).collect())
        })
        .collect::<Result<_>>()?;
    for j in 0..keys.len() {
        for i in 0..j {
            if lex_cmp(&keys[i], &keys[j], eps_lp) == Ordering::Equal {
                return Err(Error::TieDetected(i, j));
            }
        }
    }
    let mut order: Vec<usize> = (0..keys.len()).collect();
    order.sort_by(|&a, &b| lex_cmp(&keys[a], &keys[b], eps_lp));
    ReflectionOrdering::new(sys, order, Some(basis.to_vec()))
}

/// The first precomputed triple whose middle root is not between its ends.
pub fn betweenness_violation(sys: &CoxeterSystem, ord: &ReflectionOrdering) -> Option<RootTriple> {
    sys.triples().iter().copied().find(|t| {
        let (pl, ph, pm) = (ord.position(t.low), ord.position(t.high), ord.position(t.mid));
        !((pl < pm && pm < ph) || (ph < pm && pm < pl))
    })
}

pub fn is_reflection_ordering(sys: &CoxeterSystem, ord: &ReflectionOrdering) -> bool {
    ord.system() == sys.id() && betweenness_violation(sys, ord).is_none()
}

/// Saturated chains from `u` to `v` whose cover labels strictly increase.
pub fn increasing_chains(
    bruhat: &Bruhat,
    u: ElemId,
    v: ElemId,
    ord: &ReflectionOrdering,
) -> Result<Vec<Vec<ElemId>>> {
    if ord.system() != bruhat.group().system().id() {
        return Err(Error::SystemMismatch);
    }
    if !bruhat.leq(u, v) {
        return Err(Error::NotComparable);
    }
    let mut out = Vec::new();
    let mut stack = vec![u];
    increasing_dfs(bruhat, v, ord, None, &mut stack, &mut out);
    Ok(out)
}

fn increasing_dfs(
    bruhat: &Bruhat,
    v: ElemId,
    ord: &ReflectionOrdering,
    last: Option<usize>,
    stack: &mut Vec<ElemId>,
    out: &mut Vec<Vec<ElemId>>,
) {
    let cur = *stack.last().expect("non-empty");
    if cur == v {
        out.push(stack.clone());
        return;
    }
    for &(y, root) in bruhat.covers(cur) {
        let pos = ord.position(root);
        if last.is_none_or(|l| pos > l) && bruhat.leq(y, v) {
            stack.push(y);
            increasing_dfs(bruhat, v, ord, Some(pos), stack, out);
            stack.pop();
        }
    }
}

/// Completes `f1` to a basis with coordinate functionals orthogonal to the
/// ones already chosen.
pub fn complete_basis(f1: &[f64]) -> Vec<Vec<f64>> {
    let n = f1.len();
    let mut ortho = vec![scale(f1, 1.0 / norm(f1))];
    let mut basis = vec![f1.to_vec()];
    for k in 0..n {
        if basis.len() == n {
            break;
        }
        let mut e = vec![0.0; n];
        e[k] = 1.0;
        let r = project_out(&e, &ortho);
        let len = norm(&r);
        if len > 1e-8 {
            let r = scale(&r, 1.0 / len);
            ortho.push(r.clone());
            basis.push(r);
        }
    }
    basis
}

/// A reflection ordering in which every root of `Cone(c1)` precedes every
/// root of `Cone(c2)`. Generators are positive-root indices.
pub fn separating_ordering(
    sys: &CoxeterSystem,
    c1: &[usize],
    c2: &[usize],
    eps_lp: f64,
) -> Result<ReflectionOrdering> {
    let g1: Vec<Vec<f64>> = c1.iter().map(|&i| sys.root(i).to_vec()).collect();
    let g2: Vec<Vec<f64>> = c2.iter().map(|&i| sys.root(i).to_vec()).collect();
    if cones_meet(&g1, &g2, eps_lp)?.is_some() {
        return Err(Error::ConesIntersect);
    }
    let f1 = separating_functional(&g1, &g2, eps_lp)?;
    ordering_from_basis(sys, &complete_basis(&f1), eps_lp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxroot::{build_system, CoxeterDiagram};

    fn system(name: &str) -> CoxeterSystem {
        build_system(CoxeterDiagram::preset(name).unwrap(), 1e-9).unwrap()
    }

    fn root_index(sys: &CoxeterSystem, v: &[f64]) -> usize {
        sys.locate(v).unwrap().0
    }

    #[test]
    fn normalization() {
        assert_eq!(normalize_root(&[1.0, 0.0]).unwrap(), vec![1.0, 0.0]);
        assert_eq!(normalize_root(&[1.0, 1.0]).unwrap(), vec![0.5, 0.5]);
        let b = normalize_root(&[1.0, 2.0]).unwrap();
        assert!((b[0] - 1.0 / 3.0).abs() < 1e-15 && (b[1] - 2.0 / 3.0).abs() < 1e-15);
        assert_eq!(normalize_root(&[-1.0, 0.0]), Err(Error::NonPositiveSum));
    }

    #[test]
    fn a2_middle_root_between() {
        let sys = system("A2");
        let ord = ordering_from_basis(&sys, &[vec![-1.0, 1.0], vec![1.0, 0.0]], 1e-7).unwrap();
        let (s, t, st) = (
            root_index(&sys, &[1.0, 0.0]),
            root_index(&sys, &[0.0, 1.0]),
            root_index(&sys, &[1.0, 1.0]),
        );
        assert_eq!(ord.order(), &[s, st, t]);
        assert!(is_reflection_ordering(&sys, &ord));
        let rev = ordering_from_basis(&sys, &[vec![1.0, -1.0], vec![-1.0, 0.0]], 1e-7).unwrap();
        assert_eq!(rev, ord.reversed());
    }

    #[test]
    fn a2_bad_order_reports_triple() {
        let sys = system("A2");
        let (s, t, st) = (
            root_index(&sys, &[1.0, 0.0]),
            root_index(&sys, &[0.0, 1.0]),
            root_index(&sys, &[1.0, 1.0]),
        );
        let ord = ReflectionOrdering::new(&sys, vec![s, t, st], None).unwrap();
        let v = betweenness_violation(&sys, &ord).unwrap();
        assert_eq!(v.mid, st);
    }

    #[test]
    fn singular_basis_rejected() {
        let sys = system("A2");
        assert_eq!(
            ordering_from_basis(&sys, &[vec![1.0, 1.0], vec![2.0, 2.0]], 1e-7),
            Err(Error::SingularBasis)
        );
    }

    #[test]
    fn rank_one_any_order() {
        let sys = system("A1");
        let ord = ReflectionOrdering::new(&sys, vec![0], None).unwrap();
        assert!(is_reflection_ordering(&sys, &ord));
    }

    #[test]
    fn orthogonal_separation() {
        let sys = system("A1xA1");
        let ord = separating_ordering(&sys, &[0], &[1], 1e-7).unwrap();
        assert_eq!(ord.order(), &[0, 1]);
    }
}
