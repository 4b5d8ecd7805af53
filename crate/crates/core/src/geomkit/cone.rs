use alloc::vec;
use alloc::vec::Vec;

use super::lp::{lp_feasible, LinearProgram, LpSolution, LpStatus, Relation};
use crate::linalg::norm;
use crate::{Error, Result};

/// Coefficients `a`, `b` with `Σ a_i r_i = Σ b_j r'_j`, `Σ a_i = 1`.
#[derive(Debug, Clone, PartialEq)]
pub struct ConeMeeting {
    pub a: Vec<f64>,
    pub b: Vec<f64>,
}

fn check_dims(sets: &[&[Vec<f64>]]) -> Result<usize> {
    let dim = sets
        .iter()
        .flat_map(|s| s.first())
        .map(Vec::len)
        .next()
        .ok_or(Error::EmptyInput("generator set"))?;
    for v in sets.iter().flat_map(|s| s.iter()) {
        if v.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                got: v.len(),
            });
        }
    }
    Ok(dim)
}

/// Whether `Cone(r) ∩ Cone(r2) ≠ {0}`, with a witness when it does.
pub fn cones_meet(r: &[Vec<f64>], r2: &[Vec<f64>], eps: f64) -> Result<Option<ConeMeeting>> {
    if r.is_empty() || r2.is_empty() {
        return Err(Error::EmptyInput("cone generators"));
    }
    let dim = check_dims(&[r, r2])?;
    let (na, nb) = (r.len(), r2.len());
    let mut lp = LinearProgram::new(na + nb);
    lp.set_all_nonnegative();
    for k in 0..dim {
        let row = r
            .iter()
            .map(|g| g[k])
            .chain(r2.iter().map(|g| -g[k]))
            .collect();
        lp.add(row, Relation::Eq, 0.0)?;
    }
    let mut sum = vec![1.0; na];
    sum.resize(na + nb, 0.0);
    lp.add(sum, Relation::Eq, 1.0)?;
    Ok(match lp_feasible(&lp, eps)? {
        LpStatus::Feasible(x) => Some(ConeMeeting {
            a: x[..na].to_vec(),
            b: x[na..].to_vec(),
        }),
        LpStatus::Infeasible => None,
    })
}

/// Nonnegative `b` with `x = Σ b_j g_j`, if one exists.
pub fn cone_member(x: &[f64], gens: &[Vec<f64>], eps: f64) -> Result<Option<Vec<f64>>> {
    if gens.is_empty() {
        return Ok(if norm(x) <= eps { Some(Vec::new()) } else { None });
    }
    let dim = check_dims(&[gens])?;
    if x.len() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            got: x.len(),
        });
    }
    let mut lp = LinearProgram::new(gens.len());
    lp.set_all_nonnegative();
    for (k, &xk) in x.iter().enumerate() {
        lp.add(gens.iter().map(|g| g[k]).collect(), Relation::Eq, xk)?;
    }
    Ok(match lp_feasible(&lp, eps)? {
        LpStatus::Feasible(b) => Some(b),
        LpStatus::Infeasible => None,
    })
}

fn unit_rows(c1: &[Vec<f64>], c2: &[Vec<f64>]) -> Result<Vec<Vec<f64>>> {
    c1.iter()
        .map(|g| (g, -1.0))
        .chain(c2.iter().map(|g| (g, 1.0)))
        .map(|(g, sign)| {
            let len = norm(g);
            if len == 0.0 {
                Err(Error::NumericalFailure("zero generator".into()))
            } else {
                Ok(g.iter().map(|v| sign * v / len).collect())
            }
        })
        .collect()
}

/// A linear functional negative on `c1` and positive on `c2`, each with
/// margin above `eps` on the unit-normalized generators.
///
/// The margin is maximized over the unit box first; among functionals
/// keeping half that margin, one of least 1-norm is returned.
pub fn separating_functional(c1: &[Vec<f64>], c2: &[Vec<f64>], eps: f64) -> Result<Vec<f64>> {
    if c1.is_empty() || c2.is_empty() {
        return Err(Error::EmptyInput("cone generators"));
    }
    let dim = check_dims(&[c1, c2])?;
    let rows = unit_rows(c1, c2)?;

    // Variables f_1..f_n, delta; maximize delta.
    let n = dim + 1;
    let mut lp = LinearProgram::new(n);
    for r in &rows {
        let mut row = r.clone();
        row.push(-1.0);
        lp.add(row, Relation::Ge, 0.0)?;
    }
    for i in 0..n {
        let mut row = vec![0.0; n];
        row[i] = -1.0;
        lp.add(row.clone(), Relation::Ge, -1.0)?;
        if i < dim {
            row[i] = 1.0;
            lp.add(row, Relation::Ge, -1.0)?;
        }
    }
    let mut obj = vec![0.0; n];
    obj[dim] = -1.0;
    lp.minimize(obj)?;
    let delta = match lp.solve(eps)? {
        LpSolution::Optimal { x, .. } => x[dim],
        LpSolution::Infeasible | LpSolution::Unbounded => {
            return Err(Error::NumericalFailure("separation program degenerate".into()))
        }
    };
    if delta <= 2.0 * eps {
        return Err(Error::ConesIntersect);
    }

    // Variables f_1..f_n, t_1..t_n with t_i >= |f_i|; minimize sum t.
    let mut lp = LinearProgram::new(2 * dim);
    for r in &rows {
        let mut row = r.clone();
        row.resize(2 * dim, 0.0);
        lp.add(row, Relation::Ge, delta / 2.0)?;
    }
    for i in 0..dim {
        for sign in [1.0, -1.0] {
            let mut row = vec![0.0; 2 * dim];
            row[i] = sign;
            row[dim + i] = 1.0;
            lp.add(row, Relation::Ge, 0.0)?;
        }
    }
    let mut obj = vec![0.0; dim];
    obj.resize(2 * dim, 1.0);
    lp.minimize(obj)?;
    match lp.solve(eps)? {
        LpSolution::Optimal { mut x, .. } => {
            x.truncate(dim);
            Ok(x)
        }
        LpSolution::Infeasible | LpSolution::Unbounded => {
            Err(Error::NumericalFailure("separation program degenerate".into()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    const EPS: f64 = 1e-7;

    fn a2_roots() -> (Vec<f64>, Vec<f64>, Vec<f64>) {
        (vec![1.0, 0.0], vec![0.0, 1.0], vec![1.0, 1.0])
    }

    #[test]
    fn same_ray_meets() {
        let w = cones_meet(&[vec![1.0, 0.0]], &[vec![1.0, 0.0]], EPS).unwrap().unwrap();
        assert!((w.a[0] - 1.0).abs() < 1e-9 && (w.b[0] - 1.0).abs() < 1e-9);
    }

    #[test]
    fn orthogonal_rays_do_not_meet() {
        assert!(cones_meet(&[vec![1.0, 0.0]], &[vec![0.0, 1.0]], EPS).unwrap().is_none());
    }

    #[test]
    fn planar_ray_geometry() {
        let (s, t, st) = a2_roots();
        assert!(cones_meet(&[s.clone()], &[st.clone(), t.clone()], EPS).unwrap().is_none());
        assert!(cones_meet(&[st], &[s, t], EPS).unwrap().is_some());
    }

    #[test]
    fn membership() {
        let (s, t, st) = a2_roots();
        let b = cone_member(&st, &[s.clone(), t.clone()], EPS).unwrap().unwrap();
        assert!((b[0] - 1.0).abs() < 1e-9 && (b[1] - 1.0).abs() < 1e-9);
        assert!(cone_member(&s, &[st, t], EPS).unwrap().is_none());
    }

    #[test]
    fn separates_opposite_rays() {
        let f = separating_functional(&[vec![-1.0, 0.0]], &[vec![1.0, 0.0]], EPS).unwrap();
        assert!(f[0] > 0.0 && f[1].abs() < 1e-9);
    }

    #[test]
    fn overlapping_cones_rejected() {
        let (s, t, st) = a2_roots();
        assert_eq!(
            separating_functional(&[st], &[s, t], EPS),
            Err(Error::ConesIntersect)
        );
    }
}
