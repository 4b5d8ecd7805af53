use alloc::vec::Vec;

use crate::coxroot::{CoxeterSystem, GeneratorSet};
use crate::linalg::{norm, solve};
use crate::sampling::{rng, uniform};
use crate::{Error, Result};

/// A point `p` with `(p, α_s) < 0` for `s ∉ J` and `(p, α_s) = 0` for
/// `s ∈ J`, in simple-root coordinates. Its stabilizer is `W_J`.
#[derive(Debug, Clone, PartialEq)]
pub struct BasePoint {
    pub j: GeneratorSet,
    pub coords: Vec<f64>,
}

impl BasePoint {
    /// Pairings `(p, α_s)` for every simple root.
    pub fn pairings(&self, sys: &CoxeterSystem) -> Vec<f64> {
        (0..sys.rank())
            .map(|s| {
                let mut e = alloc::vec![0.0; sys.rank()];
                e[s] = 1.0;
                sys.pairing(&self.coords, &e)
            })
            .collect()
    }

    /// Sign conditions with strictness margin `eps_lp`.
    pub fn is_valid(&self, sys: &CoxeterSystem, eps_lp: f64) -> bool {
        let scale = norm(&self.coords).max(1.0);
        self.coords.len() == sys.rank()
            && self.pairings(sys).iter().enumerate().all(|(s, &v)| {
                if self.j.contains(s) {
                    v.abs() <= eps_lp * scale
                } else {
                    v < -eps_lp
                }
            })
    }

    /// Checks a caller-supplied point against the sign conditions.
    pub fn from_coords(sys: &CoxeterSystem, j: GeneratorSet, coords: Vec<f64>, eps_lp: f64) -> Result<Self> {
        let p = BasePoint { j, coords };
        if p.is_valid(sys, eps_lp) {
            Ok(p)
        } else {
            Err(Error::InvalidElement(alloc::format!(
                "point {:?} violates the pairing signs for J = {:?}",
                p.coords,
                j
            )))
        }
    }
}

/// Samples a base point: pairings `-1 - U(0,1)` off `J`, zero on `J`.
///
/// `J = S` only admits `p = 0`, whose polytope is a single point; that case
/// is refused here (see [`degenerate_base_point`]).
pub fn base_point(sys: &CoxeterSystem, j: GeneratorSet, seed: u64) -> Result<BasePoint> {
    let n = sys.rank();
    if GeneratorSet::all(n).is_subset_of(j) {
        return Err(Error::AllGeneratorsFixed);
    }
    let mut r = rng(seed);
    let target: Vec<f64> = (0..n)
        .map(|s| {
            let x = -1.0 - uniform(&mut r);
            if j.contains(s) {
                0.0
            } else {
                x
            }
        })
        .collect();
    let coords = solve(sys.form(), &target, 1e-12)
        .ok_or_else(|| Error::NumericalFailure("bilinear form is singular".into()))?;
    Ok(BasePoint { j, coords })
}

/// The origin, fixed by the whole group.
pub fn degenerate_base_point(sys: &CoxeterSystem) -> BasePoint {
    BasePoint {
        j: GeneratorSet::all(sys.rank()),
        coords: alloc::vec![0.0; sys.rank()],
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coxroot::{build_system, CoxeterDiagram};

    #[test]
    fn sign_conditions() {
        let sys = build_system(CoxeterDiagram::preset("B3").unwrap(), 1e-9).unwrap();
        for seed in 0..5 {
            let j = GeneratorSet::from_indices(&[0]);
            let p = base_point(&sys, j, seed).unwrap();
            assert!(p.is_valid(&sys, 1e-7));
            let pr = p.pairings(&sys);
            assert!(pr[0].abs() < 1e-12 && pr[1] < -1.0 && pr[2] < -1.0);
        }
    }

    #[test]
    fn all_fixed_refused() {
        let sys = build_system(CoxeterDiagram::preset("A2").unwrap(), 1e-9).unwrap();
        assert_eq!(
            base_point(&sys, GeneratorSet::all(2), 1),
            Err(Error::AllGeneratorsFixed)
        );
        assert!(degenerate_base_point(&sys).is_valid(&sys, 1e-7));
    }
}
