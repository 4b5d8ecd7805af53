use alloc::vec::Vec;

use crate::bruhat::Bruhat;
use crate::coxroot::ElemId;
use crate::geomkit::cone_member;
use crate::linalg::rank;
use crate::{Error, Result};

/// A length-two interval `u ⋖ x, y ⋖ v` with `x = t1·u`, `y = t2·u`,
/// `v = t3·x = t4·y`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Diamond {
    pub u: ElemId,
    pub x: ElemId,
    pub y: ElemId,
    pub v: ElemId,
    /// Root indices of `t1..t4`.
    pub t: [usize; 4],
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiamondReport {
    pub diamond: Diamond,
    /// The four roots span a plane, and so does each of the pairs
    /// `{1,3}`, `{2,4}`, `{1,2}`, `{3,4}`.
    pub span_equal: bool,
    /// `α1` or `α2` lies in `Cone(α3, α4)`.
    pub lower_in_upper_cone: bool,
    /// `α3` or `α4` lies in `Cone(α1, α2)`.
    pub upper_in_lower_cone: bool,
}

impl DiamondReport {
    pub fn holds(&self) -> bool {
        self.span_equal && self.lower_in_upper_cone && self.upper_in_lower_cone
    }
}

/// Splits a length-two interval into its diamond; `x` is the middle
/// element with the smaller id.
pub fn diamond(bruhat: &Bruhat, u: ElemId, v: ElemId) -> Result<Diamond> {
    if !bruhat.leq(u, v) {
        return Err(Error::NotComparable);
    }
    let g = bruhat.group();
    if g.length(v) != g.length(u) + 2 {
        return Err(Error::NotLengthTwo);
    }
    let middles: Vec<(ElemId, usize)> = bruhat
        .covers(u)
        .iter()
        .copied()
        .filter(|(z, _)| bruhat.leq(*z, v))
        .collect();
    let [a, b] = middles[..] else {
        return Err(Error::NotDiamond);
    };
    let ((x, t1), (y, t2)) = if a.0 < b.0 { (a, b) } else { (b, a) };
    let t3 = bruhat.cover_root(x, v).ok_or(Error::NotDiamond)?;
    let t4 = bruhat.cover_root(y, v).ok_or(Error::NotDiamond)?;
    Ok(Diamond {
        u,
        x,
        y,
        v,
        t: [t1, t2, t3, t4],
    })
}

/// Span and cone facts for the diamond `[u, v]`.
pub fn rank2_diamond_checks(bruhat: &Bruhat, u: ElemId, v: ElemId, eps_lp: f64, rank_tol: f64) -> Result<DiamondReport> {
    let d = diamond(bruhat, u, v)?;
    let sys = bruhat.group().system();
    let a: Vec<Vec<f64>> = d.t.iter().map(|&i| sys.root(i).to_vec()).collect();
    let r = |ix: &[usize]| rank(&ix.iter().map(|&i| a[i].clone()).collect::<Vec<_>>(), rank_tol);
    let span_equal = r(&[0, 1, 2, 3]) == 2 && [[0, 2], [1, 3], [0, 1], [2, 3]].iter().all(|p| r(p) == 2);
    let in_cone = |cands: [usize; 2], gens: [usize; 2]| -> Result<bool> {
        let g = [a[gens[0]].clone(), a[gens[1]].clone()];
        for c in cands {
            if cone_member(&a[c], &g, eps_lp)?.is_some() {
                return Ok(true);
            }
        }
        Ok(false)
    };
    Ok(DiamondReport {
        diamond: d,
        span_equal,
        lower_in_upper_cone: in_cone([0, 1], [2, 3])?,
        upper_in_lower_cone: in_cone([2, 3], [0, 1])?,
    })
}
