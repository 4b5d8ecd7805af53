use alloc::vec::Vec;

use crate::bruhat::Bruhat;
use crate::coxroot::ElemId;
use crate::geomkit::{cone_member, cones_meet, ConeMeeting};
use crate::{Error, Result};

/// Which side reflections multiply on when forming the atom and coatom
/// label sets.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Convention {
    /// `R = {α_t : u ≤ tv ⋖ v}`, `R' = {α_t : u ⋖ tu ≤ v}`.
    #[default]
    Left,
    /// `R = {α_t : u ≤ vt ⋖ v}`, `R' = {α_t : u ⋖ ut ≤ v}`.
    Right,
}

#[derive(Debug, Clone, PartialEq)]
pub struct LiftingReport {
    pub u: ElemId,
    pub v: ElemId,
    pub convention: Convention,
    /// Coatom labels (root indices), sorted.
    pub r: Vec<usize>,
    /// Atom labels (root indices), sorted.
    pub r_prime: Vec<usize>,
    /// `Cone(R) ∩ Cone(R') ≠ {0}`.
    pub weak_holds: bool,
    pub weak_witness: Option<ConeMeeting>,
    /// A root of `R` lying in `Cone(R')`.
    pub r_in_cone_r_prime: Option<usize>,
    /// A root of `R'` lying in `Cone(R)`.
    pub r_prime_in_cone_r: Option<usize>,
    /// A reflection `t` (by root index) in both sets.
    pub glp_witness: Option<usize>,
}

/// Coatom and atom label sets of `[u, v]`.
pub fn lifting_sets(bruhat: &Bruhat, u: ElemId, v: ElemId, convention: Convention) -> (Vec<usize>, Vec<usize>) {
    let g = bruhat.group();
    let label = |from: ElemId, to: ElemId, left_root: usize| match convention {
        Convention::Left => left_root,
        Convention::Right => g
            .root_of_reflection(g.mul(g.inv(from), to))
            .expect("cover differs by a reflection"),
    };
    let mut r: Vec<usize> = bruhat
        .lower_covers(v)
        .iter()
        .filter(|(x, _)| bruhat.leq(u, *x))
        .map(|&(x, t)| label(v, x, t))
        .collect();
    let mut rp: Vec<usize> = bruhat
        .covers(u)
        .iter()
        .filter(|(y, _)| bruhat.leq(*y, v))
        .map(|&(y, t)| label(u, y, t))
        .collect();
    r.sort_unstable();
    rp.sort_unstable();
    (r, rp)
}

/// Weak and strong lifting data for `u < v`.
pub fn lifting_analysis(
    bruhat: &Bruhat,
    u: ElemId,
    v: ElemId,
    convention: Convention,
    eps_lp: f64,
) -> Result<LiftingReport> {
    if u == v || !bruhat.leq(u, v) {
        return Err(Error::NotComparable);
    }
    let sys = bruhat.group().system();
    let (r, r_prime) = lifting_sets(bruhat, u, v, convention);
    let vecs = |ix: &[usize]| -> Vec<Vec<f64>> { ix.iter().map(|&i| sys.root(i).to_vec()).collect() };
    let (rv, rpv) = (vecs(&r), vecs(&r_prime));
    let weak_witness = cones_meet(&rv, &rpv, eps_lp)?;
    let first_member = |roots: &[usize], gens: &[Vec<f64>]| -> Result<Option<usize>> {
        for &i in roots {
            if cone_member(sys.root(i), gens, eps_lp)?.is_some() {
                return Ok(Some(i));
            }
        }
        Ok(None)
    };
    let r_in_cone_r_prime = first_member(&r, &rpv)?;
    let r_prime_in_cone_r = first_member(&r_prime, &rv)?;
    let glp_witness = r.iter().copied().find(|i| r_prime.binary_search(i).is_ok());
    Ok(LiftingReport {
        u,
        v,
        convention,
        r,
        r_prime,
        weak_holds: weak_witness.is_some(),
        weak_witness,
        r_in_cone_r_prime,
        r_prime_in_cone_r,
        glp_witness,
    })
}
