#![allow(dead_code)]

use std::sync::Arc;

use coxmat_core::bruhat::Bruhat;
use coxmat_core::coxroot::{build_system, CoxeterDiagram, CoxeterGroup, CoxeterSystem, ElemId};

pub const EPS_ROOT: f64 = 1e-9;
pub const EPS_LP: f64 = 1e-7;
pub const EPS_GEOM: f64 = 1e-7;
pub const RANK_TOL: f64 = 1e-6;

pub fn system(name: &str) -> Arc<CoxeterSystem> {
    Arc::new(build_system(CoxeterDiagram::preset(name).unwrap(), EPS_ROOT).unwrap())
}

pub fn bruhat(name: &str) -> Bruhat {
    Bruhat::new(Arc::new(CoxeterGroup::new(system(name)).unwrap()))
}

/// Element from a 1-based word such as `[1, 3]`.
pub fn word(b: &Bruhat, w: &[usize]) -> ElemId {
    let zero: Vec<usize> = w.iter().map(|s| s - 1).collect();
    b.group().from_word(&zero).unwrap()
}
