//! Dense two-phase simplex with Bland's rule.
//!
//! Problems are tiny (tens of variables), so the tableau is stored densely
//! and every pivot touches the whole table.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    /// `a·x = b`
    Eq,
    /// `a·x ≥ b`
    Ge,
    /// `a·x > b`, realized as `a·x ≥ b + margin`.
    Gt,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Constraint {
    pub coeffs: Vec<f64>,
    pub relation: Relation,
    pub rhs: f64,
}

/// Variables are free unless marked nonnegative.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearProgram {
    num_vars: usize,
    nonneg: Vec<bool>,
    constraints: Vec<Constraint>,
    objective: Option<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum LpStatus {
    Feasible(Vec<f64>),
    Infeasible,
}

#[derive(Debug, Clone, PartialEq)]
pub enum LpSolution {
    Optimal { x: Vec<f64>, value: f64 },
    Infeasible,
    Unbounded,
}

impl LinearProgram {
    pub fn new(num_vars: usize) -> Self {
        LinearProgram {
            num_vars,
            nonneg: vec![false; num_vars],
            constraints: Vec::new(),
            objective: None,
        }
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn constraints(&self) -> &[Constraint] {
        &self.constraints
    }

    pub fn set_nonnegative(&mut self, var: usize) -> &mut Self {
        self.nonneg[var] = true;
        self
    }

    pub fn set_all_nonnegative(&mut self) -> &mut Self {
        self.nonneg.iter_mut().for_each(|x| *x = true);
        self
    }

    pub fn add(&mut self, coeffs: Vec<f64>, relation: Relation, rhs: f64) -> Result<&mut Self> {
        if coeffs.len() != self.num_vars {
            return Err(Error::DimensionMismatch {
                expected: self.num_vars,
                got: coeffs.len(),
            });
        }
        self.constraints.push(Constraint { coeffs, relation, rhs });
        Ok(self)
    }

    /// Objective to minimize.
    pub fn minimize(&mut self, c: Vec<f64>) -> Result<&mut Self> {
        if c.len() != self.num_vars {
            return Err(Error::DimensionMismatch {
                expected: self.num_vars,
                got: c.len(),
            });
        }
        self.objective = Some(c);
        Ok(self)
    }

    /// Checks `x` against every row; strict rows need `margin` of slack.
    pub fn satisfied_by(&self, x: &[f64], tol: f64, margin: f64) -> bool {
        if x.len() != self.num_vars {
            return false;
        }
        let scale = 1.0 + x.iter().fold(0.0f64, |m, v| m.max(v.abs()));
        let signs_ok = self.nonneg.iter().zip(x).all(|(&nn, &v)| !nn || v >= -tol * scale);
        signs_ok
            && self.constraints.iter().all(|c| {
                let lhs: f64 = c.coeffs.iter().zip(x).map(|(a, b)| a * b).sum();
                let row_scale = scale * (1.0 + c.coeffs.iter().fold(0.0f64, |m, v| m.max(v.abs())));
                let slack = tol * row_scale;
                match c.relation {
                    Relation::Eq => (lhs - c.rhs).abs() <= slack,
                    Relation::Ge => lhs >= c.rhs - slack,
                    Relation::Gt => lhs >= c.rhs + margin - slack,
                }
            })
    }

    /// Solves with strict rows realized at margin `eps`.
    pub fn solve(&self, eps: f64) -> Result<LpSolution> {
        Simplex::build(self, eps).run(self, eps)
    }
}

/// Feasibility: a witness satisfying every row (strict rows with margin
/// `eps`), or `Infeasible`.
pub fn lp_feasible(lp: &LinearProgram, eps: f64) -> Result<LpStatus> {
    let mut feas = lp.clone();
    feas.objective = None;
    match feas.solve(eps)? {
        LpSolution::Optimal { x, .. } => Ok(LpStatus::Feasible(x)),
        LpSolution::Infeasible => Ok(LpStatus::Infeasible),
        LpSolution::Unbounded => Err(Error::NumericalFailure("feasibility problem unbounded".into())),
    }
}

const PIVOT_TOL: f64 = 1e-11;
const VERIFY_TOL: f64 = 1e-8;
/// Phase-one residual accepted as feasible; well below any strict margin.
const FEAS_TOL: f64 = 1e-10;

struct Simplex {
    rows: usize,
    /// Structural + slack columns; artificials follow.
    cols: usize,
    table: Vec<Vec<f64>>,
    basis: Vec<usize>,
    /// Column index for each original variable: (plus, minus).
    var_cols: Vec<(usize, Option<usize>)>,
}

impl Simplex {
    fn build(lp: &LinearProgram, eps: f64) -> Simplex {
        let mut var_cols = Vec::with_capacity(lp.num_vars);
        let mut next = 0;
        for &nn in &lp.nonneg {
            if nn {
                var_cols.push((next, None));
                next += 1;
            } else {
                var_cols.push((next, Some(next + 1)));
                next += 2;
            }
        }
        let structural = next;
        let slack_count = lp
            .constraints
            .iter()
            .filter(|c| c.relation != Relation::Eq)
            .count();
        let cols = structural + slack_count;
        let rows = lp.constraints.len();
        let width = cols + rows + 1;
        let mut table = vec![vec![0.0; width]; rows];
        let mut slack = structural;
        for (r, c) in lp.constraints.iter().enumerate() {
            let row = &mut table[r];
            for (i, &a) in c.coeffs.iter().enumerate() {
                let (p, m) = var_cols[i];
                row[p] = a;
                if let Some(m) = m {
                    row[m] = -a;
                }
            }
            let mut rhs = c.rhs;
            match c.relation {
                Relation::Eq => {}
                Relation::Ge => {
                    row[slack] = -1.0;
                    slack += 1;
                }
                Relation::Gt => {
                    row[slack] = -1.0;
                    slack += 1;
                    rhs += eps;
                }
            }
            if rhs < 0.0 {
                for v in row[..cols].iter_mut() {
                    *v = -*v;
                }
                rhs = -rhs;
            }
            row[cols + r] = 1.0;
            row[width - 1] = rhs;
        }
        Simplex {
            rows,
            cols,
            table,
            basis: (cols..cols + rows).collect(),
            var_cols,
        }
    }

    fn rhs(&self, r: usize) -> f64 {
        *self.table[r].last().expect("non-empty row")
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let p = self.table[r][c];
        for v in self.table[r].iter_mut() {
            *v /= p;
        }
        let pivot_row = self.table[r].clone();
        for (i, row) in self.table.iter_mut().enumerate() {
            if i != r {
                let f = row[c];
                if f != 0.0 {
                    for (v, pv) in row.iter_mut().zip(&pivot_row) {
                        *v -= f * pv;
                    }
                    row[c] = 0.0;
                }
            }
        }
        self.basis[r] = c;
    }

    /// Minimizes `cost·x` over columns `0..allowed`; returns false when
    /// unbounded.
    fn optimize(&mut self, cost: &[f64], allowed: usize) -> Result<bool> {
        let cap = 200 * (self.rows + self.cols + 10);
        for _ in 0..cap {
            // Reduced costs c_j - c_B B^-1 A_j.
            let mut entering = None;
            for j in 0..allowed {
                if self.basis.contains(&j) {
                    continue;
                }
                let mut red = cost[j];
                for (r, &b) in self.basis.iter().enumerate() {
                    red -= cost[b] * self.table[r][j];
                }
                if red < -1e-10 {
                    entering = Some(j);
                    break;
                }
            }
            let Some(c) = entering else {
                return Ok(true);
            };
            let mut leave: Option<(usize, f64)> = None;
            for r in 0..self.rows {
                let a = self.table[r][c];
                if a > PIVOT_TOL {
                    let ratio = self.rhs(r) / a;
                    let better = match leave {
                        None => true,
                        Some((lr, lratio)) => {
                            ratio < lratio - 1e-12
                                || (ratio <= lratio + 1e-12 && self.basis[r] < self.basis[lr])
                        }
                    };
                    if better {
                        leave = Some((r, ratio));
                    }
                }
            }
            match leave {
                None => return Ok(false),
                Some((r, _)) => self.pivot(r, c),
            }
        }
        Err(Error::NumericalFailure(format!("simplex exceeded {cap} iterations")))
    }

    fn extract(&self, num_vars: usize) -> Vec<f64> {
        let mut col_val = vec![0.0; self.cols + self.rows];
        for (r, &b) in self.basis.iter().enumerate() {
            col_val[b] = self.rhs(r);
        }
        (0..num_vars)
            .map(|i| {
                let (p, m) = self.var_cols[i];
                col_val[p] - m.map(|m| col_val[m]).unwrap_or(0.0)
            })
            .collect()
    }

    fn run(mut self, lp: &LinearProgram, eps: f64) -> Result<LpSolution> {
        let total = self.cols + self.rows;
        let mut phase1 = vec![0.0; total];
        for c in phase1[self.cols..].iter_mut() {
            *c = 1.0;
        }
        self.optimize(&phase1, total)?;
        let bscale = 1.0 + self.table.iter().map(|r| r.last().unwrap().abs()).fold(0.0, f64::max);
        let infeas: f64 = self
            .basis
            .iter()
            .enumerate()
            .filter(|(_, &b)| b >= self.cols)
            .map(|(r, _)| self.rhs(r))
            .sum();
        if infeas > FEAS_TOL * bscale {
            return Ok(LpSolution::Infeasible);
        }
        // Drive artificials out of the basis where possible.
        for r in 0..self.rows {
            if self.basis[r] >= self.cols {
                if let Some(c) = (0..self.cols)
                    .filter(|c| !self.basis.contains(c))
                    .max_by(|&a, &b| self.table[r][a].abs().total_cmp(&self.table[r][b].abs()))
                {
                    if self.table[r][c].abs() > 1e-9 {
                        self.pivot(r, c);
                    }
                }
            }
        }
        let mut cost = vec![0.0; total];
        if let Some(obj) = &lp.objective {
            for (i, &ci) in obj.iter().enumerate() {
                let (p, m) = self.var_cols[i];
                cost[p] = ci;
                if let Some(m) = m {
                    cost[m] = -ci;
                }
            }
            if !self.optimize(&cost, self.cols)? {
                return Ok(LpSolution::Unbounded);
            }
        }
        let x = self.extract(lp.num_vars);
        if !lp.satisfied_by(&x, VERIFY_TOL, eps) {
            return Err(Error::NumericalFailure("simplex witness fails verification".into()));
        }
        let value = lp
            .objective
            .as_ref()
            .map(|c| c.iter().zip(&x).map(|(a, b)| a * b).sum())
            .unwrap_or(0.0);
        Ok(LpSolution::Optimal { x, value })
    }
}
