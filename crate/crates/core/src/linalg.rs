//! Small dense linear algebra on `Vec<f64>` rows.

use alloc::vec;
use alloc::vec::Vec;

pub fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn norm(a: &[f64]) -> f64 {
    libm::sqrt(dot(a, a))
}

pub fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn add(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn scale(a: &[f64], s: f64) -> Vec<f64> {
    a.iter().map(|x| x * s).collect()
}

/// `y += s * x`
pub fn axpy(y: &mut [f64], s: f64, x: &[f64]) {
    for (yi, xi) in y.iter_mut().zip(x) {
        *yi += s * xi;
    }
}

pub fn distance(a: &[f64], b: &[f64]) -> f64 {
    libm::sqrt(a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum())
}

/// `m * x` for a row-major matrix.
pub fn mat_vec(m: &[Vec<f64>], x: &[f64]) -> Vec<f64> {
    m.iter().map(|row| dot(row, x)).collect()
}

/// Solves `a x = b` by Gaussian elimination with partial pivoting.
/// Returns `None` when a pivot falls below `tol` times the largest entry.
pub fn solve(a: &[Vec<f64>], b: &[f64], tol: f64) -> Option<Vec<f64>> {
    let n = a.len();
    if b.len() != n || a.iter().any(|r| r.len() != n) {
        return None;
    }
    let mut m: Vec<Vec<f64>> = a
        .iter()
        .zip(b)
        .map(|(row, &bi)| {
            let mut r = row.clone();
            r.push(bi);
            r
        })
        .collect();
    let big = a
        .iter()
        .flat_map(|r| r.iter())
        .fold(0.0f64, |acc, x| acc.max(x.abs()))
        .max(f64::MIN_POSITIVE);
    for col in 0..n {
        let piv = (col..n).max_by(|&i, &j| m[i][col].abs().total_cmp(&m[j][col].abs()))?;
        if m[piv][col].abs() <= tol * big {
            return None;
        }
        m.swap(col, piv);
        for r in col + 1..n {
            let f = m[r][col] / m[col][col];
            if f != 0.0 {
                for c in col..=n {
                    m[r][c] -= f * m[col][c];
                }
            }
        }
    }
    let mut x = vec![0.0; n];
    for r in (0..n).rev() {
        let s: f64 = (r + 1..n).map(|c| m[r][c] * x[c]).sum();
        x[r] = (m[r][n] - s) / m[r][r];
    }
    Some(x)
}

pub fn determinant(a: &[Vec<f64>]) -> f64 {
    let n = a.len();
    let mut m: Vec<Vec<f64>> = a.to_vec();
    let mut det = 1.0;
    for col in 0..n {
        let piv = match (col..n).max_by(|&i, &j| m[i][col].abs().total_cmp(&m[j][col].abs())) {
            Some(p) => p,
            None => return 0.0,
        };
        if m[piv][col] == 0.0 {
            return 0.0;
        }
        if piv != col {
            m.swap(col, piv);
            det = -det;
        }
        det *= m[col][col];
        for r in col + 1..n {
            let f = m[r][col] / m[col][col];
            for c in col..n {
                m[r][c] -= f * m[col][c];
            }
        }
    }
    det
}

pub fn transpose(m: &[Vec<f64>]) -> Vec<Vec<f64>> {
    if m.is_empty() {
        return Vec::new();
    }
    (0..m[0].len())
        .map(|c| m.iter().map(|r| r[c]).collect())
        .collect()
}

/// Inverse by solving against the identity columns.
pub fn inverse(a: &[Vec<f64>], tol: f64) -> Option<Vec<Vec<f64>>> {
    let n = a.len();
    let mut cols = Vec::with_capacity(n);
    for k in 0..n {
        let mut e = vec![0.0; n];
        e[k] = 1.0;
        cols.push(solve(a, &e, tol)?);
    }
    Some(transpose(&cols))
}

/// Removes the components of `v` along an orthonormal `basis` (twice, for
/// stability).
pub fn project_out(v: &[f64], basis: &[Vec<f64>]) -> Vec<f64> {
    let mut r = v.to_vec();
    for _ in 0..2 {
        for b in basis {
            let c = dot(&r, b);
            axpy(&mut r, -c, b);
        }
    }
    r
}

/// Orthonormal basis of the span of `vectors`, by modified Gram-Schmidt.
/// A vector counts as independent when its residual exceeds
/// `rel_tol * max_norm`.
pub fn orthonormal_basis(vectors: &[Vec<f64>], rel_tol: f64) -> Vec<Vec<f64>> {
    let max_norm = vectors.iter().map(|v| norm(v)).fold(0.0, f64::max);
    let mut basis: Vec<Vec<f64>> = Vec::new();
    if max_norm == 0.0 {
        return basis;
    }
    let threshold = rel_tol * max_norm;
    // Process larger residuals first so the pivot choice is stable.
    let mut pending: Vec<Vec<f64>> = vectors.to_vec();
    loop {
        let mut best: Option<(usize, f64)> = None;
        for (i, v) in pending.iter().enumerate() {
            let n = norm(v);
            if best.is_none_or(|(_, bn)| n > bn) {
                best = Some((i, n));
            }
        }
        match best {
            Some((i, n)) if n > threshold => {
                let v = pending.swap_remove(i);
                let mut b = project_out(&v, &basis);
                let bn = norm(&b);
                if bn <= threshold {
                    continue;
                }
                for x in b.iter_mut() {
                    *x /= bn;
                }
                for p in pending.iter_mut() {
                    let c = dot(p, &b);
                    axpy(p, -c, &b);
                }
                basis.push(b);
            }
            _ => break,
        }
    }
    basis
}

/// Numeric rank of a set of vectors, relative to the largest norm.
pub fn rank(vectors: &[Vec<f64>], rel_tol: f64) -> usize {
    orthonormal_basis(vectors, rel_tol).len()
}

/// Dimension of the affine hull of `points`.
pub fn affine_rank(points: &[Vec<f64>], rel_tol: f64) -> usize {
    match points.split_first() {
        None => 0,
        Some((first, rest)) => {
            let diffs: Vec<Vec<f64>> = rest.iter().map(|p| sub(p, first)).collect();
            rank(&diffs, rel_tol)
        }
    }
}

/// Orthonormal basis of the orthogonal complement of `span(vectors)` in
/// dimension `dim`.
pub fn orthogonal_complement(vectors: &[Vec<f64>], dim: usize, rel_tol: f64) -> Vec<Vec<f64>> {
    let mut basis = orthonormal_basis(vectors, rel_tol);
    let inner = basis.len();
    for k in 0..dim {
        let mut e = vec![0.0; dim];
        e[k] = 1.0;
        let r = project_out(&e, &basis);
        let n = norm(&r);
        if n > 1e-8 {
            basis.push(scale(&r, 1.0 / n));
        }
        if basis.len() == dim {
            break;
        }
    }
    basis.split_off(inner)
}
