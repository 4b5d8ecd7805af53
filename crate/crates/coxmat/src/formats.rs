//! JSON and OFF exports.

use std::fmt::Write as _;

use coxmat_core::bruhat::{Bruhat, BruhatInterval};
use coxmat_core::coxroot::{CoxeterGroup, ElemId};
use coxmat_core::geomkit::Polytope;
use coxmat_core::reforder::ReflectionOrdering;
use serde::Serialize;

use crate::words::element_name;
use crate::{CliError, Result};

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GroupSummary {
    pub diagram: String,
    pub rank: usize,
    pub order: usize,
    pub positive_roots: usize,
    pub longest_length: usize,
    pub reflections: usize,
    pub simply_laced: bool,
}

pub fn group_summary(g: &CoxeterGroup) -> GroupSummary {
    let d = g.system().diagram();
    GroupSummary {
        diagram: d.key(),
        rank: g.rank(),
        order: g.order(),
        positive_roots: g.system().num_positive_roots(),
        longest_length: g.length(g.longest()),
        reflections: g.num_reflections(),
        simply_laced: d.is_simply_laced(),
    }
}

/// Positive roots as an array of coordinate arrays in the simple-root basis.
pub fn roots_json(g: &CoxeterGroup) -> serde_json::Value {
    serde_json::json!(g.system().positive_roots())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct IntervalExport {
    pub u: String,
    pub v: String,
    pub elements: Vec<String>,
    /// `[x, y, t]`: `x ⋖ y` with `y = t·x`, `t` a positive root index.
    pub covers: Vec<(String, String, usize)>,
}

pub fn interval_export(b: &Bruhat, iv: &BruhatInterval) -> IntervalExport {
    let g = b.group();
    IntervalExport {
        u: element_name(g, iv.bottom),
        v: element_name(g, iv.top),
        elements: iv.elements.iter().map(|&z| element_name(g, z)).collect(),
        covers: iv
            .cover_edges
            .iter()
            .map(|&(x, y, t)| (element_name(g, x), element_name(g, y), t))
            .collect(),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OrderingExport {
    pub order: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub basis: Option<Vec<Vec<f64>>>,
}

pub fn ordering_export(ord: &ReflectionOrdering) -> OrderingExport {
    OrderingExport {
        order: ord.order().to_vec(),
        basis: ord.basis().map(|b| b.to_vec()),
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VertexExport {
    pub label: usize,
    pub name: String,
    pub coords: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FacetExport {
    pub normal: Vec<f64>,
    pub offset: f64,
    pub vertex_ids: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct FaceExport {
    pub dim: usize,
    pub vertex_ids: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct PolytopeExport {
    pub dim: usize,
    pub ambient_dim: usize,
    pub f_vector: Vec<usize>,
    pub vertices: Vec<VertexExport>,
    pub facets: Vec<FacetExport>,
    pub faces: Vec<FaceExport>,
}

/// Vertex labels are element ids; `name` is the element's reduced word.
/// Quotient polytopes label vertices by minimal coset representatives.
pub fn polytope_export(g: &CoxeterGroup, poly: &Polytope) -> PolytopeExport {
    PolytopeExport {
        dim: poly.dim(),
        ambient_dim: poly.ambient_dim(),
        f_vector: poly.f_vector(),
        vertices: poly
            .vertices()
            .iter()
            .map(|v| VertexExport {
                label: v.label,
                name: element_name(g, ElemId(v.label as u32)),
                coords: v.coords.clone(),
            })
            .collect(),
        facets: poly
            .facets()
            .iter()
            .map(|f| FacetExport {
                normal: f.normal.clone(),
                offset: f.offset,
                vertex_ids: f.vertices.clone(),
            })
            .collect(),
        faces: poly
            .faces()
            .iter()
            .map(|f| FaceExport {
                dim: f.dim,
                vertex_ids: f.vertices.clone(),
            })
            .collect(),
    }
}

fn sub(a: &[f64], b: &[f64]) -> Vec<f64> {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

fn cross(a: &[f64; 3], b: &[f64; 3]) -> [f64; 3] {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

/// Coordinates of every vertex in an orthonormal frame of the affine hull,
/// padded with zeros to three entries.
fn chart3(poly: &Polytope) -> Result<Vec<[f64; 3]>> {
    let vs = poly.vertices();
    if poly.dim() > 3 {
        return Err(CliError::Usage(format!(
            "OFF output needs a polytope of dimension at most 3, got {}",
            poly.dim()
        )));
    }
    let origin = vs[0].coords.clone();
    let scale = vs
        .iter()
        .map(|v| dot(&sub(&v.coords, &origin), &sub(&v.coords, &origin)).sqrt())
        .fold(0.0, f64::max);
    if poly.ambient_dim() <= 3 {
        return Ok(vs
            .iter()
            .map(|v| {
                let mut c = [0.0; 3];
                c[..v.coords.len()].copy_from_slice(&v.coords);
                c
            })
            .collect());
    }
    let mut frame: Vec<Vec<f64>> = Vec::new();
    for v in vs {
        let mut d = sub(&v.coords, &origin);
        for e in &frame {
            let k = dot(&d, e);
            d.iter_mut().zip(e).for_each(|(x, y)| *x -= k * y);
        }
        let n = dot(&d, &d).sqrt();
        if n > 1e-6 * scale.max(1.0) {
            frame.push(d.iter().map(|x| x / n).collect());
        }
    }
    Ok(vs
        .iter()
        .map(|v| {
            let d = sub(&v.coords, &origin);
            let mut c = [0.0; 3];
            for (k, e) in frame.iter().enumerate().take(3) {
                c[k] = dot(&d, e);
            }
            c
        })
        .collect())
}

/// Orders a planar cycle of vertex indices by angle around its centroid,
/// counterclockwise when seen from the tip of `normal`.
fn order_polygon(pts: &[[f64; 3]], ids: &[usize], normal: [f64; 3]) -> Vec<usize> {
    let k = ids.len() as f64;
    let mut c = [0.0; 3];
    for &i in ids {
        for a in 0..3 {
            c[a] += pts[i][a] / k;
        }
    }
    let d0 = sub(&pts[ids[0]], &c);
    let n0 = dot(&d0, &d0).sqrt();
    let e1 = [d0[0] / n0, d0[1] / n0, d0[2] / n0];
    let e2 = cross(&normal, &e1);
    let mut keyed: Vec<(f64, usize)> = ids
        .iter()
        .map(|&i| {
            let d = sub(&pts[i], &c);
            (dot(&d, &e2).atan2(dot(&d, &e1)), i)
        })
        .collect();
    keyed.sort_by(|a, b| a.0.total_cmp(&b.0));
    keyed.into_iter().map(|(_, i)| i).collect()
}

/// OFF text: vertices in the affine hull chart, one polygon per facet of a
/// 3-polytope, a single polygon for a polygon, one segment for a segment.
pub fn polytope_off(poly: &Polytope) -> Result<String> {
    let pts = chart3(poly)?;
    let mut polys: Vec<Vec<usize>> = Vec::new();
    match poly.dim() {
        3 => {
            for f in poly.facets() {
                // The facet normal lives in the original space; recompute it
                // in the chart from the centroid of the whole polytope.
                let all: Vec<usize> = (0..pts.len()).collect();
                let centre = centroid(&pts, &all);
                let mine = centroid(&pts, &f.vertices);
                let a = sub(&pts[f.vertices[1]], &pts[f.vertices[0]]);
                let b = sub(&pts[f.vertices[2]], &pts[f.vertices[0]]);
                let mut n = cross(&[a[0], a[1], a[2]], &[b[0], b[1], b[2]]);
                if dot(&n, &sub(&mine, &centre)) < 0.0 {
                    n = [-n[0], -n[1], -n[2]];
                }
                polys.push(order_polygon(&pts, &f.vertices, n));
            }
        }
        2 => {
            let all: Vec<usize> = (0..pts.len()).collect();
            let a = sub(&pts[1], &pts[0]);
            let n = pts[2..]
                .iter()
                .map(|q| {
                    let b = sub(q, &pts[0]);
                    cross(&[a[0], a[1], a[2]], &[b[0], b[1], b[2]])
                })
                .max_by(|x, y| dot(x, x).total_cmp(&dot(y, y)))
                .expect("a polygon has at least three vertices");
            polys.push(order_polygon(&pts, &all, n));
        }
        1 => polys.push(vec![0, 1]),
        _ => {}
    }
    let edges = poly.edges().len();
    let mut out = String::from("OFF\n");
    let _ = writeln!(out, "{} {} {}", pts.len(), polys.len(), edges);
    for p in &pts {
        let _ = writeln!(out, "{} {} {}", p[0], p[1], p[2]);
    }
    for f in &polys {
        let ids: Vec<String> = f.iter().map(|i| i.to_string()).collect();
        let _ = writeln!(out, "{} {}", f.len(), ids.join(" "));
    }
    Ok(out)
}

fn centroid(pts: &[[f64; 3]], ids: &[usize]) -> Vec<f64> {
    let k = ids.len() as f64;
    (0..3).map(|a| ids.iter().map(|&i| pts[i][a]).sum::<f64>() / k).collect()
}
