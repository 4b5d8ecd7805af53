use coxmat::formats::{group_summary, interval_export, polytope_export, polytope_off, roots_json};
use coxmat::load::load_bruhat;
use coxmat::words::parse_element;
use coxmat_core::coxroot::GeneratorSet;
use coxmat_core::geomkit::convex_hull;
use coxmat_core::moxpoly::{base_point, interval_polytope, parabolic_polytope};

struct Off {
    verts: Vec<[f64; 3]>,
    faces: Vec<Vec<usize>>,
    edges: usize,
}

fn parse_off(text: &str) -> Off {
    let mut lines = text.lines();
    assert_eq!(lines.next(), Some("OFF"));
    let counts: Vec<usize> = lines.next().unwrap().split(' ').map(|t| t.parse().unwrap()).collect();
    let verts = (0..counts[0])
        .map(|_| {
            let c: Vec<f64> = lines.next().unwrap().split(' ').map(|t| t.parse().unwrap()).collect();
            [c[0], c[1], c[2]]
        })
        .collect();
    let faces = (0..counts[1])
        .map(|_| {
            let c: Vec<usize> = lines.next().unwrap().split(' ').map(|t| t.parse().unwrap()).collect();
            assert_eq!(c[0], c.len() - 1);
            c[1..].to_vec()
        })
        .collect();
    assert!(lines.next().is_none());
    Off {
        verts,
        faces,
        edges: counts[2],
    }
}

fn sub(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]]
}

fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

/// Signed volume by the divergence theorem: positive iff every face is
/// wound counterclockwise seen from outside.
fn signed_volume(off: &Off) -> f64 {
    off.faces
        .iter()
        .map(|f| {
            (1..f.len() - 1)
                .map(|k| dot(off.verts[f[0]], cross(off.verts[f[k]], off.verts[f[k + 1]])) / 6.0)
                .sum::<f64>()
        })
        .sum()
}

/// Every face is a convex polygon whose consecutive edge turns all point
/// the same way.
fn faces_are_convex_cycles(off: &Off) {
    for f in &off.faces {
        let n = f.len();
        let turns: Vec<[f64; 3]> = (0..n)
            .map(|k| {
                let a = off.verts[f[k]];
                let b = off.verts[f[(k + 1) % n]];
                let c = off.verts[f[(k + 2) % n]];
                cross(sub(b, a), sub(c, b))
            })
            .collect();
        for t in &turns {
            assert!(dot(*t, turns[0]) > 0.0, "face {f:?} is not a convex cycle");
        }
    }
}

#[test]
fn summary_and_roots() {
    let b = load_bruhat("B3", 1e-9).unwrap();
    let s = group_summary(b.group());
    assert_eq!((s.order, s.positive_roots, s.longest_length, s.reflections), (48, 9, 9, 9));
    assert!(!s.simply_laced);
    let roots = roots_json(b.group());
    let roots = roots.as_array().unwrap();
    assert_eq!(roots.len(), 9);
    assert!(roots.iter().all(|r| r.as_array().unwrap().len() == 3));
}

#[test]
fn interval_json_shape() {
    let b = load_bruhat("A2", 1e-9).unwrap();
    let g = b.group();
    let iv = b.interval(g.identity(), g.longest()).unwrap();
    let v = serde_json::to_value(interval_export(&b, &iv)).unwrap();
    assert_eq!(v["u"], "e");
    assert_eq!(v["v"], "s1s2s1");
    assert_eq!(v["elements"].as_array().unwrap().len(), 6);
    // Hasse diagram of S3: 2 + 4 + 2 covers.
    let covers = v["covers"].as_array().unwrap();
    assert_eq!(covers.len(), 8);
    assert!(covers.iter().all(|c| c.as_array().unwrap().len() == 3));
}

#[test]
fn polytope_json_shape() {
    let b = load_bruhat("A2", 1e-9).unwrap();
    let g = b.group();
    let p = base_point(g.system(), GeneratorSet::EMPTY, 1).unwrap();
    let poly = interval_polytope(&b, g.identity(), g.longest(), &p, 1e-7).unwrap();
    let v = serde_json::to_value(polytope_export(g, &poly)).unwrap();
    assert_eq!(v["dim"], 2);
    assert_eq!(v["ambientDim"], 2);
    assert_eq!(v["fVector"], serde_json::json!([6, 6, 1]));
    assert_eq!(v["vertices"].as_array().unwrap().len(), 6);
    assert_eq!(v["facets"].as_array().unwrap().len(), 6);
    for f in v["facets"].as_array().unwrap() {
        assert_eq!(f["vertexIds"].as_array().unwrap().len(), 2);
        let n: Vec<f64> = serde_json::from_value(f["normal"].clone()).unwrap();
        assert!((n.iter().map(|x| x * x).sum::<f64>() - 1.0).abs() < 1e-9);
    }
    let names: Vec<&str> = v["vertices"].as_array().unwrap().iter().map(|x| x["name"].as_str().unwrap()).collect();
    assert!(names.contains(&"e") && names.contains(&"s1s2s1"));
}

#[test]
fn off_permutohedron() {
    let b = load_bruhat("A3", 1e-9).unwrap();
    let g = b.group();
    let p = base_point(g.system(), GeneratorSet::EMPTY, 4).unwrap();
    let poly = interval_polytope(&b, g.identity(), g.longest(), &p, 1e-7).unwrap();
    let off = parse_off(&polytope_off(&poly).unwrap());
    assert_eq!((off.verts.len(), off.faces.len(), off.edges), (24, 14, 36));
    faces_are_convex_cycles(&off);
    assert!(signed_volume(&off) > 0.0);
    // Every facet edge is a polytope edge, and each appears in two facets.
    let mut seen = std::collections::BTreeMap::new();
    for f in &off.faces {
        for k in 0..f.len() {
            let (a, c) = (f[k], f[(k + 1) % f.len()]);
            *seen.entry((a.min(c), a.max(c))).or_insert(0) += 1;
        }
    }
    assert_eq!(seen.len(), 36);
    assert!(seen.values().all(|&n| n == 2));
}

#[test]
fn off_quotient_and_low_dimensions() {
    let b = load_bruhat("A3", 1e-9).unwrap();
    let g = b.group();
    let j = GeneratorSet::from_indices(&[0, 1]);
    let p = base_point(g.system(), j, 2).unwrap();
    let poly = parabolic_polytope(&b, &b.coset_of(g.identity(), j), &b.coset_of(g.longest(), j), &p, 1e-7).unwrap();
    let off = parse_off(&polytope_off(&poly).unwrap());
    assert_eq!((off.verts.len(), off.faces.len(), off.edges), (4, 4, 6));
    assert!(signed_volume(&off) > 0.0);

    let b2 = load_bruhat("A2", 1e-9).unwrap();
    let g2 = b2.group();
    let p = base_point(g2.system(), GeneratorSet::EMPTY, 2).unwrap();
    let hex = interval_polytope(&b2, g2.identity(), g2.longest(), &p, 1e-7).unwrap();
    let off = parse_off(&polytope_off(&hex).unwrap());
    assert_eq!((off.verts.len(), off.faces.len()), (6, 1));
    faces_are_convex_cycles(&off);

    let p = base_point(g.system(), GeneratorSet::EMPTY, 2).unwrap();
    let s1 = parse_element(g, "s1").unwrap();
    let seg = interval_polytope(&b, g.identity(), s1, &p, 1e-7).unwrap();
    let off = parse_off(&polytope_off(&seg).unwrap());
    assert_eq!((off.verts.len(), off.faces.len(), off.edges), (2, 1, 1));
}

#[test]
fn off_projects_low_dimensional_polytopes_in_high_rank() {
    // A three-dimensional interval polytope of A4 sits in 4-space.
    let b = load_bruhat("A4", 1e-9).unwrap();
    let g = b.group();
    let p = base_point(g.system(), GeneratorSet::EMPTY, 3).unwrap();
    let v = parse_element(g, "s1s3s2").unwrap();
    let poly = interval_polytope(&b, g.identity(), v, &p, 1e-7).unwrap();
    assert_eq!(poly.ambient_dim(), 4);
    let off = parse_off(&polytope_off(&poly).unwrap());
    assert_eq!(off.verts.len(), poly.vertices().len());
    // Chart coordinates preserve distances.
    let chart = convex_hull(
        &(0..off.verts.len()).collect::<Vec<_>>(),
        &off.verts.iter().map(|c| c.to_vec()).collect::<Vec<_>>(),
        1e-7,
    )
    .unwrap();
    assert_eq!(chart.f_vector(), poly.f_vector());
    for i in 0..off.verts.len() {
        for k in 0..i {
            let d_off = dot(sub(off.verts[i], off.verts[k]), sub(off.verts[i], off.verts[k]));
            let (a, c) = (&poly.vertices()[i].coords, &poly.vertices()[k].coords);
            let d: f64 = a.iter().zip(c).map(|(x, y)| (x - y) * (x - y)).sum();
            assert!((d - d_off).abs() < 1e-9 * d.max(1.0));
        }
    }
    // The full A4 permutohedron is four-dimensional.
    let top = interval_polytope(&b, g.identity(), g.longest(), &p, 1e-7).unwrap();
    assert_eq!(polytope_off(&top).unwrap_err().exit_code(), 2);
}
