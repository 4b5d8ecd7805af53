//! Per-theorem verification sweeps and their JSON reports.
//!
//! Every sweep is deterministic in its seed: sampled cases and base points
//! come from seeds derived from `(seed, theorem, case)`, cases run in
//! parallel and results are collected in case order.

use std::time::Instant;

use coxmat_core::bruhat::{Bruhat, Coset};
use coxmat_core::coxroot::{ElemId, GeneratorSet};
use coxmat_core::moxpoly::{
    base_point, certify_matroid, coset_polytope, diamond_functional_check, face_extension_lemma_check,
    face_lattice_stability, face_to_interval, face_to_parabolic_interval, face_to_projected_interval,
    interval_polytope, is_face, lifting_analysis, rank2_diamond_checks, span_invariants, Convention, FaceVerdict,
};
use coxmat_core::reforder::{increasing_chains, is_reflection_ordering, ordering_from_basis};
use coxmat_core::sampling::{index, normal_vector, rng, sample_indices};
use coxmat_core::Tolerances;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

use crate::words::{element_name, generator_set_name};
use crate::{CliError, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Theorem {
    WeakLifting,
    Glp,
    Chains,
    Matroid,
    Faces,
    Spans,
    Parabolic,
    ParabolicFaces,
    Diamonds,
    Lemmas,
    BvStability,
}

impl Theorem {
    pub const ALL: [Theorem; 11] = [
        Theorem::WeakLifting,
        Theorem::Glp,
        Theorem::Chains,
        Theorem::Matroid,
        Theorem::Faces,
        Theorem::Spans,
        Theorem::Parabolic,
        Theorem::ParabolicFaces,
        Theorem::Diamonds,
        Theorem::Lemmas,
        Theorem::BvStability,
    ];

    /// Everything except `parabolic-faces`, whose literal statement has
    /// known counterexamples.
    pub const DEFAULT: [Theorem; 10] = [
        Theorem::WeakLifting,
        Theorem::Glp,
        Theorem::Chains,
        Theorem::Matroid,
        Theorem::Faces,
        Theorem::Spans,
        Theorem::Parabolic,
        Theorem::Diamonds,
        Theorem::Lemmas,
        Theorem::BvStability,
    ];

    pub fn id(self) -> &'static str {
        match self {
            Theorem::WeakLifting => "weak-lifting",
            Theorem::Glp => "glp",
            Theorem::Chains => "chains",
            Theorem::Matroid => "matroid",
            Theorem::Faces => "faces",
            Theorem::Spans => "spans",
            Theorem::Parabolic => "parabolic",
            Theorem::ParabolicFaces => "parabolic-faces",
            Theorem::Diamonds => "diamonds",
            Theorem::Lemmas => "lemmas",
            Theorem::BvStability => "bv-stability",
        }
    }
}

impl std::str::FromStr for Theorem {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self> {
        Theorem::ALL
            .into_iter()
            .find(|t| t.id() == s)
            .ok_or_else(|| CliError::Usage(format!("unknown theorem {s:?}")))
    }
}

impl std::fmt::Display for Theorem {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.id())
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CheckOptions {
    pub seed: u64,
    pub tol: Tolerances,
    /// Cap on intervals for the cheap sweeps (lifting, spans, diamonds).
    pub max_cases: usize,
    /// Cap on intervals or parabolic intervals that need a hull.
    pub max_polytopes: usize,
    /// Random coset subsets for the matroid clause-agreement check.
    pub random_subsets: usize,
    /// Parabolic set for the random subsets.
    pub subset_j: GeneratorSet,
    /// Parabolic sets for `parabolic` and `parabolic-faces`; `None` means
    /// every proper nonempty subset.
    pub parabolic_sets: Option<Vec<GeneratorSet>>,
    pub chain_samples: usize,
    pub chain_max_length: usize,
    /// Intervals on which `is_face` is run for every subinterval.
    pub face_lp_intervals: usize,
    pub lemma_cases: usize,
    pub lemma_samples: usize,
    pub stability_seeds: usize,
    pub stability_intervals: usize,
    /// Entries kept in `failures` and `witnesses`.
    pub report_cap: usize,
}

impl Default for CheckOptions {
    fn default() -> Self {
        CheckOptions {
            seed: 0,
            tol: Tolerances::default(),
            max_cases: 2000,
            max_polytopes: 200,
            random_subsets: 100,
            subset_j: GeneratorSet::EMPTY,
            parabolic_sets: None,
            chain_samples: 200,
            chain_max_length: 5,
            face_lp_intervals: 30,
            lemma_cases: 100,
            lemma_samples: 4,
            stability_seeds: 5,
            stability_intervals: 10,
            report_cap: 20,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct TheoremReport {
    pub theorem: Theorem,
    pub group: String,
    pub scope: String,
    pub cases_checked: usize,
    /// Failing cases; one case can contribute several `failures` entries.
    pub failure_count: usize,
    pub failures: Vec<Value>,
    pub witnesses: Vec<Value>,
    pub stats: Value,
    pub seed: u64,
    /// Wall-clock seconds. The only field that varies between runs.
    pub elapsed: f64,
}

impl TheoremReport {
    pub fn passed(&self) -> bool {
        self.failure_count == 0
    }

    pub fn summary_line(&self) -> String {
        let k = self.cases_checked;
        if self.passed() {
            format!("{} {}: PASS {k}/{k}", self.group, self.theorem)
        } else {
            let first = self.failures.first().map(|v| v.to_string()).unwrap_or_default();
            format!(
                "{} {}: FAIL {}/{k} first witness {first}",
                self.group, self.theorem, self.failure_count
            )
        }
    }

    /// The report as JSON without `elapsed`, for run-to-run comparison.
    pub fn stable_json(&self) -> Value {
        let mut v = serde_json::to_value(self).expect("report serializes");
        if let Value::Object(m) = &mut v {
            m.remove("elapsed");
        }
        v
    }
}

/// Outcome of a single case.
#[derive(Debug, Default)]
struct Case {
    failures: Vec<Value>,
    witness: Option<Value>,
    tags: Vec<&'static str>,
}

impl Case {
    fn fail(v: Value) -> Self {
        Case {
            failures: vec![v],
            ..Case::default()
        }
    }

    fn error(what: Value, e: impl std::fmt::Display) -> Self {
        Case::fail(json!({"case": what, "error": e.to_string()}))
    }
}

struct Sweep {
    scope: String,
    cases: Vec<Case>,
    extra_failures: Vec<Value>,
    stats: serde_json::Map<String, Value>,
}

impl Sweep {
    fn new(scope: String, cases: Vec<Case>) -> Self {
        Sweep {
            scope,
            cases,
            extra_failures: Vec::new(),
            stats: serde_json::Map::new(),
        }
    }
}

/// SplitMix64 step, used to derive independent seeds.
fn mix(a: u64, b: u64) -> u64 {
    let mut z = a ^ b.wrapping_mul(0x9e3779b97f4a7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
    z ^ (z >> 31)
}

fn theorem_seed(seed: u64, t: Theorem) -> u64 {
    mix(seed, t.id().bytes().fold(0u64, |h, c| mix(h, c as u64)))
}

fn name(b: &Bruhat, w: ElemId) -> String {
    element_name(b.group(), w)
}

fn interval_json(b: &Bruhat, u: ElemId, v: ElemId) -> Value {
    json!({"u": name(b, u), "v": name(b, v)})
}

fn coset_json(b: &Bruhat, a: &Coset) -> String {
    format!("{}W_{}", name(b, a.min_rep), generator_set_name(a.j))
}

/// All pairs, or a seeded sample of `cap` of them in the original order.
fn capped<T: Copy>(all: &[T], cap: usize, seed: u64, what: &str) -> (Vec<T>, String) {
    if all.len() <= cap {
        return (all.to_vec(), format!("all {} {what}", all.len()));
    }
    let mut idx = sample_indices(&mut rng(seed), all.len(), cap);
    idx.sort_unstable();
    (
        idx.into_iter().map(|i| all[i]).collect(),
        format!("{cap} of {} {what} (seeded sample)", all.len()),
    )
}

fn strict_pairs(b: &Bruhat) -> Vec<(ElemId, ElemId)> {
    b.comparable_pairs(false)
}

fn par_cases<T: Sync, F>(items: &[T], f: F) -> Vec<Case>
where
    F: Fn(usize, &T) -> Case + Sync,
{
    items.par_iter().enumerate().map(|(k, t)| f(k, t)).collect()
}

/// Runs one theorem on one group.
pub fn check(b: &Bruhat, group: &str, theorem: Theorem, opts: &CheckOptions) -> Result<TheoremReport> {
    opts.tol.validate()?;
    let start = Instant::now();
    let seed = theorem_seed(opts.seed, theorem);
    let sweep = match theorem {
        Theorem::WeakLifting => weak_lifting(b, opts, seed),
        Theorem::Glp => glp(b, opts, seed),
        Theorem::Chains => chains(b, opts, seed)?,
        Theorem::Matroid => matroid(b, opts, seed),
        Theorem::Faces => faces(b, opts, seed),
        Theorem::Spans => spans(b, opts, seed),
        Theorem::Parabolic => parabolic(b, opts, seed, false),
        Theorem::ParabolicFaces => parabolic(b, opts, seed, true),
        Theorem::Diamonds => diamonds(b, opts),
        Theorem::Lemmas => lemmas(b, opts, seed)?,
        Theorem::BvStability => stability(b, opts, seed),
    };
    let failure_count = sweep.cases.iter().filter(|c| !c.failures.is_empty()).count() + sweep.extra_failures.len();
    let mut failures: Vec<Value> = sweep.cases.iter().flat_map(|c| c.failures.iter().cloned()).collect();
    failures.extend(sweep.extra_failures);
    failures.truncate(opts.report_cap);
    let witnesses: Vec<Value> = sweep
        .cases
        .iter()
        .filter_map(|c| c.witness.clone())
        .take(opts.report_cap)
        .collect();
    let mut stats = sweep.stats;
    let mut tags: std::collections::BTreeMap<&str, usize> = Default::default();
    for t in sweep.cases.iter().flat_map(|c| c.tags.iter()) {
        *tags.entry(t).or_default() += 1;
    }
    for (k, n) in tags {
        stats.insert(k.to_string(), json!(n));
    }
    Ok(TheoremReport {
        theorem,
        group: group.to_string(),
        scope: sweep.scope,
        cases_checked: sweep.cases.len(),
        failure_count,
        failures,
        witnesses,
        stats: Value::Object(stats),
        seed: opts.seed,
        elapsed: start.elapsed().as_secs_f64(),
    })
}

fn weak_lifting(b: &Bruhat, opts: &CheckOptions, seed: u64) -> Sweep {
    let (pairs, scope) = capped(&strict_pairs(b), opts.max_cases, seed, "intervals");
    let cases: Vec<(ElemId, ElemId, Convention)> = pairs
        .iter()
        .flat_map(|&(u, v)| [(u, v, Convention::Left), (u, v, Convention::Right)])
        .collect();
    let cases = par_cases(&cases, |_, &(u, v, conv)| {
        let conv_name = if conv == Convention::Left { "left" } else { "right" };
        let mut what = interval_json(b, u, v);
        what["convention"] = json!(conv_name);
        match lifting_analysis(b, u, v, conv, opts.tol.lp) {
            Ok(r) if r.weak_holds => Case {
                witness: r.weak_witness.map(|m| {
                    json!({"case": what, "r": r.r, "rPrime": r.r_prime, "a": m.a, "b": m.b})
                }),
                ..Case::default()
            },
            Ok(r) => Case::fail(json!({"case": what, "r": r.r, "rPrime": r.r_prime})),
            Err(e) => Case::error(what, e),
        }
    });
    Sweep::new(format!("{scope}, both conventions"), cases)
}

fn glp(b: &Bruhat, opts: &CheckOptions, seed: u64) -> Sweep {
    let simply_laced = b.group().system().diagram().is_simply_laced();
    let (pairs, scope) = capped(&strict_pairs(b), opts.max_cases, seed, "intervals");
    let cases = par_cases(&pairs, |_, &(u, v)| {
        let what = interval_json(b, u, v);
        let r = match lifting_analysis(b, u, v, Convention::Left, opts.tol.lp) {
            Ok(r) => r,
            Err(e) => return Case::error(what, e),
        };
        match (r.glp_witness, simply_laced) {
            (Some(t), _) => Case {
                witness: simply_laced.then(|| json!({"case": what, "reflection": t})),
                tags: vec!["withWitness"],
                ..Case::default()
            },
            (None, true) => Case::fail(json!({"case": what, "reason": "no common reflection"})),
            // Without a common reflection the weak property must still hold.
            (None, false) if r.weak_holds => Case {
                witness: Some(json!({"case": what, "r": r.r, "rPrime": r.r_prime})),
                tags: vec!["withoutWitness"],
                ..Case::default()
            },
            (None, false) => Case::fail(json!({"case": what, "reason": "no common reflection and cones disjoint"})),
        }
    });
    let mut sweep = Sweep::new(scope, cases);
    sweep.stats.insert("simplyLaced".into(), json!(simply_laced));
    if !simply_laced && !sweep.cases.iter().any(|c| c.tags.contains(&"withoutWitness")) {
        sweep
            .extra_failures
            .push(json!({"reason": "no interval without a common reflection was found"}));
    }
    sweep
}

fn chains(b: &Bruhat, opts: &CheckOptions, seed: u64) -> Result<Sweep> {
    let g = b.group();
    let pool: Vec<(ElemId, ElemId)> = strict_pairs(b)
        .into_iter()
        .filter(|&(u, v)| g.length(v) - g.length(u) <= opts.chain_max_length)
        .collect();
    if pool.is_empty() {
        return Ok(Sweep::new("no intervals".into(), Vec::new()));
    }
    let ks: Vec<usize> = (0..opts.chain_samples).collect();
    let sys = g.system();
    let n = g.rank();
    let cases = par_cases(&ks, |_, &k| {
        let mut r = rng(mix(seed, k as u64));
        let (u, v) = pool[index(&mut r, pool.len())];
        let what = interval_json(b, u, v);
        let basis: Vec<Vec<f64>> = (0..n).map(|_| normal_vector(&mut r, n)).collect();
        let ord = match ordering_from_basis(sys, &basis, opts.tol.lp) {
            Ok(o) => o,
            Err(e) => return Case::error(what, e),
        };
        if !is_reflection_ordering(sys, &ord) {
            return Case::fail(json!({"case": what, "reason": "ordering violates betweenness"}));
        }
        match increasing_chains(b, u, v, &ord) {
            Ok(ch) if ch.len() == 1 => Case {
                witness: Some(json!({
                    "case": what,
                    "chain": ch[0].iter().map(|&z| name(b, z)).collect::<Vec<_>>(),
                })),
                ..Case::default()
            },
            Ok(ch) => Case::fail(json!({"case": what, "increasingChains": ch.len(), "order": ord.order()})),
            Err(e) => Case::error(what, e),
        }
    });
    Ok(Sweep::new(
        format!(
            "{} sampled (interval, ordering) pairs from {} intervals of length at most {}",
            opts.chain_samples,
            pool.len(),
            opts.chain_max_length
        ),
        cases,
    ))
}

fn matroid_case(b: &Bruhat, m: &[Coset], j: GeneratorSet, seed: u64, eps: f64, what: Value, must_hold: bool) -> Case {
    match certify_matroid(b, m, j, &[seed], eps) {
        Ok(r) if !r.agree => Case::fail(json!({"case": what, "reason": "clauses disagree"})),
        Ok(r) if must_hold && !r.maximality_holds => Case::fail(json!({"case": what, "reason": "not a matroid"})),
        Ok(r) => Case {
            tags: vec![if r.maximality_holds { "matroids" } else { "nonMatroids" }],
            ..Case::default()
        },
        Err(e) => Case::error(what, e),
    }
}

fn matroid(b: &Bruhat, opts: &CheckOptions, seed: u64) -> Sweep {
    let j0 = GeneratorSet::EMPTY;
    let (pairs, scope) = capped(&b.comparable_pairs(true), opts.max_polytopes, seed, "intervals");
    let mut cases = par_cases(&pairs, |k, &(u, v)| {
        let m: Vec<Coset> = b.interval_elements(u, v).into_iter().map(|z| b.coset_of(z, j0)).collect();
        matroid_case(b, &m, j0, mix(seed, k as u64), opts.tol.geom, interval_json(b, u, v), true)
    });
    let j = opts.subset_j;
    let cosets = b.cosets(j);
    let ks: Vec<usize> = (0..opts.random_subsets).collect();
    let subset_seed = mix(seed, 0x5eb5e7);
    cases.extend(par_cases(&ks, |k, _| {
        let mut r = rng(mix(subset_seed, k as u64));
        let size = 1 + index(&mut r, cosets.len());
        let mut m: Vec<Coset> = sample_indices(&mut r, cosets.len(), size)
            .into_iter()
            .map(|i| cosets[i])
            .collect();
        m.sort();
        let what = json!({"subset": m.iter().map(|a| coset_json(b, a)).collect::<Vec<_>>()});
        matroid_case(b, &m, j, mix(subset_seed ^ 1, k as u64), opts.tol.geom, what, false)
    }));
    Sweep::new(
        format!(
            "{scope}; {} random subsets of W/W_J, J = {}",
            opts.random_subsets,
            generator_set_name(j)
        ),
        cases,
    )
}

fn faces(b: &Bruhat, opts: &CheckOptions, seed: u64) -> Sweep {
    let g = b.group();
    let sys = g.system();
    let top = (g.identity(), g.longest());
    let mut all = strict_pairs(b);
    all.retain(|&p| p != top);
    let (mut pairs, scope) = capped(&all, opts.max_polytopes.saturating_sub(1), seed, "other intervals");
    pairs.insert(0, top);
    let lp_count = opts.face_lp_intervals.min(pairs.len());
    let mut lp_idx = sample_indices(&mut rng(mix(seed, 1)), pairs.len(), lp_count);
    lp_idx.sort_unstable();
    let cases = par_cases(&pairs, |k, &(u, v)| {
        let what = interval_json(b, u, v);
        let p = match base_point(sys, GeneratorSet::EMPTY, mix(seed, k as u64)) {
            Ok(p) => p,
            Err(e) => return Case::error(what, e),
        };
        let poly = match interval_polytope(b, u, v, &p, opts.tol.geom) {
            Ok(p) => p,
            Err(e) => return Case::error(what, e),
        };
        let mut case = Case::default();
        for f in poly.faces() {
            if face_to_interval(b, &poly, f).is_err() {
                let labels: Vec<String> = poly.face_labels(f).iter().map(|&l| name(b, ElemId(l as u32))).collect();
                case.failures.push(json!({"case": what, "face": labels}));
            }
        }
        case.witness = Some(json!({"case": what, "fVector": poly.f_vector()}));
        if lp_idx.binary_search(&k).is_ok() {
            let elems = b.interval_elements(u, v);
            let mut checked = 0usize;
            for &x in &elems {
                for &y in &elems {
                    if !b.leq(x, y) {
                        continue;
                    }
                    checked += 1;
                    let labels: Vec<usize> = b.interval_elements(x, y).iter().map(|z| z.index()).collect();
                    let in_lattice = poly.face_with_labels(&labels).is_some();
                    let sub = json!({"case": what, "x": name(b, x), "y": name(b, y)});
                    match is_face(b, x, y, u, v, &p, opts.tol.lp, opts.tol.geom) {
                        Ok(FaceVerdict::Face(c)) if !c.supports_exactly => {
                            case.failures.push(json!({"subinterval": sub, "reason": "certificate does not support"}))
                        }
                        Ok(verdict) if verdict.is_face() != in_lattice => case.failures.push(json!({
                            "subinterval": sub,
                            "lp": verdict.is_face(),
                            "lattice": in_lattice,
                        })),
                        Ok(_) => {}
                        Err(e) => case.failures.push(json!({"subinterval": sub, "error": e.to_string()})),
                    }
                }
            }
            case.tags = vec!["lpIntervals"; 1];
            case.tags.extend(std::iter::repeat_n("lpSubintervals", checked));
        }
        case
    });
    Sweep::new(
        format!("[e, w0] and {scope}; is_face on every subinterval of {lp_count} of them"),
        cases,
    )
}

fn spans(b: &Bruhat, opts: &CheckOptions, seed: u64) -> Sweep {
    let sys = b.group().system();
    let (pairs, scope) = capped(&strict_pairs(b), opts.max_cases, seed, "intervals");
    let cases = par_cases(&pairs, |k, &(u, v)| {
        let what = interval_json(b, u, v);
        let r = base_point(sys, GeneratorSet::EMPTY, mix(seed, k as u64))
            .and_then(|p| span_invariants(b, u, v, &p, opts.tol.rank));
        match r {
            Ok(r) if r.holds => Case::default(),
            Ok(r) => Case::fail(json!({
                "case": what,
                "atoms": r.atoms,
                "coatoms": r.coatoms,
                "chain": r.chain,
                "all": r.all,
                "polytopeDim": r.polytope_dim,
            })),
            Err(e) => Case::error(what, e),
        }
    });
    Sweep::new(scope, cases)
}

fn proper_sets(b: &Bruhat, opts: &CheckOptions) -> Vec<GeneratorSet> {
    let n = b.group().rank();
    match &opts.parabolic_sets {
        Some(s) => s.clone(),
        None => (1..(1u64 << n) - 1).map(GeneratorSet).collect(),
    }
}

fn parabolic(b: &Bruhat, opts: &CheckOptions, seed: u64, literal: bool) -> Sweep {
    let sys = b.group().system();
    let sets = proper_sets(b, opts);
    let mut all: Vec<(Coset, Coset)> = Vec::new();
    for &j in &sets {
        let cosets = b.cosets(j);
        for a in &cosets {
            for c in &cosets {
                if b.leq(a.min_rep, c.min_rep) {
                    all.push((*a, *c));
                }
            }
        }
    }
    let (pairs, scope) = capped(&all, opts.max_polytopes, seed, "parabolic intervals");
    let cases = par_cases(&pairs, |k, (a, c)| {
        let what = json!({"j": generator_set_name(a.j), "a": coset_json(b, a), "b": coset_json(b, c)});
        let m = match b.parabolic_interval(a, c) {
            Ok(m) => m,
            Err(e) => return Case::error(what, e),
        };
        let s = mix(seed, k as u64);
        let mut case = if literal {
            Case::default()
        } else {
            matroid_case(b, &m, a.j, s, opts.tol.geom, what.clone(), true)
        };
        let poly = match base_point(sys, a.j, s).and_then(|p| coset_polytope(b, &m, &p, opts.tol.geom)) {
            Ok(p) => p,
            Err(e) => return Case::error(what, e),
        };
        for f in poly.faces() {
            let ok = if literal {
                face_to_parabolic_interval(b, &poly, f, a).is_ok()
            } else {
                face_to_projected_interval(b, &poly, f, a.j).is_ok()
            };
            if !ok {
                let labels: Vec<String> = poly.face_labels(f).iter().map(|&l| name(b, ElemId(l as u32))).collect();
                case.failures.push(json!({"case": what, "face": labels}));
            }
        }
        case
    });
    let sets: Vec<String> = sets.iter().map(|&j| generator_set_name(j)).collect();
    Sweep::new(format!("{scope}, J in [{}]", sets.join(", ")), cases)
}

fn diamonds(b: &Bruhat, opts: &CheckOptions) -> Sweep {
    let g = b.group();
    let pairs: Vec<(ElemId, ElemId)> = strict_pairs(b)
        .into_iter()
        .filter(|&(u, v)| g.length(v) - g.length(u) == 2)
        .collect();
    let cases = par_cases(&pairs, |_, &(u, v)| {
        let what = interval_json(b, u, v);
        match rank2_diamond_checks(b, u, v, opts.tol.lp, opts.tol.rank) {
            Ok(r) if r.holds() => Case::default(),
            Ok(r) => Case::fail(json!({
                "case": what,
                "roots": r.diamond.t,
                "spanEqual": r.span_equal,
                "lowerInUpperCone": r.lower_in_upper_cone,
                "upperInLowerCone": r.upper_in_lower_cone,
            })),
            Err(e) => Case::error(what, e),
        }
    });
    Sweep::new(format!("all {} length-two intervals", pairs.len()), cases)
}

fn lemmas(b: &Bruhat, opts: &CheckOptions, seed: u64) -> Result<Sweep> {
    let sys = b.group().system();
    let all = b.comparable_pairs(true);
    let ks: Vec<usize> = (0..opts.lemma_cases).collect();
    let cases = par_cases(&ks, |k, _| {
        let s = mix(seed, k as u64);
        let mut r = rng(s);
        let (u, v) = all[index(&mut r, all.len())];
        let inner = b.interval_elements(u, v);
        let x = inner[index(&mut r, inner.len())];
        let above: Vec<ElemId> = inner.iter().copied().filter(|&y| b.leq(x, y)).collect();
        let y = above[index(&mut r, above.len())];
        let what = json!({"u": name(b, u), "v": name(b, v), "x": name(b, x), "y": name(b, y)});
        let p = match base_point(sys, GeneratorSet::EMPTY, s) {
            Ok(p) => p,
            Err(e) => return Case::error(what, e),
        };
        let mut case = Case::default();
        match face_extension_lemma_check(b, u, v, x, y, &p, opts.lemma_samples, s, opts.tol.geom) {
            Ok(rep) => {
                for (f, q) in rep.counterexamples {
                    case.failures.push(json!({"case": what, "lemma": "extension", "f": f, "q": name(b, q)}));
                }
                case.tags.extend(std::iter::repeat_n("extensionHypothesisMet", rep.hypothesis_met));
            }
            Err(e) => case.failures.push(json!({"case": what, "error": e.to_string()})),
        }
        match diamond_functional_check(b, u, v, &p, opts.lemma_samples.min(2), s, opts.tol.geom) {
            Ok(rep) => {
                for (d, clause) in rep.violations {
                    case.failures.push(json!({
                        "case": what,
                        "lemma": "diamond",
                        "clause": clause,
                        "diamond": [name(b, d.u), name(b, d.x), name(b, d.y), name(b, d.v)],
                    }));
                }
                case.tags.extend(std::iter::repeat_n("diamondsChecked", rep.diamonds));
            }
            Err(e) => case.failures.push(json!({"case": what, "error": e.to_string()})),
        }
        case
    });
    Ok(Sweep::new(
        format!("{} sampled (interval, subinterval) pairs", opts.lemma_cases),
        cases,
    ))
}

fn stability(b: &Bruhat, opts: &CheckOptions, seed: u64) -> Sweep {
    let g = b.group();
    let n = g.rank();
    let seeds: Vec<u64> = (0..opts.stability_seeds as u64).map(|k| mix(seed, k)).collect();
    // The whole group, each full quotient, then sampled intervals.
    let mut items: Vec<(GeneratorSet, Vec<Coset>, Value)> = Vec::new();
    for bits in 0..(1u64 << n) - 1 {
        let j = GeneratorSet(bits);
        let a = b.coset_of(g.identity(), j);
        let c = b.coset_of(g.longest(), j);
        if let Ok(m) = b.parabolic_interval(&a, &c) {
            items.push((j, m, json!({"j": generator_set_name(j), "a": coset_json(b, &a), "b": coset_json(b, &c)})));
        }
    }
    let (pairs, _) = capped(&strict_pairs(b), opts.stability_intervals, seed, "intervals");
    let j0 = GeneratorSet::EMPTY;
    for (u, v) in pairs {
        let m = b.interval_elements(u, v).into_iter().map(|z| b.coset_of(z, j0)).collect();
        items.push((j0, m, interval_json(b, u, v)));
    }
    let quotients = (1usize << n) - 1;
    let cases = par_cases(&items, |_, (j, m, what)| {
        match face_lattice_stability(b, m, *j, &seeds, opts.tol.geom) {
            Ok(r) if r.identical => Case {
                witness: Some(json!({"case": what, "faceCounts": r.face_counts})),
                ..Case::default()
            },
            Ok(r) => Case::fail(json!({"case": what, "faceCounts": r.face_counts})),
            Err(e) => Case::error(what.clone(), e),
        }
    });
    Sweep::new(
        format!(
            "{quotients} full quotients (including W itself) and {} intervals, {} base points each",
            items.len() - quotients,
            seeds.len()
        ),
        cases,
    )
}
