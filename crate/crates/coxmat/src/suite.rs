//! Multi-group, multi-theorem runs driven by a JSON config.

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use coxmat_core::Tolerances;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::load::load_bruhat;
use crate::verify::{check, CheckOptions, Theorem, TheoremReport};
use crate::{CliError, Result};

#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct ToleranceOverrides {
    pub root: Option<f64>,
    pub lp: Option<f64>,
    pub geom: Option<f64>,
    pub rank: Option<f64>,
}

impl ToleranceOverrides {
    pub fn apply(&self, base: Tolerances) -> Tolerances {
        Tolerances {
            root: self.root.unwrap_or(base.root),
            lp: self.lp.unwrap_or(base.lp),
            geom: self.geom.unwrap_or(base.geom),
            rank: self.rank.unwrap_or(base.rank),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase", deny_unknown_fields)]
pub struct SuiteConfig {
    pub groups: Vec<String>,
    pub theorems: Vec<Theorem>,
    #[serde(default)]
    pub seed: u64,
    #[serde(default)]
    pub tolerances: ToleranceOverrides,
    /// Worker threads; `None` uses every core.
    #[serde(default)]
    pub jobs: Option<usize>,
    #[serde(default)]
    pub out: Option<PathBuf>,
    #[serde(default)]
    pub random_subsets: Option<usize>,
    #[serde(default)]
    pub max_cases: Option<usize>,
    #[serde(default)]
    pub max_polytopes: Option<usize>,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            groups: ["A2", "A3", "B2", "B3", "H3", "I2(5)"].map(String::from).to_vec(),
            theorems: Theorem::DEFAULT.to_vec(),
            seed: 0,
            tolerances: ToleranceOverrides::default(),
            jobs: None,
            out: None,
            random_subsets: None,
            max_cases: None,
            max_polytopes: None,
        }
    }
}

impl SuiteConfig {
    pub fn from_file(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        serde_json::from_str(&text).map_err(|e| CliError::Config(format!("{}: {e}", path.display())))
    }

    pub fn validate(&self) -> Result<()> {
        if self.groups.is_empty() {
            return Err(CliError::Config("no groups selected".into()));
        }
        if self.theorems.is_empty() {
            return Err(CliError::Config("no theorems selected".into()));
        }
        if self.jobs == Some(0) {
            return Err(CliError::Config("jobs must be at least 1".into()));
        }
        self.tolerances
            .apply(Tolerances::default())
            .validate()
            .map_err(|_| CliError::Config("tolerances must be positive and finite".into()))
    }

    pub fn options(&self) -> CheckOptions {
        let mut o = CheckOptions {
            seed: self.seed,
            tol: self.tolerances.apply(Tolerances::default()),
            ..CheckOptions::default()
        };
        if let Some(n) = self.random_subsets {
            o.random_subsets = n;
        }
        if let Some(n) = self.max_cases {
            o.max_cases = n;
        }
        if let Some(n) = self.max_polytopes {
            o.max_polytopes = n;
        }
        o
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct IndexEntry {
    pub group: String,
    pub theorem: Theorem,
    pub report: String,
    pub scope: String,
    pub cases_checked: usize,
    pub failure_count: usize,
    pub passed: bool,
}

/// Top-level summary. Holds no timing, so reruns produce identical bytes.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SuiteIndex {
    pub seed: u64,
    pub groups: Vec<String>,
    pub theorems: Vec<Theorem>,
    pub entries: Vec<IndexEntry>,
    pub passed: bool,
}

/// File-name-safe form of a group name: `I2(5)` becomes `I2_5`.
pub fn safe_name(group: &str) -> String {
    let s: String = group
        .chars()
        .map(|c| if c.is_ascii_alphanumeric() { c } else { '_' })
        .collect();
    s.trim_end_matches('_').to_string()
}

fn write_json<T: Serialize>(path: &Path, value: &T) -> Result<()> {
    let mut text = serde_json::to_string_pretty(value)?;
    text.push('\n');
    std::fs::write(path, text).map_err(|e| CliError::io(path, e))
}

pub struct SuiteOutcome {
    pub index: SuiteIndex,
    pub reports: Vec<TheoremReport>,
}

/// Runs every (group, theorem) pair and, when `out` is given, writes
/// `out/<group>/<theorem>.json` and `out/index.json`.
pub fn run_suite(cfg: &SuiteConfig, eps_root: f64, out: Option<&Path>) -> Result<SuiteOutcome> {
    cfg.validate()?;
    let opts = cfg.options();
    let eps_root = cfg.tolerances.root.unwrap_or(eps_root);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs.unwrap_or(0))
        .build()
        .map_err(|e| CliError::Config(e.to_string()))?;
    let bruhats: Vec<_> = cfg
        .groups
        .iter()
        .map(|g| load_bruhat(g, eps_root))
        .collect::<Result<_>>()?;
    let jobs: Vec<(usize, Theorem)> = (0..cfg.groups.len())
        .flat_map(|gi| cfg.theorems.iter().map(move |&t| (gi, t)))
        .collect();
    let reports: Vec<TheoremReport> = pool.install(|| {
        jobs.par_iter()
            .map(|&(gi, t)| check(&bruhats[gi], &cfg.groups[gi], t, &opts))
            .collect::<Result<_>>()
    })?;
    let mut entries = Vec::new();
    let mut dirs: BTreeMap<String, PathBuf> = BTreeMap::new();
    for r in &reports {
        let dir = safe_name(&r.group);
        let rel = format!("{dir}/{}.json", r.theorem);
        if let Some(out) = out {
            let d = dirs.entry(dir.clone()).or_insert_with(|| out.join(&dir));
            std::fs::create_dir_all(&*d).map_err(|e| CliError::io(&*d, e))?;
            write_json(&out.join(&rel), r)?;
        }
        entries.push(IndexEntry {
            group: r.group.clone(),
            theorem: r.theorem,
            report: rel,
            scope: r.scope.clone(),
            cases_checked: r.cases_checked,
            failure_count: r.failure_count,
            passed: r.passed(),
        });
    }
    let index = SuiteIndex {
        seed: cfg.seed,
        groups: cfg.groups.clone(),
        theorems: cfg.theorems.clone(),
        passed: entries.iter().all(|e| e.passed),
        entries,
    };
    if let Some(out) = out {
        std::fs::create_dir_all(out).map_err(|e| CliError::io(out, e))?;
        write_json(&out.join("index.json"), &index)?;
    }
    Ok(SuiteOutcome { index, reports })
}
