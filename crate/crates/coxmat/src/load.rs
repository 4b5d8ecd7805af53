//! Diagram input and the on-disk group table cache.
//!
//! When `COXMAT_CACHE` names a directory, enumerated groups are stored
//! there as JSON lists of signed root permutations and reused by later
//! runs with the same diagram and root tolerance.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use coxmat_core::bruhat::Bruhat;
use coxmat_core::coxroot::{CoxeterDiagram, CoxeterGroup, CoxeterSystem, SignedPerm, DEFAULT_ROOT_CAP};
use serde::{Deserialize, Serialize};

use crate::{CliError, Result};

pub const CACHE_ENV: &str = "COXMAT_CACHE";

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DiagramFile {
    pub rank: usize,
    pub m: Vec<Vec<u32>>,
}

/// A preset name (`A3`, `I2(5)`, `A1xA1`, ...) or a path to a diagram JSON
/// file `{"rank": n, "m": [[...]]}`.
pub fn parse_diagram(spec: &str) -> Result<CoxeterDiagram> {
    let path = Path::new(spec);
    if spec.ends_with(".json") || path.is_file() {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        let d: DiagramFile = serde_json::from_str(&text)?;
        if d.m.len() != d.rank {
            return Err(CliError::Core(coxmat_core::Error::DegenerateDiagram(format!(
                "rank {} but {} matrix rows",
                d.rank,
                d.m.len()
            ))));
        }
        return Ok(CoxeterDiagram::new(d.m)?);
    }
    Ok(CoxeterDiagram::preset(spec)?)
}

#[derive(Debug, Serialize, Deserialize)]
struct CachedGroup {
    diagram: String,
    eps_root: f64,
    actions: Vec<Vec<u32>>,
}

fn cache_path(dir: &Path, key: &str, eps_root: f64) -> PathBuf {
    // FNV-1a over the diagram key and tolerance bits.
    let mut h: u64 = 0xcbf29ce484222325;
    for b in key.bytes().chain(eps_root.to_bits().to_le_bytes()) {
        h ^= b as u64;
        h = h.wrapping_mul(0x100000001b3);
    }
    dir.join(format!("group-{h:016x}.json"))
}

fn decode(raw: &[u32]) -> Result<SignedPerm> {
    let images: Vec<(usize, bool)> = raw.iter().map(|&e| ((e >> 1) as usize, e & 1 == 1)).collect();
    Ok(SignedPerm::from_images(&images)?)
}

fn from_cache(path: &Path, key: &str, eps_root: f64, sys: &Arc<CoxeterSystem>) -> Option<CoxeterGroup> {
    let text = std::fs::read_to_string(path).ok()?;
    let c: CachedGroup = serde_json::from_str(&text).ok()?;
    if c.diagram != key || c.eps_root != eps_root {
        return None;
    }
    let actions = c.actions.iter().map(|a| decode(a)).collect::<Result<Vec<_>>>().ok()?;
    CoxeterGroup::from_actions(sys.clone(), actions).ok()
}

pub fn load_group(diagram: CoxeterDiagram, eps_root: f64) -> Result<Arc<CoxeterGroup>> {
    let key = diagram.key();
    let sys = Arc::new(CoxeterSystem::new(diagram, eps_root, DEFAULT_ROOT_CAP)?);
    let cache = std::env::var_os(CACHE_ENV).map(PathBuf::from);
    if let Some(dir) = &cache {
        let path = cache_path(dir, &key, eps_root);
        if let Some(g) = from_cache(&path, &key, eps_root, &sys) {
            return Ok(Arc::new(g));
        }
    }
    let g = CoxeterGroup::new(sys)?;
    if let Some(dir) = &cache {
        let entry = CachedGroup {
            diagram: key.clone(),
            eps_root,
            actions: g.elements().iter().map(|w| w.action().raw().to_vec()).collect(),
        };
        // A cache that cannot be written is not an error.
        if std::fs::create_dir_all(dir).is_ok() {
            let path = cache_path(dir, &key, eps_root);
            let tmp = path.with_extension("tmp");
            if std::fs::write(&tmp, serde_json::to_vec(&entry)?).is_ok() {
                let _ = std::fs::rename(&tmp, &path);
            }
        }
    }
    Ok(Arc::new(g))
}

pub fn load_bruhat(spec: &str, eps_root: f64) -> Result<Bruhat> {
    Ok(Bruhat::new(load_group(parse_diagram(spec)?, eps_root)?))
}
