//! Element and generator-set notation.
//!
//! Generators are numbered from 1. Accepted element forms:
//! `e`, `w0`, `s1 s3 s2`, `s1s3s2`, digit strings such as `132`, and in
//! linear type A one-line permutations such as `2143`. A one-line string
//! always contains the letter `n+1`, which is not a generator, so the two
//! digit forms never collide.

use coxmat_core::coxroot::{CoxeterGroup, ElemId, GeneratorSet};

use crate::{CliError, Result};

fn bad(s: &str, why: &str) -> CliError {
    CliError::Usage(format!("cannot parse {s:?}: {why}"))
}

/// 0-based generator indices from `s1 s3`, `s1s3`, `1,3` or `13`.
pub fn parse_generators(s: &str, rank: usize) -> Result<Vec<usize>> {
    let t = s.trim();
    let mut out = Vec::new();
    let numbers: Vec<&str> = if t.contains(['s', 'S', ' ', ',', '*', '.']) {
        t.split(['s', 'S', ' ', ',', '*', '.'])
            .filter(|p| !p.is_empty())
            .collect()
    } else {
        (0..t.len()).map(|i| &t[i..i + 1]).collect()
    };
    for n in numbers {
        let k: usize = n.parse().map_err(|_| bad(s, "expected generator numbers"))?;
        if k == 0 || k > rank {
            return Err(bad(s, &format!("generator {k} outside 1..={rank}")));
        }
        out.push(k - 1);
    }
    Ok(out)
}

pub fn parse_generator_set(s: &str, rank: usize) -> Result<GeneratorSet> {
    let t = s.trim();
    if t.is_empty() || t == "-" || t.eq_ignore_ascii_case("none") {
        return Ok(GeneratorSet::EMPTY);
    }
    Ok(GeneratorSet::from_indices(&parse_generators(t, rank)?))
}

pub fn parse_element(g: &CoxeterGroup, s: &str) -> Result<ElemId> {
    let t = s.trim();
    match t {
        "" | "e" => return Ok(g.identity()),
        "w0" | "w_0" => return Ok(g.longest()),
        _ => {}
    }
    let n = g.rank();
    if g.system().diagram().is_linear_type_a() && t.len() == n + 1 && t.chars().all(|c| c.is_ascii_digit()) {
        let perm: Vec<usize> = t.chars().map(|c| c as usize - '0' as usize).collect();
        if perm.contains(&(n + 1)) {
            return Ok(g.from_one_line(&perm)?);
        }
    }
    Ok(g.from_word(&parse_generators(t, n)?)?)
}

/// Lexicographically smallest reduced word, written `s1s3s2`; `e` for the
/// identity.
pub fn element_name(g: &CoxeterGroup, w: ElemId) -> String {
    let word = g.reduced_word(w);
    if word.is_empty() {
        return "e".into();
    }
    word.iter().map(|s| format!("s{}", s + 1)).collect()
}

pub fn generator_set_name(j: GeneratorSet) -> String {
    if j.is_empty() {
        return "{}".into();
    }
    let names: Vec<String> = j.iter().map(|s| format!("s{}", s + 1)).collect();
    format!("{{{}}}", names.join(","))
}
