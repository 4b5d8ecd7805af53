use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

/// Coxeter matrix of a finite-rank Coxeter system. Entries are finite; the
/// infinite label is not representable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CoxeterDiagram {
    m: Vec<Vec<u32>>,
}

impl CoxeterDiagram {
    pub fn new(m: Vec<Vec<u32>>) -> Result<Self> {
        let n = m.len();
        if n == 0 {
            return Err(Error::DegenerateDiagram("rank must be positive".into()));
        }
        for (i, row) in m.iter().enumerate() {
            if row.len() != n {
                return Err(Error::DegenerateDiagram(format!(
                    "row {i} has {} entries, expected {n}",
                    row.len()
                )));
            }
            for (j, &mij) in row.iter().enumerate() {
                if i == j && mij != 1 {
                    return Err(Error::DegenerateDiagram(format!("m({i},{i}) = {mij}, must be 1")));
                }
                if i != j && mij < 2 {
                    return Err(Error::DegenerateDiagram(format!(
                        "m({i},{j}) = {mij}, must be at least 2 (infinite labels are rejected)"
                    )));
                }
                if m[j][i] != mij {
                    return Err(Error::DegenerateDiagram(format!("m({i},{j}) != m({j},{i})")));
                }
            }
        }
        Ok(CoxeterDiagram { m })
    }

    /// Builds a diagram from its rank and the labels of a linear chain
    /// `s0 - s1 - ... - s(n-1)`; all other pairs commute.
    pub fn linear(labels: &[u32]) -> Result<Self> {
        let n = labels.len() + 1;
        let mut m = vec![vec![2u32; n]; n];
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 1;
        }
        for (i, &l) in labels.iter().enumerate() {
            m[i][i + 1] = l;
            m[i + 1][i] = l;
        }
        CoxeterDiagram::new(m)
    }

    /// Named presets: `A<n>`, `B<n>`, `D<n>`, `F4`, `H3`, `H4`, `I2(<m>)`, and
    /// products joined with `x`, e.g. `A1xA1`.
    pub fn preset(name: &str) -> Result<Self> {
        let name = name.trim();
        if name.contains('x') {
            let mut parts = name.split('x');
            let first = CoxeterDiagram::preset(parts.next().unwrap_or(""))?;
            return parts.try_fold(first, |acc, p| Ok(acc.direct_sum(&CoxeterDiagram::preset(p)?)));
        }
        let unknown = || Error::UnknownPreset(name.to_string());
        if let Some(rest) = name.strip_prefix("I2(").and_then(|r| r.strip_suffix(')')) {
            let m: u32 = rest.trim().parse().map_err(|_| unknown())?;
            return CoxeterDiagram::linear(&[m]);
        }
        let (family, rank) = name.split_at(1);
        let rank: usize = rank.parse().map_err(|_| unknown())?;
        match (family, rank) {
            ("A", n) if n >= 1 => CoxeterDiagram::linear(&vec![3; n - 1]),
            ("B", n) | ("C", n) if n >= 2 => {
                let mut labels = vec![3; n - 1];
                labels[n - 2] = 4;
                CoxeterDiagram::linear(&labels)
            }
            ("D", n) if n >= 4 => {
                let mut m = CoxeterDiagram::linear(&vec![3; n - 2])?.m;
                // Branch node n-1 attaches to n-3.
                for row in m.iter_mut() {
                    row.push(2);
                }
                let mut last = vec![2; n];
                last[n - 1] = 1;
                last[n - 3] = 3;
                m[n - 3][n - 1] = 3;
                m.push(last);
                CoxeterDiagram::new(m)
            }
            ("F", 4) => CoxeterDiagram::linear(&[3, 4, 3]),
            ("H", 3) => CoxeterDiagram::linear(&[5, 3]),
            ("H", 4) => CoxeterDiagram::linear(&[5, 3, 3]),
            _ => Err(unknown()),
        }
    }

    pub fn rank(&self) -> usize {
        self.m.len()
    }

    pub fn m(&self, i: usize, j: usize) -> u32 {
        self.m[i][j]
    }

    pub fn matrix(&self) -> &[Vec<u32>] {
        &self.m
    }

    /// Block-diagonal sum: the generators of `other` commute with ours.
    pub fn direct_sum(&self, other: &CoxeterDiagram) -> CoxeterDiagram {
        let (a, b) = (self.rank(), other.rank());
        let mut m = vec![vec![2u32; a + b]; a + b];
        for i in 0..a + b {
            for j in 0..a + b {
                m[i][j] = match (i < a, j < a) {
                    (true, true) => self.m[i][j],
                    (false, false) => other.m[i - a][j - a],
                    _ => 2,
                };
            }
        }
        CoxeterDiagram { m }
    }

    pub fn is_simply_laced(&self) -> bool {
        self.m.iter().flatten().all(|&x| x <= 3)
    }

    /// True for the linear type A diagram `s1 - s2 - ... - sn`, where group
    /// elements may be written as one-line permutations of `1..=n+1`.
    pub fn is_linear_type_a(&self) -> bool {
        let n = self.rank();
        (0..n).all(|i| {
            (0..n).all(|j| {
                let expect = if i == j {
                    1
                } else if i.abs_diff(j) == 1 {
                    3
                } else {
                    2
                };
                self.m[i][j] == expect
            })
        })
    }

    /// Compact textual key, stable across runs.
    pub fn key(&self) -> String {
        let rows: Vec<String> = self
            .m
            .iter()
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        rows.join(";")
    }
}
