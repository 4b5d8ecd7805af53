use alloc::collections::{BTreeMap, VecDeque};
use alloc::format;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::{CoxeterSystem, GroupElement, SignedPerm};
use crate::{Error, Result};

pub const DEFAULT_GROUP_CAP: usize = 200_000;
/// Groups up to this order get a full multiplication table.
pub const MUL_TABLE_LIMIT: usize = 1_500;

/// Index of an element in a [`CoxeterGroup`]. Ids are assigned in
/// `(length, action)` order, so comparing ids compares lengths first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ElemId(pub u32);

impl ElemId {
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// Every element of `W` reachable from `e` by simple reflections, sorted by
/// `(length, action)`.
pub fn all_elements(sys: &CoxeterSystem, cap: usize) -> Result<Vec<GroupElement>> {
    let mut seen: BTreeMap<SignedPerm, ()> = BTreeMap::new();
    let mut out = Vec::new();
    let mut queue = VecDeque::new();
    let e = sys.identity();
    seen.insert(e.action().clone(), ());
    queue.push_back(e);
    while let Some(w) = queue.pop_front() {
        for s in 0..sys.rank() {
            let ws = w.multiply(&sys.simple_reflection(s))?;
            if !seen.contains_key(ws.action()) {
                if seen.len() >= cap {
                    return Err(Error::GroupTooLarge { cap });
                }
                seen.insert(ws.action().clone(), ());
                queue.push_back(ws);
            }
        }
        out.push(w);
    }
    out.sort();
    Ok(out)
}

/// The unique element with no right ascents, reached by greedy ascent.
pub fn longest_element(sys: &CoxeterSystem) -> GroupElement {
    let mut w = sys.identity();
    'outer: loop {
        for s in 0..sys.rank() {
            let ws = w.multiply(&sys.simple_reflection(s)).expect("same system");
            if ws.length() > w.length() {
                w = ws;
                continue 'outer;
            }
        }
        return w;
    }
}

/// One reflection per positive root, in root order.
pub fn reflections(sys: &CoxeterSystem) -> Vec<GroupElement> {
    (0..sys.num_positive_roots()).map(|i| sys.reflection(i)).collect()
}

/// A finite Coxeter group with all elements enumerated and the common
/// multiplication tables precomputed.
#[derive(Debug)]
pub struct CoxeterGroup {
    system: Arc<CoxeterSystem>,
    elements: Vec<GroupElement>,
    index: BTreeMap<SignedPerm, ElemId>,
    right_simple: Vec<u32>,
    left_simple: Vec<u32>,
    inverse: Vec<u32>,
    mul: Option<Vec<u32>>,
    reflections: Vec<ElemId>,
    reflection_root: Vec<Option<u32>>,
    longest: ElemId,
}

impl CoxeterGroup {
    pub fn new(system: Arc<CoxeterSystem>) -> Result<Self> {
        Self::with_cap(system, DEFAULT_GROUP_CAP)
    }

    pub fn with_cap(system: Arc<CoxeterSystem>, cap: usize) -> Result<Self> {
        let elements = all_elements(&system, cap)?;
        Self::from_sorted(system, elements)
    }

    /// Rebuilds a group from a previously enumerated list of actions, e.g.
    /// a cached table. The list is checked for closure under the simple
    /// reflections.
    pub fn from_actions(system: Arc<CoxeterSystem>, actions: Vec<SignedPerm>) -> Result<Self> {
        let n = system.num_positive_roots();
        let mut elements = Vec::with_capacity(actions.len());
        for a in actions {
            if a.len() != n {
                return Err(Error::InvalidElement(format!("action of width {} (expected {n})", a.len())));
            }
            elements.push(GroupElement::from_action(system.id(), a));
        }
        elements.sort();
        elements.dedup();
        let g = Self::from_sorted(system, elements)?;
        if g.elements.first().map(|e| !e.is_identity()).unwrap_or(true) {
            return Err(Error::InvalidElement("identity missing".into()));
        }
        Ok(g)
    }

    fn from_sorted(system: Arc<CoxeterSystem>, elements: Vec<GroupElement>) -> Result<Self> {
        let n = system.rank();
        let order = elements.len();
        let index: BTreeMap<SignedPerm, ElemId> = elements
            .iter()
            .enumerate()
            .map(|(i, w)| (w.action().clone(), ElemId(i as u32)))
            .collect();
        let lookup = |w: &GroupElement| -> Result<u32> {
            index
                .get(w.action())
                .map(|id| id.0)
                .ok_or_else(|| Error::InvalidElement("element list not closed under multiplication".into()))
        };
        let mut right_simple = vec![0u32; order * n];
        let mut left_simple = vec![0u32; order * n];
        for (i, w) in elements.iter().enumerate() {
            for s in 0..n {
                let sr = system.simple_reflection(s);
                right_simple[i * n + s] = lookup(&w.multiply(&sr)?)?;
                left_simple[i * n + s] = lookup(&sr.multiply(w)?)?;
            }
        }
        let inverse = elements
            .iter()
            .map(|w| lookup(&w.inverse()))
            .collect::<Result<Vec<_>>>()?;
        let reflections = (0..system.num_positive_roots())
            .map(|i| lookup(&system.reflection(i)).map(ElemId))
            .collect::<Result<Vec<_>>>()?;
        let mut reflection_root = vec![None; order];
        for (i, t) in reflections.iter().enumerate() {
            reflection_root[t.index()] = Some(i as u32);
        }
        let longest = ElemId(order as u32 - 1);
        if elements[longest.index()].length() != system.num_positive_roots() {
            return Err(Error::InvalidElement("longest element has the wrong length".into()));
        }
        let mut g = CoxeterGroup {
            system,
            elements,
            index,
            right_simple,
            left_simple,
            inverse,
            mul: None,
            reflections,
            reflection_root,
            longest,
        };
        if order <= MUL_TABLE_LIMIT {
            g.mul = Some(g.build_mul_table());
        }
        Ok(g)
    }

    /// `mul[a][b]` by induction on `ℓ(b)`: `a·b = (a·b')·s` with `b = b'·s`.
    fn build_mul_table(&self) -> Vec<u32> {
        let order = self.order();
        let n = self.rank();
        let mut mul = vec![0u32; order * order];
        for a in 0..order {
            mul[a * order] = a as u32;
        }
        for b in 1..order {
            let bid = ElemId(b as u32);
            let s = (0..n)
                .find(|&s| self.is_right_descent(bid, s))
                .expect("non-identity has a descent");
            let shorter = self.right_simple[b * n + s] as usize;
            for a in 0..order {
                let ab_ = mul[a * order + shorter] as usize;
                mul[a * order + b] = self.right_simple[ab_ * n + s];
            }
        }
        mul
    }

    pub fn system(&self) -> &CoxeterSystem {
        &self.system
    }

    pub fn system_arc(&self) -> &Arc<CoxeterSystem> {
        &self.system
    }

    pub fn rank(&self) -> usize {
        self.system.rank()
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn ids(&self) -> impl DoubleEndedIterator<Item = ElemId> + ExactSizeIterator {
        (0..self.elements.len() as u32).map(ElemId)
    }

    pub fn element(&self, id: ElemId) -> &GroupElement {
        &self.elements[id.index()]
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn id_of(&self, w: &GroupElement) -> Option<ElemId> {
        if w.system() != self.system.id() {
            return None;
        }
        self.index.get(w.action()).copied()
    }

    pub fn identity(&self) -> ElemId {
        ElemId(0)
    }

    pub fn longest(&self) -> ElemId {
        self.longest
    }

    #[inline]
    pub fn length(&self, w: ElemId) -> usize {
        self.elements[w.index()].length()
    }

    pub fn simple(&self, s: usize) -> ElemId {
        ElemId(self.right_simple[s])
    }

    #[inline]
    pub fn right_simple(&self, w: ElemId, s: usize) -> ElemId {
        ElemId(self.right_simple[w.index() * self.rank() + s])
    }

    #[inline]
    pub fn left_simple(&self, w: ElemId, s: usize) -> ElemId {
        ElemId(self.left_simple[w.index() * self.rank() + s])
    }

    /// `ℓ(ws) < ℓ(w)`, i.e. `w(alpha_s) < 0`.
    #[inline]
    pub fn is_right_descent(&self, w: ElemId, s: usize) -> bool {
        self.elements[w.index()].action().image(s).1
    }

    /// `ℓ(sw) < ℓ(w)`, i.e. `w^{-1}(alpha_s) < 0`.
    #[inline]
    pub fn is_left_descent(&self, w: ElemId, s: usize) -> bool {
        self.elements[self.inverse[w.index()] as usize].action().image(s).1
    }

    #[inline]
    pub fn inv(&self, w: ElemId) -> ElemId {
        ElemId(self.inverse[w.index()])
    }

    #[inline]
    pub fn mul(&self, a: ElemId, b: ElemId) -> ElemId {
        match &self.mul {
            Some(t) => ElemId(t[a.index() * self.order() + b.index()]),
            None => {
                let ab = self.elements[a.index()]
                    .multiply(&self.elements[b.index()])
                    .expect("same system");
                self.index[ab.action()]
            }
        }
    }

    /// The reflection of positive root `i`.
    pub fn reflection(&self, i: usize) -> ElemId {
        self.reflections[i]
    }

    pub fn num_reflections(&self) -> usize {
        self.reflections.len()
    }

    /// Root index of `w` if `w` is a reflection.
    pub fn root_of_reflection(&self, w: ElemId) -> Option<usize> {
        self.reflection_root[w.index()].map(|r| r as usize)
    }

    pub fn from_word(&self, word: &[usize]) -> Result<ElemId> {
        let mut w = self.identity();
        for &s in word {
            if s >= self.rank() {
                return Err(Error::InvalidElement(format!("generator index {s} out of range")));
            }
            w = self.right_simple(w, s);
        }
        Ok(w)
    }

    /// Lexicographically smallest reduced word (0-based generator indices).
    pub fn reduced_word(&self, w: ElemId) -> Vec<usize> {
        let mut word = Vec::with_capacity(self.length(w));
        let mut cur = w;
        while self.length(cur) > 0 {
            let s = (0..self.rank())
                .find(|&s| self.is_left_descent(cur, s))
                .expect("non-identity has a left descent");
            word.push(s);
            cur = self.left_simple(cur, s);
        }
        word
    }

    /// `w(x)` in simple-root coordinates.
    pub fn apply(&self, w: ElemId, x: &[f64]) -> Vec<f64> {
        self.system.apply(&self.elements[w.index()], x)
    }

    /// Identifies a type A element given in one-line notation
    /// (a permutation of `1..=n+1`), with `s_i` the transposition `(i, i+1)`
    /// and products composed as functions.
    pub fn from_one_line(&self, perm: &[usize]) -> Result<ElemId> {
        let n = self.rank();
        if !self.system.diagram().is_linear_type_a() || perm.len() != n + 1 {
            return Err(Error::InvalidElement(format!("{perm:?} is not a one-line permutation here")));
        }
        let mut sorted = perm.to_vec();
        sorted.sort_unstable();
        if sorted != (1..=n + 1).collect::<Vec<_>>() {
            return Err(Error::InvalidElement(format!("{perm:?} is not a permutation of 1..={}", n + 1)));
        }
        // Bubble sort: w = w' s_i whenever w(i) > w(i+1).
        let mut p = perm.to_vec();
        let mut word_rev = Vec::new();
        while let Some(i) = (0..n).find(|&i| p[i] > p[i + 1]) {
            p.swap(i, i + 1);
            word_rev.push(i);
        }
        word_rev.reverse();
        self.from_word(&word_rev)
    }

    /// Inverse of [`from_one_line`](Self::from_one_line).
    pub fn one_line(&self, w: ElemId) -> Option<Vec<usize>> {
        if !self.system.diagram().is_linear_type_a() {
            return None;
        }
        let n = self.rank();
        let mut p: Vec<usize> = (1..=n + 1).collect();
        // w = s_{a1} ... s_{ak}; w(j) = s_{a1}(...s_{ak}(j)).
        let word = self.reduced_word(w);
        for x in p.iter_mut() {
            for &s in word.iter().rev() {
                if *x == s + 1 {
                    *x = s + 2;
                } else if *x == s + 2 {
                    *x = s + 1;
                }
            }
        }
        Some(p)
    }
}
