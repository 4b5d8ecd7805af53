//! Bruhat order, covers, intervals, chains, the twisted `w`-Bruhat orders,
//! and parabolic cosets.
//!
//! Covers use left multiplication: `x ⋖ y` when `y = t·x` for a reflection
//! `t` and `ℓ(y) = ℓ(x) + 1`. Cover lists and the full comparison table are
//! built once per group.

use alloc::collections::VecDeque;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use crate::coxroot::{CoxeterGroup, ElemId, GeneratorSet, GroupElement};
use crate::{Error, Result};

pub const DEFAULT_CHAIN_GUARD: usize = 6;

/// Dense square bit matrix.
#[derive(Debug, Clone)]
struct BitMatrix {
    words: usize,
    bits: Vec<u64>,
}

impl BitMatrix {
    fn new(n: usize) -> Self {
        let words = n.div_ceil(64);
        BitMatrix {
            words,
            bits: vec![0; words * n],
        }
    }

    #[inline]
    fn get(&self, r: usize, c: usize) -> bool {
        self.bits[r * self.words + c / 64] >> (c % 64) & 1 == 1
    }

    #[inline]
    fn set(&mut self, r: usize, c: usize) {
        self.bits[r * self.words + c / 64] |= 1 << (c % 64);
    }

    fn or_row_into(&mut self, dst: usize, src: usize) {
        let w = self.words;
        for k in 0..w {
            let v = self.bits[src * w + k];
            self.bits[dst * w + k] |= v;
        }
    }

    fn row(&self, r: usize) -> &[u64] {
        &self.bits[r * self.words..(r + 1) * self.words]
    }
}

/// Closed Bruhat interval with its internal cover edges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BruhatInterval {
    pub bottom: ElemId,
    pub top: ElemId,
    /// Sorted by `(length, action)`, i.e. by id.
    pub elements: Vec<ElemId>,
    /// `(x, y, root)` with `y = t_root · x`.
    pub cover_edges: Vec<(ElemId, ElemId, usize)>,
}

impl BruhatInterval {
    pub fn contains(&self, z: ElemId) -> bool {
        self.elements.binary_search(&z).is_ok()
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }
}

/// A left coset `w W_J`, identified by its minimal representative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Coset {
    pub j: GeneratorSet,
    pub min_rep: ElemId,
    pub member_count: usize,
}

/// Bruhat order on an enumerated group.
#[derive(Debug)]
pub struct Bruhat {
    group: Arc<CoxeterGroup>,
    up: Vec<Vec<(ElemId, usize)>>,
    down: Vec<Vec<(ElemId, usize)>>,
    below: BitMatrix,
    above: BitMatrix,
    chain_guard: usize,
}

impl Bruhat {
    pub fn new(group: Arc<CoxeterGroup>) -> Self {
        let order = group.order();
        let mut up = vec![Vec::new(); order];
        let mut down = vec![Vec::new(); order];
        for x in group.ids() {
            let lx = group.length(x);
            for i in 0..group.num_reflections() {
                let y = group.mul(group.reflection(i), x);
                if group.length(y) == lx + 1 {
                    up[x.index()].push((y, i));
                    down[y.index()].push((x, i));
                }
            }
        }
        // Ids are sorted by length, so every lower cover is processed first.
        let mut below = BitMatrix::new(order);
        for v in 0..order {
            below.set(v, v);
            for &(u, _) in &down[v] {
                below.or_row_into(v, u.index());
            }
        }
        let mut above = BitMatrix::new(order);
        for v in 0..order {
            for u in 0..order {
                if below.get(v, u) {
                    above.set(u, v);
                }
            }
        }
        Bruhat {
            group,
            up,
            down,
            below,
            above,
            chain_guard: DEFAULT_CHAIN_GUARD,
        }
    }

    pub fn with_chain_guard(mut self, guard: usize) -> Self {
        self.chain_guard = guard;
        self
    }

    pub fn group(&self) -> &CoxeterGroup {
        &self.group
    }

    pub fn group_arc(&self) -> &Arc<CoxeterGroup> {
        &self.group
    }

    /// `u ≤ v`.
    #[inline]
    pub fn leq(&self, u: ElemId, v: ElemId) -> bool {
        self.below.get(v.index(), u.index())
    }

    /// `u ≤ v` on group elements; checks that both live in this group.
    pub fn bruhat_leq(&self, u: &GroupElement, v: &GroupElement) -> Result<bool> {
        if u.system() != v.system() {
            return Err(Error::SystemMismatch);
        }
        let (a, b) = (
            self.group.id_of(u).ok_or(Error::SystemMismatch)?,
            self.group.id_of(v).ok_or(Error::SystemMismatch)?,
        );
        Ok(self.leq(a, b))
    }

    /// Upper covers `(y, root)` of `x`.
    pub fn covers(&self, x: ElemId) -> &[(ElemId, usize)] {
        &self.up[x.index()]
    }

    /// Lower covers `(y, root)` of `x`, with `x = t_root · y`.
    pub fn lower_covers(&self, x: ElemId) -> &[(ElemId, usize)] {
        &self.down[x.index()]
    }

    /// Root labelling the cover `x ⋖ y`, if it is one.
    pub fn cover_root(&self, x: ElemId, y: ElemId) -> Option<usize> {
        self.up[x.index()].iter().find(|(z, _)| *z == y).map(|(_, r)| *r)
    }

    pub fn is_cover(&self, x: ElemId, y: ElemId) -> bool {
        self.cover_root(x, y).is_some()
    }

    /// Elements of `[u, v]` in id order; empty when `u ≰ v`.
    pub fn interval_elements(&self, u: ElemId, v: ElemId) -> Vec<ElemId> {
        let a = self.above.row(u.index());
        let b = self.below.row(v.index());
        let mut out = Vec::new();
        for (k, (x, y)) in a.iter().zip(b).enumerate() {
            let mut m = x & y;
            while m != 0 {
                let bit = m.trailing_zeros() as usize;
                out.push(ElemId((k * 64 + bit) as u32));
                m &= m - 1;
            }
        }
        out
    }

    pub fn interval(&self, u: ElemId, v: ElemId) -> Result<BruhatInterval> {
        if !self.leq(u, v) {
            return Err(Error::NotComparable);
        }
        let elements = self.interval_elements(u, v);
        let mut cover_edges = Vec::new();
        for &x in &elements {
            for &(y, t) in &self.up[x.index()] {
                if self.leq(y, v) {
                    cover_edges.push((x, y, t));
                }
            }
        }
        Ok(BruhatInterval {
            bottom: u,
            top: v,
            elements,
            cover_edges,
        })
    }

    /// All pairs `u ≤ v` (including `u = v` when `include_equal`).
    pub fn comparable_pairs(&self, include_equal: bool) -> Vec<(ElemId, ElemId)> {
        let mut out = Vec::new();
        for u in self.group.ids() {
            for v in self.interval_elements(u, self.group.longest()) {
                if include_equal || u != v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// `u ≤^w v  ⟺  w⁻¹u ≤ w⁻¹v`.
    pub fn w_leq(&self, u: ElemId, v: ElemId, w: ElemId) -> bool {
        let wi = self.group.inv(w);
        self.leq(self.group.mul(wi, u), self.group.mul(wi, v))
    }

    // ---- chains ----

    /// All saturated chains from `u` to `v`, bottom first.
    pub fn maximal_chains(&self, u: ElemId, v: ElemId) -> Result<Vec<Vec<ElemId>>> {
        if !self.leq(u, v) {
            return Err(Error::NotComparable);
        }
        let len = self.group.length(v) - self.group.length(u);
        if len > self.chain_guard {
            return Err(Error::IntervalTooLong {
                len,
                max: self.chain_guard,
            });
        }
        let mut out = Vec::new();
        let mut stack = vec![u];
        self.chains_dfs(v, &mut stack, &mut |c| out.push(c.to_vec()));
        Ok(out)
    }

    fn chains_dfs(&self, v: ElemId, stack: &mut Vec<ElemId>, emit: &mut dyn FnMut(&[ElemId])) {
        let cur = *stack.last().expect("non-empty");
        if cur == v {
            emit(stack);
            return;
        }
        for &(y, _) in &self.up[cur.index()] {
            if self.leq(y, v) {
                stack.push(y);
                self.chains_dfs(v, stack, emit);
                stack.pop();
            }
        }
    }

    /// One saturated chain from `u` to `v` (the first in cover-list order).
    pub fn some_chain(&self, u: ElemId, v: ElemId) -> Result<Vec<ElemId>> {
        if !self.leq(u, v) {
            return Err(Error::NotComparable);
        }
        let mut chain = vec![u];
        let mut cur = u;
        while cur != v {
            let next = self.up[cur.index()]
                .iter()
                .find(|(y, _)| self.leq(*y, v))
                .map(|(y, _)| *y)
                .ok_or(Error::NotComparable)?;
            chain.push(next);
            cur = next;
        }
        Ok(chain)
    }

    /// Whether the graph on maximal chains, joining chains that differ in
    /// exactly one element, is connected.
    pub fn chain_flip_graph_connected(&self, u: ElemId, v: ElemId) -> Result<bool> {
        let chains = self.maximal_chains(u, v)?;
        Ok(flip_graph_connected(&chains))
    }

    // ---- parabolic ----

    /// Elements of `W_J`, in id order.
    pub fn parabolic_subgroup(&self, j: GeneratorSet) -> Vec<ElemId> {
        let g = &self.group;
        let mut seen = vec![false; g.order()];
        let mut queue = VecDeque::from([g.identity()]);
        seen[0] = true;
        let mut out = Vec::new();
        while let Some(w) = queue.pop_front() {
            out.push(w);
            for s in j.iter().filter(|&s| s < g.rank()) {
                let ws = g.right_simple(w, s);
                if !core::mem::replace(&mut seen[ws.index()], true) {
                    queue.push_back(ws);
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Minimal representative of `w W_J`.
    pub fn min_rep(&self, w: ElemId, j: GeneratorSet) -> ElemId {
        let g = &self.group;
        let mut cur = w;
        while let Some(s) = j.iter().take_while(|&s| s < g.rank()).find(|&s| g.is_right_descent(cur, s)) {
            cur = g.right_simple(cur, s);
        }
        cur
    }

    /// `w = w^J · w_J` with `w^J ∈ W^J`, `w_J ∈ W_J`.
    pub fn factorize_parabolic(&self, w: ElemId, j: GeneratorSet) -> (ElemId, ElemId) {
        let head = self.min_rep(w, j);
        let tail = self.group.mul(self.group.inv(head), w);
        (head, tail)
    }

    pub fn is_min_rep(&self, w: ElemId, j: GeneratorSet) -> bool {
        j.iter()
            .take_while(|&s| s < self.group.rank())
            .all(|s| !self.group.is_right_descent(w, s))
    }

    pub fn coset_of(&self, w: ElemId, j: GeneratorSet) -> Coset {
        Coset {
            j,
            min_rep: self.min_rep(w, j),
            member_count: self.parabolic_subgroup(j).len(),
        }
    }

    /// All cosets `W/W_J`, ordered by minimal representative.
    pub fn cosets(&self, j: GeneratorSet) -> Vec<Coset> {
        let count = self.parabolic_subgroup(j).len();
        self.group
            .ids()
            .filter(|&w| self.is_min_rep(w, j))
            .map(|w| Coset {
                j,
                min_rep: w,
                member_count: count,
            })
            .collect()
    }

    pub fn coset_members(&self, a: &Coset) -> Vec<ElemId> {
        let mut out: Vec<ElemId> = self
            .parabolic_subgroup(a.j)
            .into_iter()
            .map(|x| self.group.mul(a.min_rep, x))
            .collect();
        out.sort_unstable();
        out
    }

    /// `(min^w A, max^w A)` by brute force over the coset members.
    pub fn coset_min_max_w(&self, a: &Coset, w: ElemId) -> Result<(ElemId, ElemId)> {
        let members = self.coset_members(a);
        self.extremes_w(&members, w)
    }

    fn extremes_w(&self, members: &[ElemId], w: ElemId) -> Result<(ElemId, ElemId)> {
        let wi = self.group.inv(w);
        let twisted: Vec<ElemId> = members.iter().map(|&u| self.group.mul(wi, u)).collect();
        let min = twisted
            .iter()
            .position(|&m| twisted.iter().all(|&x| self.leq(m, x)))
            .ok_or(Error::NoExtremum)?;
        let max = twisted
            .iter()
            .position(|&m| twisted.iter().all(|&x| self.leq(x, m)))
            .ok_or(Error::NoExtremum)?;
        Ok((members[min], members[max]))
    }

    /// `min^w A`, computed as `w · min(w⁻¹A)`.
    pub fn coset_min_w(&self, a: &Coset, w: ElemId) -> ElemId {
        let g = &self.group;
        let shifted = self.min_rep(g.mul(g.inv(w), a.min_rep), a.j);
        g.mul(w, shifted)
    }

    /// `A ≤^w B` through the minimal elements: `min^w A ≤^w min^w B`.
    pub fn coset_w_leq(&self, a: &Coset, b: &Coset, w: ElemId) -> Result<bool> {
        let (ma, _) = self.coset_min_max_w(a, w)?;
        let (mb, _) = self.coset_min_max_w(b, w)?;
        Ok(self.w_leq(ma, mb, w))
    }

    /// Cosets `C` with `A ≤ C ≤ B`.
    pub fn parabolic_interval(&self, a: &Coset, b: &Coset) -> Result<Vec<Coset>> {
        if a.j != b.j {
            return Err(Error::ParabolicMismatch);
        }
        if !self.leq(a.min_rep, b.min_rep) {
            return Err(Error::NotComparable);
        }
        Ok(self
            .interval_elements(a.min_rep, b.min_rep)
            .into_iter()
            .filter(|&w| self.is_min_rep(w, a.j))
            .map(|w| Coset {
                j: a.j,
                min_rep: w,
                member_count: a.member_count,
            })
            .collect())
    }
}

/// Connectivity of the flip graph on a set of equal-length chains.
pub fn flip_graph_connected(chains: &[Vec<ElemId>]) -> bool {
    if chains.len() <= 1 {
        return true;
    }
    let differ_by_one = |a: &[ElemId], b: &[ElemId]| a.iter().zip(b).filter(|(x, y)| x != y).count() == 1;
    let mut seen = vec![false; chains.len()];
    let mut queue = VecDeque::from([0usize]);
    seen[0] = true;
    let mut count = 1;
    while let Some(i) = queue.pop_front() {
        for j in 0..chains.len() {
            if !seen[j] && differ_by_one(&chains[i], &chains[j]) {
                seen[j] = true;
                count += 1;
                queue.push_back(j);
            }
        }
    }
    count == chains.len()
}
