//! Coxeter diagrams, root systems and group elements.
//!
//! A [`CoxeterSystem`] realizes the standard geometric representation and
//! enumerates the positive roots by orbit closure of the simple roots.
//! [`GroupElement`]s are signed permutations of the positive roots; a
//! [`CoxeterGroup`] enumerates all of them and caches multiplication tables
//! indexed by [`ElemId`].

mod diagram;
mod element;
mod group;
mod system;

pub use diagram::CoxeterDiagram;
pub use element::{inverse, multiply, GroupElement, SignedPerm};
pub use group::{
    all_elements, longest_element, reflections, CoxeterGroup, ElemId, DEFAULT_GROUP_CAP,
    MUL_TABLE_LIMIT,
};
pub use system::{build_system, CoxeterSystem, RootTriple, SystemId, DEFAULT_ROOT_CAP};

/// Set of generator indices, as a bitmask (rank at most 64).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GeneratorSet(pub u64);

impl GeneratorSet {
    pub const EMPTY: GeneratorSet = GeneratorSet(0);

    pub fn all(rank: usize) -> Self {
        GeneratorSet(if rank >= 64 { u64::MAX } else { (1u64 << rank) - 1 })
    }

    pub fn from_indices(indices: &[usize]) -> Self {
        GeneratorSet(indices.iter().fold(0, |acc, &i| acc | (1u64 << i)))
    }

    #[inline]
    pub fn contains(self, s: usize) -> bool {
        self.0 >> s & 1 == 1
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..64).filter(move |&s| self.contains(s))
    }

    pub fn is_subset_of(self, other: GeneratorSet) -> bool {
        self.0 & !other.0 == 0
    }
}
