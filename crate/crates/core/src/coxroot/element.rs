use alloc::boxed::Box;
use alloc::format;
use alloc::vec;

use super::SystemId;
use crate::{Error, Result};

/// Signed permutation of positive-root indices: `w(alpha_i) = ±alpha_{pi(i)}`.
/// Entry `i` stores `pi(i) << 1 | negative`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignedPerm(Box<[u32]>);

impl SignedPerm {
    pub fn identity(n: usize) -> Self {
        SignedPerm((0..n as u32).map(|i| i << 1).collect())
    }

    /// From `(pi(i), negative)` pairs; fails unless `pi` is a bijection.
    pub fn from_images(images: &[(usize, bool)]) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &(j, _) in images {
            if j >= n || core::mem::replace(&mut seen[j], true) {
                return Err(Error::InvalidElement(format!("not a permutation: {images:?}")));
            }
        }
        Ok(SignedPerm(
            images.iter().map(|&(j, neg)| ((j as u32) << 1) | neg as u32).collect(),
        ))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    #[inline]
    pub fn image(&self, i: usize) -> (usize, bool) {
        let e = self.0[i];
        ((e >> 1) as usize, e & 1 == 1)
    }

    pub fn raw(&self) -> &[u32] {
        &self.0
    }

    /// Number of positive roots sent to negative roots.
    pub fn negatives(&self) -> usize {
        self.0.iter().filter(|e| *e & 1 == 1).count()
    }

    /// `(self ∘ other)(alpha_i) = self(other(alpha_i))`
    pub fn compose(&self, other: &SignedPerm) -> SignedPerm {
        SignedPerm(
            other
                .0
                .iter()
                .map(|&e| self.0[(e >> 1) as usize] ^ (e & 1))
                .collect(),
        )
    }

    pub fn inverse(&self) -> SignedPerm {
        let mut out = vec![0u32; self.0.len()];
        for (i, &e) in self.0.iter().enumerate() {
            out[(e >> 1) as usize] = ((i as u32) << 1) | (e & 1);
        }
        SignedPerm(out.into_boxed_slice())
    }
}

/// An element of a finite Coxeter group, stored as its action on the
/// positive roots. Ordering is by `(length, action)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElement {
    length: u32,
    action: SignedPerm,
    system: SystemId,
}

impl GroupElement {
    pub(crate) fn from_action(system: SystemId, action: SignedPerm) -> Self {
        GroupElement {
            length: action.negatives() as u32,
            action,
            system,
        }
    }

    pub fn length(&self) -> usize {
        self.length as usize
    }

    pub fn action(&self) -> &SignedPerm {
        &self.action
    }

    pub fn system(&self) -> SystemId {
        self.system
    }

    pub fn is_identity(&self) -> bool {
        self.length == 0
    }

    pub fn multiply(&self, other: &GroupElement) -> Result<GroupElement> {
        multiply(self, other)
    }

    pub fn inverse(&self) -> GroupElement {
        inverse(self)
    }
}

pub fn multiply(a: &GroupElement, b: &GroupElement) -> Result<GroupElement> {
    if a.system != b.system {
        return Err(Error::SystemMismatch);
    }
    Ok(GroupElement::from_action(a.system, a.action.compose(&b.action)))
}

pub fn inverse(w: &GroupElement) -> GroupElement {
    GroupElement {
        length: w.length,
        action: w.action.inverse(),
        system: w.system,
    }
}
