//! Bruhat interval polytopes and Coxeter matroids.
//!
//! A base point `p` with stabilizer `W_J` sends each coset `vW_J` to `v(p)`;
//! the hull of the images of a coset family `M` is `Δ_M(p)`. This module
//! builds those polytopes for Bruhat and parabolic intervals, checks both
//! characterizations of Coxeter matroids (the maximality property under all
//! twisted orders, and root-parallel edges), relates faces to subintervals,
//! and analyses the cone conditions on atom and coatom labels.

mod base;
mod diamond;
mod faces;
mod lemmas;
mod lifting;
mod matroid;
mod polytope;
mod spans;
mod stability;

pub use base::{base_point, degenerate_base_point, BasePoint};
pub use diamond::{diamond, rank2_diamond_checks, Diamond, DiamondReport};
pub use faces::{
    chain_in_face_check, face_to_interval, face_to_parabolic_interval, face_to_projected_interval, is_face, ChainInFaceReport,
    FaceCertificate, FaceVerdict,
};
pub use lemmas::{
    diamond_functional_check, face_extension_lemma_check, DiamondFunctionalReport, ExtensionReport,
};
pub use lifting::{lifting_analysis, lifting_sets, Convention, LiftingReport};
pub use matroid::{
    certify_matroid, check_edges_root_parallel, check_maximality, parallel_root, EdgeReport,
    MatroidReport, MaximalityReport, MaximumOutcome, MAXIMALITY_GROUP_LIMIT,
};
pub use polytope::{coset_polytope, interval_polytope, orbit_points, parabolic_polytope};
pub use spans::{interval_roots, span_invariants, SpanReport};
pub use stability::{face_lattice_stability, labeled_faces, LabeledFaces, StabilityReport};
