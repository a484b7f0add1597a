//! Symbolic achiral embeddings.
//!
//! A plan places each vertex at a [`SymbolicPoint`] so that a finite group of
//! orientation-reversing symmetries permutes the vertices, then
//! [`check_lemma1`] verifies that the edges can be added invariantly.

mod check;
mod mutation;
mod plan;
mod point;

pub use check::{check_lemma1, CheckReport, HypothesisCheck, PairViolation};
pub use mutation::Mutation;
pub use plan::{
    build_plan, induced_permutation, subdivide_for_interchanges, witness_spec, AuxiliaryVertex, EmbeddingPlan,
};
pub use point::{apply_group, in_vocabulary, Angle, FixedSet, ScenarioKind, SymbolicPoint, SymmetryScenario};
