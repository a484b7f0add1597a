//! Achiral-form matching and the final verdict.
//!
//! A complete multipartite graph is achirally embeddable exactly when it
//! matches one of three forms (rotoreflection, inversion, reflection); when
//! none matches it is intrinsically chiral. [`classify`] tries the reflection
//! form first, then inversion, then rotoreflection.

mod certificate;
mod feasibility;
mod matchers;
mod witness;

pub use certificate::{validate_verdict, validate_witness};
pub use feasibility::{residual_feasible, split_residual, ResidualFailure, ResidualSplit};
pub use matchers::{match_theorem1, match_theorem2, match_theorem3};
pub use witness::{
    Exhaustion, QKind, Theorem1Witness, Theorem2Witness, Theorem3Witness, Verdict, Witness,
};

pub use crate::oracle::classify_bruteforce;

use crate::partition::PartitionSpec;

pub fn classify(spec: &PartitionSpec) -> Verdict {
    let mut log = Vec::new();
    if let Some(w) = matchers::match_theorem3_logged(spec, &mut log) {
        return Verdict::achiral(spec.clone(), Witness::Reflection(w));
    }
    if let Some(w) = matchers::match_theorem2_logged(spec, &mut log) {
        return Verdict::achiral(spec.clone(), Witness::Inversion(w));
    }
    if let Some(w) = matchers::match_theorem1_logged(spec, &mut log) {
        return Verdict::achiral(spec.clone(), Witness::Rotoreflection(w));
    }
    Verdict::chiral(spec.clone(), log)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(s: &[u32]) -> PartitionSpec {
        PartitionSpec::canonicalize(s).unwrap()
    }

    #[test]
    fn named_instances() {
        assert!(classify(&spec(&[3, 3, 1])).achiral);
        assert!(!classify(&spec(&[3, 3, 1, 1])).achiral);
        assert!(classify(&PartitionSpec::complete(6)).achiral);
        for k in [7, 11, 15] {
            assert!(!classify(&PartitionSpec::complete(k)).achiral, "K{k}");
        }
        assert!(classify(&spec(&[6, 6, 4])).achiral);
    }

    #[test]
    fn complete_graphs_up_to_six_are_achiral() {
        for k in 1..=6 {
            assert!(classify(&PartitionSpec::complete(k)).achiral, "K{k}");
        }
    }

    #[test]
    fn empty_is_achiral_by_reflection() {
        let v = classify(&PartitionSpec::empty());
        assert!(v.achiral);
        assert_eq!(v.witness.unwrap().theorem(), 3);
    }

    #[test]
    fn chiral_verdict_has_report() {
        let v = classify(&spec(&[3, 3, 1, 1]));
        assert!(v.witness.is_none());
        assert!(!v.exhaustion.is_empty());
        for t in 1..=3 {
            assert!(v.exhaustion.iter().any(|e| e.theorem == t));
        }
        assert!(validate_verdict(&v).is_ok());
    }

    #[test]
    fn witnesses_validate() {
        for s in [&[3u32, 3, 1][..], &[2, 2, 5], &[6, 6, 4], &[5, 4], &[1, 1, 1, 1, 1, 1]] {
            let v = classify(&spec(s));
            validate_verdict(&v).unwrap();
        }
    }
}
