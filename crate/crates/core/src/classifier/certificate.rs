//! Stand-alone witness checker.
//!
//! Rebuilds the size multiset from the witness roles and re-checks every
//! role constraint directly. Deliberately does not call into the matchers or
//! the residual splitter.

use super::witness::{QKind, Theorem1Witness, Theorem2Witness, Theorem3Witness, Verdict, Witness};
use crate::partition::PartitionSpec;
use crate::planarity::{is_outerplanar_cm, is_planar_cm};

fn sorted_desc(mut v: Vec<u32>) -> Vec<u32> {
    v.sort_unstable_by(|a, b| b.cmp(a));
    v
}

fn reassembly_check(spec: &PartitionSpec, pieces: Vec<u32>) -> Result<(), String> {
    let got = sorted_desc(pieces);
    if got.as_slice() == spec.sizes() {
        Ok(())
    } else {
        Err(format!("reassembly gives {got:?}, expected {:?}", spec.sizes()))
    }
}

fn check_t1(spec: &PartitionSpec, w: &Theorem1Witness) -> Result<(), String> {
    let mut pieces = Vec::new();
    for &s in w.g1.sizes() {
        for _ in 0..4 {
            pieces.push(s);
        }
    }
    for &s in w.g2.sizes() {
        if s % 2 != 0 {
            return Err(format!("G2 part of odd size {s}"));
        }
        pieces.push(s);
        pieces.push(s);
    }
    for &s in w.g3.sizes() {
        if s % 4 != 0 {
            return Err(format!("G3 part of size {s} not divisible by 4"));
        }
        pieces.push(s);
    }
    if w.qs.iter().any(|&q| q == 0) {
        return Err("zero q-part listed".into());
    }
    pieces.extend_from_slice(&w.qs);
    reassembly_check(spec, pieces)?;

    let q = &w.qs;
    let ok = match w.case {
        1 => q.len() <= 1,
        2 => q.len() == 2 && q[0] == q[1] && q[0] % 2 == 1,
        3 => {
            q.len() == 3 && q[0] == q[1] && q[0] % 2 == 1 && q[2] % 4 == 1 && w.g1.is_empty()
        }
        4 => q.len() == 2 && q[0] % 4 == 2 && q[1] % 4 == 1,
        5 => q.len() == 2 && q[0] % 4 == 2 && q[1] % 4 == 2 && w.g1.is_empty(),
        other => return Err(format!("unknown case {other}")),
    };
    if ok {
        Ok(())
    } else {
        Err(format!("q-parts {q:?} do not satisfy case {}", w.case))
    }
}

fn check_t2(spec: &PartitionSpec, w: &Theorem2Witness) -> Result<(), String> {
    if let Some(s) = w.g.sizes().iter().find(|&&s| s % 2 != 0) {
        return Err(format!("G part of odd size {s}"));
    }
    let mut pieces = w.g.sizes().to_vec();
    pieces.extend_from_slice(&w.qs);
    reassembly_check(spec, pieces)?;
    let q = &w.qs;
    let ok = match w.case {
        1 => q.is_empty(),
        2 => q.len() == 1 && q[0] % 2 == 1,
        3 => (q.len() == 2 || q.len() == 3) && q[0] == 1 && q[1] == 1 && q.iter().all(|x| x % 2 == 1),
        4 => q.as_slice() == [1, 1, 1, 1],
        other => return Err(format!("unknown case {other}")),
    };
    if ok {
        Ok(())
    } else {
        Err(format!("q-parts {q:?} do not satisfy case {}", w.case))
    }
}

fn check_t3(spec: &PartitionSpec, w: &Theorem3Witness) -> Result<(), String> {
    let mut pieces = w.gp.sizes().to_vec();
    pieces.extend_from_slice(&w.q_sizes);
    reassembly_check(spec, pieces)?;
    let q = &w.q_sizes;
    let shape_ok = match w.q_kind {
        QKind::EvenSet => q.is_empty() || (q.len() == 1 && q[0] % 2 == 0),
        QKind::OddSet => q.len() == 1 && q[0] % 2 == 1,
        QKind::K11 => q.as_slice() == [1, 1],
        QKind::K22 => q.as_slice() == [2, 2],
    };
    if !shape_ok {
        return Err(format!("Q sizes {q:?} do not match kind {}", w.q_kind));
    }
    let graph_ok = match w.q_kind {
        QKind::OddSet => is_outerplanar_cm(&w.gp),
        _ => is_planar_cm(&w.gp),
    };
    if graph_ok {
        Ok(())
    } else {
        Err(format!("G_P = {} fails the planarity requirement for {}", w.gp, w.q_kind))
    }
}

/// Checks that `witness` reassembles to `spec` and satisfies its case.
pub fn validate_witness(spec: &PartitionSpec, witness: &Witness) -> Result<(), String> {
    match witness {
        Witness::Rotoreflection(w) => check_t1(spec, w),
        Witness::Inversion(w) => check_t2(spec, w),
        Witness::Reflection(w) => check_t3(spec, w),
    }
}

/// `achiral ⟺ witness present`, and the witness (if any) validates.
pub fn validate_verdict(verdict: &Verdict) -> Result<(), String> {
    match (&verdict.witness, verdict.achiral) {
        (Some(w), true) => validate_witness(&verdict.spec, w),
        (None, false) => Ok(()),
        (Some(_), false) => Err("chiral verdict carries a witness".into()),
        (None, true) => Err("achiral verdict without witness".into()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(s: &[u32]) -> PartitionSpec {
        PartitionSpec::canonicalize(s).unwrap()
    }

    #[test]
    fn rejects_bad_reassembly() {
        let w = Witness::Inversion(Theorem2Witness {
            g: spec(&[2, 2]),
            qs: vec![5],
            case: 2,
        });
        assert!(validate_witness(&spec(&[2, 2, 5]), &w).is_ok());
        assert!(validate_witness(&spec(&[2, 2, 3]), &w).is_err());
    }

    #[test]
    fn rejects_wrong_case() {
        let w = Witness::Rotoreflection(Theorem1Witness {
            g1: spec(&[1]),
            g2: PartitionSpec::empty(),
            g3: PartitionSpec::empty(),
            qs: vec![3, 3, 1],
            case: 3,
        });
        // reassembles, but case 3 needs G1 empty
        assert!(validate_witness(&spec(&[3, 3, 1, 1, 1, 1, 1]), &w).is_err());
    }

    #[test]
    fn rejects_nonplanar_gp() {
        let w = Witness::Reflection(Theorem3Witness {
            gp: spec(&[3, 3]),
            q_kind: QKind::EvenSet,
            q_sizes: vec![],
        });
        assert!(validate_witness(&spec(&[3, 3]), &w).is_err());
    }
}
