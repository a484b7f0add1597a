//! Matchers for the three achiral forms.
//!
//! Each matcher walks its cases in order and, within a case, the q-part
//! choices in ascending size order. Choices range over distinct sizes with
//! their multiplicities, never over individual parts.

use std::collections::BTreeMap;

use super::feasibility::split_residual;
use super::witness::{Exhaustion, QKind, Theorem1Witness, Theorem2Witness, Theorem3Witness};
use crate::partition::PartitionSpec;
use crate::planarity::{is_outerplanar_cm, is_planar_cm};

/// Removes `qs` from the multiplicity map, or `None` if not available.
fn without(counts: &BTreeMap<u32, u32>, qs: &[u32]) -> Option<BTreeMap<u32, u32>> {
    let mut rest = counts.clone();
    for q in qs {
        let c = rest.get_mut(q)?;
        if *c == 0 {
            return None;
        }
        *c -= 1;
        if *c == 0 {
            rest.remove(q);
        }
    }
    Some(rest)
}

fn count(counts: &BTreeMap<u32, u32>, s: u32) -> u32 {
    counts.get(&s).copied().unwrap_or(0)
}

fn sizes_where(counts: &BTreeMap<u32, u32>, pred: impl Fn(u32) -> bool) -> Vec<u32> {
    counts.keys().copied().filter(|&s| pred(s)).collect()
}

/// Candidate q-lists for rotoreflection case `case`, in preference order.
fn theorem1_choices(counts: &BTreeMap<u32, u32>, case: u8) -> Vec<Vec<u32>> {
    let odd = sizes_where(counts, |s| s % 2 == 1);
    let one_mod4 = sizes_where(counts, |s| s % 4 == 1);
    let two_mod4 = sizes_where(counts, |s| s % 4 == 2);
    let mut out = Vec::new();
    match case {
        1 => {
            out.push(vec![]);
            out.extend(counts.keys().map(|&s| vec![s]));
        }
        2 => {
            for &w in &odd {
                if count(counts, w) >= 2 {
                    out.push(vec![w, w]);
                }
            }
        }
        3 => {
            for &w in &odd {
                for &x in &one_mod4 {
                    let need = if x == w { 3 } else { 2 };
                    if count(counts, w) >= need && count(counts, x) >= 1 {
                        out.push(vec![w, w, x]);
                    }
                }
            }
        }
        4 => {
            for &x in &two_mod4 {
                for &y in &one_mod4 {
                    out.push(vec![x, y]);
                }
            }
        }
        5 => {
            for (i, &x) in two_mod4.iter().enumerate() {
                for &y in &two_mod4[i..] {
                    if x != y || count(counts, x) >= 2 {
                        out.push(vec![x, y]);
                    }
                }
            }
        }
        _ => {}
    }
    out
}

fn theorem1_search(spec: &PartitionSpec, log: &mut Vec<Exhaustion>) -> Option<Theorem1Witness> {
    let counts = spec.size_multiplicity();
    for case in 1..=5u8 {
        let allow_g1 = !matches!(case, 3 | 5);
        let choices = theorem1_choices(&counts, case);
        if choices.is_empty() {
            log.push(Exhaustion {
                theorem: 1,
                case,
                q_choice: None,
                reason: "no parts with the residues this case requires".into(),
                near_miss: false,
            });
            continue;
        }
        for qs in choices {
            let rest = without(&counts, &qs).expect("choice drawn from available parts");
            match split_residual(&rest, allow_g1) {
                Ok(split) => {
                    return Some(Theorem1Witness {
                        g1: split.g1,
                        g2: split.g2,
                        g3: split.g3,
                        qs,
                        case,
                    });
                }
                Err(failure) => {
                    let near_miss = !allow_g1 && split_residual(&rest, true).is_ok();
                    let reason = if near_miss {
                        format!("{failure}; feasible only with nonempty G1, which this case forbids")
                    } else {
                        failure.to_string()
                    };
                    log.push(Exhaustion {
                        theorem: 1,
                        case,
                        q_choice: Some(qs),
                        reason,
                        near_miss,
                    });
                }
            }
        }
    }
    None
}

fn theorem2_choices(counts: &BTreeMap<u32, u32>, case: u8) -> Vec<Vec<u32>> {
    let odd = sizes_where(counts, |s| s % 2 == 1);
    let ones = count(counts, 1);
    let mut out = Vec::new();
    match case {
        1 => out.push(vec![]),
        2 => out.extend(odd.iter().map(|&w| vec![w])),
        3 => {
            if ones >= 2 {
                out.push(vec![1, 1]);
                for &w in &odd {
                    if w != 1 || ones >= 3 {
                        out.push(vec![1, 1, w]);
                    }
                }
            }
        }
        4 => {
            if ones >= 4 {
                out.push(vec![1, 1, 1, 1]);
            }
        }
        _ => {}
    }
    out
}

fn theorem2_search(spec: &PartitionSpec, log: &mut Vec<Exhaustion>) -> Option<Theorem2Witness> {
    let counts = spec.size_multiplicity();
    for case in 1..=4u8 {
        let choices = theorem2_choices(&counts, case);
        if choices.is_empty() {
            log.push(Exhaustion {
                theorem: 2,
                case,
                q_choice: None,
                reason: "not enough odd or size-1 parts for this case".into(),
                near_miss: false,
            });
            continue;
        }
        for qs in choices {
            let rest = without(&counts, &qs).expect("choice drawn from available parts");
            match rest.iter().find(|(&s, _)| s % 2 == 1) {
                None => {
                    return Some(Theorem2Witness {
                        g: PartitionSpec::from_multiplicity(&rest),
                        qs,
                        case,
                    });
                }
                Some((&s, &m)) => log.push(Exhaustion {
                    theorem: 2,
                    case,
                    q_choice: Some(qs),
                    reason: format!("residual keeps odd size {s} (x{m})"),
                    near_miss: false,
                }),
            }
        }
    }
    None
}

fn theorem3_search(spec: &PartitionSpec, log: &mut Vec<Exhaustion>) -> Option<Theorem3Witness> {
    let counts = spec.size_multiplicity();
    let mut attempts: Vec<(QKind, Vec<u32>)> = vec![(QKind::EvenSet, vec![])];
    attempts.extend(
        sizes_where(&counts, |s| s % 2 == 0)
            .into_iter()
            .map(|s| (QKind::EvenSet, vec![s])),
    );
    if count(&counts, 1) >= 2 {
        attempts.push((QKind::K11, vec![1, 1]));
    }
    if count(&counts, 2) >= 2 {
        attempts.push((QKind::K22, vec![2, 2]));
    }
    attempts.extend(
        sizes_where(&counts, |s| s % 2 == 1)
            .into_iter()
            .map(|s| (QKind::OddSet, vec![s])),
    );
    for (q_kind, q_sizes) in attempts {
        let gp = spec
            .remove_parts(&q_sizes)
            .expect("choice drawn from available parts");
        let (ok, needs) = match q_kind {
            QKind::OddSet => (is_outerplanar_cm(&gp), "outerplanar"),
            _ => (is_planar_cm(&gp), "planar"),
        };
        if ok {
            return Some(Theorem3Witness {
                gp,
                q_kind,
                q_sizes,
            });
        }
        let case = if q_kind == QKind::OddSet { 2 } else { 1 };
        log.push(Exhaustion {
            theorem: 3,
            case,
            q_choice: Some(q_sizes),
            reason: format!("Q as {q_kind} leaves G_P = {gp}, which is not {needs}"),
            near_miss: false,
        });
    }
    None
}

pub fn match_theorem1(spec: &PartitionSpec) -> Option<Theorem1Witness> {
    theorem1_search(spec, &mut Vec::new())
}

pub fn match_theorem2(spec: &PartitionSpec) -> Option<Theorem2Witness> {
    theorem2_search(spec, &mut Vec::new())
}

pub fn match_theorem3(spec: &PartitionSpec) -> Option<Theorem3Witness> {
    theorem3_search(spec, &mut Vec::new())
}

pub(crate) fn match_theorem1_logged(
    spec: &PartitionSpec,
    log: &mut Vec<Exhaustion>,
) -> Option<Theorem1Witness> {
    theorem1_search(spec, log)
}

pub(crate) fn match_theorem2_logged(
    spec: &PartitionSpec,
    log: &mut Vec<Exhaustion>,
) -> Option<Theorem2Witness> {
    theorem2_search(spec, log)
}

pub(crate) fn match_theorem3_logged(
    spec: &PartitionSpec,
    log: &mut Vec<Exhaustion>,
) -> Option<Theorem3Witness> {
    theorem3_search(spec, log)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(s: &[u32]) -> PartitionSpec {
        PartitionSpec::canonicalize(s).unwrap()
    }

    #[test]
    fn theorem1_examples() {
        let w = match_theorem1(&spec(&[3, 3, 1])).unwrap();
        assert_eq!((w.case, w.qs.clone()), (3, vec![3, 3, 1]));
        assert!(w.g1.is_empty() && w.g2.is_empty() && w.g3.is_empty());

        let w = match_theorem1(&PartitionSpec::complete(6)).unwrap();
        assert_eq!((w.case, w.qs.clone(), w.g1.clone()), (2, vec![1, 1], spec(&[1])));

        assert!(match_theorem1(&PartitionSpec::complete(7)).is_none());
    }

    #[test]
    fn theorem1_lone_q_any_parity() {
        // 4 copies of [3] plus a lone odd part
        let w = match_theorem1(&spec(&[3, 3, 3, 3, 5])).unwrap();
        assert_eq!((w.case, w.qs.clone(), w.g1.clone()), (1, vec![5], spec(&[3])));
    }

    #[test]
    fn theorem1_case4_and_5() {
        let w = match_theorem1(&spec(&[6, 5])).unwrap();
        assert_eq!((w.case, w.qs.clone()), (4, vec![6, 5]));
        let w = match_theorem1(&spec(&[6, 1, 1, 1, 1, 1])).unwrap();
        assert_eq!((w.case, w.qs.clone(), w.g1.clone()), (4, vec![6, 1], spec(&[1])));
        let w = match_theorem1(&spec(&[6, 6, 3, 3])).unwrap();
        assert_eq!((w.case, w.g2.clone()), (2, spec(&[6])));
        let w = match_theorem1(&spec(&[6, 2])).unwrap();
        assert_eq!((w.case, w.qs.clone()), (5, vec![2, 6]));
    }

    #[test]
    fn theorem2_examples() {
        let w = match_theorem2(&spec(&[2, 2, 5])).unwrap();
        assert_eq!((w.case, w.qs.clone(), w.g.clone()), (2, vec![5], spec(&[2, 2])));
        let w = match_theorem2(&PartitionSpec::complete(4)).unwrap();
        assert_eq!((w.case, w.qs.clone()), (4, vec![1, 1, 1, 1]));
        assert!(match_theorem2(&spec(&[3, 3, 1, 1])).is_none());
        let w = match_theorem2(&spec(&[3, 1, 1, 4])).unwrap();
        assert_eq!((w.case, w.qs.clone()), (3, vec![1, 1, 3]));
    }

    #[test]
    fn theorem3_examples() {
        let w = match_theorem3(&spec(&[5, 4])).unwrap();
        assert_eq!((w.q_kind, w.q_sizes.clone(), w.gp.clone()), (QKind::EvenSet, vec![4], spec(&[5])));
        let w = match_theorem3(&spec(&[2, 2, 2, 8])).unwrap();
        assert_eq!((w.q_sizes.clone(), w.gp.clone()), (vec![8], spec(&[2, 2, 2])));
        let w = match_theorem3(&PartitionSpec::complete(5)).unwrap();
        assert_eq!((w.q_kind, w.gp.clone()), (QKind::K11, spec(&[1, 1, 1])));
        assert!(match_theorem3(&PartitionSpec::complete(7)).is_none());
    }

    #[test]
    fn theorem3_empty_spec() {
        let w = match_theorem3(&PartitionSpec::empty()).unwrap();
        assert_eq!(w.q_kind, QKind::EvenSet);
        assert!(w.gp.is_empty() && w.q_sizes.is_empty());
    }

    #[test]
    fn near_miss_is_flagged() {
        // [3,3,1] plus 4G1 with G1=[1]: the case 3 pattern needs G1 empty.
        let mut log = Vec::new();
        let s = spec(&[3, 3, 1, 1, 1, 1, 1]);
        assert!(match_theorem1_logged(&s, &mut log).is_none());
        assert!(log.iter().any(|e| e.near_miss && e.case == 3 && e.q_choice == Some(vec![3, 3, 1])));
    }
}
