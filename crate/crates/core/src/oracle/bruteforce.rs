//! Reference classifier that tries role assignments directly.
//!
//! Every subset of parts is tried in every q-slot; each literal case condition
//! is tested over all orderings of the q-values (zero-padded). The remaining
//! parts of each size are split among the G₁/G₂/G₃ roles by searching all
//! `(quadruples, pairs, singles)` counts. Parts of equal size are
//! interchangeable, so searching counts per size covers every grouping of
//! parts. Planarity comes from the Kuratowski search on a freshly built
//! graph, after the edge-count bounds from Euler's formula.

use std::collections::{BTreeMap, HashMap};

use super::connectivity::complete_multipartite_graph;
use super::kuratowski::kuratowski_search_with_limit;
use crate::classifier::{
    Exhaustion, QKind, Theorem1Witness, Theorem2Witness, Theorem3Witness, Verdict, Witness,
};
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::partition::PartitionSpec;

pub const BRUTE_FORCE_MAX_PARTS: usize = 24;
pub const BRUTE_FORCE_MAX_VERTICES: usize = 24;

/// Holds a planarity cache so sweeps do not repeat searches.
#[derive(Debug, Default)]
pub struct BruteForceClassifier {
    planar_cache: HashMap<Vec<u32>, bool>,
}

pub fn classify_bruteforce(spec: &PartitionSpec) -> Result<Verdict> {
    BruteForceClassifier::new().classify(spec)
}

fn subsets_up_to(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = vec![vec![]];
    let mut layer = vec![vec![]];
    for _ in 0..k {
        let mut next = Vec::new();
        for s in &layer {
            let start = s.last().map_or(0, |&x| x + 1);
            for i in start..n {
                let mut t: Vec<usize> = s.clone();
                t.push(i);
                next.push(t);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

fn permutations(values: &[u32]) -> Vec<Vec<u32>> {
    if values.len() <= 1 {
        return vec![values.to_vec()];
    }
    let mut out = Vec::new();
    for i in 0..values.len() {
        let mut rest = values.to_vec();
        let head = rest.remove(i);
        for mut p in permutations(&rest) {
            p.insert(0, head);
            out.push(p);
        }
    }
    out
}

fn split_by_subset(parts: &[u32], chosen: &[usize]) -> (Vec<u32>, Vec<u32>) {
    let q = chosen.iter().map(|&i| parts[i]).collect();
    let rest = parts
        .iter()
        .enumerate()
        .filter(|(i, _)| !chosen.contains(i))
        .map(|(_, &s)| s)
        .collect();
    (q, rest)
}

fn has_triangle(g: &SimpleGraph) -> bool {
    let n = g.n();
    for a in 0..n {
        for b in (a + 1)..n {
            if !g.has_edge(a, b) {
                continue;
            }
            for c in (b + 1)..n {
                if g.has_edge(a, c) && g.has_edge(b, c) {
                    return true;
                }
            }
        }
    }
    false
}

/// One way to hand out the parts of a size: `quads` copies to G₁,
/// `pairs` to G₂ and `singles` to G₃.
#[derive(Debug, Clone, Copy)]
struct RoleCounts {
    quads: u32,
    pairs: u32,
    singles: u32,
}

fn role_counts(size: u32, count: u32, forbid_quads: bool) -> Option<RoleCounts> {
    for quads in 0..=count / 4 {
        if forbid_quads && quads > 0 {
            break;
        }
        for pairs in 0..=count / 2 {
            let Some(singles) = count.checked_sub(4 * quads + 2 * pairs) else {
                continue;
            };
            let pairs_ok = pairs == 0 || size % 2 == 0;
            let singles_ok = singles == 0 || size % 4 == 0;
            if pairs_ok && singles_ok {
                return Some(RoleCounts { quads, pairs, singles });
            }
        }
    }
    None
}

fn theorem1_condition(q: &[u32], g1_empty: bool) -> Option<u8> {
    let zeros = q.iter().filter(|&&x| x == 0).count();
    if zeros >= 2 {
        return Some(1);
    }
    for p in permutations(q) {
        let (a, b, c) = (p[0], p[1], p[2]);
        if a % 2 == 1 && a == b && c == 0 {
            return Some(2);
        }
        if a % 2 == 1 && a == b && c % 4 == 1 && g1_empty {
            return Some(3);
        }
        if a % 4 == 2 && b % 4 == 1 && c == 0 {
            return Some(4);
        }
        if a % 4 == 2 && b % 4 == 2 && c == 0 && g1_empty {
            return Some(5);
        }
    }
    None
}

fn theorem2_condition(q: &[u32]) -> Option<u8> {
    if q.iter().all(|&x| x == 0) {
        return Some(1);
    }
    for p in permutations(q) {
        if p[0] % 2 == 1 && p[1..].iter().all(|&x| x == 0) {
            return Some(2);
        }
        if p[0] == 1 && p[1] == 1 && p[2] == 0 && (p[3] % 2 == 1 || p[3] == 0) {
            return Some(3);
        }
    }
    if q.iter().all(|&x| x == 1) {
        return Some(4);
    }
    None
}

impl BruteForceClassifier {
    pub fn new() -> Self {
        Self::default()
    }

    fn planar(&mut self, sizes: &[u32]) -> Result<bool> {
        let mut key = sizes.to_vec();
        key.sort_unstable();
        if let Some(&p) = self.planar_cache.get(&key) {
            return Ok(p);
        }
        let g = complete_multipartite_graph(&key)?;
        let (v, e) = (g.n(), g.edge_count());
        let planar = if v >= 3 && e > 3 * v - 6 {
            false
        } else if v >= 3 && !has_triangle(&g) && e > 2 * v - 4 {
            false
        } else {
            kuratowski_search_with_limit(&g, 64)?.is_none()
        };
        self.planar_cache.insert(key, planar);
        Ok(planar)
    }

    fn outerplanar(&mut self, sizes: &[u32]) -> Result<bool> {
        let mut with_apex = sizes.to_vec();
        with_apex.push(1);
        self.planar(&with_apex)
    }

    fn theorem3(&mut self, parts: &[u32]) -> Result<Option<Theorem3Witness>> {
        for chosen in subsets_up_to(parts.len(), 2) {
            let (q, rest) = split_by_subset(parts, &chosen);
            let kind = match q.as_slice() {
                [] => Some(QKind::EvenSet),
                [s] if s % 2 == 0 => Some(QKind::EvenSet),
                [_] => Some(QKind::OddSet),
                [1, 1] => Some(QKind::K11),
                [2, 2] => Some(QKind::K22),
                _ => None,
            };
            let Some(kind) = kind else { continue };
            let ok = if kind == QKind::OddSet {
                self.outerplanar(&rest)?
            } else {
                self.planar(&rest)?
            };
            if ok {
                return Ok(Some(Theorem3Witness {
                    gp: PartitionSpec::canonicalize(&rest)?,
                    q_kind: kind,
                    q_sizes: q,
                }));
            }
        }
        Ok(None)
    }

    fn theorem2(&self, parts: &[u32]) -> Result<Option<Theorem2Witness>> {
        for chosen in subsets_up_to(parts.len(), 4) {
            let (q, rest) = split_by_subset(parts, &chosen);
            if rest.iter().any(|s| s % 2 != 0) {
                continue;
            }
            let mut padded = q.clone();
            padded.resize(4, 0);
            if let Some(case) = theorem2_condition(&padded) {
                let mut qs = q;
                qs.sort_unstable();
                return Ok(Some(Theorem2Witness {
                    g: PartitionSpec::canonicalize(&rest)?,
                    qs,
                    case,
                }));
            }
        }
        Ok(None)
    }

    fn theorem1(&self, parts: &[u32]) -> Result<Option<Theorem1Witness>> {
        for chosen in subsets_up_to(parts.len(), 3) {
            let (q, rest) = split_by_subset(parts, &chosen);
            let mut counts: BTreeMap<u32, u32> = BTreeMap::new();
            for &s in &rest {
                *counts.entry(s).or_insert(0) += 1;
            }
            let mut padded = q.clone();
            padded.resize(3, 0);
            for g1_empty in [true, false] {
                let split: Option<Vec<(u32, RoleCounts)>> = counts
                    .iter()
                    .map(|(&s, &m)| role_counts(s, m, g1_empty).map(|r| (s, r)))
                    .collect();
                let Some(split) = split else { continue };
                let uses_g1 = split.iter().any(|(_, r)| r.quads > 0);
                let Some(case) = theorem1_condition(&padded, !uses_g1) else {
                    continue;
                };
                let mut g1 = Vec::new();
                let mut g2 = Vec::new();
                let mut g3 = Vec::new();
                for (s, r) in split {
                    g1.extend(std::iter::repeat(s).take(r.quads as usize));
                    g2.extend(std::iter::repeat(s).take(r.pairs as usize));
                    g3.extend(std::iter::repeat(s).take(r.singles as usize));
                }
                return Ok(Some(Theorem1Witness {
                    g1: PartitionSpec::canonicalize(&g1)?,
                    g2: PartitionSpec::canonicalize(&g2)?,
                    g3: PartitionSpec::canonicalize(&g3)?,
                    qs: order_q_for_case(case, q),
                    case,
                }));
            }
        }
        Ok(None)
    }

    pub fn classify(&mut self, spec: &PartitionSpec) -> Result<Verdict> {
        if spec.n_parts() > BRUTE_FORCE_MAX_PARTS {
            return Err(Error::TooLarge {
                what: "part count for brute-force classification",
                limit: BRUTE_FORCE_MAX_PARTS,
                actual: spec.n_parts(),
            });
        }
        if spec.n_vertices() > BRUTE_FORCE_MAX_VERTICES {
            return Err(Error::TooLarge {
                what: "vertex count for brute-force classification",
                limit: BRUTE_FORCE_MAX_VERTICES,
                actual: spec.n_vertices(),
            });
        }
        let parts = spec.sizes();
        if let Some(w) = self.theorem3(parts)? {
            return Ok(Verdict::achiral(spec.clone(), Witness::Reflection(w)));
        }
        if let Some(w) = self.theorem2(parts)? {
            return Ok(Verdict::achiral(spec.clone(), Witness::Inversion(w)));
        }
        if let Some(w) = self.theorem1(parts)? {
            return Ok(Verdict::achiral(spec.clone(), Witness::Rotoreflection(w)));
        }
        let exhaustion = (1..=3u8)
            .map(|theorem| Exhaustion {
                theorem,
                case: 0,
                q_choice: None,
                reason: "no role assignment of parts satisfies any case".into(),
                near_miss: false,
            })
            .collect();
        Ok(Verdict::chiral(spec.clone(), exhaustion))
    }
}

/// Puts q-parts in the order the witness format expects for `case`.
fn order_q_for_case(case: u8, mut q: Vec<u32>) -> Vec<u32> {
    match case {
        3 => {
            // the repeated odd pair first, the 1 mod 4 part last
            for p in permutations(&q) {
                if p[0] == p[1] && p[0] % 2 == 1 && p[2] % 4 == 1 {
                    return p;
                }
            }
            q
        }
        4 => {
            q.sort_by_key(|x| x % 4 != 2);
            q
        }
        _ => {
            q.sort_unstable();
            q
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classifier::validate_witness;

    fn spec(s: &[u32]) -> PartitionSpec {
        PartitionSpec::canonicalize(s).unwrap()
    }

    #[test]
    fn named_instances() {
        assert!(classify_bruteforce(&spec(&[3, 3, 1])).unwrap().achiral);
        assert!(!classify_bruteforce(&spec(&[3, 3, 1, 1])).unwrap().achiral);
        assert!(!classify_bruteforce(&PartitionSpec::complete(7)).unwrap().achiral);
        assert!(classify_bruteforce(&PartitionSpec::complete(6)).unwrap().achiral);
    }

    #[test]
    fn witnesses_validate() {
        let mut bf = BruteForceClassifier::new();
        for s in [&[6u32, 6, 4][..], &[3, 3, 3, 3, 5], &[6, 5, 3, 3, 3, 3], &[2, 2, 5, 1, 1]] {
            let v = bf.classify(&spec(s)).unwrap();
            if let Some(w) = &v.witness {
                validate_witness(&v.spec, w).unwrap();
            }
        }
    }

    #[test]
    fn theorem1_via_bruteforce_only() {
        let bf = BruteForceClassifier::new();
        let w = bf.theorem1(spec(&[3, 3, 1]).sizes()).unwrap().unwrap();
        assert_eq!((w.case, w.qs), (3, vec![3, 3, 1]));
    }

    #[test]
    fn budget() {
        assert!(matches!(
            classify_bruteforce(&spec(&[20, 5])),
            Err(Error::TooLarge { .. })
        ));
    }
}
