//! Independent brute-force references.
//!
//! Nothing here calls the production matchers, the residual splitter, the
//! planarity closed form or [`crate::graph::expand`]; adjacency and partition
//! enumeration are rebuilt from scratch so that agreement is meaningful.

mod allocation;
mod bruteforce;
mod connectivity;
mod kuratowski;

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use serde::{Deserialize, Serialize};

pub use allocation::allocation_bruteforce;
pub use bruteforce::{classify_bruteforce, BruteForceClassifier, BRUTE_FORCE_MAX_PARTS, BRUTE_FORCE_MAX_VERTICES};
pub use connectivity::{complete_multipartite_graph, min_vertex_cut_bruteforce};
pub use kuratowski::{
    kuratowski_search, kuratowski_search_with_limit, Obstruction, ObstructionKind,
    DEFAULT_SEARCH_LIMIT,
};

use crate::partition::PartitionSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SweepConfig {
    pub max_vertices: usize,
    pub max_parts: usize,
    pub max_size: usize,
    pub seed: u64,
}

impl SweepConfig {
    /// Every spec with at most `max_vertices` vertices.
    pub fn up_to(max_vertices: usize) -> Self {
        Self {
            max_vertices,
            max_parts: max_vertices,
            max_size: max_vertices,
            seed: 0,
        }
    }
}

/// Every canonical non-empty spec within budget, once each, ordered by vertex
/// count and then reverse-lexicographically (`[3]`, `[2,1]`, `[1,1,1]`).
pub fn enumerate_specs(cfg: &SweepConfig) -> impl Iterator<Item = PartitionSpec> {
    let mut out = Vec::new();
    for n in 1..=cfg.max_vertices {
        let mut cur = Vec::new();
        partitions_of(n, n.min(cfg.max_size), cfg.max_parts, &mut cur, &mut out);
    }
    out.into_iter()
}

fn partitions_of(
    remaining: usize,
    max_part: usize,
    parts_left: usize,
    cur: &mut Vec<u32>,
    out: &mut Vec<PartitionSpec>,
) {
    if remaining == 0 {
        out.push(PartitionSpec::canonicalize(cur).expect("positive parts"));
        return;
    }
    if parts_left == 0 {
        return;
    }
    for first in (1..=remaining.min(max_part)).rev() {
        cur.push(first as u32);
        partitions_of(remaining - first, first, parts_left - 1, cur, out);
        cur.pop();
    }
}

/// `count` specs drawn without replacement from [`enumerate_specs`],
/// deterministic in `cfg.seed`, returned in enumeration order.
pub fn sample_specs(cfg: &SweepConfig, count: usize) -> Vec<PartitionSpec> {
    let all: Vec<PartitionSpec> = enumerate_specs(cfg).collect();
    let mut rng = StdRng::seed_from_u64(cfg.seed);
    let mut idx: Vec<usize> = (0..all.len()).collect();
    idx.shuffle(&mut rng);
    idx.truncate(count);
    idx.sort_unstable();
    idx.into_iter().map(|i| all[i].clone()).collect()
}
