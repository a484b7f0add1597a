//! Exhaustive Kuratowski subdivision search.
//!
//! Branch vertices are chosen exhaustively (candidates ordered by degree,
//! highest first); the required branch-to-branch paths are then packed
//! vertex-disjointly by backtracking. A graph is planar iff no `K₅` or
//! `K₃,₃` subdivision exists.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::SimpleGraph;

pub const DEFAULT_SEARCH_LIMIT: usize = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ObstructionKind {
    K5,
    K33,
}

/// A subdivision of `K₅` or `K₃,₃` inside a graph.
///
/// For `K33`, `branch[..3]` and `branch[3..]` are the two sides. `paths[i]`
/// runs between the endpoints of the `i`-th required pair (see
/// [`Obstruction::required_pairs`]), endpoints included.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Obstruction {
    pub kind: ObstructionKind,
    pub branch: Vec<usize>,
    pub paths: Vec<Vec<usize>>,
}

fn pairs_for(kind: ObstructionKind, branch: &[usize]) -> Vec<(usize, usize)> {
    match kind {
        ObstructionKind::K5 => {
            let mut out = Vec::with_capacity(10);
            for i in 0..5 {
                for j in (i + 1)..5 {
                    out.push((branch[i], branch[j]));
                }
            }
            out
        }
        ObstructionKind::K33 => {
            let mut out = Vec::with_capacity(9);
            for &a in &branch[..3] {
                for &b in &branch[3..] {
                    out.push((a, b));
                }
            }
            out
        }
    }
}

impl Obstruction {
    pub fn required_pairs(&self) -> Vec<(usize, usize)> {
        pairs_for(self.kind, &self.branch)
    }

    /// Checks that this really is a subdivision inside `g`.
    pub fn validate(&self, g: &SimpleGraph) -> std::result::Result<(), String> {
        let expected = match self.kind {
            ObstructionKind::K5 => 5,
            ObstructionKind::K33 => 6,
        };
        if self.branch.len() != expected {
            return Err(format!("expected {expected} branch vertices"));
        }
        let mut branch_mask = 0u64;
        for &b in &self.branch {
            if b >= g.n() || branch_mask >> b & 1 == 1 {
                return Err(format!("branch vertex {b} out of range or repeated"));
            }
            branch_mask |= 1 << b;
        }
        let pairs = self.required_pairs();
        if pairs.len() != self.paths.len() {
            return Err("wrong number of paths".into());
        }
        let mut interior_used = 0u64;
        for (path, &(u, v)) in self.paths.iter().zip(&pairs) {
            if path.len() < 2 || path[0] != u || path[path.len() - 1] != v {
                return Err(format!("path {path:?} does not join {u} and {v}"));
            }
            for w in path.windows(2) {
                if w[0] >= g.n() || w[1] >= g.n() || !g.has_edge(w[0], w[1]) {
                    return Err(format!("path {path:?} uses a non-edge"));
                }
            }
            for &x in &path[1..path.len() - 1] {
                if branch_mask >> x & 1 == 1 {
                    return Err(format!("path {path:?} passes through a branch vertex"));
                }
                if interior_used >> x & 1 == 1 {
                    return Err(format!("vertex {x} shared by two paths"));
                }
                interior_used |= 1 << x;
            }
        }
        Ok(())
    }
}

/// Search with the default 12-vertex limit.
pub fn kuratowski_search(g: &SimpleGraph) -> Result<Option<Obstruction>> {
    kuratowski_search_with_limit(g, DEFAULT_SEARCH_LIMIT)
}

pub fn kuratowski_search_with_limit(g: &SimpleGraph, limit: usize) -> Result<Option<Obstruction>> {
    if g.n() > limit {
        return Err(Error::TooLarge {
            what: "vertex count for Kuratowski search",
            limit,
            actual: g.n(),
        });
    }
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));

    let k5_cands: Vec<usize> = order.iter().copied().filter(|&v| g.degree(v) >= 4).collect();
    let mut found = None;
    for_each_combination(&k5_cands, 5, &mut |branch| {
        if let Some(paths) = pack(g, ObstructionKind::K5, branch) {
            found = Some(Obstruction {
                kind: ObstructionKind::K5,
                branch: branch.to_vec(),
                paths,
            });
            true
        } else {
            false
        }
    });
    if found.is_some() {
        return Ok(found);
    }

    let k33_cands: Vec<usize> = order.iter().copied().filter(|&v| g.degree(v) >= 3).collect();
    for_each_combination(&k33_cands, 3, &mut |side_a| {
        // side B drawn from candidates after side A's first element, so each
        // unordered {A, B} is tried once
        let first = k33_cands.iter().position(|&v| v == side_a[0]).unwrap();
        let rest: Vec<usize> = k33_cands[first + 1..]
            .iter()
            .copied()
            .filter(|v| !side_a.contains(v))
            .collect();
        let mut hit = false;
        for_each_combination(&rest, 3, &mut |side_b| {
            let branch: Vec<usize> = side_a.iter().chain(side_b).copied().collect();
            if let Some(paths) = pack(g, ObstructionKind::K33, &branch) {
                found = Some(Obstruction {
                    kind: ObstructionKind::K33,
                    branch,
                    paths,
                });
                hit = true;
            }
            hit
        });
        hit
    });
    Ok(found)
}

/// Calls `f` on each `k`-subset of `items` (in order); stops when `f` returns true.
fn for_each_combination(items: &[usize], k: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    fn rec(
        items: &[usize],
        k: usize,
        start: usize,
        cur: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if cur.len() == k {
            return f(cur);
        }
        let need = k - cur.len();
        for i in start..items.len() {
            if items.len() - i < need {
                break;
            }
            cur.push(items[i]);
            if rec(items, k, i + 1, cur, f) {
                return true;
            }
            cur.pop();
        }
        false
    }
    rec(items, k, 0, &mut Vec::with_capacity(k), f)
}

fn pack(g: &SimpleGraph, kind: ObstructionKind, branch: &[usize]) -> Option<Vec<Vec<usize>>> {
    let pairs = pairs_for(kind, branch);
    let branch_mask = branch.iter().fold(0u64, |m, &b| m | 1 << b);
    let all = if g.n() == 64 { u64::MAX } else { (1u64 << g.n()) - 1 };
    let free = all & !branch_mask;

    let mut paths: Vec<Option<Vec<usize>>> = vec![None; pairs.len()];
    let mut pending = Vec::new();
    for (i, &(u, v)) in pairs.iter().enumerate() {
        if g.has_edge(u, v) {
            paths[i] = Some(vec![u, v]);
        } else {
            pending.push(i);
        }
    }
    if pending.len() > free.count_ones() as usize {
        return None;
    }
    if pack_rec(g, &pairs, &pending, free, &mut paths) {
        Some(paths.into_iter().map(|p| p.unwrap()).collect())
    } else {
        None
    }
}

/// Is `v` reachable from `u` through interior vertices in `free`?
fn reachable(g: &SimpleGraph, u: usize, v: usize, free: u64) -> bool {
    let mut seen = 1u64 << u;
    let mut frontier = g.neighbors_mask(u) & free;
    if g.neighbors_mask(u) >> v & 1 == 1 {
        return true;
    }
    while frontier != 0 {
        seen |= frontier;
        let mut next = 0u64;
        let mut f = frontier;
        while f != 0 {
            let x = f.trailing_zeros() as usize;
            f &= f - 1;
            let nb = g.neighbors_mask(x);
            if nb >> v & 1 == 1 {
                return true;
            }
            next |= nb & free;
        }
        frontier = next & !seen;
    }
    false
}

fn pack_rec(
    g: &SimpleGraph,
    pairs: &[(usize, usize)],
    pending: &[usize],
    free: u64,
    paths: &mut [Option<Vec<usize>>],
) -> bool {
    let Some((&idx, rest)) = pending.split_first() else {
        return true;
    };
    if rest.len() + 1 > free.count_ones() as usize {
        return false;
    }
    for &i in pending {
        let (u, v) = pairs[i];
        if !reachable(g, u, v, free) {
            return false;
        }
    }
    let (u, v) = pairs[idx];
    let mut path = vec![u];
    extend_path(g, v, free, &mut path, &mut |path, used| {
        paths[idx] = Some(path.to_vec());
        if pack_rec(g, pairs, rest, free & !used, paths) {
            true
        } else {
            paths[idx] = None;
            false
        }
    })
}

/// Enumerates simple paths from `path.last()` to `target` whose interior lies
/// in `free`. `on_path` receives the full path and its interior mask.
fn extend_path(
    g: &SimpleGraph,
    target: usize,
    free: u64,
    path: &mut Vec<usize>,
    on_path: &mut dyn FnMut(&[usize], u64) -> bool,
) -> bool {
    let x = *path.last().unwrap();
    let interior: u64 = path[1..].iter().fold(0, |m, &w| m | 1 << w);
    if path.len() >= 2 && g.has_edge(x, target) {
        path.push(target);
        let done = on_path(path, interior);
        path.pop();
        if done {
            return true;
        }
    }
    let mut cand = g.neighbors_mask(x) & free & !interior;
    while cand != 0 {
        let y = cand.trailing_zeros() as usize;
        cand &= cand - 1;
        path.push(y);
        if extend_path(g, target, free, path, on_path) {
            return true;
        }
        path.pop();
    }
    false
}
