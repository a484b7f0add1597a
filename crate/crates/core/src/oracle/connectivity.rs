use crate::error::Result;
use crate::graph::SimpleGraph;

/// Complete multipartite graph built by labelling each vertex with its part
/// and testing every pair. Parts are laid out in the order given.
pub fn complete_multipartite_graph(sizes: &[u32]) -> Result<SimpleGraph> {
    let labels: Vec<usize> = sizes
        .iter()
        .enumerate()
        .flat_map(|(p, &s)| std::iter::repeat(p).take(s as usize))
        .collect();
    let mut edges = Vec::new();
    for u in 0..labels.len() {
        for v in 0..u {
            if labels[u] != labels[v] {
                edges.push((v, u));
            }
        }
    }
    SimpleGraph::from_edges(labels.len(), &edges)
}

fn connected_without(g: &SimpleGraph, removed: u64) -> bool {
    let alive: Vec<usize> = (0..g.n()).filter(|&v| removed >> v & 1 == 0).collect();
    let Some(&start) = alive.first() else {
        return true;
    };
    let mut seen = vec![false; g.n()];
    let mut stack = vec![start];
    seen[start] = true;
    while let Some(x) = stack.pop() {
        for y in g.neighbors(x) {
            if removed >> y & 1 == 0 && !seen[y] {
                seen[y] = true;
                stack.push(y);
            }
        }
    }
    alive.iter().all(|&v| seen[v])
}

/// Smallest vertex set whose removal disconnects `g`, found by trying every
/// subset in order of size; `n − 1` when no such set exists.
pub fn min_vertex_cut_bruteforce(g: &SimpleGraph) -> usize {
    let n = g.n();
    if n <= 1 {
        return 0;
    }
    for k in 0..n.saturating_sub(1) {
        let mut found = false;
        for_each_subset_of_size(n, k, &mut |mask| {
            if n - k >= 2 && !connected_without(g, mask) {
                found = true;
            }
            found
        });
        if found {
            return k;
        }
    }
    n - 1
}

fn for_each_subset_of_size(n: usize, k: usize, f: &mut dyn FnMut(u64) -> bool) {
    fn rec(n: usize, k: usize, start: usize, mask: u64, f: &mut dyn FnMut(u64) -> bool) -> bool {
        if k == 0 {
            return f(mask);
        }
        for i in start..n {
            if rec(n, k - 1, i + 1, mask | 1 << i, f) {
                return true;
            }
        }
        false
    }
    rec(n, k, 0, 0, f);
}
