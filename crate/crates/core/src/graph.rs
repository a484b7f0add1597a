//! Explicit adjacency for small complete multipartite graphs, and the
//! connectivity utilities built on top of [`PartitionSpec`].

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::PartitionSpec;

/// Default vertex cap for [`expand`]. Adjacency rows are `u64` bitmasks.
pub const DEFAULT_EXPAND_CAP: usize = 64;

/// Simple undirected graph on at most 64 vertices, stored as bitmask rows.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SimpleGraph {
    n: usize,
    adjacency: Vec<u64>,
    part_of: Option<Vec<usize>>,
}

impl SimpleGraph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self> {
        if n > 64 {
            return Err(Error::TooLarge {
                what: "vertex count",
                limit: 64,
                actual: n,
            });
        }
        Ok(Self {
            n,
            adjacency: vec![0; n],
            part_of: None,
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::new(n)?;
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Adds `{u, v}`. Self-loops are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.n && v < self.n, "vertex out of range");
        if u != v {
            self.adjacency[u] |= 1 << v;
            self.adjacency[v] |= 1 << u;
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adjacency[u] >> v & 1 == 1
    }

    /// Neighbourhood bitmask of `v`.
    pub fn neighbors_mask(&self, v: usize) -> u64 {
        self.adjacency[v]
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        let row = self.adjacency[v];
        (0..self.n).filter(move |&u| row >> u & 1 == 1)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].count_ones() as usize
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if self.has_edge(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Part index of each vertex, when built by [`expand`].
    pub fn part_of(&self) -> Option<&[usize]> {
        self.part_of.as_deref()
    }

    /// Adds one vertex adjacent to every existing vertex.
    pub fn with_apex(&self) -> Result<SimpleGraph> {
        let mut g = SimpleGraph::new(self.n + 1)?;
        g.adjacency[..self.n].copy_from_slice(&self.adjacency);
        for v in 0..self.n {
            g.add_edge(v, self.n);
        }
        Ok(g)
    }
}

/// Builds the complete multipartite graph with the default vertex cap.
pub fn expand(spec: &PartitionSpec) -> Result<SimpleGraph> {
    expand_with_cap(spec, DEFAULT_EXPAND_CAP)
}

/// Vertices are numbered part by part in canonical (non-increasing) order.
pub fn expand_with_cap(spec: &PartitionSpec, cap: usize) -> Result<SimpleGraph> {
    let n = spec.n_vertices();
    let cap = cap.min(64);
    if n > cap {
        return Err(Error::TooLarge {
            what: "vertex count",
            limit: cap,
            actual: n,
        });
    }
    let mut part_of = Vec::with_capacity(n);
    for (p, &s) in spec.sizes().iter().enumerate() {
        part_of.extend(std::iter::repeat(p).take(s as usize));
    }
    let all = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    let mut part_mask = vec![0u64; spec.n_parts()];
    for (v, &p) in part_of.iter().enumerate() {
        part_mask[p] |= 1 << v;
    }
    let adjacency = part_of.iter().map(|&p| all & !part_mask[p]).collect();
    Ok(SimpleGraph {
        n,
        adjacency,
        part_of: Some(part_of),
    })
}

/// Vertex connectivity of a complete multipartite graph.
///
/// With at least two parts this is `n_vertices − largest part`: removing every
/// part but the largest leaves an independent set, and any smaller removal
/// leaves two surviving vertices in different parts, which keeps the rest
/// connected. One part means no edges, so connectivity 0.
pub fn vertex_connectivity(spec: &PartitionSpec) -> Result<usize> {
    match spec.n_parts() {
        0 => Err(Error::EmptySpec),
        1 => Ok(0),
        _ => Ok(spec.n_vertices() - spec.largest().unwrap_or(0) as usize),
    }
}

pub fn is_three_connected(spec: &PartitionSpec) -> Result<bool> {
    Ok(vertex_connectivity(spec)? >= 3)
}

/// The shape forced on graphs that fail 3-connectivity: `K_{n,1,1}` for some
/// `n ≥ 1`, or fewer than three parts.
pub fn is_low_connectivity_form(spec: &PartitionSpec) -> bool {
    spec.n_parts() < 3 || (spec.n_parts() == 3 && spec.sizes()[1] == 1 && spec.sizes()[2] == 1)
}
