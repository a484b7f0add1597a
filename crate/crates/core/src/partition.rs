//! Complete multipartite graphs as multisets of partite-set sizes.
//!
//! A complete multipartite graph is determined up to isomorphism by the
//! multiset of its partite-set sizes, so [`PartitionSpec`] stores exactly that,
//! sorted non-increasing. Joining two such graphs concatenates their size
//! lists.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Canonical multiset of partite-set sizes, sorted non-increasing.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct PartitionSpec {
    sizes: Vec<u32>,
}

impl PartitionSpec {
    /// The empty graph.
    pub fn empty() -> Self {
        Self { sizes: Vec::new() }
    }

    /// Sorts `sizes` non-increasing. Rejects zero entries.
    pub fn canonicalize(sizes: &[u32]) -> Result<Self> {
        if let Some(index) = sizes.iter().position(|&s| s == 0) {
            return Err(Error::NonPositiveSize { index, value: 0 });
        }
        let mut sizes = sizes.to_vec();
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { sizes })
    }

    /// Like [`canonicalize`](Self::canonicalize) but for signed input, so that
    /// negative entries are reported rather than wrapped.
    pub fn from_signed(sizes: &[i64]) -> Result<Self> {
        if let Some((index, &value)) = sizes.iter().enumerate().find(|(_, &s)| s < 1) {
            return Err(Error::NonPositiveSize { index, value });
        }
        let sizes: Vec<u32> = sizes
            .iter()
            .map(|&s| u32::try_from(s).map_err(|_| Error::TooLarge {
                what: "partite-set size",
                limit: u32::MAX as usize,
                actual: s as usize,
            }))
            .collect::<Result<_>>()?;
        Self::canonicalize(&sizes)
    }

    /// `k` parts of size one: the complete graph `K_k`.
    pub fn complete(k: usize) -> Self {
        Self { sizes: vec![1; k] }
    }

    /// Builds a spec from a size → multiplicity map. Zero sizes are skipped.
    pub fn from_multiplicity(counts: &BTreeMap<u32, u32>) -> Self {
        let mut sizes = Vec::new();
        for (&s, &m) in counts.iter().rev() {
            if s > 0 {
                sizes.extend(std::iter::repeat(s).take(m as usize));
            }
        }
        Self { sizes }
    }

    pub fn sizes(&self) -> &[u32] {
        &self.sizes
    }

    pub fn n_parts(&self) -> usize {
        self.sizes.len()
    }

    pub fn n_vertices(&self) -> usize {
        self.sizes.iter().map(|&s| s as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.sizes.is_empty()
    }

    pub fn largest(&self) -> Option<u32> {
        self.sizes.first().copied()
    }

    /// Map from size to number of parts of that size.
    pub fn size_multiplicity(&self) -> BTreeMap<u32, u32> {
        let mut counts = BTreeMap::new();
        for &s in &self.sizes {
            *counts.entry(s).or_insert(0) += 1;
        }
        counts
    }

    /// Number of edges: `((Σm)² − Σm²) / 2`.
    pub fn edge_count(&self) -> usize {
        let n = self.n_vertices();
        let sq: usize = self.sizes.iter().map(|&s| (s as usize) * (s as usize)).sum();
        (n * n - sq) / 2
    }

    /// The join `self + other`.
    pub fn join(&self, other: &PartitionSpec) -> PartitionSpec {
        let mut sizes = Vec::with_capacity(self.sizes.len() + other.sizes.len());
        sizes.extend_from_slice(&self.sizes);
        sizes.extend_from_slice(&other.sizes);
        sizes.sort_unstable_by(|a, b| b.cmp(a));
        PartitionSpec { sizes }
    }

    /// `n` copies of `self` joined together.
    pub fn n_join(&self, n: usize) -> PartitionSpec {
        let mut sizes = Vec::with_capacity(self.sizes.len() * n);
        for &s in &self.sizes {
            sizes.extend(std::iter::repeat(s).take(n));
        }
        PartitionSpec { sizes }
    }

    /// Removes one part of each listed size. Returns `None` if some size is
    /// not available with the required multiplicity.
    pub fn remove_parts(&self, removed: &[u32]) -> Option<PartitionSpec> {
        let mut sizes = self.sizes.clone();
        for &r in removed {
            let pos = sizes.iter().position(|&s| s == r)?;
            sizes.remove(pos);
        }
        Some(PartitionSpec { sizes })
    }

    /// `K_{a,b,c}` notation.
    pub fn k_notation(&self) -> String {
        let inner: Vec<String> = self.sizes.iter().map(|s| s.to_string()).collect();
        format!("K_{{{}}}", inner.join(","))
    }
}

impl TryFrom<Vec<u32>> for PartitionSpec {
    type Error = Error;

    fn try_from(sizes: Vec<u32>) -> Result<Self> {
        Self::canonicalize(&sizes)
    }
}

impl From<PartitionSpec> for Vec<u32> {
    fn from(spec: PartitionSpec) -> Self {
        spec.sizes
    }
}

impl fmt::Display for PartitionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, s) in self.sizes.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, "]")
    }
}

/// Free-function form of [`PartitionSpec::canonicalize`].
pub fn canonicalize(sizes: &[u32]) -> Result<PartitionSpec> {
    PartitionSpec::canonicalize(sizes)
}

/// Free-function form of [`PartitionSpec::join`].
pub fn join(a: &PartitionSpec, b: &PartitionSpec) -> PartitionSpec {
    a.join(b)
}

/// Free-function form of [`PartitionSpec::n_join`].
pub fn n_join(n: usize, g: &PartitionSpec) -> PartitionSpec {
    g.n_join(n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn spec(s: &[u32]) -> PartitionSpec {
        PartitionSpec::canonicalize(s).unwrap()
    }

    #[test]
    fn canonicalize_examples() {
        assert_eq!(spec(&[1, 3, 3, 1]).sizes(), &[3, 3, 1, 1]);
        assert_eq!(spec(&[]).sizes(), &[] as &[u32]);
        assert_eq!(spec(&[4, 4, 2]).sizes(), &[4, 4, 2]);
    }

    #[test]
    fn zero_rejected() {
        assert_eq!(
            PartitionSpec::canonicalize(&[3, 0, 2]),
            Err(Error::NonPositiveSize { index: 1, value: 0 })
        );
        assert!(matches!(
            PartitionSpec::from_signed(&[2, -1]),
            Err(Error::NonPositiveSize { index: 1, value: -1 })
        ));
    }

    #[test]
    fn join_examples() {
        assert_eq!(spec(&[3, 3]).join(&spec(&[1])), spec(&[3, 3, 1]));
        assert_eq!(PartitionSpec::empty().join(&spec(&[2, 2])), spec(&[2, 2]));
        assert_eq!(spec(&[1, 1]).join(&spec(&[1, 1])), spec(&[1, 1, 1, 1]));
    }

    #[test]
    fn n_join_examples() {
        assert_eq!(n_join(4, &spec(&[2, 1])).sizes(), &[2, 2, 2, 2, 1, 1, 1, 1]);
        assert_eq!(n_join(2, &spec(&[6])), spec(&[6, 6]));
        assert_eq!(n_join(0, &spec(&[5])), PartitionSpec::empty());
    }

    #[test]
    fn multiplicity_sums_to_vertices() {
        let s = spec(&[4, 4, 2, 1, 1, 1]);
        let m = s.size_multiplicity();
        let total: u32 = m.iter().map(|(s, c)| s * c).sum();
        assert_eq!(total as usize, s.n_vertices());
        assert_eq!(PartitionSpec::from_multiplicity(&m), s);
    }

    #[test]
    fn remove_parts_respects_multiplicity() {
        let s = spec(&[3, 3, 1]);
        assert_eq!(s.remove_parts(&[3, 3]), Some(spec(&[1])));
        assert_eq!(s.remove_parts(&[1, 1]), None);
    }

    #[test]
    fn serde_rejects_zero() {
        assert!(serde_json::from_str::<PartitionSpec>("[2,0]").is_err());
        let s: PartitionSpec = serde_json::from_str("[1,2,3]").unwrap();
        assert_eq!(s.sizes(), &[3, 2, 1]);
    }

    proptest! {
        #[test]
        fn canonicalize_is_order_insensitive_and_idempotent(
            (sizes, shuffled) in prop::collection::vec(1u32..20, 0..10)
                .prop_flat_map(|v| (Just(v.clone()), Just(v).prop_shuffle())),
        ) {
            let a = spec(&sizes);
            prop_assert_eq!(spec(a.sizes()), a.clone());
            prop_assert_eq!(spec(&shuffled), a);
        }

        #[test]
        fn join_commutative_associative(
            a in prop::collection::vec(1u32..9, 0..5),
            b in prop::collection::vec(1u32..9, 0..5),
            c in prop::collection::vec(1u32..9, 0..5),
        ) {
            let (a, b, c) = (spec(&a), spec(&b), spec(&c));
            prop_assert_eq!(a.join(&b), b.join(&a));
            prop_assert_eq!(a.join(&b).join(&c), a.join(&b.join(&c)));
        }
    }
}
