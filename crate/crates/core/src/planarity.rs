//! Planarity and outerplanarity of complete multipartite graphs.
//!
//! Closed form, with sizes sorted non-increasing:
//!
//! | parts | planar exactly when                     |
//! |-------|-----------------------------------------|
//! | 0, 1  | always                                  |
//! | 2     | smaller part has at most 2 vertices     |
//! | 3     | `[n,1,1]`, `[2,2,1]` or `[2,2,2]`       |
//! | 4     | `[1,1,1,1]` or `[2,1,1,1]`              |
//! | ≥ 5   | never (contains `K₅`)                   |
//!
//! Derivation. Every spec outside the table contains, part for part, one of
//! `[3,3]`, `[3,2,1]`, `[3,1,1,1]`, `[2,2,1,1]` or `[1,1,1,1,1]` (shrink parts
//! and drop parts). Those five are nonplanar by the Kuratowski search, and a
//! graph containing a nonplanar subgraph is nonplanar. The table's infinite
//! families `[n]`, `[n,1]`, `[n,2]` and `[n,1,1]` are planar for every `n`:
//! put the big part on a line and the one or two other vertices on either
//! side. The remaining finite entries are confirmed by the search, and the
//! whole table is swept against it for every spec with at most 9 vertices.
//!
//! A graph is outerplanar when its join with a single vertex is planar, which
//! here leaves `[]`, `[n]`, `[n,1]`, `[2,2]`, `[1,1,1]` and `[2,1,1]`.

use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::graph::SimpleGraph;
use crate::oracle::{kuratowski_search, Obstruction};
use crate::partition::PartitionSpec;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum PlanarityMethod {
    ClosedForm,
    Oracle,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PlanarityVerdict {
    pub planar: bool,
    pub method: PlanarityMethod,
    pub witness: Option<Obstruction>,
}

/// Decides planarity by exhaustive Kuratowski subdivision search.
///
/// Nonplanar verdicts carry the obstruction found. At most 12 vertices.
pub fn is_planar_oracle(g: &SimpleGraph) -> Result<PlanarityVerdict> {
    let witness = kuratowski_search(g)?;
    Ok(PlanarityVerdict {
        planar: witness.is_none(),
        method: PlanarityMethod::Oracle,
        witness,
    })
}

pub fn is_planar_cm(spec: &PartitionSpec) -> bool {
    let s = spec.sizes();
    match s.len() {
        0 | 1 => true,
        2 => s[1] <= 2,
        3 => (s[1] == 1 && s[2] == 1) || (s[0] == 2 && s[1] == 2),
        4 => s[0] <= 2 && s[1] == 1,
        _ => false,
    }
}

pub fn is_outerplanar_cm(spec: &PartitionSpec) -> bool {
    is_planar_cm(&spec.join(&PartitionSpec::complete(1)))
}

/// Classifier-facing verdict using the closed form; no witness.
pub fn planarity_of(spec: &PartitionSpec) -> PlanarityVerdict {
    PlanarityVerdict {
        planar: is_planar_cm(spec),
        method: PlanarityMethod::ClosedForm,
        witness: None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::expand;
    use crate::oracle::ObstructionKind;

    fn spec(s: &[u32]) -> PartitionSpec {
        PartitionSpec::canonicalize(s).unwrap()
    }

    #[test]
    fn oracle_examples() {
        let v = is_planar_oracle(&expand(&spec(&[3, 3])).unwrap()).unwrap();
        assert!(!v.planar);
        assert_eq!(v.witness.as_ref().unwrap().kind, ObstructionKind::K33);

        let v = is_planar_oracle(&expand(&spec(&[2, 2, 2])).unwrap()).unwrap();
        assert!(v.planar && v.witness.is_none());
        let oct = expand(&spec(&[2, 2, 2])).unwrap();
        assert_eq!(oct.edge_count(), 3 * oct.n() - 6);

        let v = is_planar_oracle(&expand(&PartitionSpec::complete(5)).unwrap()).unwrap();
        assert_eq!(v.witness.unwrap().kind, ObstructionKind::K5);
    }

    #[test]
    fn closed_form_examples() {
        assert!(is_planar_cm(&spec(&[2, 7])));
        assert!(is_planar_cm(&spec(&[2, 2, 2])));
        assert!(!is_planar_cm(&spec(&[3, 3, 1])));
        assert!(is_planar_cm(&PartitionSpec::empty()));
        assert!(is_planar_cm(&spec(&[40])));
        assert!(is_planar_cm(&spec(&[40, 1, 1])));
        assert!(!is_planar_cm(&spec(&[3, 3])));
    }

    #[test]
    fn outerplanar_examples() {
        assert!(is_outerplanar_cm(&spec(&[2, 2])));
        assert!(!is_outerplanar_cm(&spec(&[1, 1, 3])));
        for n in 1..30 {
            assert!(is_outerplanar_cm(&spec(&[n])));
        }
        assert!(is_outerplanar_cm(&PartitionSpec::empty()));
        assert!(!is_outerplanar_cm(&PartitionSpec::complete(4)));
    }

    #[test]
    fn minimal_obstructions_are_nonplanar_by_search() {
        for s in [&[3u32, 3][..], &[3, 2, 1], &[3, 1, 1, 1], &[2, 2, 1, 1], &[1, 1, 1, 1, 1]] {
            let v = is_planar_oracle(&expand(&spec(s)).unwrap()).unwrap();
            assert!(!v.planar, "{s:?}");
            assert!(!is_planar_cm(&spec(s)));
        }
    }
}
