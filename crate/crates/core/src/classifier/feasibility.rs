//! Which residual multisets split as `4G₁ + 2G₂ + G₃`.
//!
//! Per size `s` with multiplicity `m`:
//! - `s` odd: only G₁ can take it, four parts at a time, so `m ≡ 0 (mod 4)`
//!   (or `m = 0` when G₁ is forbidden);
//! - `s ≡ 2 (mod 4)`: G₂ takes pairs, G₁ quadruples, so `m` must be even;
//! - `s ≡ 0 (mod 4)`: G₃ takes any number.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::partition::PartitionSpec;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidualSplit {
    pub g1: PartitionSpec,
    pub g2: PartitionSpec,
    pub g3: PartitionSpec,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ResidualFailure {
    OddSizeWithoutG1 { size: u32, count: u32 },
    OddSizeCountNotMultipleOfFour { size: u32, count: u32 },
    TwoModFourOddCount { size: u32, count: u32 },
}

impl fmt::Display for ResidualFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            ResidualFailure::OddSizeWithoutG1 { size, count } => write!(
                f,
                "residual odd size {size} (x{count}) but G1 must be empty"
            ),
            ResidualFailure::OddSizeCountNotMultipleOfFour { size, count } => write!(
                f,
                "residual odd size {size} with multiplicity {count} not divisible by 4"
            ),
            ResidualFailure::TwoModFourOddCount { size, count } => write!(
                f,
                "residual size {size} = 2 mod 4 with odd multiplicity {count}"
            ),
        }
    }
}

/// Splits the residual, preferring G₃ for `s ≡ 0`, G₂ for `s ≡ 2` and using
/// G₁ only for odd sizes. Reports the smallest offending size on failure.
pub fn split_residual(
    counts: &BTreeMap<u32, u32>,
    allow_g1: bool,
) -> Result<ResidualSplit, ResidualFailure> {
    let mut g1 = BTreeMap::new();
    let mut g2 = BTreeMap::new();
    let mut g3 = BTreeMap::new();
    for (&size, &count) in counts {
        if count == 0 {
            continue;
        }
        match size % 4 {
            0 => {
                g3.insert(size, count);
            }
            2 => {
                if count % 2 != 0 {
                    return Err(ResidualFailure::TwoModFourOddCount { size, count });
                }
                g2.insert(size, count / 2);
            }
            _ => {
                if !allow_g1 {
                    return Err(ResidualFailure::OddSizeWithoutG1 { size, count });
                }
                if count % 4 != 0 {
                    return Err(ResidualFailure::OddSizeCountNotMultipleOfFour { size, count });
                }
                g1.insert(size, count / 4);
            }
        }
    }
    Ok(ResidualSplit {
        g1: PartitionSpec::from_multiplicity(&g1),
        g2: PartitionSpec::from_multiplicity(&g2),
        g3: PartitionSpec::from_multiplicity(&g3),
    })
}

pub fn residual_feasible(counts: &BTreeMap<u32, u32>, allow_g1: bool) -> Option<ResidualSplit> {
    split_residual(counts, allow_g1).ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn counts(pairs: &[(u32, u32)]) -> BTreeMap<u32, u32> {
        pairs.iter().copied().collect()
    }

    fn spec(s: &[u32]) -> PartitionSpec {
        PartitionSpec::canonicalize(s).unwrap()
    }

    // Expected splits below were computed by enumerating every (a, b, c) with
    // 4a + 2b + c = m under the size constraints of each role.
    #[test]
    fn examples() {
        let s = residual_feasible(&counts(&[(1, 4)]), true).unwrap();
        assert_eq!((s.g1, s.g2.is_empty(), s.g3.is_empty()), (spec(&[1]), true, true));

        assert!(residual_feasible(&counts(&[(1, 4)]), false).is_none());

        let s = residual_feasible(&counts(&[(6, 2)]), false).unwrap();
        assert_eq!(s.g2, spec(&[6]));
        assert!(s.g1.is_empty() && s.g3.is_empty());

        let s = residual_feasible(&counts(&[(8, 3)]), false).unwrap();
        assert_eq!(s.g3, spec(&[8, 8, 8]));
    }

    #[test]
    fn empty_residual_is_feasible() {
        let s = residual_feasible(&BTreeMap::new(), false).unwrap();
        assert!(s.g1.is_empty() && s.g2.is_empty() && s.g3.is_empty());
    }

    #[test]
    fn failure_reasons() {
        assert_eq!(
            split_residual(&counts(&[(3, 2)]), true),
            Err(ResidualFailure::OddSizeCountNotMultipleOfFour { size: 3, count: 2 })
        );
        assert_eq!(
            split_residual(&counts(&[(6, 3)]), true),
            Err(ResidualFailure::TwoModFourOddCount { size: 6, count: 3 })
        );
        assert_eq!(
            split_residual(&counts(&[(5, 4)]), false),
            Err(ResidualFailure::OddSizeWithoutG1 { size: 5, count: 4 })
        );
    }

    #[test]
    fn split_reassembles() {
        let c = counts(&[(1, 8), (2, 4), (6, 2), (4, 3), (3, 4)]);
        let s = residual_feasible(&c, true).unwrap();
        let whole = s.g1.n_join(4).join(&s.g2.n_join(2)).join(&s.g3);
        assert_eq!(whole, PartitionSpec::from_multiplicity(&c));
    }
}
