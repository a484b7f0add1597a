use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::classifier::{classify, residual_feasible, validate_verdict};
use crate::embedding::{build_plan, check_lemma1};
use crate::error::{Error, Result};
use crate::graph::expand;
use crate::oracle::{
    allocation_bruteforce, enumerate_specs, kuratowski_search, BruteForceClassifier, SweepConfig,
    BRUTE_FORCE_MAX_VERTICES,
};
use crate::partition::PartitionSpec;
use crate::planarity::{is_outerplanar_cm, is_planar_cm};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Suite {
    Classifier,
    Planarity,
    Feasibility,
    Lemma1,
}

impl Suite {
    pub fn default_max_vertices(self) -> usize {
        match self {
            Suite::Classifier | Suite::Lemma1 => 12,
            Suite::Planarity => 9,
            Suite::Feasibility => 12,
        }
    }

    /// Largest budget the suite accepts.
    pub fn max_budget(self) -> usize {
        match self {
            Suite::Classifier => BRUTE_FORCE_MAX_VERTICES,
            // the join with one extra vertex must fit the Kuratowski search
            Suite::Planarity => 11,
            Suite::Feasibility => 64,
            Suite::Lemma1 => 20,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteSummary {
    pub checked: usize,
    pub achiral: usize,
    pub chiral: usize,
    pub disagreements: Vec<String>,
}

impl SuiteSummary {
    fn merge(mut self, other: SuiteSummary) -> SuiteSummary {
        self.checked += other.checked;
        self.achiral += other.achiral;
        self.chiral += other.chiral;
        self.disagreements.extend(other.disagreements);
        self
    }

    fn one(problem: Option<String>) -> SuiteSummary {
        SuiteSummary {
            checked: 1,
            disagreements: problem.into_iter().collect(),
            ..SuiteSummary::default()
        }
    }
}

fn specs(max_vertices: usize) -> Vec<PartitionSpec> {
    enumerate_specs(&SweepConfig::up_to(max_vertices)).collect()
}

/// Runs `suite` on every spec with at most `max_vertices` vertices
/// (for `Feasibility`: every size up to `max_vertices`, counts up to 20).
/// Disagreements are listed in spec order.
pub fn run_suite(suite: Suite, max_vertices: usize) -> Result<SuiteSummary> {
    if max_vertices > suite.max_budget() {
        return Err(Error::TooLarge {
            what: "verification budget",
            limit: suite.max_budget(),
            actual: max_vertices,
        });
    }
    Ok(match suite {
        Suite::Classifier => classifier_suite(max_vertices),
        Suite::Planarity => planarity_suite(max_vertices),
        Suite::Feasibility => feasibility_suite(max_vertices as u32, 20),
        Suite::Lemma1 => lemma1_suite(max_vertices),
    })
}

pub fn classifier_suite(max_vertices: usize) -> SuiteSummary {
    specs(max_vertices)
        .par_iter()
        .map_init(BruteForceClassifier::new, |bf, spec| {
            let fast = classify(spec);
            let mut problems = Vec::new();
            if let Err(e) = validate_verdict(&fast) {
                problems.push(format!("{spec}: witness rejected: {e}"));
            }
            match bf.classify(spec) {
                Ok(slow) if slow.achiral != fast.achiral => problems.push(format!(
                    "{spec}: classify says {}, brute force says {}",
                    fast.achiral, slow.achiral
                )),
                Ok(_) => {}
                Err(e) => problems.push(format!("{spec}: brute force failed: {e}")),
            }
            SuiteSummary {
                checked: 1,
                achiral: fast.achiral as usize,
                chiral: !fast.achiral as usize,
                disagreements: problems,
            }
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold(SuiteSummary::default(), SuiteSummary::merge)
}

pub fn planarity_suite(max_vertices: usize) -> SuiteSummary {
    specs(max_vertices)
        .par_iter()
        .map(|spec| {
            let mut problems = Vec::new();
            let g = expand(spec).expect("small spec");
            let planar = kuratowski_search(&g).expect("within limit").is_none();
            if planar != is_planar_cm(spec) {
                problems.push(format!("{spec}: closed form planar={} oracle={planar}", is_planar_cm(spec)));
            }
            let outer = kuratowski_search(&g.with_apex().expect("small"))
                .expect("within limit")
                .is_none();
            if outer != is_outerplanar_cm(spec) {
                problems.push(format!(
                    "{spec}: closed form outerplanar={} oracle={outer}",
                    is_outerplanar_cm(spec)
                ));
            }
            SuiteSummary {
                checked: 1,
                disagreements: problems,
                ..SuiteSummary::default()
            }
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold(SuiteSummary::default(), SuiteSummary::merge)
}

pub fn feasibility_suite(max_size: u32, max_count: u32) -> SuiteSummary {
    let mut out = SuiteSummary::default();
    for s in 1..=max_size {
        for m in 0..=max_count {
            for allow in [true, false] {
                let counts = [(s, m)].into_iter().collect();
                let fast = residual_feasible(&counts, allow).is_some();
                let slow = allocation_bruteforce(s, m, allow);
                out = out.merge(SuiteSummary::one((fast != slow).then(|| {
                    format!("size {s} count {m} allow_g1={allow}: rules say {fast}, search says {slow}")
                })));
            }
        }
    }
    out
}

pub fn lemma1_suite(max_vertices: usize) -> SuiteSummary {
    specs(max_vertices)
        .par_iter()
        .map(|spec| {
            let v = classify(spec);
            let Some(w) = &v.witness else {
                return SuiteSummary {
                    checked: 1,
                    chiral: 1,
                    ..SuiteSummary::default()
                };
            };
            let problem = match build_plan(w).and_then(|p| check_lemma1(&p).map(|r| (p, r))) {
                Ok((_, r)) if r.passed() => None,
                Ok((p, r)) => Some(format!("{spec} ({}): {}", p.construction_case, r.failures().join("; "))),
                Err(e) => Some(format!("{spec}: {e}")),
            };
            SuiteSummary {
                checked: 1,
                achiral: 1,
                chiral: 0,
                disagreements: problem.into_iter().collect(),
            }
        })
        .collect::<Vec<_>>()
        .into_iter()
        .fold(SuiteSummary::default(), SuiteSummary::merge)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_agree() {
        for suite in [Suite::Classifier, Suite::Planarity, Suite::Feasibility, Suite::Lemma1] {
            let s = run_suite(suite, 6).unwrap();
            assert!(s.disagreements.is_empty(), "{suite:?}: {:?}", s.disagreements);
            assert!(s.checked > 0);
        }
    }

    #[test]
    fn budget_enforced() {
        assert!(matches!(run_suite(Suite::Planarity, 12), Err(Error::TooLarge { .. })));
    }
}
