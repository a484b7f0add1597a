use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::classifier::Verdict;
use crate::embedding::{CheckReport, EmbeddingPlan};
use crate::partition::PartitionSpec;

pub const SCHEMA_VERSION: &str = "1";

/// Self-describing result for one spec.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OutputDocument {
    pub schema_version: String,
    pub input: PartitionSpec,
    pub verdict: Verdict,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub plan: Option<EmbeddingPlan>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lemma1_report: Option<CheckReport>,
}

impl OutputDocument {
    pub fn new(verdict: Verdict) -> Self {
        Self {
            schema_version: SCHEMA_VERSION.to_string(),
            input: verdict.spec.clone(),
            verdict,
            plan: None,
            lemma1_report: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("documents always serialize")
    }

    pub fn to_json_pretty(&self) -> String {
        serde_json::to_string_pretty(self).expect("documents always serialize")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }
}

pub fn verdict_word(v: &Verdict) -> &'static str {
    if v.achiral {
        "achiral"
    } else {
        "intrinsically chiral"
    }
}

pub fn render_verdict(v: &Verdict, with_witness: bool) -> String {
    let mut s = format!("{}: {}\n", v.spec.k_notation(), verdict_word(v));
    if with_witness {
        if let Some(w) = &v.witness {
            let _ = writeln!(s, "  witness: {w}");
        } else {
            let _ = writeln!(s, "  no achiral form applies ({} attempts ruled out)", v.exhaustion.len());
            for e in v.near_misses() {
                let _ = writeln!(
                    s,
                    "  near miss: form {} case {} with q = {:?}: {}",
                    e.theorem,
                    e.case,
                    e.q_choice.as_deref().unwrap_or(&[]),
                    e.reason
                );
            }
        }
    }
    s
}

pub fn render_plan(plan: &EmbeddingPlan, report: &CheckReport) -> String {
    let mut s = format!(
        "{} via {:?} (order {}), construction {}\n",
        plan.spec.k_notation(),
        plan.scenario.kind,
        plan.scenario.group_order,
        plan.construction_case
    );
    for (v, p) in plan.placement.iter().enumerate() {
        let _ = writeln!(s, "  v{v:<3} part {:<3} {p}", plan.part_of[v]);
    }
    for a in &plan.auxiliary {
        let _ = writeln!(s, "  a{:<3} on v{}-v{}  {}", a.vertex, a.edge.0, a.edge.1, a.point);
    }
    for (name, h) in [
        ("a", &report.hypothesis_a),
        ("b", &report.hypothesis_b),
        ("c", &report.hypothesis_c),
        ("d", &report.hypothesis_d),
    ] {
        let _ = writeln!(
            s,
            "  ({name}) {} [{} checks]",
            if h.passed { "pass" } else { "FAIL" },
            h.pairs_examined
        );
    }
    let faithful = if report.faithful {
        "yes"
    } else if report.faithfulness_waived {
        "waived (graph lies in P)"
    } else {
        "NO"
    };
    let _ = writeln!(s, "  equivariant: {}  faithful: {faithful}", if report.equivariant { "yes" } else { "NO" });
    for f in report.failures() {
        let _ = writeln!(s, "  {f}");
    }
    s
}
