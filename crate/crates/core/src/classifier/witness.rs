use std::fmt;

use serde::{Deserialize, Serialize};

use crate::partition::PartitionSpec;

/// Role assignment for the rotoreflection form `4G₁ + 2G₂ + G₃ + K_{q₁,q₂,q₃}`.
///
/// `qs` lists the nonzero q-parts in case order:
/// case 1 `[]` or `[q]`; case 2 `[w,w]`; case 3 `[w,w,x]`; case 4 `[x,y]` with
/// `x ≡ 2`, `y ≡ 1 (mod 4)`; case 5 `[x,y]` with `x ≤ y`, both `≡ 2 (mod 4)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem1Witness {
    /// Each part here appears four times in the graph.
    pub g1: PartitionSpec,
    /// Each part here appears twice; all sizes even.
    pub g2: PartitionSpec,
    /// All sizes divisible by 4.
    pub g3: PartitionSpec,
    pub qs: Vec<u32>,
    pub case: u8,
}

/// Role assignment for the inversion form `G + K_{q₁,q₂,q₃,q₄}`.
///
/// `qs`: case 1 `[]`; case 2 `[w]`; case 3 `[1,1]` or `[1,1,w]`; case 4 `[1,1,1,1]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem2Witness {
    /// All sizes even.
    pub g: PartitionSpec,
    pub qs: Vec<u32>,
    pub case: u8,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum QKind {
    /// A single partite set of even size, or nothing.
    EvenSet,
    /// A single partite set of odd size.
    OddSet,
    K11,
    K22,
}

impl fmt::Display for QKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            QKind::EvenSet => "even-set",
            QKind::OddSet => "odd-set",
            QKind::K11 => "K11",
            QKind::K22 => "K22",
        })
    }
}

/// Role assignment for the reflection form `G_P + Q`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem3Witness {
    pub gp: PartitionSpec,
    pub q_kind: QKind,
    pub q_sizes: Vec<u32>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "form", rename_all = "kebab-case")]
pub enum Witness {
    Rotoreflection(Theorem1Witness),
    Inversion(Theorem2Witness),
    Reflection(Theorem3Witness),
}

impl Witness {
    /// 1, 2 or 3 according to the achiral form.
    pub fn theorem(&self) -> u8 {
        match self {
            Witness::Rotoreflection(_) => 1,
            Witness::Inversion(_) => 2,
            Witness::Reflection(_) => 3,
        }
    }
}

fn list(xs: &[u32]) -> String {
    let parts: Vec<String> = xs.iter().map(u32::to_string).collect();
    format!("[{}]", parts.join(","))
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Rotoreflection(w) => write!(
                f,
                "4G1+2G2+G3+K_q (case {}): G1={} G2={} G3={} q={}",
                w.case, w.g1, w.g2, w.g3, list(&w.qs)
            ),
            Witness::Inversion(w) => {
                write!(f, "G+K_q (case {}): G={} q={}", w.case, w.g, list(&w.qs))
            }
            Witness::Reflection(w) => write!(
                f,
                "G_P+Q ({}): G_P={} Q={}",
                w.q_kind, w.gp, list(&w.q_sizes)
            ),
        }
    }
}

/// One failed attempt recorded while exhausting the achiral forms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Exhaustion {
    pub theorem: u8,
    pub case: u8,
    /// The q-parts tried, or `None` when no choice was available.
    pub q_choice: Option<Vec<u32>>,
    pub reason: String,
    /// The q-pattern of a case that forbids G₁ would succeed if G₁ were
    /// allowed. Such specs are chiral, but they sit right next to an achiral
    /// form, so they are flagged separately.
    #[serde(default)]
    pub near_miss: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub spec: PartitionSpec,
    pub achiral: bool,
    pub witness: Option<Witness>,
    #[serde(default)]
    pub exhaustion: Vec<Exhaustion>,
}

impl Verdict {
    pub fn achiral(spec: PartitionSpec, witness: Witness) -> Self {
        Self {
            spec,
            achiral: true,
            witness: Some(witness),
            exhaustion: Vec::new(),
        }
    }

    pub fn chiral(spec: PartitionSpec, exhaustion: Vec<Exhaustion>) -> Self {
        Self {
            spec,
            achiral: false,
            witness: None,
            exhaustion,
        }
    }

    pub fn near_misses(&self) -> impl Iterator<Item = &Exhaustion> {
        self.exhaustion.iter().filter(|e| e.near_miss)
    }
}
