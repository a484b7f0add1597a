use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Rational angle on the circle ℓ, as a fraction of a full turn in `[0, 1)`.
///
/// Always stored reduced. `0` is `O` and `1/2` is `∞`; those two are
/// represented by [`SymbolicPoint::PointO`] and [`SymbolicPoint::PointInfinity`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Angle {
    pub num: u32,
    pub den: u32,
}

fn gcd(a: u32, b: u32) -> u32 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

impl Angle {
    /// `num/den` reduced modulo 1. Panics on a zero denominator.
    pub fn new(num: u32, den: u32) -> Self {
        assert!(den > 0, "angle denominator must be positive");
        let num = num % den;
        let g = gcd(num, den).max(1);
        Self { num: num / g, den: den / g }
    }

    pub fn neg(self) -> Self {
        Angle::new(self.den - self.num, self.den)
    }

    pub fn half(self) -> Self {
        Angle::new(self.num, self.den * 2)
    }

    pub fn is_reserved(self) -> bool {
        self.num == 0 || 2 * self.num == self.den
    }

    /// Lies strictly between `O` and `∞` going the positive way.
    pub fn in_upper_arc(self) -> bool {
        self.num > 0 && 2 * self.num < self.den
    }

    pub fn is_reduced(self) -> bool {
        self.den > 0 && self.num < self.den && gcd(self.num, self.den) == 1
    }
}

impl Ord for Angle {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.num as u64 * other.den as u64).cmp(&(other.num as u64 * self.den as u64))
    }
}

impl PartialOrd for Angle {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Angle {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.num, self.den)
    }
}

/// Where a vertex sits, up to the symmetry.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "tag", rename_all = "kebab-case")]
pub enum SymbolicPoint {
    /// Point `id` of the ball `B`, carried to copy `copy` by `h^copy`.
    BallOrbit { copy: u8, id: u32 },
    CircleL { angle: Angle },
    /// Point on the sphere `P`. Under inversion `(id, pair)` goes to
    /// `(pair, id)`.
    SphereP { id: u32, pair: u32 },
    SideA { id: u32 },
    SideB { id: u32 },
    PointO,
    PointInfinity,
}

impl SymbolicPoint {
    pub fn circle(angle: Angle) -> Self {
        SymbolicPoint::CircleL { angle }
    }

    /// Position on ℓ ∪ {O, ∞}, if the point lies there.
    pub fn position_on_l(&self) -> Option<Angle> {
        match *self {
            SymbolicPoint::CircleL { angle } => Some(angle),
            SymbolicPoint::PointO => Some(Angle { num: 0, den: 1 }),
            SymbolicPoint::PointInfinity => Some(Angle { num: 1, den: 2 }),
            _ => None,
        }
    }

    pub fn is_o_or_infinity(&self) -> bool {
        matches!(self, SymbolicPoint::PointO | SymbolicPoint::PointInfinity)
    }
}

impl fmt::Display for SymbolicPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SymbolicPoint::BallOrbit { copy, id } => write!(f, "B{copy}#{id}"),
            SymbolicPoint::CircleL { angle } => write!(f, "l({angle})"),
            SymbolicPoint::SphereP { id, pair } => write!(f, "P({id},{pair})"),
            SymbolicPoint::SideA { id } => write!(f, "A#{id}"),
            SymbolicPoint::SideB { id } => write!(f, "B'#{id}"),
            SymbolicPoint::PointO => f.write_str("O"),
            SymbolicPoint::PointInfinity => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScenarioKind {
    Rotoreflection4,
    Inversion2,
    Reflection2,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FixedSet {
    /// The two points `O` and `∞`.
    OInf,
    /// The circle ℓ (which contains `O` and `∞`).
    CircleL,
    /// The sphere `P` (which contains `O` and `∞`).
    SphereP,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SymmetryScenario {
    pub kind: ScenarioKind,
    pub group_order: u8,
    /// `fixed_sets[k - 1]` is `fix(h^k)`.
    pub fixed_sets: Vec<FixedSet>,
    /// Union of all nontrivial fixed sets.
    pub y: FixedSet,
}

impl SymmetryScenario {
    pub fn new(kind: ScenarioKind) -> Self {
        match kind {
            ScenarioKind::Rotoreflection4 => Self {
                kind,
                group_order: 4,
                fixed_sets: vec![FixedSet::OInf, FixedSet::CircleL, FixedSet::OInf],
                y: FixedSet::CircleL,
            },
            ScenarioKind::Inversion2 => Self {
                kind,
                group_order: 2,
                fixed_sets: vec![FixedSet::OInf],
                y: FixedSet::OInf,
            },
            ScenarioKind::Reflection2 => Self {
                kind,
                group_order: 2,
                fixed_sets: vec![FixedSet::SphereP],
                y: FixedSet::SphereP,
            },
        }
    }

    pub fn rotoreflection4() -> Self {
        Self::new(ScenarioKind::Rotoreflection4)
    }

    pub fn inversion2() -> Self {
        Self::new(ScenarioKind::Inversion2)
    }

    pub fn reflection2() -> Self {
        Self::new(ScenarioKind::Reflection2)
    }

    /// Consistent with the canonical description of its kind.
    pub fn is_well_formed(&self) -> bool {
        *self == Self::new(self.kind)
    }

    /// `fix(h^power)`; `None` for the identity.
    pub fn fixed_set(&self, power: u32) -> Option<FixedSet> {
        let k = power % self.group_order as u32;
        if k == 0 {
            None
        } else {
            self.fixed_sets.get(k as usize - 1).copied()
        }
    }
}

/// Is `p` one of the point kinds the scenario's group acts on?
pub fn in_vocabulary(kind: ScenarioKind, p: &SymbolicPoint) -> bool {
    use SymbolicPoint::*;
    match kind {
        ScenarioKind::Rotoreflection4 => match p {
            BallOrbit { copy, .. } => *copy < 4,
            CircleL { angle } => !angle.is_reserved(),
            PointO | PointInfinity => true,
            _ => false,
        },
        ScenarioKind::Inversion2 => match p {
            SideA { .. } | SideB { .. } | PointO | PointInfinity => true,
            SphereP { id, pair } => id != pair,
            _ => false,
        },
        ScenarioKind::Reflection2 => match p {
            SphereP { .. } | SideA { .. } | SideB { .. } | PointO | PointInfinity => true,
            CircleL { angle } => !angle.is_reserved(),
            _ => false,
        },
    }
}

fn apply_once(kind: ScenarioKind, p: SymbolicPoint) -> SymbolicPoint {
    use SymbolicPoint::*;
    match (kind, p) {
        (_, PointO) => PointO,
        (_, PointInfinity) => PointInfinity,
        (ScenarioKind::Rotoreflection4, BallOrbit { copy, id }) => BallOrbit {
            copy: (copy + 1) % 4,
            id,
        },
        (ScenarioKind::Rotoreflection4 | ScenarioKind::Reflection2, CircleL { angle }) => {
            CircleL { angle: angle.neg() }
        }
        (ScenarioKind::Inversion2, SphereP { id, pair }) => SphereP { id: pair, pair: id },
        (ScenarioKind::Reflection2, SphereP { .. }) => p,
        (ScenarioKind::Inversion2 | ScenarioKind::Reflection2, SideA { id }) => SideB { id },
        (ScenarioKind::Inversion2 | ScenarioKind::Reflection2, SideB { id }) => SideA { id },
        _ => unreachable!("checked by in_vocabulary"),
    }
}

/// Image of `p` under `h^power`. `None` when the scenario's group does not act
/// on this kind of point.
pub fn apply_group(scenario: &SymmetryScenario, power: u32, p: SymbolicPoint) -> Option<SymbolicPoint> {
    if !in_vocabulary(scenario.kind, &p) {
        return None;
    }
    let mut q = p;
    for _ in 0..power % scenario.group_order as u32 {
        q = apply_once(scenario.kind, q);
    }
    Some(q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rotoreflection_examples() {
        let s = SymmetryScenario::rotoreflection4();
        assert_eq!(
            apply_group(&s, 2, SymbolicPoint::BallOrbit { copy: 1, id: 7 }),
            Some(SymbolicPoint::BallOrbit { copy: 3, id: 7 })
        );
        assert_eq!(
            apply_group(&s, 1, SymbolicPoint::circle(Angle::new(1, 8))),
            Some(SymbolicPoint::circle(Angle::new(7, 8)))
        );
        assert_eq!(
            apply_group(&s, 2, SymbolicPoint::circle(Angle::new(1, 8))),
            Some(SymbolicPoint::circle(Angle::new(1, 8)))
        );
    }

    #[test]
    fn o_is_fixed_everywhere() {
        for kind in [ScenarioKind::Rotoreflection4, ScenarioKind::Inversion2, ScenarioKind::Reflection2] {
            let s = SymmetryScenario::new(kind);
            for k in 0..8 {
                assert_eq!(apply_group(&s, k, SymbolicPoint::PointO), Some(SymbolicPoint::PointO));
            }
        }
    }

    #[test]
    fn action_has_the_stated_order() {
        let pts = [
            SymbolicPoint::BallOrbit { copy: 2, id: 0 },
            SymbolicPoint::circle(Angle::new(3, 16)),
            SymbolicPoint::SphereP { id: 1, pair: 2 },
            SymbolicPoint::SideA { id: 4 },
        ];
        for kind in [ScenarioKind::Rotoreflection4, ScenarioKind::Inversion2, ScenarioKind::Reflection2] {
            let s = SymmetryScenario::new(kind);
            for p in pts {
                if let Some(q) = apply_group(&s, s.group_order as u32, p) {
                    assert_eq!(q, p);
                    assert_eq!(apply_group(&s, 0, p), Some(p));
                }
            }
        }
    }

    #[test]
    fn vocabulary() {
        let inv = SymmetryScenario::inversion2();
        assert!(apply_group(&inv, 1, SymbolicPoint::BallOrbit { copy: 0, id: 0 }).is_none());
        assert!(apply_group(&inv, 1, SymbolicPoint::SphereP { id: 3, pair: 3 }).is_none());
        let rot = SymmetryScenario::rotoreflection4();
        assert!(apply_group(&rot, 1, SymbolicPoint::circle(Angle::new(1, 2))).is_none());
    }

    #[test]
    fn angles() {
        assert_eq!(Angle::new(2, 8), Angle::new(1, 4));
        assert_eq!(Angle::new(1, 4).neg(), Angle::new(3, 4));
        assert!(Angle::new(1, 5).in_upper_arc());
        assert!(!Angle::new(3, 5).in_upper_arc());
        assert!(Angle::new(1, 3) < Angle::new(1, 2));
    }

    #[test]
    fn point_serde_round_trip() {
        let p = SymbolicPoint::SphereP { id: 1, pair: 0 };
        let s = serde_json::to_string(&p).unwrap();
        assert_eq!(s, r#"{"tag":"sphere-p","id":1,"pair":0}"#);
        assert_eq!(serde_json::from_str::<SymbolicPoint>(&s).unwrap(), p);
    }
}
