//! Plan mutations used to make sure [`check_lemma1`](super::check_lemma1)
//! notices broken plans. Each operator returns `None` when the plan has
//! nothing it can act on.

use super::plan::EmbeddingPlan;
use super::point::{Angle, ScenarioKind, SymbolicPoint};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mutation {
    /// Exchange the points of two vertices in different parts that share a
    /// ball orbit but sit in different copies.
    SwapAcrossBallCopies,
    /// Give a second vertex on ℓ the angle of the first.
    CollapseCircleAngles,
    /// Delete one auxiliary vertex, leaving its edge unsubdivided.
    DropAuxiliary,
    /// Move two adjacent vertices to `O` and `∞` (rotoreflection and
    /// inversion plans, where those are isolated fixed points).
    AdjacentPairAtOInf,
    /// Move one auxiliary vertex on ℓ so that it no longer mirrors its
    /// partner.
    BreakAuxOrbitPairing,
    /// Move one vertex of a part that is split evenly between two regions
    /// over to the other region.
    OddSplit,
    /// Move an auxiliary vertex from ℓ into the ball.
    MoveAuxOffLine,
    /// Move an auxiliary orbit on ℓ into the arc between `O` and the nearest
    /// vertex on ℓ adjacent to the vertex at `O`.
    MoveAuxIntoArc,
}

impl Mutation {
    pub const ALL: [Mutation; 8] = [
        Mutation::SwapAcrossBallCopies,
        Mutation::CollapseCircleAngles,
        Mutation::DropAuxiliary,
        Mutation::AdjacentPairAtOInf,
        Mutation::BreakAuxOrbitPairing,
        Mutation::OddSplit,
        Mutation::MoveAuxOffLine,
        Mutation::MoveAuxIntoArc,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Mutation::SwapAcrossBallCopies => "swap-across-ball-copies",
            Mutation::CollapseCircleAngles => "collapse-circle-angles",
            Mutation::DropAuxiliary => "drop-auxiliary",
            Mutation::AdjacentPairAtOInf => "adjacent-pair-at-o-inf",
            Mutation::BreakAuxOrbitPairing => "break-aux-orbit-pairing",
            Mutation::OddSplit => "odd-split",
            Mutation::MoveAuxOffLine => "move-aux-off-line",
            Mutation::MoveAuxIntoArc => "move-aux-into-arc",
        }
    }

    pub fn apply(self, plan: &EmbeddingPlan) -> Option<EmbeddingPlan> {
        match self {
            Mutation::SwapAcrossBallCopies => swap_across_ball_copies(plan),
            Mutation::CollapseCircleAngles => collapse_circle_angles(plan),
            Mutation::DropAuxiliary => drop_auxiliary(plan),
            Mutation::AdjacentPairAtOInf => adjacent_pair_at_o_inf(plan),
            Mutation::BreakAuxOrbitPairing => break_aux_orbit_pairing(plan),
            Mutation::OddSplit => odd_split(plan),
            Mutation::MoveAuxOffLine => move_aux_off_line(plan),
            Mutation::MoveAuxIntoArc => move_aux_into_arc(plan),
        }
    }
}

fn set_point(plan: &mut EmbeddingPlan, v: usize, p: SymbolicPoint) {
    let n = plan.n_original();
    if v < n {
        plan.placement[v] = p;
    } else {
        plan.auxiliary[v - n].point = p;
    }
}

fn fresh_id(plan: &EmbeddingPlan) -> u32 {
    plan.points()
        .iter()
        .filter_map(|p| match *p {
            SymbolicPoint::BallOrbit { id, .. } | SymbolicPoint::SideA { id } | SymbolicPoint::SideB { id } => Some(id),
            SymbolicPoint::SphereP { id, pair } => Some(id.max(pair)),
            _ => None,
        })
        .max()
        .map_or(0, |m| m + 1)
}

fn part_size(plan: &EmbeddingPlan, v: usize) -> usize {
    plan.part_of.iter().filter(|&&p| p == plan.part_of[v]).count()
}

fn swap_across_ball_copies(plan: &EmbeddingPlan) -> Option<EmbeddingPlan> {
    let pts = &plan.placement;
    for u in 0..pts.len() {
        let SymbolicPoint::BallOrbit { copy: cu, id: iu } = pts[u] else { continue };
        if part_size(plan, u) < 2 {
            continue;
        }
        for v in 0..pts.len() {
            if let SymbolicPoint::BallOrbit { copy: cv, id: iv } = pts[v] {
                if iv == iu && cv != cu && plan.part_of[u] != plan.part_of[v] {
                    let mut m = plan.clone();
                    m.placement.swap(u, v);
                    return Some(m);
                }
            }
        }
    }
    None
}

fn circle_vertices(plan: &EmbeddingPlan) -> Vec<(usize, Angle)> {
    plan.points()
        .iter()
        .enumerate()
        .filter_map(|(v, p)| match p {
            SymbolicPoint::CircleL { angle } => Some((v, *angle)),
            _ => None,
        })
        .collect()
}

fn collapse_circle_angles(plan: &EmbeddingPlan) -> Option<EmbeddingPlan> {
    let on_l = circle_vertices(plan);
    if on_l.len() < 2 {
        return None;
    }
    let mut m = plan.clone();
    set_point(&mut m, on_l[1].0, SymbolicPoint::circle(on_l[0].1));
    Some(m)
}

fn drop_auxiliary(plan: &EmbeddingPlan) -> Option<EmbeddingPlan> {
    if plan.auxiliary.is_empty() {
        return None;
    }
    let mut m = plan.clone();
    m.auxiliary.remove(0);
    for (i, a) in m.auxiliary.iter_mut().enumerate() {
        a.vertex = m.placement.len() + i;
    }
    Some(m)
}

fn adjacent_pair_at_o_inf(plan: &EmbeddingPlan) -> Option<EmbeddingPlan> {
    if plan.scenario.kind == ScenarioKind::Reflection2 {
        return None;
    }
    let (u, v) = plan
        .adjacent_pairs()
        .into_iter()
        .find(|&(u, v)| !plan.is_auxiliary(u) && !plan.is_auxiliary(v))?;
    let mut m = plan.clone();
    let pts = m.points();
    // whoever already sits at O or ∞ takes over the vacated points
    for (w, target) in [(u, SymbolicPoint::PointO), (v, SymbolicPoint::PointInfinity)] {
        let old = m.points()[w];
        if let Some(occupant) = pts.iter().position(|p| *p == target) {
            if occupant != w {
                set_point(&mut m, occupant, old);
            }
        }
        set_point(&mut m, w, target);
    }
    Some(m)
}

fn break_aux_orbit_pairing(plan: &EmbeddingPlan) -> Option<EmbeddingPlan> {
    let a = plan
        .auxiliary
        .iter()
        .find(|a| matches!(a.point, SymbolicPoint::CircleL { .. }))?;
    let SymbolicPoint::CircleL { angle } = a.point else { unreachable!() };
    let mut m = plan.clone();
    // halfway towards the nearer of O and ∞, which no other point uses
    let moved = if angle.in_upper_arc() {
        angle.half()
    } else {
        Angle::new(angle.num + angle.den, 2 * angle.den)
    };
    set_point(&mut m, a.vertex, SymbolicPoint::circle(moved));
    Some(m)
}

fn odd_split(plan: &EmbeddingPlan) -> Option<EmbeddingPlan> {
    let id = fresh_id(plan);
    for (v, p) in plan.placement.iter().enumerate() {
        let moved = match (plan.scenario.kind, *p) {
            (ScenarioKind::Rotoreflection4, SymbolicPoint::BallOrbit { copy: 2, .. }) => {
                let same_part_copy0 = plan.placement.iter().enumerate().any(|(w, q)| {
                    plan.part_of[w] == plan.part_of[v] && matches!(q, SymbolicPoint::BallOrbit { copy: 0, .. })
                });
                let no_odd_copies = plan.placement.iter().enumerate().all(|(w, q)| {
                    plan.part_of[w] != plan.part_of[v] || !matches!(q, SymbolicPoint::BallOrbit { copy: 1 | 3, .. })
                });
                (same_part_copy0 && no_odd_copies).then_some(SymbolicPoint::BallOrbit { copy: 0, id })
            }
            (ScenarioKind::Inversion2, SymbolicPoint::SideB { .. }) => Some(SymbolicPoint::SideA { id }),
            _ => None,
        };
        if let Some(q) = moved {
            let mut m = plan.clone();
            m.placement[v] = q;
            return Some(m);
        }
    }
    None
}

fn move_aux_off_line(plan: &EmbeddingPlan) -> Option<EmbeddingPlan> {
    if plan.scenario.kind != ScenarioKind::Rotoreflection4 {
        return None;
    }
    let a = plan
        .auxiliary
        .iter()
        .find(|a| matches!(a.point, SymbolicPoint::CircleL { .. }))?;
    let mut m = plan.clone();
    set_point(&mut m, a.vertex, SymbolicPoint::BallOrbit { copy: 0, id: fresh_id(plan) });
    Some(m)
}

fn move_aux_into_arc(plan: &EmbeddingPlan) -> Option<EmbeddingPlan> {
    let pts = plan.points();
    let at_o = pts.iter().position(|p| *p == SymbolicPoint::PointO)?;
    let adjacent_to_o: Vec<usize> = plan
        .adjacent_pairs()
        .into_iter()
        .filter_map(|(u, v)| match (u == at_o, v == at_o) {
            (true, _) => Some(v),
            (_, true) => Some(u),
            _ => None,
        })
        .collect();
    let nearest = circle_vertices(plan)
        .into_iter()
        .filter(|(v, a)| adjacent_to_o.contains(v) && a.in_upper_arc())
        .map(|(_, a)| a)
        .min()?;
    let a = plan
        .auxiliary
        .iter()
        .find(|a| matches!(a.point, SymbolicPoint::CircleL { angle } if angle.in_upper_arc() && nearest < angle))?;
    let SymbolicPoint::CircleL { angle } = a.point else { unreachable!() };
    let partner = plan
        .auxiliary
        .iter()
        .find(|b| b.point == SymbolicPoint::circle(angle.neg()));
    let target = nearest.half();
    let mut m = plan.clone();
    set_point(&mut m, a.vertex, SymbolicPoint::circle(target));
    if let Some(b) = partner {
        set_point(&mut m, b.vertex, SymbolicPoint::circle(target.neg()));
    }
    Some(m)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classifier::classify;
    use crate::embedding::{build_plan, check_lemma1};
    use crate::partition::PartitionSpec;

    fn plan_for(sizes: &[u32]) -> EmbeddingPlan {
        let v = classify(&PartitionSpec::canonicalize(sizes).unwrap());
        build_plan(v.witness.as_ref().unwrap()).unwrap()
    }

    fn killed(m: &EmbeddingPlan) -> bool {
        match check_lemma1(m) {
            Ok(r) => !r.passed(),
            Err(_) => true,
        }
    }

    #[test]
    fn aux_moved_into_ball_is_caught() {
        // [3,3] four times over: G1 = [3], so the plan has aux vertices on ℓ
        let p = plan_for(&[3, 3, 3, 3, 1, 1, 1, 1]);
        let m = Mutation::MoveAuxOffLine.apply(&p).unwrap();
        assert!(killed(&m));
    }

    #[test]
    fn aux_moved_into_arc_breaks_c() {
        let p = plan_for(&[1, 1, 1, 1, 3, 3]);
        assert!(check_lemma1(&p).unwrap().passed());
        if let Some(m) = Mutation::MoveAuxIntoArc.apply(&p) {
            let r = check_lemma1(&m).unwrap();
            assert!(!r.hypothesis_c.passed, "{:?}", r.failures());
        }
    }

    #[test]
    fn every_operator_kills_a_sample() {
        let plans: Vec<_> = [&[3u32, 3, 1][..], &[2, 2, 5], &[1, 1, 1, 1, 3, 3], &[6, 6, 3, 3], &[2, 2, 2, 2, 1, 1, 1, 1]]
            .iter()
            .map(|s| plan_for(s))
            .collect();
        for op in Mutation::ALL {
            for p in &plans {
                if let Some(m) = op.apply(p) {
                    assert!(killed(&m), "{} survived on {}", op.name(), p.spec);
                }
            }
        }
    }
}
