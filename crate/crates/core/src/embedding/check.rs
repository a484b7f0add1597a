//! Checks a plan against the four hypotheses of the edge-embedding lemma:
//!
//! * (a) an adjacent pair fixed pointwise by two nontrivial elements has the
//!   same fixed set under both;
//! * (b) no adjacent pair is swapped by a group element;
//! * (c) an adjacent pair fixed pointwise by `g` bounds an arc of `fix(g)`
//!   whose interior misses every vertex and `Y − fix(g)`;
//! * (d) every adjacent pair lies in one component of `S³ − Y`.
//!
//! For `fix(g) = ℓ` the arc condition is read on the cyclic order of all
//! placed points of ℓ. For `fix(g) = {O, ∞}` no arc exists, so any such pair
//! fails. For `fix(g) = P` the pairs inside `P` must be drawable in `P` at
//! once, which is checked as planarity of the subgraph placed on `P`.
//! For (d), a point of `Y` counts as belonging to every component whose
//! closure contains it; pairs that pass only this way are listed separately.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use super::plan::{induced_permutation, ordered, power_of, EmbeddingPlan};
use super::point::{apply_group, in_vocabulary, Angle, FixedSet, ScenarioKind, SymbolicPoint, SymmetryScenario};
use crate::error::{Error, Result};
use crate::graph::SimpleGraph;
use crate::oracle::kuratowski_search_with_limit;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairViolation {
    pub pair: (usize, usize),
    /// Power of the generator involved, when one is.
    pub element: Option<u32>,
    pub detail: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypothesisCheck {
    pub passed: bool,
    pub pairs_examined: usize,
    pub violations: Vec<PairViolation>,
}

impl HypothesisCheck {
    fn new() -> Self {
        Self {
            passed: true,
            ..Self::default()
        }
    }

    fn fail(&mut self, pair: (usize, usize), element: Option<u32>, detail: impl Into<String>) {
        self.passed = false;
        self.violations.push(PairViolation {
            pair,
            element,
            detail: detail.into(),
        });
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckReport {
    pub hypothesis_a: HypothesisCheck,
    pub hypothesis_b: HypothesisCheck,
    pub hypothesis_c: HypothesisCheck,
    pub hypothesis_d: HypothesisCheck,
    /// Adjacent pairs with an endpoint in `Y`, accepted for (d) through the
    /// closure convention.
    pub closure_convention_pairs: Vec<(usize, usize)>,
    /// The induced vertex permutation matches the point action and is an
    /// automorphism of γ′ that respects parts.
    pub equivariant: bool,
    pub equivariance_issues: Vec<String>,
    /// Distinct group elements induce distinct permutations.
    pub faithful: bool,
    /// Every vertex lies on the fixed sphere, so the reflection acts
    /// trivially; such plans embed the graph in `P` directly.
    pub faithfulness_waived: bool,
}

impl CheckReport {
    pub fn hypotheses_passed(&self) -> bool {
        self.hypothesis_a.passed && self.hypothesis_b.passed && self.hypothesis_c.passed && self.hypothesis_d.passed
    }

    pub fn passed(&self) -> bool {
        self.hypotheses_passed() && self.equivariant && (self.faithful || self.faithfulness_waived)
    }

    /// One line per problem found.
    pub fn failures(&self) -> Vec<String> {
        let mut out = Vec::new();
        for (name, h) in [
            ("a", &self.hypothesis_a),
            ("b", &self.hypothesis_b),
            ("c", &self.hypothesis_c),
            ("d", &self.hypothesis_d),
        ] {
            for v in &h.violations {
                out.push(format!("({name}) pair {:?}: {}", v.pair, v.detail));
            }
        }
        out.extend(self.equivariance_issues.iter().map(|s| format!("equivariance: {s}")));
        if !self.faithful && !self.faithfulness_waived {
            out.push("action on γ′ is not faithful".into());
        }
        out
    }
}

fn malformed(msg: impl Into<String>) -> Error {
    Error::MalformedPlan(msg.into())
}

fn check_structure(plan: &EmbeddingPlan) -> Result<()> {
    if !plan.scenario.is_well_formed() {
        return Err(malformed("scenario does not match its kind"));
    }
    let n = plan.n_original();
    if plan.part_of.len() != n {
        return Err(malformed(format!("{} part labels for {n} vertices", plan.part_of.len())));
    }
    if n != plan.spec.n_vertices() {
        return Err(malformed(format!("{n} placed vertices, spec has {}", plan.spec.n_vertices())));
    }
    let mut sizes = plan.part_sizes();
    if sizes.contains(&0) {
        return Err(malformed("part indices are not contiguous"));
    }
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    if sizes != plan.spec.sizes() {
        return Err(malformed(format!("part sizes {sizes:?} differ from spec {}", plan.spec)));
    }
    for (v, p) in plan.points().iter().enumerate() {
        if let SymbolicPoint::CircleL { angle } = p {
            if !angle.is_reduced() {
                return Err(malformed(format!("vertex {v}: angle {angle} not reduced")));
            }
            if angle.is_reserved() {
                return Err(malformed(format!("vertex {v}: angle {angle} is reserved for O or ∞")));
            }
        }
        if !in_vocabulary(plan.scenario.kind, p) {
            return Err(malformed(format!("vertex {v}: {p} not allowed in {:?}", plan.scenario.kind)));
        }
    }
    let mut seen = BTreeSet::new();
    for (i, a) in plan.auxiliary.iter().enumerate() {
        if a.vertex != n + i {
            return Err(malformed(format!("auxiliary {i} numbered {}, expected {}", a.vertex, n + i)));
        }
        let (u, v) = a.edge;
        if u >= n || v >= n || plan.part_of[u] == plan.part_of[v] {
            return Err(malformed(format!("auxiliary {i} subdivides non-edge {:?}", a.edge)));
        }
        if !seen.insert(ordered(a.edge)) {
            return Err(malformed(format!("edge {:?} subdivided twice", a.edge)));
        }
    }
    Ok(())
}

fn equivariance_issues(plan: &EmbeddingPlan, points: &[SymbolicPoint], gen: &[usize]) -> Vec<String> {
    let mut issues = Vec::new();
    let n = plan.n_original();
    let order = plan.scenario.group_order as u32;
    for k in 1..order {
        let g = power_of(gen, k);
        for v in 0..points.len() {
            if apply_group(&plan.scenario, k, points[v]) != Some(points[g[v]]) {
                issues.push(format!("h^{k} moves vertex {v} off its point image"));
            }
        }
    }
    let mut part_map: HashMap<usize, usize> = HashMap::new();
    for v in 0..n {
        if gen[v] >= n {
            issues.push(format!("original vertex {v} maps to auxiliary vertex {}", gen[v]));
            continue;
        }
        let (p, q) = (plan.part_of[v], plan.part_of[gen[v]]);
        match part_map.insert(p, q) {
            Some(old) if old != q => issues.push(format!("part {p} is sent to both part {old} and part {q}")),
            _ => {}
        }
    }
    let images: BTreeSet<usize> = part_map.values().copied().collect();
    if images.len() != part_map.len() {
        issues.push("two parts are sent to the same part".into());
    }
    for a in &plan.auxiliary {
        let img = gen[a.vertex];
        let want = ordered((gen[a.edge.0], gen[a.edge.1]));
        match plan.auxiliary.iter().find(|b| b.vertex == img) {
            Some(b) if ordered(b.edge) == want => {}
            Some(b) => issues.push(format!(
                "auxiliary {} on {:?} maps to auxiliary {} on {:?}, expected edge {want:?}",
                a.vertex, a.edge, b.vertex, b.edge
            )),
            None => issues.push(format!("auxiliary {} maps to original vertex {img}", a.vertex)),
        }
    }
    issues
}

fn in_y(scenario: &SymmetryScenario, p: &SymbolicPoint) -> bool {
    match scenario.y {
        FixedSet::OInf => p.is_o_or_infinity(),
        FixedSet::CircleL => p.position_on_l().is_some(),
        FixedSet::SphereP => p.is_o_or_infinity() || matches!(p, SymbolicPoint::SphereP { .. }),
    }
}

/// Components of `S³ − Y` whose closure holds `p`, as a bitmask.
fn closure_components(kind: ScenarioKind, p: &SymbolicPoint) -> u8 {
    match kind {
        ScenarioKind::Rotoreflection4 | ScenarioKind::Inversion2 => 1,
        ScenarioKind::Reflection2 => match p {
            SymbolicPoint::SideA { .. } => 1,
            SymbolicPoint::SideB { .. } => 2,
            SymbolicPoint::CircleL { angle } if angle.in_upper_arc() => 1,
            SymbolicPoint::CircleL { .. } => 2,
            _ => 3,
        },
    }
}

/// Some arc of ℓ from `a` to `b` has no placed point in its interior.
fn consecutive_on_l(a: Angle, b: Angle, all: &[Angle]) -> bool {
    let (lo, hi) = if a < b { (a, b) } else { (b, a) };
    let inner_clear = !all.iter().any(|&x| lo < x && x < hi);
    let outer_clear = !all.iter().any(|&x| x < lo || hi < x);
    inner_clear || outer_clear
}

pub fn check_lemma1(plan: &EmbeddingPlan) -> Result<CheckReport> {
    check_structure(plan)?;
    let points = plan.points();
    let gen = induced_permutation(&plan.scenario, &points)?;
    let scenario = &plan.scenario;
    let order = scenario.group_order as u32;
    let powers: Vec<Vec<usize>> = (0..order).map(|k| power_of(&gen, k)).collect();

    let equivariance_issues = equivariance_issues(plan, &points, &gen);
    let faithful = (1..order as usize).all(|k| powers[k] != powers[0]);
    let faithfulness_waived = !faithful
        && scenario.kind == ScenarioKind::Reflection2
        && points.iter().all(|p| in_y(scenario, p));

    let on_l: Vec<Angle> = points.iter().filter_map(|p| p.position_on_l()).collect();
    let mut a = HypothesisCheck::new();
    let mut b = HypothesisCheck::new();
    let mut c = HypothesisCheck::new();
    let mut d = HypothesisCheck::new();
    let mut closure_convention_pairs = Vec::new();
    let mut on_sphere: Vec<(usize, usize)> = Vec::new();

    for (u, v) in plan.adjacent_pairs() {
        let pair = (u, v);
        let fixers: Vec<u32> = (1..order)
            .filter(|&k| powers[k as usize][u] == u && powers[k as usize][v] == v)
            .collect();

        a.pairs_examined += 1;
        let sets: BTreeSet<FixedSet> = fixers.iter().filter_map(|&k| scenario.fixed_set(k)).collect();
        if sets.len() > 1 {
            a.fail(pair, None, format!("fixed pointwise by elements with fixed sets {sets:?}"));
        }

        b.pairs_examined += 1;
        for k in 1..order {
            let g = &powers[k as usize];
            if g[u] == v && g[v] == u {
                b.fail(pair, Some(k), format!("swapped by h^{k}"));
            }
        }

        for &k in &fixers {
            c.pairs_examined += 1;
            match scenario.fixed_set(k) {
                Some(FixedSet::OInf) => c.fail(pair, Some(k), "pair at O and ∞ bounds no arc in fix(g)"),
                Some(FixedSet::CircleL) => {
                    let (pu, pv) = (points[u].position_on_l(), points[v].position_on_l());
                    match (pu, pv) {
                        (Some(x), Some(y)) if consecutive_on_l(x, y, &on_l) => {}
                        (Some(_), Some(_)) => {
                            c.fail(pair, Some(k), "both arcs of ℓ between the pair contain vertices")
                        }
                        _ => c.fail(pair, Some(k), "pair fixed by h² but not on ℓ"),
                    }
                }
                Some(FixedSet::SphereP) => {
                    if !on_sphere.contains(&pair) {
                        on_sphere.push(pair);
                    }
                }
                None => {}
            }
        }

        d.pairs_examined += 1;
        let (mu, mv) = (
            closure_components(scenario.kind, &points[u]),
            closure_components(scenario.kind, &points[v]),
        );
        if mu & mv == 0 {
            d.fail(pair, None, format!("{} and {} lie in different components", points[u], points[v]));
        } else if in_y(scenario, &points[u]) || in_y(scenario, &points[v]) {
            closure_convention_pairs.push(pair);
        }
    }

    if !on_sphere.is_empty() {
        let verts: Vec<usize> = on_sphere
            .iter()
            .flat_map(|&(u, v)| [u, v])
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let local: HashMap<usize, usize> = verts.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let edges: Vec<(usize, usize)> = on_sphere.iter().map(|&(u, v)| (local[&u], local[&v])).collect();
        let g = SimpleGraph::from_edges(verts.len(), &edges)?;
        if let Some(obs) = kuratowski_search_with_limit(&g, 64)? {
            let (x, y) = obs.required_pairs()[0];
            c.fail(
                (verts[x], verts[y]),
                Some(1),
                format!("pairs on P cannot be joined by disjoint arcs in P ({:?} subdivision)", obs.kind),
            );
        }
    }

    Ok(CheckReport {
        hypothesis_a: a,
        hypothesis_b: b,
        hypothesis_c: c,
        hypothesis_d: d,
        closure_convention_pairs,
        equivariant: equivariance_issues.is_empty(),
        equivariance_issues,
        faithful,
        faithfulness_waived,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classifier::classify;
    use crate::embedding::build_plan;
    use crate::partition::PartitionSpec;

    fn plan_for(sizes: &[u32]) -> EmbeddingPlan {
        let v = classify(&PartitionSpec::canonicalize(sizes).unwrap());
        build_plan(v.witness.as_ref().unwrap()).unwrap()
    }

    #[test]
    fn named_plans_pass() {
        for s in [&[1u32, 1, 1, 1, 1, 1][..], &[3, 3, 1], &[2, 2, 5], &[2, 2, 2, 8], &[5, 5, 2, 2]] {
            let r = check_lemma1(&plan_for(s)).unwrap();
            assert!(r.passed(), "{s:?}: {:?}", r.failures());
        }
    }

    #[test]
    fn adjacent_pair_at_o_and_infinity_fails_under_inversion() {
        let plan = EmbeddingPlan {
            scenario: SymmetryScenario::inversion2(),
            spec: PartitionSpec::canonicalize(&[1, 1]).unwrap(),
            part_of: vec![0, 1],
            placement: vec![SymbolicPoint::PointO, SymbolicPoint::PointInfinity],
            auxiliary: vec![],
            construction_case: "manual".into(),
        };
        let r = check_lemma1(&plan).unwrap();
        assert!(!r.hypothesis_c.passed);
        assert!(r.hypothesis_b.passed);
    }

    #[test]
    fn swapped_pair_fails_b() {
        let plan = EmbeddingPlan {
            scenario: SymmetryScenario::inversion2(),
            spec: PartitionSpec::canonicalize(&[1, 1]).unwrap(),
            part_of: vec![0, 1],
            placement: vec![SymbolicPoint::SideA { id: 0 }, SymbolicPoint::SideB { id: 0 }],
            auxiliary: vec![],
            construction_case: "manual".into(),
        };
        let r = check_lemma1(&plan).unwrap();
        assert!(!r.hypothesis_b.passed);
    }

    #[test]
    fn non_invariant_placement_is_malformed() {
        let plan = EmbeddingPlan {
            scenario: SymmetryScenario::rotoreflection4(),
            spec: PartitionSpec::canonicalize(&[1]).unwrap(),
            part_of: vec![0],
            placement: vec![SymbolicPoint::BallOrbit { copy: 0, id: 0 }],
            auxiliary: vec![],
            construction_case: "manual".into(),
        };
        assert!(matches!(check_lemma1(&plan), Err(Error::MalformedPlan(_))));
    }

    #[test]
    fn planar_graph_on_sphere_waives_faithfulness() {
        let r = check_lemma1(&plan_for(&[2, 2, 2])).unwrap();
        assert!(r.passed() && r.faithfulness_waived);
    }

    #[test]
    fn consecutive_points() {
        let all = [Angle::new(0, 1), Angle::new(1, 8), Angle::new(1, 2), Angle::new(7, 8)];
        assert!(consecutive_on_l(all[0], all[1], &all));
        assert!(consecutive_on_l(all[0], all[3], &all));
        assert!(!consecutive_on_l(all[0], all[2], &all));
    }
}
