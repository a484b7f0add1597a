use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use super::point::{apply_group, Angle, FixedSet, ScenarioKind, SymbolicPoint, SymmetryScenario};
use crate::classifier::{validate_witness, QKind, Theorem1Witness, Theorem2Witness, Theorem3Witness, Witness};
use crate::error::{Error, Result};
use crate::partition::PartitionSpec;

/// Valence-2 vertex subdividing `edge`. Its vertex number in γ′ is `vertex`,
/// which always equals the number of original vertices plus its list index.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AuxiliaryVertex {
    pub vertex: usize,
    pub edge: (usize, usize),
    pub point: SymbolicPoint,
}

/// Symbolic placement of the vertices of a complete multipartite graph, plus
/// the auxiliary vertices of the associated graph γ′.
///
/// Original vertices are numbered `0..n` and grouped into parts by `part_of`;
/// auxiliary vertices follow them. Adjacency of γ′: original vertices in
/// different parts are adjacent unless their edge is subdivided, and each
/// auxiliary vertex is adjacent to the two ends of its edge.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingPlan {
    pub scenario: SymmetryScenario,
    pub spec: PartitionSpec,
    pub part_of: Vec<usize>,
    pub placement: Vec<SymbolicPoint>,
    pub auxiliary: Vec<AuxiliaryVertex>,
    pub construction_case: String,
}

impl EmbeddingPlan {
    pub fn n_original(&self) -> usize {
        self.placement.len()
    }

    pub fn n_total(&self) -> usize {
        self.placement.len() + self.auxiliary.len()
    }

    /// Points of every γ′ vertex, originals first.
    pub fn points(&self) -> Vec<SymbolicPoint> {
        let mut pts = self.placement.clone();
        pts.extend(self.auxiliary.iter().map(|a| a.point));
        pts
    }

    pub fn is_auxiliary(&self, v: usize) -> bool {
        v >= self.placement.len()
    }

    /// Number of vertices in each part, by part index.
    pub fn part_sizes(&self) -> Vec<u32> {
        let n_parts = self.part_of.iter().map(|&p| p + 1).max().unwrap_or(0);
        let mut sizes = vec![0u32; n_parts];
        for &p in &self.part_of {
            sizes[p] += 1;
        }
        sizes
    }

    /// Edges of γ′ as `(u, v)` with `u < v`.
    pub fn adjacent_pairs(&self) -> Vec<(usize, usize)> {
        let n = self.n_original();
        let subdivided: BTreeSet<(usize, usize)> =
            self.auxiliary.iter().map(|a| ordered(a.edge)).collect();
        let mut out = Vec::new();
        for u in 0..n {
            for v in (u + 1)..n {
                if self.part_of[u] != self.part_of[v] && !subdivided.contains(&(u, v)) {
                    out.push((u, v));
                }
            }
        }
        for a in &self.auxiliary {
            let (u, v) = ordered(a.edge);
            out.push((u, a.vertex));
            out.push((v, a.vertex));
        }
        out
    }

    /// The permutation of γ′ vertices induced by the generator `h`.
    pub fn generator(&self) -> Result<Vec<usize>> {
        induced_permutation(&self.scenario, &self.points())
    }
}

pub(crate) fn ordered((u, v): (usize, usize)) -> (usize, usize) {
    (u.min(v), u.max(v))
}

/// Reads off how `h` permutes the placed points. Fails when two vertices share
/// a point, when a point is outside the scenario's vocabulary, or when the
/// image of a placed point is not placed.
pub fn induced_permutation(scenario: &SymmetryScenario, points: &[SymbolicPoint]) -> Result<Vec<usize>> {
    let mut index = HashMap::with_capacity(points.len());
    for (v, p) in points.iter().enumerate() {
        if let Some(w) = index.insert(*p, v) {
            return Err(Error::MalformedPlan(format!(
                "vertices {w} and {v} are both placed at {p}"
            )));
        }
    }
    points
        .iter()
        .enumerate()
        .map(|(v, p)| {
            let q = apply_group(scenario, 1, *p).ok_or_else(|| {
                Error::MalformedPlan(format!("vertex {v} at {p} is outside the {:?} vocabulary", scenario.kind))
            })?;
            index.get(&q).copied().ok_or_else(|| {
                Error::MalformedPlan(format!("image {q} of vertex {v} at {p} is not a placed point"))
            })
        })
        .collect()
}

pub(crate) fn power_of(gen: &[usize], k: u32) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..gen.len()).collect();
    for _ in 0..k {
        perm = perm.iter().map(|&v| gen[v]).collect();
    }
    perm
}

/// Adjacent pairs of original vertices that some nontrivial group element
/// swaps. Computed from the placement; auxiliary vertices are ignored.
pub fn subdivide_for_interchanges(plan: &EmbeddingPlan) -> Result<Vec<(usize, usize)>> {
    let gen = induced_permutation(&plan.scenario, &plan.placement)?;
    let mut out = BTreeSet::new();
    for k in 1..plan.scenario.group_order as u32 {
        let g = power_of(&gen, k);
        for u in 0..gen.len() {
            let v = g[u];
            if u < v && g[v] == u && plan.part_of[u] != plan.part_of[v] {
                out.insert((u, v));
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// Placeholder for a point while slots on ℓ are still being handed out.
/// `Upper(s)` and `Lower(s)` become the angles `±s/d` once the common
/// denominator `d` is known.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Proto {
    At(SymbolicPoint),
    Upper(u32),
    Lower(u32),
}

impl Proto {
    fn image(self, scenario: &SymmetryScenario, power: u32) -> Proto {
        let odd = power % 2 == 1;
        match self {
            Proto::At(p) => Proto::At(apply_group(scenario, power, p).expect("builder stays in vocabulary")),
            Proto::Upper(s) if odd => Proto::Lower(s),
            Proto::Lower(s) if odd => Proto::Upper(s),
            other => other,
        }
    }
}

fn materialize(protos: &[Proto]) -> Vec<SymbolicPoint> {
    let on_l = protos.iter().filter(|p| !matches!(p, Proto::At(_))).count() as u32;
    let den = 4 * (on_l + 2);
    protos
        .iter()
        .map(|p| match *p {
            Proto::At(q) => q,
            Proto::Upper(s) => SymbolicPoint::circle(Angle::new(s, den)),
            Proto::Lower(s) => SymbolicPoint::circle(Angle::new(s, den).neg()),
        })
        .collect()
}

struct Builder {
    scenario: SymmetryScenario,
    part_of: Vec<usize>,
    protos: Vec<Proto>,
    n_parts: usize,
    next_id: u32,
    next_slot: u32,
}

impl Builder {
    fn new(kind: ScenarioKind) -> Self {
        Self {
            scenario: SymmetryScenario::new(kind),
            part_of: Vec::new(),
            protos: Vec::new(),
            n_parts: 0,
            next_id: 0,
            next_slot: 1,
        }
    }

    fn ids(&mut self, count: u32) -> Vec<u32> {
        let start = self.next_id;
        self.next_id += count;
        (start..self.next_id).collect()
    }

    fn slots(&mut self, count: u32) -> Vec<u32> {
        let start = self.next_slot;
        self.next_slot += count;
        (start..self.next_slot).collect()
    }

    fn add_part(&mut self, points: Vec<Proto>) {
        for p in points {
            self.part_of.push(self.n_parts);
            self.protos.push(p);
        }
        self.n_parts += 1;
    }

    fn balls(ids: &[u32], copies: &[u8]) -> Vec<Proto> {
        ids.iter()
            .flat_map(|&id| copies.iter().map(move |&copy| Proto::At(SymbolicPoint::BallOrbit { copy, id })))
            .collect()
    }

    fn is_free(&self, taken: &[Proto], p: SymbolicPoint) -> bool {
        !self.protos.iter().chain(taken).any(|q| *q == Proto::At(p))
    }

    /// Subdivides every interchanged edge and places the auxiliary orbits.
    fn finish(mut self, spec: PartitionSpec, case: &str) -> Result<EmbeddingPlan> {
        let mut plan = EmbeddingPlan {
            scenario: self.scenario.clone(),
            spec,
            part_of: self.part_of.clone(),
            placement: materialize(&self.protos),
            auxiliary: Vec::new(),
            construction_case: case.to_string(),
        };
        let edges = subdivide_for_interchanges(&plan)?;
        let gen = induced_permutation(&plan.scenario, &plan.placement)?;
        let order = self.scenario.group_order as u32;
        let mut aux: Vec<((usize, usize), Proto)> = Vec::new();
        for e in edges {
            if aux.iter().any(|(f, _)| *f == e) {
                continue;
            }
            let image = |k: u32| {
                let g = power_of(&gen, k);
                ordered((g[e.0], g[e.1]))
            };
            let stabilizer: Vec<u32> = (1..order).filter(|&k| image(k) == e).collect();
            let fixes: Vec<FixedSet> = stabilizer
                .iter()
                .filter_map(|&k| self.scenario.fixed_set(k))
                .collect();
            let taken: Vec<Proto> = aux.iter().map(|(_, p)| *p).collect();
            let base = if fixes.contains(&FixedSet::OInf) || fixes.contains(&FixedSet::SphereP) {
                let prefer = match self.scenario.kind {
                    ScenarioKind::Inversion2 => [SymbolicPoint::PointInfinity, SymbolicPoint::PointO],
                    _ => [SymbolicPoint::PointO, SymbolicPoint::PointInfinity],
                };
                match prefer.into_iter().find(|&p| self.is_free(&taken, p)) {
                    Some(p) => Proto::At(p),
                    None if fixes.iter().all(|f| *f == FixedSet::SphereP) => {
                        let id = self.ids(1)[0];
                        Proto::At(SymbolicPoint::SphereP { id, pair: id })
                    }
                    None => {
                        return Err(Error::InvalidWitness(
                            "no free fixed point left for an auxiliary vertex".into(),
                        ))
                    }
                }
            } else if fixes.contains(&FixedSet::CircleL) {
                Proto::Upper(self.slots(1)[0])
            } else {
                return Err(Error::InvalidWitness(format!("edge {e:?} has an empty stabilizer")));
            };
            for k in 0..order {
                let f = image(k);
                if !aux.iter().any(|(g, _)| *g == f) {
                    aux.push((f, base.image(&self.scenario, k)));
                }
            }
        }
        let n = self.protos.len();
        let mut all = self.protos.clone();
        all.extend(aux.iter().map(|(_, p)| *p));
        let points = materialize(&all);
        plan.placement = points[..n].to_vec();
        plan.auxiliary = aux
            .iter()
            .enumerate()
            .map(|(i, (edge, _))| AuxiliaryVertex {
                vertex: n + i,
                edge: *edge,
                point: points[n + i],
            })
            .collect();
        Ok(plan)
    }
}

/// The spec a witness describes, reassembled from its roles.
pub fn witness_spec(witness: &Witness) -> Result<PartitionSpec> {
    let mut sizes = Vec::new();
    match witness {
        Witness::Rotoreflection(w) => {
            for &s in w.g1.sizes() {
                sizes.extend([s; 4]);
            }
            for &s in w.g2.sizes() {
                sizes.extend([s; 2]);
            }
            sizes.extend_from_slice(w.g3.sizes());
            sizes.extend_from_slice(&w.qs);
        }
        Witness::Inversion(w) => {
            sizes.extend_from_slice(w.g.sizes());
            sizes.extend_from_slice(&w.qs);
        }
        Witness::Reflection(w) => {
            sizes.extend_from_slice(w.gp.sizes());
            sizes.extend_from_slice(&w.q_sizes);
        }
    }
    PartitionSpec::canonicalize(&sizes).map_err(|e| Error::InvalidWitness(e.to_string()))
}

/// Builds the symbolic vertex placement that the witness's construction
/// case prescribes, subdividing interchanged edges as needed.
pub fn build_plan(witness: &Witness) -> Result<EmbeddingPlan> {
    let spec = witness_spec(witness)?;
    validate_witness(&spec, witness).map_err(Error::InvalidWitness)?;
    match witness {
        Witness::Rotoreflection(w) => build_rotoreflection(spec, w),
        Witness::Inversion(w) => build_inversion(spec, w),
        Witness::Reflection(w) => build_reflection(spec, w),
    }
}

fn build_rotoreflection(spec: PartitionSpec, w: &Theorem1Witness) -> Result<EmbeddingPlan> {
    let mut b = Builder::new(ScenarioKind::Rotoreflection4);
    for &s in w.g1.sizes() {
        let ids = b.ids(s);
        for copy in 0..4 {
            b.add_part(Builder::balls(&ids, &[copy]));
        }
    }
    for &s in w.g2.sizes() {
        let ids = b.ids(s / 2);
        b.add_part(Builder::balls(&ids, &[0, 2]));
        b.add_part(Builder::balls(&ids, &[1, 3]));
    }
    for &s in w.g3.sizes() {
        let ids = b.ids(s / 4);
        b.add_part(Builder::balls(&ids, &[0, 1, 2, 3]));
    }
    let all_copies = [0u8, 1, 2, 3];
    let label = match (w.case, w.qs.as_slice()) {
        (1, []) => "T1.1a",
        (1, &[q]) => {
            let slots = b.slots(q / 2);
            let mut pts: Vec<Proto> = slots.iter().map(|&s| Proto::Upper(s)).collect();
            pts.extend(slots.iter().map(|&s| Proto::Lower(s)));
            if q % 2 == 1 {
                pts.push(Proto::At(SymbolicPoint::PointO));
            }
            b.add_part(pts);
            "T1.1b"
        }
        (2 | 3, &[q, _, ..]) => {
            let ids = b.ids(q / 2);
            let v1 = b.slots(1)[0];
            let mut q1 = Builder::balls(&ids, &[0, 2]);
            q1.push(Proto::Upper(v1));
            let mut q2 = Builder::balls(&ids, &[1, 3]);
            q2.push(Proto::Lower(v1));
            b.add_part(q1);
            b.add_part(q2);
            if let Some(&x) = w.qs.get(2) {
                let ids = b.ids(x / 4);
                let mut q3 = Builder::balls(&ids, &all_copies);
                q3.push(Proto::At(SymbolicPoint::PointInfinity));
                b.add_part(q3);
                "T1.3"
            } else {
                "T1.2"
            }
        }
        (4 | 5, &[x, y]) => {
            let ids = b.ids(x / 4);
            let v1 = b.slots(1)[0];
            let mut q1 = Builder::balls(&ids, &all_copies);
            q1.extend([Proto::Upper(v1), Proto::Lower(v1)]);
            b.add_part(q1);
            let ids = b.ids(y / 4);
            let mut q2 = Builder::balls(&ids, &all_copies);
            q2.push(Proto::At(SymbolicPoint::PointO));
            if w.case == 5 {
                q2.push(Proto::At(SymbolicPoint::PointInfinity));
            }
            b.add_part(q2);
            if w.case == 4 {
                "T1.4"
            } else {
                "T1.5"
            }
        }
        _ => return Err(Error::InvalidWitness(format!("unexpected q-parts {:?} for case {}", w.qs, w.case))),
    };
    b.finish(spec, label)
}

fn build_inversion(spec: PartitionSpec, w: &Theorem2Witness) -> Result<EmbeddingPlan> {
    let mut b = Builder::new(ScenarioKind::Inversion2);
    let sides = |ids: &[u32]| -> Vec<Proto> {
        ids.iter()
            .map(|&id| Proto::At(SymbolicPoint::SideA { id }))
            .chain(ids.iter().map(|&id| Proto::At(SymbolicPoint::SideB { id })))
            .collect()
    };
    for &s in w.g.sizes() {
        let ids = b.ids(s / 2);
        b.add_part(sides(&ids));
    }
    let odd_part = |b: &mut Builder, q: u32| {
        let ids = b.ids(q / 2);
        let mut pts = sides(&ids);
        pts.push(Proto::At(SymbolicPoint::PointO));
        b.add_part(pts);
    };
    let swapped_pair = |b: &mut Builder| {
        let ids = b.ids(2);
        b.add_part(vec![Proto::At(SymbolicPoint::SphereP { id: ids[0], pair: ids[1] })]);
        b.add_part(vec![Proto::At(SymbolicPoint::SphereP { id: ids[1], pair: ids[0] })]);
    };
    match (w.case, w.qs.as_slice()) {
        (1, []) => {}
        (2, &[q]) => odd_part(&mut b, q),
        (3, &[1, 1]) => swapped_pair(&mut b),
        (3, &[1, 1, q]) => {
            odd_part(&mut b, q);
            swapped_pair(&mut b);
        }
        (4, &[1, 1, 1, 1]) => {
            swapped_pair(&mut b);
            swapped_pair(&mut b);
        }
        _ => return Err(Error::InvalidWitness(format!("unexpected q-parts {:?} for case {}", w.qs, w.case))),
    }
    let label = format!("T2.{}", w.case);
    b.finish(spec, &label)
}

fn build_reflection(spec: PartitionSpec, w: &Theorem3Witness) -> Result<EmbeddingPlan> {
    let mut b = Builder::new(ScenarioKind::Reflection2);
    for &s in w.gp.sizes() {
        let ids = b.ids(s);
        b.add_part(ids.iter().map(|&id| Proto::At(SymbolicPoint::SphereP { id, pair: id })).collect());
    }
    let paired = |slots: &[u32]| -> Vec<Proto> {
        slots
            .iter()
            .map(|&s| Proto::Upper(s))
            .chain(slots.iter().map(|&s| Proto::Lower(s)))
            .collect()
    };
    let label = match (w.q_kind, w.q_sizes.as_slice()) {
        (QKind::EvenSet, []) => "T3.even",
        (QKind::EvenSet, &[q]) => {
            let slots = b.slots(q / 2);
            b.add_part(paired(&slots));
            "T3.even"
        }
        (QKind::OddSet, &[q]) => {
            let slots = b.slots(q / 2);
            let id = b.ids(1)[0];
            let mut pts = paired(&slots);
            pts.push(Proto::At(SymbolicPoint::SphereP { id, pair: id }));
            b.add_part(pts);
            "T3.odd"
        }
        (QKind::K11, [1, 1]) => {
            let s = b.slots(1)[0];
            b.add_part(vec![Proto::Upper(s)]);
            b.add_part(vec![Proto::Lower(s)]);
            "T3.K11"
        }
        (QKind::K22, [2, 2]) => {
            let s = b.slots(2);
            // a, b, a, b around ℓ
            b.add_part(vec![Proto::Upper(s[0]), Proto::Lower(s[1])]);
            b.add_part(vec![Proto::Upper(s[1]), Proto::Lower(s[0])]);
            "T3.K22"
        }
        _ => {
            return Err(Error::InvalidWitness(format!(
                "unexpected Q {:?} for kind {}",
                w.q_sizes, w.q_kind
            )))
        }
    };
    b.finish(spec, label)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::classifier::classify;

    fn plan_for(sizes: &[u32]) -> EmbeddingPlan {
        let v = classify(&PartitionSpec::canonicalize(sizes).unwrap());
        build_plan(v.witness.as_ref().unwrap()).unwrap()
    }

    #[test]
    fn inversion_case2_puts_last_vertex_at_o() {
        let w = Witness::Inversion(Theorem2Witness {
            g: PartitionSpec::canonicalize(&[2, 2]).unwrap(),
            qs: vec![5],
            case: 2,
        });
        let p = build_plan(&w).unwrap();
        assert_eq!(p.construction_case, "T2.2");
        let sides_a = p.placement.iter().filter(|q| matches!(q, SymbolicPoint::SideA { .. })).count();
        let sides_b = p.placement.iter().filter(|q| matches!(q, SymbolicPoint::SideB { .. })).count();
        assert_eq!((sides_a, sides_b), (4, 4));
        assert_eq!(p.placement.last(), Some(&SymbolicPoint::PointO));
        assert!(p.auxiliary.is_empty());
    }

    #[test]
    fn rotoreflection_case3_for_331() {
        let w = Witness::Rotoreflection(Theorem1Witness {
            g1: PartitionSpec::empty(),
            g2: PartitionSpec::empty(),
            g3: PartitionSpec::empty(),
            qs: vec![3, 3, 1],
            case: 3,
        });
        let p = build_plan(&w).unwrap();
        assert_eq!(p.construction_case, "T1.3");
        assert!(p.placement.contains(&SymbolicPoint::PointInfinity));
        assert_eq!(p.auxiliary.len(), 1);
        assert_eq!(p.auxiliary[0].point, SymbolicPoint::PointO);
        let on_l = p.placement.iter().filter(|q| matches!(q, SymbolicPoint::CircleL { .. })).count();
        assert_eq!(on_l, 2);
    }

    #[test]
    fn case_1a_subdivides_every_g1_pair() {
        let w = Witness::Rotoreflection(Theorem1Witness {
            g1: PartitionSpec::canonicalize(&[2]).unwrap(),
            g2: PartitionSpec::empty(),
            g3: PartitionSpec::empty(),
            qs: vec![],
            case: 1,
        });
        let p = build_plan(&w).unwrap();
        assert_eq!(p.construction_case, "T1.1a");
        // |V1| = 2, so four edges v–h²(v) for v in V1 ∪ h(V1)
        assert_eq!(p.auxiliary.len(), 4);
        assert!(p.auxiliary.iter().all(|a| matches!(a.point, SymbolicPoint::CircleL { .. })));
    }

    #[test]
    fn inversion_case4_aux_at_o_and_infinity() {
        let p = plan_for(&[1, 1, 1, 1, 2, 2, 2]);
        assert_eq!(p.construction_case, "T2.4");
        let pts: Vec<_> = p.auxiliary.iter().map(|a| a.point).collect();
        assert_eq!(pts.len(), 2);
        assert!(pts.contains(&SymbolicPoint::PointO) && pts.contains(&SymbolicPoint::PointInfinity));
    }

    #[test]
    fn inversion_case1_needs_no_subdivision() {
        let w = Witness::Inversion(Theorem2Witness {
            g: PartitionSpec::canonicalize(&[4, 2, 2]).unwrap(),
            qs: vec![],
            case: 1,
        });
        let p = build_plan(&w).unwrap();
        assert!(subdivide_for_interchanges(&p).unwrap().is_empty());
    }

    #[test]
    fn reflection_even_q_on_octahedron() {
        let w = Witness::Reflection(Theorem3Witness {
            gp: PartitionSpec::canonicalize(&[2, 2, 2]).unwrap(),
            q_kind: QKind::EvenSet,
            q_sizes: vec![8],
        });
        let p = build_plan(&w).unwrap();
        let upper = p
            .placement
            .iter()
            .filter(|q| matches!(q, SymbolicPoint::CircleL { angle } if angle.in_upper_arc()))
            .count();
        assert_eq!(upper, 4);
        assert_eq!(p.placement.iter().filter(|q| matches!(q, SymbolicPoint::SphereP { .. })).count(), 6);
    }

    #[test]
    fn aux_images_pair_up() {
        let p = plan_for(&[2, 2, 2, 2, 1, 1, 1, 1]);
        let gen = p.generator().unwrap();
        for a in &p.auxiliary {
            let img = gen[a.vertex];
            let e = ordered((gen[a.edge.0], gen[a.edge.1]));
            let b = p.auxiliary.iter().find(|b| b.vertex == img).unwrap();
            assert_eq!(ordered(b.edge), e);
        }
    }

    #[test]
    fn invalid_witness_rejected() {
        let w = Witness::Inversion(Theorem2Witness {
            g: PartitionSpec::canonicalize(&[3]).unwrap(),
            qs: vec![],
            case: 1,
        });
        assert!(matches!(build_plan(&w), Err(Error::InvalidWitness(_))));
    }
}
