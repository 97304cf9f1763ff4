//! Width-(t-2) connected partitions for graphs without a K_t minor, the
//! colourings they induce, and the certificate extracted when the
//! construction runs into a K_t minor instead.
//!
//! The partition is built part by part. Each new part is a skeleton over one
//! attachment vertex per adjacent earlier part, so parts inherit the skeleton
//! guarantees: max degree `t-2`, bandwidth `t-3`, a 2-colouring with
//! clustering `ceil((t-2)/2)`, a red/blue colouring with few red vertices,
//! and at most `2t-5` neighbours in each earlier part for every later
//! vertex. Whenever a remainder component touches `t-1` pairwise-adjacent
//! parts, those parts plus the component assemble a K_t minor model, which
//! is returned instead.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::graph::Graph;
use crate::oracles::validate_minor_model;
use crate::partition::{
    greedy_part_colouring, quotient, Colouring, ConnectedPartition, PartMeta,
};
use crate::skeleton::{
    build_skeleton, cluster_two_colouring, red_blue_colouring, Skeleton, BLUE, RED,
};

/// Pattern graphs refuted or embedded by the decomposition algorithms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "pattern", rename_all = "snake_case")]
pub enum Pattern {
    /// Complete graph K_t.
    Complete { t: usize },
    /// Complete bipartite graph K_{s,t}; no edges required inside either side.
    CompleteBipartite { s: usize, t: usize },
    /// Complete split graph: K_{s,t} plus all edges inside the s-side
    /// (the complete join of a clique with an independent set).
    CompleteSplit { s: usize, t: usize },
}

impl Pattern {
    pub fn vertex_count(&self) -> usize {
        match *self {
            Pattern::Complete { t } => t,
            Pattern::CompleteBipartite { s, t } | Pattern::CompleteSplit { s, t } => s + t,
        }
    }

    /// Pattern edges over branch-set indices. For bipartite patterns the
    /// first `s` indices form the join side.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = vec![];
        match *self {
            Pattern::Complete { t } => {
                for i in 0..t {
                    for j in i + 1..t {
                        out.push((i, j));
                    }
                }
            }
            Pattern::CompleteBipartite { s, t } => {
                for i in 0..s {
                    for j in 0..t {
                        out.push((i, s + j));
                    }
                }
            }
            Pattern::CompleteSplit { s, t } => {
                for i in 0..s {
                    for j in i + 1..s {
                        out.push((i, j));
                    }
                }
                for i in 0..s {
                    for j in 0..t {
                        out.push((i, s + j));
                    }
                }
            }
        }
        out
    }

    /// Role of each branch set, aligned with the branch-set order.
    pub fn roles(&self) -> Vec<&'static str> {
        match *self {
            Pattern::Complete { t } => vec!["clique"; t],
            Pattern::CompleteBipartite { s, t } => {
                let mut r = vec!["side_a"; s];
                r.extend(vec!["side_b"; t]);
                r
            }
            Pattern::CompleteSplit { s, t } => {
                let mut r = vec!["clique"; s];
                r.extend(vec!["independent"; t]);
                r
            }
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Pattern::Complete { t } => write!(f, "K_{t}"),
            Pattern::CompleteBipartite { s, t } => write!(f, "K_{{{s},{t}}}"),
            Pattern::CompleteSplit { s, t } => write!(f, "K*_{{{s},{t}}}"),
        }
    }
}

/// Branch-set certificate realising a pattern graph as a minor.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorModel {
    #[serde(flatten)]
    pub pattern: Pattern,
    /// Disjoint connected vertex sets; order matches [`Pattern::roles`].
    pub branch_sets: Vec<Vec<usize>>,
}

impl MinorModel {
    pub fn new(pattern: Pattern, branch_sets: Vec<BTreeSet<usize>>) -> MinorModel {
        MinorModel {
            pattern,
            branch_sets: branch_sets.into_iter().map(|s| s.into_iter().collect()).collect(),
        }
    }

    /// Rewrite vertex ids through `map` (new id = `map[old id]`).
    pub fn mapped(&self, map: &[usize]) -> MinorModel {
        MinorModel {
            pattern: self.pattern.clone(),
            branch_sets: self
                .branch_sets
                .iter()
                .map(|s| s.iter().map(|&v| map[v]).collect())
                .collect(),
        }
    }
}

/// Refute-or-decompose result.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum DecompositionOutcome {
    Partition(ConnectedPartition),
    Certificate(MinorModel),
}

impl DecompositionOutcome {
    pub fn partition(&self) -> Option<&ConnectedPartition> {
        match self {
            DecompositionOutcome::Partition(p) => Some(p),
            DecompositionOutcome::Certificate(_) => None,
        }
    }

    pub fn certificate(&self) -> Option<&MinorModel> {
        match self {
            DecompositionOutcome::Certificate(m) => Some(m),
            DecompositionOutcome::Partition(_) => None,
        }
    }
}

/// Width-(t-2) connected partition of `g`, or a K_t minor model.
///
/// Remainder components are processed smallest-vertex first. A component
/// adjacent to no part is seeded with its smallest vertex; one adjacent to a
/// single part contributes its smallest attachment vertex; otherwise the
/// part is a skeleton over the smallest attachment vertex of each adjacent
/// part. The certificate fires as soon as some remainder component touches
/// `t-1` parts (which are pairwise adjacent by construction).
pub fn decompose_kt(g: &Graph, t: usize) -> Result<DecompositionOutcome, Error> {
    if t < 4 {
        return Err(Error::InvalidParam(format!("complete-minor decomposition needs t >= 4, got {t}")));
    }
    let n = g.n();
    let mut part_of: Vec<Option<usize>> = vec![None; n];
    let mut parts: Vec<BTreeSet<usize>> = vec![];
    let mut metas: Vec<PartMeta> = vec![];
    let mut remaining: BTreeSet<usize> = (0..n).collect();

    while let Some(&seed) = remaining.iter().next() {
        let comp = component_containing(g, &remaining, seed);
        let touched = adjacent_parts(g, &comp, &part_of);
        if touched.len() > t - 2 {
            return Err(Error::Internal(format!(
                "component touches {} parts before insertion",
                touched.len()
            )));
        }
        let (vertices, terminals) = if touched.is_empty() {
            (BTreeSet::from([seed]), BTreeSet::from([seed]))
        } else {
            // smallest attachment vertex per adjacent part
            let mut attach: BTreeSet<usize> = BTreeSet::new();
            for &q in &touched {
                let v = comp
                    .iter()
                    .copied()
                    .find(|&v| g.neighbours(v).iter().any(|w| part_of[*w] == Some(q)))
                    .ok_or_else(|| Error::Internal("adjacent part without attachment".into()))?;
                attach.insert(v);
            }
            if attach.len() == 1 {
                (attach.clone(), attach)
            } else {
                let (cg, new_to_old) = g.induced(&comp);
                let local_a: BTreeSet<usize> = attach
                    .iter()
                    .map(|v| new_to_old.iter().position(|o| o == v).unwrap())
                    .collect();
                let sk = build_skeleton(&cg, &local_a)?;
                let vertices: BTreeSet<usize> =
                    sk.vertices.iter().map(|&v| new_to_old[v]).collect();
                (vertices, attach)
            }
        };
        let idx = parts.len();
        for &v in &vertices {
            part_of[v] = Some(idx);
            remaining.remove(&v);
        }
        parts.push(vertices);
        metas.push(PartMeta::Skeleton { terminals: terminals.into_iter().collect() });

        // a remainder component touching t-1 parts closes a K_t minor
        for comp in g.components_within(&remaining) {
            let touched = adjacent_parts(g, &comp, &part_of);
            if touched.len() >= t - 1 {
                let mut branch_sets: Vec<BTreeSet<usize>> =
                    touched.iter().take(t - 1).map(|&q| parts[q].clone()).collect();
                branch_sets.push(comp);
                let model = MinorModel::new(Pattern::Complete { t }, branch_sets);
                validate_minor_model(g, &model)?;
                return Ok(DecompositionOutcome::Certificate(model));
            }
        }
    }
    let partition = ConnectedPartition::with_meta(
        parts.into_iter().map(|p| p.into_iter().collect()).collect(),
        t - 2,
        metas,
    );
    Ok(DecompositionOutcome::Partition(partition))
}

fn component_containing(g: &Graph, remaining: &BTreeSet<usize>, seed: usize) -> BTreeSet<usize> {
    g.components_within(remaining)
        .into_iter()
        .find(|c| c.contains(&seed))
        .expect("seed taken from the remaining set")
}

fn adjacent_parts(
    g: &Graph,
    comp: &BTreeSet<usize>,
    part_of: &[Option<usize>],
) -> BTreeSet<usize> {
    let mut out = BTreeSet::new();
    for &v in comp {
        for &w in g.neighbours(v) {
            if let Some(q) = part_of[w] {
                out.insert(q);
            }
        }
    }
    out
}

/// Colouring modes derived from the complete-minor decomposition.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KtColourMode {
    /// `t-1` colours, defect at most `t-2`.
    Defect,
    /// `2t-2` colours, clustering at most `ceil((t-2)/2)`.
    Clustered,
    /// `2t-2` colours; half the classes have components of at most `t-4`
    /// vertices, the other half have path components.
    Paths,
    /// `3t-3` colours; `2t-2` classes are independent sets.
    Independent,
    /// `t-1` colours; each monochromatic component has treewidth at most `t-3`.
    Treewidth,
}

/// Colour `g` through [`decompose_kt`]. A K_t minor surfaces as
/// [`Error::MinorFound`].
pub fn colour_kt(g: &Graph, t: usize, mode: KtColourMode) -> Result<Colouring, Error> {
    let partition = match decompose_kt(g, t)? {
        DecompositionOutcome::Partition(p) => p,
        DecompositionOutcome::Certificate(m) => return Err(Error::MinorFound(Box::new(m))),
    };
    let part_of = partition.part_of(g.n())?;
    let q = quotient(g, &partition)?;
    let part_colour = greedy_part_colouring(&q, partition.width)?;
    match mode {
        KtColourMode::Defect | KtColourMode::Treewidth => {
            let colour: Vec<usize> = (0..g.n()).map(|v| part_colour[part_of[v]]).collect();
            Colouring::new(g, colour)
        }
        KtColourMode::Clustered => {
            let mut sub_colour = vec![0usize; g.n()];
            for i in 0..partition.parts.len() {
                for (v, c) in part_two_colouring(g, &partition, i)? {
                    sub_colour[v] = c;
                }
            }
            let colour: Vec<usize> =
                (0..g.n()).map(|v| 2 * part_colour[part_of[v]] + sub_colour[v]).collect();
            Colouring::new(g, colour)
        }
        KtColourMode::Paths => {
            let rb = red_blue_by_part(g, &partition)?;
            let colour: Vec<usize> =
                (0..g.n()).map(|v| 2 * part_colour[part_of[v]] + rb[v]).collect();
            Colouring::new(g, colour)
        }
        KtColourMode::Independent => {
            let rb = red_blue_by_part(g, &partition)?;
            // split each blue path properly by parity inside its part
            let mut sub = vec![0usize; g.n()];
            for part in partition.part_sets() {
                let blue: BTreeSet<usize> =
                    part.iter().copied().filter(|&v| rb[v] == BLUE).collect();
                for comp in g.components_within(&blue) {
                    let root = *comp.iter().next().unwrap();
                    let (cg, new_to_old) = g.induced(&comp);
                    let local_root = new_to_old.iter().position(|&v| v == root).unwrap();
                    for (lv, d) in cg.distances_from(local_root).iter().enumerate() {
                        sub[new_to_old[lv]] = 1 + d.unwrap() % 2;
                    }
                }
            }
            let colour: Vec<usize> =
                (0..g.n()).map(|v| 3 * part_colour[part_of[v]] + sub[v]).collect();
            Colouring::new(g, colour)
        }
    }
}

/// 2-colouring with small clusters for one part (terminal halving on
/// singleton or terminal-only parts, leaf-block peeling otherwise).
fn part_two_colouring(
    g: &Graph,
    partition: &ConnectedPartition,
    idx: usize,
) -> Result<BTreeMap<usize, usize>, Error> {
    let part: BTreeSet<usize> = partition.parts[idx].iter().copied().collect();
    let terminals = part_terminals(partition, idx)?;
    if terminals.len() < 2 {
        return Ok(part.iter().map(|&v| (v, 0)).collect());
    }
    let sk = Skeleton { vertices: part, terminals };
    cluster_two_colouring(g, &sk)
}

fn red_blue_by_part(g: &Graph, partition: &ConnectedPartition) -> Result<Vec<usize>, Error> {
    let mut out = vec![BLUE; g.n()];
    for idx in 0..partition.parts.len() {
        let part: BTreeSet<usize> = partition.parts[idx].iter().copied().collect();
        let terminals = part_terminals(partition, idx)?;
        if terminals.len() < 2 {
            continue; // single vertices stay blue: one trivial path
        }
        let sk = Skeleton { vertices: part, terminals };
        for (v, c) in red_blue_colouring(g, &sk)? {
            debug_assert!(c == RED || c == BLUE);
            out[v] = c;
        }
    }
    Ok(out)
}

fn part_terminals(partition: &ConnectedPartition, idx: usize) -> Result<BTreeSet<usize>, Error> {
    match partition.meta.as_ref().and_then(|m| m.get(idx)) {
        Some(PartMeta::Skeleton { terminals }) => Ok(terminals.iter().copied().collect()),
        _ => Err(Error::MissingMetadata("skeleton terminals")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};
    use crate::lexbfs::{bandwidth_ordering, lexbfs_tree};
    use crate::oracles::{
        bandwidth_of_ordering, exact_treewidth, is_chordal, validate_minor_model,
    };
    use crate::partition::validate_partition;

    fn octahedron() -> Graph {
        // K_{2,2,2}: complete graph minus the perfect matching (0,3),(1,4),(2,5)
        let mut edges = vec![];
        for u in 0..6usize {
            for v in u + 1..6 {
                if v != u + 3 {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(6, &edges).unwrap()
    }

    #[test]
    fn triangle_splits_into_singletons() {
        let g = generate(Family::Complete { n: 3 }, 0).unwrap();
        let out = decompose_kt(&g, 4).unwrap();
        let p = out.partition().expect("triangle has no K4 minor");
        assert_eq!(p.parts, vec![vec![0], vec![1], vec![2]]);
        assert_eq!(p.width, 2);
        assert_eq!(validate_partition(&g, p).unwrap().measured, 2);
    }

    #[test]
    fn k5_yields_singleton_certificate() {
        let g = generate(Family::Complete { n: 5 }, 0).unwrap();
        let out = decompose_kt(&g, 5).unwrap();
        let m = out.certificate().expect("K5 contains K5");
        assert!(m.branch_sets.iter().all(|s| s.len() == 1));
        validate_minor_model(&g, m).unwrap();
    }

    #[test]
    fn octahedron_partition_properties() {
        let g = octahedron();
        let out = decompose_kt(&g, 5).unwrap();
        let p = out.partition().expect("octahedron is planar, no K5 minor");
        let report = validate_partition(&g, p).unwrap();
        assert!(report.measured <= 3);

        for (i, part) in p.parts.iter().enumerate() {
            let set: BTreeSet<usize> = part.iter().copied().collect();
            let (sub, new_to_old) = g.induced(&set);
            // degree <= t-2
            for v in 0..sub.n() {
                assert!(sub.degree(v) <= 3);
            }
            // bandwidth <= t-3 via a LexBFS tree rooted at a terminal
            let terms = part_terminals(p, i).unwrap();
            let root = new_to_old
                .iter()
                .position(|v| terms.contains(v))
                .expect("terminal inside part");
            let t = lexbfs_tree(&sub, root).unwrap();
            let bw = bandwidth_of_ordering(&sub, &bandwidth_ordering(&sub, &t));
            assert!(bw <= 2, "part {i} has bandwidth {bw}");
        }

        // quotient chordal with small cliques, hence small treewidth
        let q = quotient(&g, p).unwrap();
        match is_chordal(&q) {
            crate::oracles::Chordality::Chordal { max_clique, .. } => assert!(max_clique <= 4),
            _ => panic!("quotient must be chordal"),
        }
        assert!(exact_treewidth(&q).unwrap() <= 3);

        // later vertices have at most 2t-5 neighbours in each earlier part
        // (this instance even satisfies 2t-6)
        for (i, part) in p.parts.iter().enumerate() {
            let set: BTreeSet<usize> = part.iter().copied().collect();
            for later in p.parts.iter().skip(i + 1) {
                for &v in later {
                    let c = g.neighbours(v).iter().filter(|w| set.contains(w)).count();
                    assert!(c <= 4, "vertex {v} has {c} neighbours in part {i}");
                }
            }
        }
    }

    #[test]
    fn octahedron_colourings() {
        let g = octahedron();
        let c = colour_kt(&g, 5, KtColourMode::Defect).unwrap();
        assert!(c.num_colours <= 4);
        assert!(c.defect <= 3);

        let c = colour_kt(&g, 5, KtColourMode::Clustered).unwrap();
        assert!(c.num_colours <= 8);
        assert!(c.clustering <= 2);
    }

    #[test]
    fn c5_defect_colouring() {
        let g = generate(Family::Cycle { n: 5 }, 0).unwrap();
        let c = colour_kt(&g, 4, KtColourMode::Defect).unwrap();
        assert!(c.num_colours <= 3);
        assert!(c.defect <= 2);
    }

    #[test]
    fn colour_surfaces_certificate() {
        let g = generate(Family::Complete { n: 5 }, 0).unwrap();
        match colour_kt(&g, 5, KtColourMode::Defect) {
            Err(Error::MinorFound(m)) => {
                assert_eq!(m.pattern, Pattern::Complete { t: 5 });
            }
            other => panic!("expected a K5 certificate, got {other:?}"),
        }
    }

    #[test]
    fn paths_and_independent_modes() {
        let g = octahedron();
        let t = 5;
        let c = colour_kt(&g, t, KtColourMode::Paths).unwrap();
        assert!(c.num_colours <= 2 * t - 2);
        // blue classes (odd) have path components; red classes (even) small
        let by_class = |parity: usize| -> Vec<BTreeSet<usize>> {
            let mut classes: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
            for v in 0..g.n() {
                if c.colour[v] % 2 == parity {
                    classes.entry(c.colour[v]).or_default().insert(v);
                }
            }
            classes.into_values().collect()
        };
        for class in by_class(1) {
            for comp in g.components_within(&class) {
                let (sub, _) = g.induced(&comp);
                assert!(sub.edge_count() + 1 == sub.n());
                assert!((0..sub.n()).all(|v| sub.degree(v) <= 2), "blue class not a path");
            }
        }
        for class in by_class(0) {
            for comp in g.components_within(&class) {
                assert!(comp.len() <= t - 4 || comp.len() <= 1);
            }
        }

        let c = colour_kt(&g, t, KtColourMode::Independent).unwrap();
        assert!(c.num_colours <= 3 * t - 3);
        // classes 3q+1 and 3q+2 are independent
        let mut classes: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
        for v in 0..g.n() {
            classes.entry(c.colour[v]).or_default().insert(v);
        }
        for (cls, verts) in classes {
            if cls % 3 != 0 {
                let (sub, _) = g.induced(&verts);
                assert_eq!(sub.edge_count(), 0, "class {cls} is not independent");
            }
        }
    }

    #[test]
    fn treewidth_mode_components_are_thin() {
        let g = generate(Family::PlanarTriangulation { n: 12 }, 3).unwrap();
        let t = 5;
        let c = colour_kt(&g, t, KtColourMode::Treewidth).unwrap();
        assert!(c.num_colours <= t - 1);
        let mut classes: BTreeMap<usize, BTreeSet<usize>> = BTreeMap::new();
        for v in 0..g.n() {
            classes.entry(c.colour[v]).or_default().insert(v);
        }
        for verts in classes.values() {
            for comp in g.components_within(verts) {
                let (sub, _) = g.induced(&comp);
                assert!(exact_treewidth(&sub).unwrap() <= t - 3);
            }
        }
    }

    #[test]
    fn refute_or_decompose_on_mixed_corpus() {
        let mut graphs = vec![];
        for seed in 0..4u64 {
            graphs.push(generate(Family::RandomKTree { n: 12, k: 2 }, seed).unwrap());
            graphs.push(generate(Family::PlanarTriangulation { n: 12 }, seed).unwrap());
        }
        graphs.push(generate(Family::Complete { n: 6 }, 0).unwrap());
        graphs.push(generate(Family::Petersen, 0).unwrap());
        for (gi, g) in graphs.iter().enumerate() {
            for t in [4usize, 5] {
                match decompose_kt(g, t).unwrap() {
                    DecompositionOutcome::Partition(p) => {
                        let r = validate_partition(g, &p).unwrap();
                        assert!(r.measured <= t - 2, "graph {gi}, t={t}");
                    }
                    DecompositionOutcome::Certificate(m) => {
                        assert_eq!(m.pattern, Pattern::Complete { t });
                        validate_minor_model(g, &m).unwrap();
                    }
                }
            }
        }
    }
}
