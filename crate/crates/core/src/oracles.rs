//! Independent brute-force verification: minor models, minor containment,
//! colouring metrics, chordality, treewidth, bandwidth and exhaustive
//! clustered colourability.
//!
//! Nothing here shares a traversal with the constructive algorithms it
//! checks; every routine recomputes from the graph alone. Exponential
//! searches carry hard size caps and refuse larger inputs.

use std::collections::{BTreeSet, VecDeque};

use crate::colnums::VertexOrdering;
use crate::error::Error;
use crate::graph::Graph;
use crate::kt_decomp::{MinorModel, Pattern};
use crate::partition::Colouring;

/// Vertex cap for [`has_minor`].
pub const MINOR_CAP: usize = 14;
/// Vertex cap for [`exact_treewidth`].
pub const TREEWIDTH_CAP: usize = 12;
/// Assignment cap for [`exhaustive_cluster_colourable`].
const COLOURING_ENUM_CAP: u64 = 20_000_000;

/// Check that `m` realises its pattern in `g`: branch sets are disjoint,
/// non-empty and connected, and every pattern edge is witnessed by an edge
/// between the corresponding sets. Extra edges are fine; minors tolerate them.
pub fn validate_minor_model(g: &Graph, m: &MinorModel) -> Result<(), Error> {
    let expected = m.pattern.vertex_count();
    if m.branch_sets.len() != expected {
        return Err(Error::InvalidModel(format!(
            "{} needs {expected} branch sets, got {}",
            m.pattern,
            m.branch_sets.len()
        )));
    }
    let mut seen: BTreeSet<usize> = BTreeSet::new();
    let mut sets: Vec<BTreeSet<usize>> = vec![];
    for (i, set) in m.branch_sets.iter().enumerate() {
        let set: BTreeSet<usize> = set.iter().copied().collect();
        if set.is_empty() {
            return Err(Error::InvalidModel(format!("branch set {i} is empty")));
        }
        if let Some(&v) = set.iter().find(|&&v| v >= g.n()) {
            return Err(Error::InvalidModel(format!("branch set {i} contains invalid vertex {v}")));
        }
        if set.iter().any(|v| seen.contains(v)) {
            return Err(Error::InvalidModel(format!("branch set {i} overlaps an earlier set")));
        }
        if !g.is_connected_set(&set) {
            return Err(Error::InvalidModel(format!("branch set {i} ({set:?}) is disconnected")));
        }
        seen.extend(set.iter().copied());
        sets.push(set);
    }
    for (i, j) in m.pattern.edges() {
        if !g.sets_adjacent(&sets[i], &sets[j]) {
            return Err(Error::InvalidModel(format!(
                "branch sets {i} and {j} must be adjacent for {}",
                m.pattern
            )));
        }
    }
    Ok(())
}

/// Exhaustive minor containment test, sound and complete for `n <= 14`.
///
/// Searches families of disjoint connected branch sets (as bitmasks) in
/// smallest-vertex order, pruning by free-vertex counts and by the number of
/// distinct outside neighbours still needed.
pub fn has_minor(g: &Graph, pattern: &Pattern) -> Result<Option<MinorModel>, Error> {
    let n = g.n();
    if n > MINOR_CAP {
        return Err(Error::TooLarge { n, cap: MINOR_CAP });
    }
    let total = pattern.vertex_count();
    if total == 0 || total > n {
        return Ok(None);
    }

    let adj: Vec<u32> = (0..n)
        .map(|v| g.neighbours(v).iter().fold(0u32, |m, &w| m | 1 << w))
        .collect();

    // All connected non-empty subsets, with their open neighbourhoods.
    let mut subsets: Vec<u32> = vec![];
    let mut nbr: Vec<u32> = vec![];
    for mask in 1u32..1 << n {
        if connected_mask(&adj, mask) {
            let mut nb = 0u32;
            let mut m = mask;
            while m != 0 {
                let v = m.trailing_zeros() as usize;
                m &= m - 1;
                nb |= adj[v];
            }
            subsets.push(mask);
            nbr.push(nb & !mask);
        }
    }

    // groups[i] = pattern vertices of one interchangeable role, searched in
    // increasing smallest-vertex order to kill the permutation symmetry.
    let (s_side, t_side) = match *pattern {
        Pattern::Complete { t } => (t, 0),
        Pattern::CompleteBipartite { s, t } | Pattern::CompleteSplit { s, t } => (s, t),
    };
    let pattern_edges: Vec<(usize, usize)> = pattern.edges();

    let mut chosen: Vec<u32> = Vec::with_capacity(total);
    if search_models(
        &subsets, &nbr, &pattern_edges, s_side, t_side, total, n, 0, 0u32, &mut chosen,
    ) {
        let branch_sets = chosen
            .iter()
            .map(|&m| (0..n).filter(|&v| m >> v & 1 == 1).collect())
            .collect();
        let model = MinorModel { pattern: pattern.clone(), branch_sets };
        validate_minor_model(g, &model)?;
        return Ok(Some(model));
    }
    Ok(None)
}

fn connected_mask(adj: &[u32], mask: u32) -> bool {
    let start = mask.trailing_zeros() as usize;
    let mut seen = 1u32 << start;
    let mut frontier = seen;
    while frontier != 0 {
        let mut next = 0u32;
        let mut f = frontier;
        while f != 0 {
            let v = f.trailing_zeros() as usize;
            f &= f - 1;
            next |= adj[v] & mask & !seen;
        }
        seen |= next;
        frontier = next;
    }
    seen == mask
}

#[allow(clippy::too_many_arguments)]
fn search_models(
    subsets: &[u32],
    nbr: &[u32],
    pattern_edges: &[(usize, usize)],
    s_side: usize,
    t_side: usize,
    total: usize,
    n: usize,
    depth: usize,
    used: u32,
    chosen: &mut Vec<u32>,
) -> bool {
    if depth == total {
        return true;
    }
    let remaining = total - depth - 1;
    // Future pattern-neighbours of the set being placed now must each grab a
    // distinct free neighbour of it later.
    let future_need = pattern_edges
        .iter()
        .filter(|&&(a, b)| (a == depth && b > depth) || (b == depth && a > depth))
        .count();
    // Same-role sets are forced into increasing smallest-vertex order.
    let min_low = if depth > 0 && depth != s_side {
        chosen[depth - 1].trailing_zeros() + 1
    } else {
        0
    };
    let _ = t_side;
    for (idx, &cand) in subsets.iter().enumerate() {
        if cand & used != 0 {
            continue;
        }
        if cand.trailing_zeros() < min_low {
            continue;
        }
        let free_after = n as u32 - (used | cand).count_ones();
        if (free_after as usize) < remaining {
            continue;
        }
        if (nbr[idx] & !used & !cand).count_ones() < future_need as u32 {
            continue;
        }
        // Adjacency to every already-placed pattern neighbour.
        let ok = pattern_edges.iter().all(|&(a, b)| {
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            hi != depth || lo >= depth || nbr[idx] & chosen[lo] != 0
        });
        if !ok {
            continue;
        }
        chosen.push(cand);
        if search_models(
            subsets, nbr, pattern_edges, s_side, t_side, total, n, depth + 1,
            used | cand, chosen,
        ) {
            return true;
        }
        chosen.pop();
    }
    false
}

/// Colouring metrics recomputed from scratch.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct ColouringMetrics {
    pub num_colours: usize,
    /// Maximum same-colour degree.
    pub defect: usize,
    /// Maximum order of a monochromatic component.
    pub clustering: usize,
}

/// Recompute `num_colours`, defect and clustering by component search.
pub fn colouring_metrics(g: &Graph, colour: &[usize]) -> Result<ColouringMetrics, Error> {
    if colour.len() != g.n() {
        return Err(Error::InvalidParam(format!(
            "colour vector has length {}, graph has {} vertices",
            colour.len(),
            g.n()
        )));
    }
    let num_colours = colour.iter().collect::<BTreeSet<_>>().len();
    let mut defect = 0usize;
    for v in 0..g.n() {
        let d = g.neighbours(v).iter().filter(|&&w| colour[w] == colour[v]).count();
        defect = defect.max(d);
    }
    let mut clustering = 0usize;
    let mut seen = vec![false; g.n()];
    for v in 0..g.n() {
        if seen[v] {
            continue;
        }
        seen[v] = true;
        let mut size = 0usize;
        let mut queue = VecDeque::from([v]);
        while let Some(u) = queue.pop_front() {
            size += 1;
            for &w in g.neighbours(u) {
                if !seen[w] && colour[w] == colour[v] {
                    seen[w] = true;
                    queue.push_back(w);
                }
            }
        }
        clustering = clustering.max(size);
    }
    Ok(ColouringMetrics { num_colours, defect, clustering })
}

/// Recompute metrics of `c` and fail if they differ from the declared ones.
pub fn validate_colouring(g: &Graph, c: &Colouring) -> Result<ColouringMetrics, Error> {
    let m = colouring_metrics(g, &c.colour)?;
    if m.num_colours != c.num_colours || m.defect != c.defect || m.clustering != c.clustering {
        return Err(Error::InvalidParam(format!(
            "declared metrics ({}, {}, {}) differ from recomputed ({}, {}, {})",
            c.num_colours, c.defect, c.clustering, m.num_colours, m.defect, m.clustering
        )));
    }
    Ok(m)
}

/// Outcome of the chordality test.
#[derive(Debug, Clone)]
pub enum Chordality {
    Chordal {
        /// Perfect elimination ordering (first vertex eliminated first).
        peo: Vec<usize>,
        /// Clique number, read off the elimination ordering.
        max_clique: usize,
    },
    NotChordal {
        /// A chordless cycle of length at least four.
        hole: Vec<usize>,
    },
}

impl Chordality {
    pub fn is_chordal(&self) -> bool {
        matches!(self, Chordality::Chordal { .. })
    }
}

/// Chordality test via a self-contained label-based lexicographic search
/// (independent of the constructive LexBFS machinery) plus the standard
/// elimination check. Returns a perfect elimination ordering or a hole.
pub fn is_chordal(g: &Graph) -> Chordality {
    let n = g.n();
    if n == 0 {
        return Chordality::Chordal { peo: vec![], max_clique: 0 };
    }
    // Visit order by repeatedly taking the unvisited vertex with the
    // lexicographically largest label of visit times (O(n^2) scan).
    let mut label: Vec<Vec<usize>> = vec![vec![]; n];
    let mut visited = vec![false; n];
    let mut order: Vec<usize> = Vec::with_capacity(n);
    for time in 0..n {
        let mut best: Option<usize> = None;
        for v in 0..n {
            if visited[v] {
                continue;
            }
            match best {
                None => best = Some(v),
                Some(b) => {
                    if label[v] > label[b] {
                        best = Some(v);
                    }
                }
            }
        }
        let v = best.unwrap();
        visited[v] = true;
        order.push(v);
        for &w in g.neighbours(v) {
            if !visited[w] {
                label[w].push(n - time);
            }
        }
    }
    // Reverse visit order is a candidate perfect elimination ordering.
    let peo: Vec<usize> = order.iter().rev().copied().collect();
    let mut elim_pos = vec![0usize; n];
    for (i, &v) in peo.iter().enumerate() {
        elim_pos[v] = i;
    }
    let mut max_clique = 1usize;
    for (i, &v) in peo.iter().enumerate() {
        let mut later: Vec<usize> =
            g.neighbours(v).iter().copied().filter(|&w| elim_pos[w] > i).collect();
        later.sort_by_key(|&w| elim_pos[w]);
        max_clique = max_clique.max(later.len() + 1);
        if let Some((&u, rest)) = later.split_first() {
            for &w in rest {
                if !g.has_edge(u, w) {
                    let hole = find_hole(g, v, u, w)
                        .or_else(|| find_any_hole(g))
                        .expect("failed elimination check implies a hole exists");
                    return Chordality::NotChordal { hole };
                }
            }
        }
    }
    Chordality::Chordal { peo, max_clique }
}

/// Chordless cycle through `v` and its non-adjacent neighbours `u`, `w`:
/// a shortest u-w path avoiding the rest of N[v] closes one (shortestness
/// rules out chords along the path).
fn find_hole(g: &Graph, v: usize, u: usize, w: usize) -> Option<Vec<usize>> {
    let mut allowed: BTreeSet<usize> = (0..g.n()).collect();
    allowed.remove(&v);
    for &x in g.neighbours(v) {
        if x != u && x != w {
            allowed.remove(&x);
        }
    }
    let mut parent = vec![usize::MAX; g.n()];
    let mut queue = VecDeque::from([u]);
    let mut seen = BTreeSet::from([u]);
    while let Some(x) = queue.pop_front() {
        if x == w {
            break;
        }
        for &y in g.neighbours(x) {
            if allowed.contains(&y) && seen.insert(y) {
                parent[y] = x;
                queue.push_back(y);
            }
        }
    }
    if !seen.contains(&w) {
        return None;
    }
    let mut path = vec![w];
    let mut x = w;
    while x != u {
        x = parent[x];
        path.push(x);
    }
    path.push(v);
    path.reverse();
    Some(path)
}

/// Scan all triples (v; u, w) of a vertex with two non-adjacent neighbours.
/// Any non-chordal graph yields a hole through some such triple.
fn find_any_hole(g: &Graph) -> Option<Vec<usize>> {
    for v in 0..g.n() {
        let nbrs: Vec<usize> = g.neighbours(v).iter().copied().collect();
        for (i, &u) in nbrs.iter().enumerate() {
            for &w in nbrs.iter().skip(i + 1) {
                if g.has_edge(u, w) {
                    continue;
                }
                if let Some(hole) = find_hole(g, v, u, w) {
                    return Some(hole);
                }
            }
        }
    }
    None
}

/// Exact treewidth by elimination-order dynamic programming over subsets.
pub fn exact_treewidth(g: &Graph) -> Result<usize, Error> {
    let n = g.n();
    if n > TREEWIDTH_CAP {
        return Err(Error::TooLarge { n, cap: TREEWIDTH_CAP });
    }
    if n == 0 {
        return Ok(0);
    }
    let full: u32 = if n == 32 { u32::MAX } else { (1 << n) - 1 };
    let mut f = vec![u32::MAX; (full as usize) + 1];
    f[0] = 0;
    for mask in 0..=full {
        if f[mask as usize] == u32::MAX {
            continue;
        }
        for v in 0..n {
            if mask >> v & 1 == 1 {
                continue;
            }
            let q = eliminate_degree(g, mask, v);
            let next = mask | 1 << v;
            let cost = f[mask as usize].max(q);
            if cost < f[next as usize] {
                f[next as usize] = cost;
            }
        }
    }
    Ok(f[full as usize] as usize)
}

/// Number of vertices outside `eliminated | {v}` reachable from `v` through
/// eliminated vertices only.
fn eliminate_degree(g: &Graph, eliminated: u32, v: usize) -> u32 {
    let mut reached = 0u32;
    let mut seen = 1u32 << v;
    let mut queue = VecDeque::from([v]);
    while let Some(u) = queue.pop_front() {
        for &w in g.neighbours(u) {
            if seen >> w & 1 == 1 {
                continue;
            }
            seen |= 1 << w;
            if eliminated >> w & 1 == 1 {
                queue.push_back(w);
            } else {
                reached += 1;
            }
        }
    }
    reached
}

/// Largest index gap across an edge under `ord`.
pub fn bandwidth_of_ordering(g: &Graph, ord: &VertexOrdering) -> usize {
    g.edges()
        .into_iter()
        .map(|(u, v)| ord.position(u).abs_diff(ord.position(v)))
        .max()
        .unwrap_or(0)
}

/// Degeneracy: max over the removal sequence of the minimum degree.
pub fn degeneracy(g: &Graph) -> usize {
    let mut alive: BTreeSet<usize> = (0..g.n()).collect();
    let mut deg: Vec<usize> = (0..g.n()).map(|v| g.degree(v)).collect();
    let mut out = 0usize;
    while !alive.is_empty() {
        let &v = alive.iter().min_by_key(|&&v| (deg[v], v)).unwrap();
        out = out.max(deg[v]);
        alive.remove(&v);
        for &w in g.neighbours(v) {
            if alive.contains(&w) {
                deg[w] -= 1;
            }
        }
    }
    out
}

/// Does some `k`-colouring of `g` have clustering at most `c`?
///
/// Enumerates all assignments with vertex 0 pinned to colour 0 (colour
/// classes are interchangeable), so it needs `k^(n-1)` feasible.
pub fn exhaustive_cluster_colourable(g: &Graph, k: usize, c: usize) -> Result<bool, Error> {
    let n = g.n();
    if k == 0 {
        return Ok(n == 0);
    }
    if n == 0 {
        return Ok(true);
    }
    let count = (k as u64).checked_pow(n.saturating_sub(1) as u32);
    match count {
        Some(cnt) if cnt <= COLOURING_ENUM_CAP => {}
        _ => return Err(Error::TooLarge { n, cap: 0 }),
    }
    let mut colour = vec![0usize; n];
    loop {
        let metrics = colouring_metrics(g, &colour)?;
        if metrics.clustering <= c {
            return Ok(true);
        }
        // increment base-k counter over positions 1..n
        let mut pos = 1;
        loop {
            if pos >= n {
                return Ok(false);
            }
            colour[pos] += 1;
            if colour[pos] < k {
                break;
            }
            colour[pos] = 0;
            pos += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    #[test]
    fn minor_model_validation() {
        let k5 = generate(Family::Complete { n: 5 }, 0).unwrap();
        let model = MinorModel {
            pattern: Pattern::Complete { t: 5 },
            branch_sets: (0..5).map(|v| vec![v]).collect(),
        };
        assert!(validate_minor_model(&k5, &model).is_ok());

        // Disconnected branch set is rejected and named.
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let bad = MinorModel {
            pattern: Pattern::Complete { t: 3 },
            branch_sets: vec![vec![0, 3], vec![1], vec![2]],
        };
        let err = validate_minor_model(&p4, &bad).unwrap_err();
        assert!(err.to_string().contains("branch set 0"), "{err}");
    }

    #[test]
    fn petersen_has_k5_minor() {
        let g = generate(Family::Petersen, 0).unwrap();
        let model = has_minor(&g, &Pattern::Complete { t: 5 }).unwrap().unwrap();
        validate_minor_model(&g, &model).unwrap();
    }

    #[test]
    fn k4_has_no_k5_minor() {
        let g = generate(Family::Complete { n: 4 }, 0).unwrap();
        assert!(has_minor(&g, &Pattern::Complete { t: 5 }).unwrap().is_none());
    }

    #[test]
    fn grid_has_no_k33_minor() {
        let g = generate(Family::Grid { p: 3, q: 3 }, 0).unwrap();
        assert!(has_minor(&g, &Pattern::CompleteBipartite { s: 3, t: 3 }).unwrap().is_none());
    }

    #[test]
    fn outerplanar_excludes_k4_and_k23() {
        for seed in 0..3u64 {
            let g = generate(Family::MaximalOuterplanar { n: 9 }, seed).unwrap();
            assert!(has_minor(&g, &Pattern::Complete { t: 4 }).unwrap().is_none());
            assert!(has_minor(&g, &Pattern::CompleteBipartite { s: 2, t: 3 }).unwrap().is_none());
            // K4 minus an edge is a minor of any n >= 4 maximal outerplanar graph.
            assert!(has_minor(&g, &Pattern::CompleteSplit { s: 2, t: 2 }).unwrap().is_some());
        }
    }

    #[test]
    fn ktree_excludes_bigger_clique() {
        // a k-tree contains K_{k+1} but no K_{k+2} minor
        let g2 = generate(Family::RandomKTree { n: 9, k: 2 }, 3).unwrap();
        assert!(has_minor(&g2, &Pattern::Complete { t: 3 }).unwrap().is_some());
        assert!(has_minor(&g2, &Pattern::Complete { t: 4 }).unwrap().is_none());
        let g3 = generate(Family::RandomKTree { n: 9, k: 3 }, 3).unwrap();
        assert!(has_minor(&g3, &Pattern::Complete { t: 4 }).unwrap().is_some());
        assert!(has_minor(&g3, &Pattern::Complete { t: 5 }).unwrap().is_none());
    }

    #[test]
    fn minor_cap_enforced() {
        let g = Graph::new(15);
        assert!(matches!(
            has_minor(&g, &Pattern::Complete { t: 3 }),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn metrics_on_known_colourings() {
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let m = colouring_metrics(&p4, &[0, 1, 0, 1]).unwrap();
        assert_eq!(m, ColouringMetrics { num_colours: 2, defect: 0, clustering: 1 });

        let k4 = generate(Family::Complete { n: 4 }, 0).unwrap();
        let m = colouring_metrics(&k4, &[0, 0, 0, 0]).unwrap();
        assert_eq!(m, ColouringMetrics { num_colours: 1, defect: 3, clustering: 4 });
    }

    #[test]
    fn chordality_basics() {
        let k3 = generate(Family::Complete { n: 3 }, 0).unwrap();
        assert!(is_chordal(&k3).is_chordal());

        let c4 = generate(Family::Cycle { n: 4 }, 0).unwrap();
        match is_chordal(&c4) {
            Chordality::NotChordal { hole } => {
                assert!(hole.len() >= 4);
                for i in 0..hole.len() {
                    assert!(c4.has_edge(hole[i], hole[(i + 1) % hole.len()]));
                }
            }
            Chordality::Chordal { .. } => panic!("C4 is not chordal"),
        }

        let ktree = generate(Family::RandomKTree { n: 10, k: 3 }, 5).unwrap();
        match is_chordal(&ktree) {
            Chordality::Chordal { max_clique, .. } => assert_eq!(max_clique, 4),
            _ => panic!("k-trees are chordal"),
        }
    }

    #[test]
    fn chordality_hole_in_c6_with_chords() {
        // C6 plus one long chord still has a hole.
        let mut edges = vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)];
        edges.push((0, 3));
        let g = Graph::from_edges(6, &edges).unwrap();
        match is_chordal(&g) {
            Chordality::NotChordal { hole } => {
                assert!(hole.len() >= 4);
                // hole must be chordless
                for i in 0..hole.len() {
                    for j in i + 2..hole.len() {
                        if i == 0 && j == hole.len() - 1 {
                            continue;
                        }
                        assert!(!g.has_edge(hole[i], hole[j]), "chord {:?}", (hole[i], hole[j]));
                    }
                }
            }
            _ => panic!("expected a hole"),
        }
    }

    #[test]
    fn treewidth_small_cases() {
        let tree = Graph::from_edges(5, &[(0, 1), (1, 2), (1, 3), (3, 4)]).unwrap();
        assert_eq!(exact_treewidth(&tree).unwrap(), 1);
        let c5 = generate(Family::Cycle { n: 5 }, 0).unwrap();
        assert_eq!(exact_treewidth(&c5).unwrap(), 2);
        let k4 = generate(Family::Complete { n: 4 }, 0).unwrap();
        assert_eq!(exact_treewidth(&k4).unwrap(), 3);
        let grid = generate(Family::Grid { p: 3, q: 3 }, 0).unwrap();
        assert_eq!(exact_treewidth(&grid).unwrap(), 3);
    }

    #[test]
    fn bandwidth_examples() {
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let ord = VertexOrdering::from_order(vec![0, 1, 2, 3]).unwrap();
        assert_eq!(bandwidth_of_ordering(&p4, &ord), 1);
        let c4 = generate(Family::Cycle { n: 4 }, 0).unwrap();
        let ord = VertexOrdering::from_order(vec![0, 1, 2, 3]).unwrap();
        assert_eq!(bandwidth_of_ordering(&c4, &ord), 3);
    }

    #[test]
    fn cluster_colourability_examples() {
        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(exhaustive_cluster_colourable(&p3, 1, 3).unwrap());
        let c4 = generate(Family::Cycle { n: 4 }, 0).unwrap();
        assert!(exhaustive_cluster_colourable(&c4, 2, 1).unwrap());
        let g2 = generate(Family::LowerboundGs { s: 2, c: 2 }, 0).unwrap();
        assert!(!exhaustive_cluster_colourable(&g2, 2, 2).unwrap());
    }

    #[test]
    fn degeneracy_small() {
        let c5 = generate(Family::Cycle { n: 5 }, 0).unwrap();
        assert_eq!(degeneracy(&c5), 2);
        let tree = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        assert_eq!(degeneracy(&tree), 1);
    }
}
