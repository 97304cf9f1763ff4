//! Generalised colouring numbers: strong/weak reachability sets for a given
//! vertex ordering, exact optima by enumeration on tiny graphs, and orderings
//! derived from layered tree decompositions.
//!
//! For an ordering `⪯`, `sreach(g, ord, v, r)` is the set of vertices
//! `x ⪯ v` reachable from `v` by a path of length at most `r` whose interior
//! vertices all come after `v`; `wreach` relaxes the interior condition to
//! "after `x`". Both sets contain `v` itself.

use std::collections::{BTreeSet, VecDeque};

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::graph::Graph;
use crate::lexbfs::Layering;

/// Cap for the factorial searches in [`exact_scol`] / [`exact_wcol`].
pub const EXACT_CAP: usize = 9;

/// A linear order on the vertices, kept as both rank list and position map.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VertexOrdering {
    order: Vec<usize>,
    pos: Vec<usize>,
}

impl VertexOrdering {
    /// Build from the rank list (`order[i]` = vertex at rank `i`); must be a
    /// permutation of `0..n`.
    pub fn from_order(order: Vec<usize>) -> Result<VertexOrdering, Error> {
        let n = order.len();
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in order.iter().enumerate() {
            if v >= n {
                return Err(Error::VertexOutOfRange(v));
            }
            if pos[v] != usize::MAX {
                return Err(Error::InvalidParam(format!("vertex {v} appears twice")));
            }
            pos[v] = i;
        }
        Ok(VertexOrdering { order, pos })
    }

    pub fn identity(n: usize) -> VertexOrdering {
        VertexOrdering { order: (0..n).collect(), pos: (0..n).collect() }
    }

    pub fn position(&self, v: usize) -> usize {
        self.pos[v]
    }

    pub fn order(&self) -> &[usize] {
        &self.order
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }
}

/// Strong reachability set: `v` plus every `x ⪯ v` joined to `v` by a path of
/// length in `[1, r]` whose interior vertices all come strictly after `v`.
pub fn sreach(g: &Graph, ord: &VertexOrdering, v: usize, r: usize) -> BTreeSet<usize> {
    debug_assert!(r >= 1);
    // BFS from v through vertices after v, depth at most r-1.
    let mut dist = vec![usize::MAX; g.n()];
    dist[v] = 0;
    let mut queue = VecDeque::from([v]);
    let mut out = BTreeSet::from([v]);
    while let Some(u) = queue.pop_front() {
        if dist[u] == r {
            continue;
        }
        for &w in g.neighbours(u) {
            if ord.position(w) < ord.position(v) {
                out.insert(w);
            } else if w != v && dist[w] == usize::MAX && dist[u] + 1 <= r - 1 {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    out
}

/// Weak reachability set: `v` plus every `x ⪯ v` joined to `v` by a path of
/// length in `[1, r]` whose interior vertices all come strictly after `x`.
pub fn wreach(g: &Graph, ord: &VertexOrdering, v: usize, r: usize) -> BTreeSet<usize> {
    let mut out = BTreeSet::from([v]);
    for x in 0..g.n() {
        if ord.position(x) >= ord.position(v) {
            continue;
        }
        if reaches_above(g, ord, x, v, r) {
            out.insert(x);
        }
    }
    out
}

/// BFS from `x` through vertices strictly after `x`; true when `v` is within
/// distance `r`.
fn reaches_above(g: &Graph, ord: &VertexOrdering, x: usize, v: usize, r: usize) -> bool {
    let px = ord.position(x);
    let mut dist = vec![usize::MAX; g.n()];
    dist[x] = 0;
    let mut queue = VecDeque::from([x]);
    while let Some(u) = queue.pop_front() {
        if dist[u] >= r {
            continue;
        }
        for &w in g.neighbours(u) {
            if w == v && dist[u] + 1 <= r {
                return true;
            }
            if ord.position(w) > px && dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                queue.push_back(w);
            }
        }
    }
    false
}

/// Max over vertices of `|sreach|` for the given ordering: an upper-bound
/// witness for the graph invariant.
pub fn scol(g: &Graph, ord: &VertexOrdering, r: usize) -> usize {
    (0..g.n()).map(|v| sreach(g, ord, v, r).len()).max().unwrap_or(0)
}

/// Max over vertices of `|wreach|` for the given ordering.
pub fn wcol(g: &Graph, ord: &VertexOrdering, r: usize) -> usize {
    // one BFS per source x, crediting every v it reaches from below
    let n = g.n();
    let mut sizes = vec![1usize; n];
    for x in 0..n {
        let px = ord.position(x);
        let mut dist = vec![usize::MAX; n];
        dist[x] = 0;
        let mut queue = VecDeque::from([x]);
        let mut reached: BTreeSet<usize> = BTreeSet::new();
        while let Some(u) = queue.pop_front() {
            if dist[u] >= r {
                continue;
            }
            for &w in g.neighbours(u) {
                if ord.position(w) > px {
                    if dist[w] == usize::MAX {
                        dist[w] = dist[u] + 1;
                        queue.push_back(w);
                    }
                    reached.insert(w);
                }
            }
        }
        for v in reached {
            sizes[v] += 1;
        }
    }
    sizes.into_iter().max().unwrap_or(0)
}

/// Exact r-strong colouring number with a witness ordering (n <= 9).
pub fn exact_scol(g: &Graph, r: usize) -> Result<(usize, VertexOrdering), Error> {
    exact_optimum(g, r, scol)
}

/// Exact r-weak colouring number with a witness ordering (n <= 9).
pub fn exact_wcol(g: &Graph, r: usize) -> Result<(usize, VertexOrdering), Error> {
    exact_optimum(g, r, wcol)
}

fn exact_optimum(
    g: &Graph,
    r: usize,
    eval: fn(&Graph, &VertexOrdering, usize) -> usize,
) -> Result<(usize, VertexOrdering), Error> {
    let n = g.n();
    if n > EXACT_CAP {
        return Err(Error::TooLarge { n, cap: EXACT_CAP });
    }
    if n == 0 {
        return Ok((0, VertexOrdering::identity(0)));
    }
    let mut best: Option<(usize, VertexOrdering)> = None;
    for perm in (0..n).permutations(n) {
        let ord = VertexOrdering::from_order(perm)?;
        let value = eval(g, &ord, r);
        if best.as_ref().map_or(true, |(b, _)| value < *b) {
            best = Some((value, ord));
        }
    }
    Ok(best.unwrap())
}

/// Tree decomposition together with a layering certifying bounded layered
/// width: every bag meets every layer in at most `layered_width` vertices.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LayeredTD {
    /// Edges of the decomposition tree over nodes `0..bags.len()`.
    pub tree_edges: Vec<(usize, usize)>,
    pub bags: Vec<Vec<usize>>,
    pub layers: Vec<Vec<usize>>,
    pub layered_width: usize,
}

impl LayeredTD {
    /// Check coverage, the subtree property, layering validity and the
    /// declared layered width; each violation is reported distinctly.
    pub fn validate(&self, g: &Graph) -> Result<(), Error> {
        let b = self.bags.len();
        if b == 0 {
            return Err(Error::LtdCoverage("no bags".into()));
        }
        for &(x, y) in &self.tree_edges {
            if x >= b || y >= b {
                return Err(Error::LtdCoverage(format!("tree edge ({x}, {y}) out of range")));
            }
        }
        if self.tree_edges.len() + 1 != b || !nodes_connected(b, &self.tree_edges) {
            return Err(Error::LtdCoverage("decomposition nodes do not form a tree".into()));
        }
        // vertex and edge coverage
        let mut in_bags: Vec<Vec<usize>> = vec![vec![]; g.n()];
        for (x, bag) in self.bags.iter().enumerate() {
            for &v in bag {
                if v >= g.n() {
                    return Err(Error::LtdCoverage(format!("bag {x} contains invalid vertex {v}")));
                }
                in_bags[v].push(x);
            }
        }
        for (v, bags) in in_bags.iter().enumerate() {
            if bags.is_empty() {
                return Err(Error::LtdCoverage(format!("vertex {v} is in no bag")));
            }
        }
        for (u, v) in g.edges() {
            let covered = self.bags.iter().any(|bag| bag.contains(&u) && bag.contains(&v));
            if !covered {
                return Err(Error::LtdCoverage(format!("edge ({u}, {v}) is in no bag")));
            }
        }
        // subtree property
        let mut adj: Vec<Vec<usize>> = vec![vec![]; b];
        for &(x, y) in &self.tree_edges {
            adj[x].push(y);
            adj[y].push(x);
        }
        for (v, nodes) in in_bags.iter().enumerate() {
            let set: BTreeSet<usize> = nodes.iter().copied().collect();
            let mut seen = BTreeSet::from([nodes[0]]);
            let mut queue = VecDeque::from([nodes[0]]);
            while let Some(x) = queue.pop_front() {
                for &y in &adj[x] {
                    if set.contains(&y) && seen.insert(y) {
                        queue.push_back(y);
                    }
                }
            }
            if seen.len() != set.len() {
                return Err(Error::LtdSubtree(format!("bags of vertex {v} are not connected")));
            }
        }
        // layering
        let layering = Layering { layers: self.layers.clone() };
        if !layering.is_valid(g) {
            return Err(Error::LtdLayering("layers do not form a layering".into()));
        }
        // layered width
        let mut layer_of = vec![usize::MAX; g.n()];
        for (i, layer) in self.layers.iter().enumerate() {
            for &v in layer {
                layer_of[v] = i;
            }
        }
        for (x, bag) in self.bags.iter().enumerate() {
            let mut counts = vec![0usize; self.layers.len()];
            for &v in bag {
                counts[layer_of[v]] += 1;
            }
            if let Some((i, &c)) = counts.iter().enumerate().find(|(_, &c)| c > self.layered_width)
            {
                return Err(Error::LtdWidth(format!(
                    "bag {x} meets layer {i} in {c} > {} vertices",
                    self.layered_width
                )));
            }
        }
        Ok(())
    }
}

fn nodes_connected(n: usize, edges: &[(usize, usize)]) -> bool {
    if n == 0 {
        return true;
    }
    let mut adj: Vec<Vec<usize>> = vec![vec![]; n];
    for &(x, y) in edges {
        adj[x].push(y);
        adj[y].push(x);
    }
    let mut seen = vec![false; n];
    seen[0] = true;
    let mut queue = VecDeque::from([0usize]);
    let mut count = 1;
    while let Some(x) = queue.pop_front() {
        for &y in &adj[x] {
            if !seen[y] {
                seen[y] = true;
                count += 1;
                queue.push_back(y);
            }
        }
    }
    count == n
}

/// Ordering derived from a layered tree decomposition: vertices sorted by the
/// root distance of their home bag (shallowest bag containing them, smallest
/// node id on ties), then by id. For layered width `k` this ordering yields
/// `scol_r <= k(2r+1)`.
pub fn layered_ordering(g: &Graph, ltd: &LayeredTD) -> Result<VertexOrdering, Error> {
    ltd.validate(g)?;
    let b = ltd.bags.len();
    let mut adj: Vec<Vec<usize>> = vec![vec![]; b];
    for &(x, y) in &ltd.tree_edges {
        adj[x].push(y);
        adj[y].push(x);
    }
    // depth of every node with the tree rooted at node 0
    let mut depth = vec![usize::MAX; b];
    depth[0] = 0;
    let mut queue = VecDeque::from([0usize]);
    while let Some(x) = queue.pop_front() {
        for &y in &adj[x] {
            if depth[y] == usize::MAX {
                depth[y] = depth[x] + 1;
                queue.push_back(y);
            }
        }
    }
    let mut home = vec![(usize::MAX, usize::MAX); g.n()]; // (depth, node)
    for (x, bag) in ltd.bags.iter().enumerate() {
        for &v in bag {
            let key = (depth[x], x);
            if key < home[v] {
                home[v] = key;
            }
        }
    }
    let mut verts: Vec<usize> = (0..g.n()).collect();
    verts.sort_by_key(|&v| (home[v].0, v));
    VertexOrdering::from_order(verts)
}

/// Layered tree decomposition of the `p x q` grid with layered width at most
/// 2: bags are consecutive row pairs forming a path, layers are the columns.
pub fn grid_layered_td(p: usize, q: usize) -> Result<LayeredTD, Error> {
    if p == 0 || q == 0 {
        return Err(Error::InvalidParam("grid dimensions must be positive".into()));
    }
    let row = |r: usize| -> Vec<usize> { (0..q).map(|c| r * q + c).collect() };
    let mut bags = vec![];
    if p == 1 {
        bags.push(row(0));
    } else {
        for r in 0..p - 1 {
            let mut bag = row(r);
            bag.extend(row(r + 1));
            bags.push(bag);
        }
    }
    let tree_edges: Vec<(usize, usize)> = (1..bags.len()).map(|i| (i - 1, i)).collect();
    let layers: Vec<Vec<usize>> = (0..q).map(|c| (0..p).map(|r| r * q + c).collect()).collect();
    Ok(LayeredTD { tree_edges, bags, layers, layered_width: 2.min(p) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{generate, Family};

    #[test]
    fn sreach_minimum_vertex_is_singleton() {
        let g = generate(Family::Cycle { n: 5 }, 0).unwrap();
        let ord = VertexOrdering::identity(5);
        for r in 1..4 {
            assert_eq!(sreach(&g, &ord, 0, r), BTreeSet::from([0]));
            assert_eq!(wreach(&g, &ord, 0, r), BTreeSet::from([0]));
        }
    }

    #[test]
    fn sreach_c5_and_p4() {
        let c5 = generate(Family::Cycle { n: 5 }, 0).unwrap();
        let ord = VertexOrdering::identity(5);
        assert_eq!(sreach(&c5, &ord, 4, 1), BTreeSet::from([0, 3, 4]));

        // interior vertices must come after v, so only the direct neighbour
        // of the maximum vertex is strongly reachable
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        let ord = VertexOrdering::identity(4);
        assert_eq!(sreach(&p4, &ord, 3, 3), BTreeSet::from([2, 3]));
    }

    #[test]
    fn wreach_p5() {
        let p5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        let ord = VertexOrdering::identity(5);
        assert_eq!(wreach(&p5, &ord, 4, 2), BTreeSet::from([2, 3, 4]));
    }

    #[test]
    fn r1_sreach_equals_wreach() {
        let g = generate(Family::Petersen, 0).unwrap();
        let ord = VertexOrdering::identity(10);
        for v in 0..10 {
            assert_eq!(sreach(&g, &ord, v, 1), wreach(&g, &ord, v, 1));
        }
        assert_eq!(scol(&g, &ord, 1), wcol(&g, &ord, 1));
    }

    #[test]
    fn scol_examples() {
        let k4 = generate(Family::Complete { n: 4 }, 0).unwrap();
        for r in 1..4 {
            assert_eq!(scol(&k4, &VertexOrdering::identity(4), r), 4);
        }
        let c5 = generate(Family::Cycle { n: 5 }, 0).unwrap();
        assert_eq!(scol(&c5, &VertexOrdering::identity(5), 1), 3);
    }

    #[test]
    fn exact_small() {
        let k4 = generate(Family::Complete { n: 4 }, 0).unwrap();
        assert_eq!(exact_scol(&k4, 2).unwrap().0, 4);
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(exact_scol(&p4, 1).unwrap().0, 2);
        let c5 = generate(Family::Cycle { n: 5 }, 0).unwrap();
        let (opt, witness) = exact_scol(&c5, 2).unwrap();
        assert!(opt <= scol(&c5, &VertexOrdering::identity(5), 2));
        assert_eq!(scol(&c5, &witness, 2), opt);
    }

    #[test]
    fn exact_cap() {
        let g = Graph::new(10);
        assert!(matches!(exact_scol(&g, 1), Err(Error::TooLarge { .. })));
    }

    #[test]
    fn grid_ltd_valid_and_bounded() {
        for (p, q) in [(2, 2), (4, 4), (5, 3)] {
            let g = generate(Family::Grid { p, q }, 0).unwrap();
            let ltd = grid_layered_td(p, q).unwrap();
            ltd.validate(&g).unwrap();
            let ord = layered_ordering(&g, &ltd).unwrap();
            for r in 1..=3usize {
                assert!(scol(&g, &ord, r) <= ltd.layered_width * (2 * r + 1));
            }
        }
        let ltd = grid_layered_td(4, 4).unwrap();
        assert_eq!(ltd.bags.len(), 3);
        assert_eq!(ltd.layered_width, 2);
    }

    #[test]
    fn single_bag_td_of_k4() {
        let k4 = generate(Family::Complete { n: 4 }, 0).unwrap();
        let ltd = LayeredTD {
            tree_edges: vec![],
            bags: vec![vec![0, 1, 2, 3]],
            layers: vec![vec![0, 1, 2, 3]],
            layered_width: 4,
        };
        ltd.validate(&k4).unwrap();
        let ord = layered_ordering(&k4, &ltd).unwrap();
        for r in 1..3 {
            assert_eq!(scol(&k4, &ord, r), 4);
            assert!(scol(&k4, &ord, r) <= 4 * (2 * r + 1));
        }
    }

    #[test]
    fn path_td_bound() {
        let p9 = Graph::from_edges(9, &(0..8).map(|v| (v, v + 1)).collect::<Vec<_>>()).unwrap();
        let ltd = LayeredTD {
            tree_edges: (1..8).map(|i| (i - 1, i)).collect(),
            bags: (0..8).map(|i| vec![i, i + 1]).collect(),
            layers: (0..9).map(|i| vec![i]).collect(),
            layered_width: 1,
        };
        ltd.validate(&p9).unwrap();
        let ord = layered_ordering(&p9, &ltd).unwrap();
        let s1 = scol(&p9, &ord, 1);
        assert!(s1 <= 3);
        assert_eq!(s1, 2);
    }

    #[test]
    fn invalid_ltds_rejected_distinctly() {
        let g = generate(Family::Grid { p: 2, q: 2 }, 0).unwrap();
        let good = grid_layered_td(2, 2).unwrap();

        let mut bad = good.clone();
        bad.bags[0].retain(|&v| v != 3);
        assert!(matches!(bad.validate(&g), Err(Error::LtdCoverage(_))));

        let mut bad = good.clone();
        bad.layered_width = 1;
        assert!(matches!(bad.validate(&g), Err(Error::LtdWidth(_))));

        let p3 = Graph::from_edges(3, &[(0, 1), (1, 2)]).unwrap();
        let bad = LayeredTD {
            tree_edges: vec![(0, 1), (1, 2)],
            bags: vec![vec![0, 1], vec![1, 2], vec![0]],
            layers: vec![vec![0, 1, 2]],
            layered_width: 3,
        };
        assert!(matches!(bad.validate(&p3), Err(Error::LtdSubtree(_))));
    }
}
