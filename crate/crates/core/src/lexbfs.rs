//! LexBFS spanning trees with ordered layers, root-path subtrees, and the
//! vertex orderings they induce.
//!
//! A tree built here satisfies three rules, all re-checkable through
//! [`check_lex_rules`]:
//!
//! - BFS: layer index equals distance from the root;
//! - priority: a vertex's parent is the earliest of its neighbours in the
//!   previous layer's order;
//! - non-crossing: tree edges between consecutive layers never cross, i.e.
//!   earlier children have parents no later than later children's parents.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use serde::{Deserialize, Serialize};

use crate::colnums::VertexOrdering;
use crate::error::Error;
use crate::graph::Graph;

/// Partition of the vertices into layers so that every edge stays within a
/// layer or joins consecutive layers.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Layering {
    pub layers: Vec<Vec<usize>>,
}

impl Layering {
    /// Every edge of `g` joins equal or consecutive layers, and the layers
    /// partition the vertex set.
    pub fn is_valid(&self, g: &Graph) -> bool {
        let mut index = vec![usize::MAX; g.n()];
        let mut count = 0usize;
        for (i, layer) in self.layers.iter().enumerate() {
            for &v in layer {
                if v >= g.n() || index[v] != usize::MAX {
                    return false;
                }
                index[v] = i;
                count += 1;
            }
        }
        count == g.n()
            && g.edges().into_iter().all(|(u, v)| index[u].abs_diff(index[v]) <= 1)
    }
}

/// Rooted LexBFS spanning tree with a linear order on every layer.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LexTree {
    pub root: usize,
    /// `parent[v]` is `None` exactly for the root.
    pub parent: Vec<Option<usize>>,
    /// `layer_index[v]` equals the distance from the root.
    pub layer_index: Vec<usize>,
    /// Layers in root order; each inner vector is that layer's linear order.
    pub layer_order: Vec<Vec<usize>>,
}

impl LexTree {
    /// Position of each vertex inside its layer.
    pub fn layer_positions(&self) -> Vec<usize> {
        let mut pos = vec![usize::MAX; self.parent.len()];
        for layer in &self.layer_order {
            for (i, &v) in layer.iter().enumerate() {
                pos[v] = i;
            }
        }
        pos
    }

    /// The layering induced by the tree.
    pub fn layering(&self) -> Layering {
        Layering { layers: self.layer_order.clone() }
    }

    pub fn n(&self) -> usize {
        self.parent.len()
    }
}

/// Subtree of a LexBFS spanning tree that contains the root. The root is
/// never counted as a leaf.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexSubtree {
    pub root: usize,
    pub vertices: BTreeSet<usize>,
    pub leaves: BTreeSet<usize>,
}

impl LexSubtree {
    pub fn leaf_count(&self) -> usize {
        self.leaves.len()
    }
}

/// LexBFS visit order by partition refinement, ties broken by smallest id.
fn lexbfs_order(g: &Graph, root: usize) -> Vec<usize> {
    let n = g.n();
    let mut order = Vec::with_capacity(n);
    let rest: Vec<usize> = (0..n).filter(|&v| v != root).collect();
    let mut classes: Vec<Vec<usize>> = vec![vec![root]];
    if !rest.is_empty() {
        classes.push(rest);
    }
    while let Some(first) = classes.first_mut() {
        let pivot = first.remove(0);
        if first.is_empty() {
            classes.remove(0);
        }
        order.push(pivot);
        let mut refined = Vec::with_capacity(classes.len());
        for class in classes.drain(..) {
            let (inside, outside): (Vec<usize>, Vec<usize>) =
                class.into_iter().partition(|v| g.has_edge(pivot, *v));
            if !inside.is_empty() {
                refined.push(inside);
            }
            if !outside.is_empty() {
                refined.push(outside);
            }
        }
        classes = refined;
    }
    order
}

/// LexBFS spanning tree of a connected graph, rooted at `root`.
///
/// Layer orders come from the visit order; each parent is the earliest
/// neighbour in the previous layer, which realises the priority and
/// non-crossing rules for this ordering.
pub fn lexbfs_tree(g: &Graph, root: usize) -> Result<LexTree, Error> {
    if root >= g.n() {
        return Err(Error::VertexOutOfRange(root));
    }
    let dist = g.distances_from(root);
    if dist.iter().any(|d| d.is_none()) {
        return Err(Error::Disconnected);
    }
    let order = lexbfs_order(g, root);
    let layer_index: Vec<usize> = (0..g.n()).map(|v| dist[v].unwrap()).collect();
    let depth = layer_index.iter().copied().max().unwrap_or(0);
    let mut layer_order: Vec<Vec<usize>> = vec![vec![]; depth + 1];
    let mut last_layer = 0usize;
    for &v in &order {
        let l = layer_index[v];
        debug_assert!(l >= last_layer, "LexBFS visit order must be layer-monotone");
        last_layer = l;
        layer_order[l].push(v);
    }
    let mut pos = vec![usize::MAX; g.n()];
    for layer in &layer_order {
        for (i, &v) in layer.iter().enumerate() {
            pos[v] = i;
        }
    }
    let mut parent = vec![None; g.n()];
    for v in 0..g.n() {
        if v == root {
            continue;
        }
        let up = layer_index[v] - 1;
        let best = g
            .neighbours(v)
            .iter()
            .copied()
            .filter(|&w| layer_index[w] == up)
            .min_by_key(|&w| pos[w])
            .ok_or_else(|| Error::Internal(format!("vertex {v} has no neighbour above")))?;
        parent[v] = Some(best);
    }
    Ok(LexTree { root, parent, layer_index, layer_order })
}

/// Verify the BFS, priority and non-crossing rules for `t` on `g`.
/// Total: structural mismatches yield `false` rather than an error.
pub fn check_lex_rules(g: &Graph, t: &LexTree) -> bool {
    let n = g.n();
    if t.parent.len() != n || t.layer_index.len() != n || t.root >= n {
        return false;
    }
    let dist = g.distances_from(t.root);
    for v in 0..n {
        match dist[v] {
            Some(d) if d == t.layer_index[v] => {}
            _ => return false,
        }
    }
    // layer_order must partition each distance class with consistent indices
    let mut seen = vec![false; n];
    for (i, layer) in t.layer_order.iter().enumerate() {
        for &v in layer {
            if v >= n || seen[v] || t.layer_index[v] != i {
                return false;
            }
            seen[v] = true;
        }
    }
    if seen.iter().any(|&s| !s) {
        return false;
    }
    let pos = t.layer_positions();
    // parent structure
    for v in 0..n {
        match t.parent[v] {
            None => {
                if v != t.root {
                    return false;
                }
            }
            Some(p) => {
                if v == t.root
                    || !g.has_edge(p, v)
                    || t.layer_index[v] == 0
                    || t.layer_index[p] + 1 != t.layer_index[v]
                {
                    return false;
                }
                // priority rule: no neighbour of v precedes p in p's layer
                let earlier = g.neighbours(v).iter().any(|&w| {
                    t.layer_index[w] == t.layer_index[p] && pos[w] < pos[p]
                });
                if earlier {
                    return false;
                }
            }
        }
    }
    // non-crossing rule over pairs of tree edges into the same layer
    for i in 1..t.layer_order.len() {
        let layer = &t.layer_order[i];
        for (a, &v) in layer.iter().enumerate() {
            let Some(w) = t.parent[v] else { return false };
            for &x in layer.iter().skip(a + 1) {
                // v before x in layer i
                let Some(y) = t.parent[x] else { return false };
                if pos[y] < pos[w] {
                    return false;
                }
            }
        }
    }
    true
}

/// Subtree of `t` formed by the root paths of every vertex in `a`.
pub fn subtree_to(t: &LexTree, a: &BTreeSet<usize>) -> Result<LexSubtree, Error> {
    if a.is_empty() {
        return Err(Error::EmptySet);
    }
    let n = t.parent.len();
    let mut vertices = BTreeSet::new();
    for &start in a {
        if start >= n {
            return Err(Error::VertexOutOfRange(start));
        }
        let mut v = start;
        while vertices.insert(v) {
            match t.parent[v] {
                Some(p) => v = p,
                None => break,
            }
        }
    }
    let mut has_child: BTreeMap<usize, bool> = vertices.iter().map(|&v| (v, false)).collect();
    for &v in &vertices {
        if let Some(p) = t.parent[v] {
            if vertices.contains(&p) {
                has_child.insert(p, true);
            }
        }
    }
    let leaves = vertices
        .iter()
        .copied()
        .filter(|&v| v != t.root && !has_child[&v])
        .collect();
    Ok(LexSubtree { root: t.root, vertices, leaves })
}

/// `|N_g(v) ∩ V(s)|`. For subtrees with at least one leaf, a vertex of the
/// subtree sees at most twice the leaf count; an outside vertex may
/// additionally be adjacent to its own tree parent inside the subtree, so
/// its bound is one higher. Both bounds are asserted.
///
/// The `2k` form without the outside allowance fails already on the
/// four-vertex graph K4 minus an edge: rooting at one endpoint of the
/// missing edge leaves a one-leaf path subtree whose three vertices are all
/// adjacent to the off-subtree vertex.
pub fn neighbour_count_in(g: &Graph, s: &LexSubtree, v: usize) -> usize {
    let count = g.neighbours(v).iter().filter(|w| s.vertices.contains(w)).count();
    if s.leaf_count() >= 1 {
        let bound = 2 * s.leaf_count() + usize::from(!s.vertices.contains(&v));
        assert!(
            count <= bound,
            "vertex {v} has {count} neighbours in a {}-leaf subtree",
            s.leaf_count()
        );
    }
    count
}

/// Concatenate the layer orders into a single vertex ordering. For a spanning
/// tree with `k` leaves the result has bandwidth at most `k`.
pub fn bandwidth_ordering(_g: &Graph, t: &LexTree) -> VertexOrdering {
    let order: Vec<usize> = t.layer_order.iter().flatten().copied().collect();
    VertexOrdering::from_order(order).expect("layer orders partition the vertices")
}

/// Root-leaf path decomposition of a subtree: the first piece runs from the
/// root to the smallest leaf, later pieces hang off already covered vertices.
/// Singleton subtrees yield a single one-vertex piece.
pub fn subtree_pieces(t: &LexTree, s: &LexSubtree) -> Vec<Vec<usize>> {
    if s.leaves.is_empty() {
        return vec![vec![s.root]];
    }
    let mut covered: BTreeSet<usize> = BTreeSet::new();
    let mut pieces = vec![];
    for &leaf in &s.leaves {
        let mut up = vec![];
        let mut v = leaf;
        loop {
            if covered.contains(&v) {
                break;
            }
            up.push(v);
            covered.insert(v);
            match t.parent[v] {
                Some(p) if s.vertices.contains(&p) => v = p,
                _ => break,
            }
        }
        up.reverse();
        pieces.push(up);
    }
    pieces
}

/// Do all vertices respect the subtree neighbour bounds (`2k` inside,
/// `2k + 1` outside)? Used as an oracle in tests.
pub fn leaf_count_bound_holds(g: &Graph, s: &LexSubtree) -> bool {
    let k = s.leaf_count();
    if k == 0 {
        return true;
    }
    (0..g.n()).all(|v| {
        let c = g.neighbours(v).iter().filter(|w| s.vertices.contains(w)).count();
        c <= 2 * k + usize::from(!s.vertices.contains(&v))
    })
}

/// BFS layering of `g` from `root` (distance classes in id order).
pub fn bfs_layering(g: &Graph, root: usize) -> Result<Layering, Error> {
    if root >= g.n() {
        return Err(Error::VertexOutOfRange(root));
    }
    let dist = g.distances_from(root);
    if dist.iter().any(|d| d.is_none()) {
        return Err(Error::Disconnected);
    }
    let depth = dist.iter().map(|d| d.unwrap()).max().unwrap_or(0);
    let mut layers = vec![vec![]; depth + 1];
    for v in 0..g.n() {
        layers[dist[v].unwrap()].push(v);
    }
    Ok(Layering { layers })
}

/// Breadth-first layering per connected component: every component is layered
/// from its smallest vertex, and classes with equal depth are merged.
pub fn componentwise_layering(g: &Graph) -> Layering {
    let mut dist = vec![usize::MAX; g.n()];
    for comp in g.components() {
        let root = *comp.iter().next().unwrap();
        let mut queue = VecDeque::from([root]);
        dist[root] = 0;
        while let Some(u) = queue.pop_front() {
            for &w in g.neighbours(u) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[u] + 1;
                    queue.push_back(w);
                }
            }
        }
    }
    let depth = dist.iter().copied().max().map_or(0, |d| d);
    let mut layers = vec![vec![]; if g.n() == 0 { 0 } else { depth + 1 }];
    for v in 0..g.n() {
        layers[dist[v]].push(v);
    }
    Layering { layers }
}
