//! 2-colourings with bounded defect from low-cut spanning trees, and the
//! tree-indexed bag-partition pipeline built on them.
//!
//! The structural inputs (a spanning tree whose edge cuts carry few graph
//! edges, or a tree-indexed partition with bounded adhesion) are supplied by
//! the caller; this module verifies them and derives the colourings.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::graph::Graph;
use crate::partition::Colouring;

/// Spanning tree over the vertices of a graph such that for every tree edge
/// the two sides are joined by at most `k` graph edges.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CutTree {
    pub edges: Vec<(usize, usize)>,
    pub k: usize,
}

impl CutTree {
    /// Verify the tree spans `g` and every tree-edge cut carries at most
    /// `k` graph edges; the first offending edge is reported.
    pub fn validate(&self, g: &Graph) -> Result<(), Error> {
        let n = g.n();
        if n == 0 {
            return Ok(());
        }
        if self.edges.len() + 1 != n {
            return Err(Error::InvalidParam(format!(
                "spanning tree needs {} edges, got {}",
                n - 1,
                self.edges.len()
            )));
        }
        let adj = tree_adjacency(n, &self.edges)?;
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        let mut count = 1usize;
        while let Some(v) = stack.pop() {
            for &w in &adj[v] {
                if !seen[w] {
                    seen[w] = true;
                    count += 1;
                    stack.push(w);
                }
            }
        }
        if count != n {
            return Err(Error::InvalidParam("tree edges do not span the graph".into()));
        }
        for &(x, y) in &self.edges {
            if cut_size(g, n, &self.edges, (x, y)) > self.k {
                return Err(Error::CutBoundViolated(x, y));
            }
        }
        Ok(())
    }
}

fn tree_adjacency(n: usize, edges: &[(usize, usize)]) -> Result<Vec<Vec<usize>>, Error> {
    let mut adj: Vec<Vec<usize>> = vec![vec![]; n];
    for &(x, y) in edges {
        if x >= n || y >= n {
            return Err(Error::VertexOutOfRange(x.max(y)));
        }
        adj[x].push(y);
        adj[y].push(x);
    }
    Ok(adj)
}

/// Graph edges crossing the cut that removing `edge` from the tree induces.
fn cut_size(g: &Graph, n: usize, edges: &[(usize, usize)], edge: (usize, usize)) -> usize {
    let side = side_of(n, edges, edge);
    g.edges().into_iter().filter(|&(u, v)| side[u] != side[v]).count()
}

/// Membership in the component of `edge.0` after deleting `edge`.
fn side_of(n: usize, edges: &[(usize, usize)], edge: (usize, usize)) -> Vec<bool> {
    let mut adj: Vec<Vec<usize>> = vec![vec![]; n];
    for &(x, y) in edges {
        if (x, y) == edge || (y, x) == edge {
            continue;
        }
        adj[x].push(y);
        adj[y].push(x);
    }
    let mut side = vec![false; n];
    let mut stack = vec![edge.0];
    side[edge.0] = true;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !side[w] {
                side[w] = true;
                stack.push(w);
            }
        }
    }
    side
}

/// 2-colouring with defect at most `ct.k`.
///
/// Repeatedly finds a vertex of degree above `k` whose tree side contains no
/// other such vertex, locates a vertex on that side with all its neighbours
/// inside, contracts it into its tree parent (tree rooted at vertex 0), and
/// colours it opposite to the high-degree vertex on unwinding. When no
/// vertex exceeds degree `k` everything left takes the first colour.
pub fn tree_cut_2colour(g: &Graph, ct: &CutTree) -> Result<Colouring, Error> {
    ct.validate(g)?;
    let n = g.n();
    if n == 0 {
        return Colouring::new(g, vec![]);
    }

    let mut cur_g = g.clone();
    let mut cur_edges = ct.edges.clone();
    let mut cur_to_orig: Vec<usize> = (0..n).collect();
    // (absorbed vertex, its high-degree witness), in contraction order
    let mut records: Vec<(usize, usize)> = vec![];
    let k = ct.k;

    loop {
        let m = cur_g.n();
        let large: Vec<usize> = (0..m).filter(|&v| cur_g.degree(v) >= k + 1).collect();
        if large.is_empty() {
            break;
        }
        // root the current tree at 0; take a deepest high-degree vertex
        let adj = tree_adjacency(m, &cur_edges)?;
        let (parent, depth) = root_tree(&adj, 0);
        let &u = large
            .iter()
            .max_by_key(|&&v| (depth[v], std::cmp::Reverse(v)))
            .expect("large is non-empty");
        // side containing u with u as its only high-degree vertex
        let side: BTreeSet<usize> = if u != 0 {
            subtree_below(&parent, m, u)
        } else {
            // u is the root and the only high-degree vertex: take everything
            // except the subtree below its smallest child
            let child = adj[0].iter().copied().min().ok_or_else(|| {
                Error::Internal("root of a spanning tree on >= 2 vertices has a child".into())
            })?;
            let below = subtree_below(&parent, m, child);
            (0..m).filter(|v| !below.contains(v)).collect()
        };
        // absorbable vertex: all its graph neighbours stay inside the side
        let w = side
            .iter()
            .copied()
            .filter(|&v| v != u)
            .find(|&v| cur_g.neighbours(v).iter().all(|x| side.contains(x)))
            .ok_or_else(|| {
                Error::Internal("verified cut bound guarantees an absorbable vertex".into())
            })?;
        let z = if w != 0 {
            parent[w]
        } else {
            adj[0].iter().copied().min().expect("spanning tree root has a child")
        };
        records.push((cur_to_orig[w], cur_to_orig[u]));

        // identify w and z in both the graph and the tree
        let pair = BTreeSet::from([w, z]);
        let (next_g, map) = cur_g.contract_set(&pair).map_err(|_| {
            Error::Internal("tree neighbours are adjacent in the tree, contraction holds".into())
        })?;
        let mut next_edges: BTreeSet<(usize, usize)> = BTreeSet::new();
        for &(x, y) in &cur_edges {
            let (a, b) = (map[x], map[y]);
            if a != b {
                next_edges.insert((a.min(b), a.max(b)));
            }
        }
        let mut next_to_orig = vec![usize::MAX; next_g.n()];
        for v in 0..m {
            if v == w {
                continue;
            }
            next_to_orig[map[v]] = cur_to_orig[v];
        }
        cur_g = next_g;
        cur_edges = next_edges.into_iter().collect();
        cur_to_orig = next_to_orig;
    }

    // base: no high-degree vertices; everything left takes the first colour
    let mut colour = vec![0usize; n];
    for (w, u) in records.into_iter().rev() {
        colour[w] = 1 - colour[u];
    }
    Colouring::new(g, colour)
}

fn root_tree(adj: &[Vec<usize>], root: usize) -> (Vec<usize>, Vec<usize>) {
    let n = adj.len();
    let mut parent = vec![usize::MAX; n];
    let mut depth = vec![0usize; n];
    let mut stack = vec![root];
    let mut seen = vec![false; n];
    seen[root] = true;
    while let Some(v) = stack.pop() {
        for &w in &adj[v] {
            if !seen[w] {
                seen[w] = true;
                parent[w] = v;
                depth[w] = depth[v] + 1;
                stack.push(w);
            }
        }
    }
    (parent, depth)
}

fn subtree_below(parent: &[usize], n: usize, v: usize) -> BTreeSet<usize> {
    // vertices whose parent chain passes through v
    let mut out = BTreeSet::new();
    for u in 0..n {
        let mut x = u;
        loop {
            if x == v {
                out.insert(u);
                break;
            }
            if parent[x] == usize::MAX {
                break;
            }
            x = parent[x];
        }
    }
    out
}

/// Partition of the vertices indexed by the nodes of a tree; bags may be
/// empty. The adhesion is the maximum number of graph edges crossing a
/// tree-edge cut.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TPartition {
    /// Edges of the indexing tree over nodes `0..bags.len()`.
    pub tree_edges: Vec<(usize, usize)>,
    pub bags: Vec<Vec<usize>>,
}

/// Adhesion and maximum bag size, recomputed from the graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TPartitionStats {
    pub adhesion: usize,
    pub max_bag: usize,
}

impl TPartition {
    /// Verify the structure and recompute adhesion and maximum bag size.
    pub fn validate(&self, g: &Graph) -> Result<TPartitionStats, Error> {
        let b = self.bags.len();
        if b == 0 {
            return Err(Error::InvalidParam("a bag partition needs at least one node".into()));
        }
        if self.tree_edges.len() + 1 != b {
            return Err(Error::InvalidParam(format!(
                "indexing tree needs {} edges, got {}",
                b - 1,
                self.tree_edges.len()
            )));
        }
        let adj = tree_adjacency(b, &self.tree_edges)?;
        let mut seen = vec![false; b];
        seen[0] = true;
        let mut stack = vec![0usize];
        let mut count = 1usize;
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if !seen[y] {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        if count != b {
            return Err(Error::InvalidParam("indexing tree is not connected".into()));
        }
        let node = self.node_of(g.n())?;
        let mut adhesion = 0usize;
        for &(x, y) in &self.tree_edges {
            let side = side_of(b, &self.tree_edges, (x, y));
            let crossing = g
                .edges()
                .into_iter()
                .filter(|&(u, v)| side[node[u]] != side[node[v]])
                .count();
            adhesion = adhesion.max(crossing);
        }
        let max_bag = self.bags.iter().map(|bg| bg.len()).max().unwrap_or(0);
        Ok(TPartitionStats { adhesion, max_bag })
    }

    /// Node of the bag containing each vertex.
    pub fn node_of(&self, n: usize) -> Result<Vec<usize>, Error> {
        let mut out = vec![usize::MAX; n];
        for (x, bag) in self.bags.iter().enumerate() {
            for &v in bag {
                if v >= n {
                    return Err(Error::VertexOutOfRange(v));
                }
                if out[v] != usize::MAX {
                    return Err(Error::InvalidParam(format!("vertex {v} lies in two bags")));
                }
                out[v] = x;
            }
        }
        if let Some(v) = out.iter().position(|&x| x == usize::MAX) {
            return Err(Error::InvalidParam(format!("vertex {v} lies in no bag")));
        }
        Ok(out)
    }
}

/// Defect guaranteed for [`tpartition_2colour`] given adhesion `alpha` and
/// maximum bag size `beta`; `multiplicity` scales the bound for graphs that
/// stand for multigraphs with bounded edge multiplicity.
pub fn tpartition_defect_bound(alpha: usize, beta: usize, multiplicity: usize) -> usize {
    multiplicity * (alpha * alpha.min(beta) + beta.saturating_sub(1))
}

/// 2-colouring with defect at most `alpha * min(alpha, beta) + beta - 1`.
///
/// The bag quotient inherits the tree cuts (each quotient edge crossing a
/// tree cut is witnessed by a distinct graph edge, so quotient cuts stay
/// within the adhesion), gets 2-coloured by [`tree_cut_2colour`], and the
/// colours lift to the vertices bag by bag.
pub fn tpartition_2colour(
    g: &Graph,
    tp: &TPartition,
) -> Result<(Colouring, TPartitionStats), Error> {
    let stats = tp.validate(g)?;
    let node = tp.node_of(g.n())?;
    let b = tp.bags.len();
    // bag quotient
    let mut qedges: BTreeSet<(usize, usize)> = BTreeSet::new();
    for (u, v) in g.edges() {
        let (x, y) = (node[u], node[v]);
        if x != y {
            qedges.insert((x.min(y), x.max(y)));
        }
    }
    let q = Graph::from_edges(b, &qedges.into_iter().collect::<Vec<_>>())?;
    // quotient cuts stay within the adhesion
    for &(x, y) in &tp.tree_edges {
        let side = side_of(b, &tp.tree_edges, (x, y));
        let crossing =
            q.edges().into_iter().filter(|&(a, c)| side[a] != side[c]).count();
        if crossing > stats.adhesion {
            return Err(Error::Internal(format!(
                "quotient cut at ({x}, {y}) carries {crossing} edges, adhesion is {}",
                stats.adhesion
            )));
        }
    }
    let ct = CutTree { edges: tp.tree_edges.clone(), k: stats.adhesion };
    let qc = if b == 1 {
        Colouring::new(&q, vec![0])?
    } else {
        tree_cut_2colour(&q, &ct)?
    };
    let colour: Vec<usize> = (0..g.n()).map(|v| qc.colour[node[v]]).collect();
    let c = Colouring::new(g, colour)?;
    Ok((c, stats))
}

/// Random spanning tree plus as many extra edges as the cut bound allows;
/// used to build test corpora. Returns the graph and its cut tree.
pub fn random_low_cut_instance(
    n: usize,
    k: usize,
    extra_candidates: usize,
    rng: &mut impl rand::Rng,
) -> (Graph, CutTree) {
    use rand::seq::SliceRandom;
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut tree_edges: Vec<(usize, usize)> = vec![];
    for i in 1..n {
        let j = rng.gen_range(0..i);
        tree_edges.push((order[j], order[i]));
    }
    let mut edges = tree_edges.clone();
    let mut cuts: BTreeMap<(usize, usize), usize> = tree_edges.iter().map(|&e| (e, 1)).collect();
    // membership vectors per tree edge, computed once
    let sides: BTreeMap<(usize, usize), Vec<bool>> =
        tree_edges.iter().map(|&e| (e, side_of(n, &tree_edges, e))).collect();
    let has = |edges: &[(usize, usize)], u: usize, v: usize| {
        edges.iter().any(|&(a, b)| (a, b) == (u, v) || (b, a) == (u, v))
    };
    for _ in 0..extra_candidates {
        if n < 2 {
            break;
        }
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v || has(&edges, u, v) {
            continue;
        }
        let crossed: Vec<(usize, usize)> = tree_edges
            .iter()
            .copied()
            .filter(|e| sides[e][u] != sides[e][v])
            .collect();
        if crossed.iter().all(|e| cuts[e] < k) {
            for e in crossed {
                *cuts.get_mut(&e).unwrap() += 1;
            }
            edges.push((u, v));
        }
    }
    let g = Graph::from_edges(n, &edges).expect("constructed edges are simple");
    (g, CutTree { edges: tree_edges, k })
}
