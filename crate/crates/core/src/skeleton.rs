//! Minimal induced connected subgraphs containing a terminal set, and the two
//! 2-colourings they support.
//!
//! A skeleton on `k >= 2` terminals built by [`build_skeleton`] satisfies:
//! max degree at most `k`, bandwidth at most `k-1`, a 2-colouring with
//! clustering `ceil(k/2)`, a red/blue colouring with at most `k-2` red
//! vertices whose blue part is at most `k-1` disjoint paths, and a bound on
//! host-graph neighbours inside the skeleton: at most `2k-2` for skeleton
//! vertices and at most `2k-1` for outside vertices (the extra one is the
//! outside vertex's own tree parent, and is attained on K4 minus an edge).

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::Error;
use crate::graph::Graph;
use crate::lexbfs::{lexbfs_tree, subtree_to};

/// Colour value for red vertices in [`red_blue_colouring`].
pub const RED: usize = 0;
/// Colour value for blue vertices in [`red_blue_colouring`].
pub const BLUE: usize = 1;

/// Inclusion-minimal connected induced subgraph containing its terminals.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Skeleton {
    pub vertices: BTreeSet<usize>,
    pub terminals: BTreeSet<usize>,
}

impl Skeleton {
    pub fn k(&self) -> usize {
        self.terminals.len()
    }
}

/// Inclusion-minimal connected `H` with `a ⊆ H ⊆ within`.
///
/// Candidates are removed in descending id order, re-testing connectivity
/// after each removal and sweeping again until a whole pass removes nothing,
/// so the result is reproducible.
pub fn minimal_connected_containing(
    g: &Graph,
    a: &BTreeSet<usize>,
    within: &BTreeSet<usize>,
) -> Result<Skeleton, Error> {
    if a.is_empty() {
        return Err(Error::EmptySet);
    }
    if !a.is_subset(within) {
        return Err(Error::InvalidParam("terminals must lie inside the candidate set".into()));
    }
    if !g.is_connected_set(within) {
        return Err(Error::DisconnectedSet);
    }
    let mut h = within.clone();
    loop {
        let mut removed = false;
        let mut candidates: Vec<usize> = h.difference(a).copied().collect();
        candidates.reverse();
        for v in candidates {
            let mut trial = h.clone();
            trial.remove(&v);
            if g.is_connected_set(&trial) {
                h = trial;
                removed = true;
            }
        }
        if !removed {
            break;
        }
    }
    Ok(Skeleton { vertices: h, terminals: a.clone() })
}

/// Skeleton for terminal set `a` in a connected graph: a LexBFS spanning tree
/// rooted at the smallest terminal is pruned to the root paths of `a`, then
/// made inclusion-minimal inside that vertex set.
pub fn build_skeleton(g: &Graph, a: &BTreeSet<usize>) -> Result<Skeleton, Error> {
    if a.is_empty() {
        return Err(Error::EmptySet);
    }
    if let Some(&v) = a.iter().find(|&&v| v >= g.n()) {
        return Err(Error::VertexOutOfRange(v));
    }
    if a.len() == 1 {
        return Ok(Skeleton { vertices: a.clone(), terminals: a.clone() });
    }
    let root = *a.iter().next().unwrap();
    let tree = lexbfs_tree(g, root)?;
    let sub = subtree_to(&tree, a)?;
    minimal_connected_containing(g, a, &sub.vertices)
}

/// 2-colouring of the skeleton with monochromatic components of order at most
/// `ceil(k/2)`.
///
/// Leaf blocks are peeled one at a time, always the one whose non-cut part is
/// smallest, and each peeled part takes the colour opposite to its cut
/// vertex. When only terminals remain they are split into two halves.
pub fn cluster_two_colouring(g: &Graph, h: &Skeleton) -> Result<BTreeMap<usize, usize>, Error> {
    let k = h.k();
    if k < 2 {
        return Err(Error::InvalidParam("clustered 2-colouring needs at least 2 terminals".into()));
    }
    let mut cur = h.vertices.clone();
    let mut terms = h.terminals.clone();
    let mut peeled: Vec<(BTreeSet<usize>, usize)> = vec![];
    while cur != terms {
        let (sub, new_to_old) = g.induced(&cur);
        let bct = sub.block_cut_tree()?;
        let leafs = bct.leaf_blocks();
        if leafs.is_empty() {
            return Err(Error::Internal(
                "skeleton with surplus vertices must have a leaf block".into(),
            ));
        }
        let (bi, cut) = leafs
            .into_iter()
            .min_by_key(|&(bi, cut)| {
                let part: BTreeSet<usize> = bct.blocks[bi]
                    .iter()
                    .filter(|&&v| v != cut)
                    .map(|&v| new_to_old[v])
                    .collect();
                (part.len(), *part.iter().next().unwrap())
            })
            .unwrap();
        let cut_old = new_to_old[cut];
        let part: BTreeSet<usize> = bct.blocks[bi]
            .iter()
            .filter(|&&v| v != cut)
            .map(|&v| new_to_old[v])
            .collect();
        let block_old: BTreeSet<usize> =
            bct.blocks[bi].iter().map(|&v| new_to_old[v]).collect();
        terms = terms.difference(&block_old).copied().collect();
        terms.insert(cut_old);
        for v in &part {
            cur.remove(v);
        }
        peeled.push((part, cut_old));
    }
    // base: only terminals left; halve them
    let mut colour: BTreeMap<usize, usize> = BTreeMap::new();
    let base: Vec<usize> = cur.iter().copied().collect();
    let half = base.len().div_ceil(2);
    for (i, &v) in base.iter().enumerate() {
        colour.insert(v, usize::from(i >= half));
    }
    for (part, cut) in peeled.into_iter().rev() {
        let opposite = 1 - colour[&cut];
        for v in part {
            colour.insert(v, opposite);
        }
    }
    Ok(colour)
}

/// Red/blue colouring of the skeleton: at most `k-2` red vertices and a blue
/// part that induces at most `k-1` pairwise disjoint paths.
///
/// Terminals are detached in descending id order; each detached terminal
/// contributes its shortest path back to the remaining skeleton, coloured
/// blue except for the single attachment vertex, which turns red.
pub fn red_blue_colouring(g: &Graph, h: &Skeleton) -> Result<BTreeMap<usize, usize>, Error> {
    if h.k() < 2 {
        return Err(Error::InvalidParam("red/blue colouring needs at least 2 terminals".into()));
    }
    let colour = red_blue_rec(g, &h.vertices, &h.terminals)?;
    if colour.len() != h.vertices.len() {
        return Err(Error::Internal("skeleton is not minimal for its terminals".into()));
    }
    Ok(colour)
}

fn red_blue_rec(
    g: &Graph,
    vertices: &BTreeSet<usize>,
    terminals: &BTreeSet<usize>,
) -> Result<BTreeMap<usize, usize>, Error> {
    if terminals.len() == 2 {
        // minimal connected on two terminals is an induced path
        return Ok(vertices.iter().map(|&v| (v, BLUE)).collect());
    }
    let x = *terminals.iter().next_back().unwrap();
    let mut rest = terminals.clone();
    rest.remove(&x);
    let sub = minimal_connected_containing(g, &rest, vertices)?;
    if sub.vertices.contains(&x) {
        return red_blue_rec(g, &sub.vertices, &rest);
    }
    let mut colour = red_blue_rec(g, &sub.vertices, &rest)?;
    // shortest path from x to the reduced skeleton, inside the current one
    let path = shortest_path_to_set(g, vertices, x, &sub.vertices)?;
    // path = x, ..., u, v, w with w inside the reduced skeleton
    let len = path.len();
    debug_assert!(len >= 2);
    let v = path[len - 2];
    colour.insert(v, RED);
    for &u in &path[..len - 2] {
        colour.insert(u, BLUE);
    }
    // minimality forces the skeleton to be exactly sub + path - w
    if colour.len() != vertices.len() {
        return Err(Error::Internal("skeleton is not minimal for its terminals".into()));
    }
    Ok(colour)
}

/// Shortest path from `from` to any vertex of `target` inside `within`;
/// deterministic through id-ordered BFS and smallest-id tie-breaks.
fn shortest_path_to_set(
    g: &Graph,
    within: &BTreeSet<usize>,
    from: usize,
    target: &BTreeSet<usize>,
) -> Result<Vec<usize>, Error> {
    let mut parent: BTreeMap<usize, usize> = BTreeMap::new();
    let mut dist: BTreeMap<usize, usize> = BTreeMap::new();
    dist.insert(from, 0);
    let mut queue = VecDeque::from([from]);
    let mut best: Option<(usize, usize)> = None; // (dist, vertex)
    while let Some(u) = queue.pop_front() {
        let du = dist[&u];
        if let Some((bd, _)) = best {
            if du >= bd {
                break;
            }
        }
        for &w in g.neighbours(u) {
            if !within.contains(&w) || dist.contains_key(&w) {
                continue;
            }
            dist.insert(w, du + 1);
            parent.insert(w, u);
            if target.contains(&w) {
                let cand = (du + 1, w);
                if best.map_or(true, |b| cand < b) {
                    best = Some(cand);
                }
            } else {
                queue.push_back(w);
            }
        }
    }
    let (_, hit) = best.ok_or(Error::DisconnectedSet)?;
    let mut path = vec![hit];
    let mut v = hit;
    while v != from {
        v = parent[&v];
        path.push(v);
    }
    path.reverse();
    Ok(path)
}
