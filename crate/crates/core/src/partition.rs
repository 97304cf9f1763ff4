//! Connected partitions with certified width, their quotient graphs, greedy
//! part colourings, and the vertex colourings and orderings a width-bounded
//! partition induces.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::colnums::VertexOrdering;
use crate::error::Error;
use crate::graph::Graph;
use crate::oracles::colouring_metrics;

/// Per-part structure recorded by the decomposition algorithms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum PartMeta {
    /// Part built as a minimal connected subgraph over a terminal set.
    Skeleton { terminals: Vec<usize> },
    /// Part induced by a BFS or LexBFS subtree of the remainder graph.
    Subtree {
        lex: bool,
        leaves: usize,
        /// Subtree layers (root layer first), each in layer order.
        layers: Vec<Vec<usize>>,
        /// Root-leaf path decomposition, in piece order.
        pieces: Vec<Vec<usize>>,
    },
    /// Part assembled from shortest-path pieces without a single root.
    Paths { pieces: Vec<Vec<usize>> },
}

impl PartMeta {
    pub fn pieces(&self) -> Option<&[Vec<usize>]> {
        match self {
            PartMeta::Subtree { pieces, .. } | PartMeta::Paths { pieces } => Some(pieces),
            PartMeta::Skeleton { .. } => None,
        }
    }

    pub fn piece_count(&self) -> Option<usize> {
        self.pieces().map(|p| p.len())
    }
}

/// Ordered partition into connected parts with a declared width bound:
/// after removing the first `i` parts, every component of the rest is
/// adjacent to at most `width` of them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConnectedPartition {
    pub parts: Vec<Vec<usize>>,
    pub width: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub meta: Option<Vec<PartMeta>>,
}

impl ConnectedPartition {
    pub fn new(parts: Vec<Vec<usize>>, width: usize) -> ConnectedPartition {
        ConnectedPartition { parts, width, meta: None }
    }

    pub fn with_meta(
        parts: Vec<Vec<usize>>,
        width: usize,
        meta: Vec<PartMeta>,
    ) -> ConnectedPartition {
        debug_assert_eq!(parts.len(), meta.len());
        ConnectedPartition { parts, width, meta: Some(meta) }
    }

    pub fn part_sets(&self) -> Vec<BTreeSet<usize>> {
        self.parts.iter().map(|p| p.iter().copied().collect()).collect()
    }

    /// Index of the part containing each vertex.
    pub fn part_of(&self, n: usize) -> Result<Vec<usize>, Error> {
        let mut out = vec![usize::MAX; n];
        for (i, part) in self.parts.iter().enumerate() {
            for &v in part {
                if v >= n {
                    return Err(Error::InvalidPartition(format!(
                        "part {i} contains invalid vertex {v}"
                    )));
                }
                if out[v] != usize::MAX {
                    return Err(Error::InvalidPartition(format!(
                        "vertex {v} appears in parts {} and {i}",
                        out[v]
                    )));
                }
                out[v] = i;
            }
        }
        if let Some(v) = out.iter().position(|&p| p == usize::MAX) {
            return Err(Error::InvalidPartition(format!("vertex {v} is in no part")));
        }
        Ok(out)
    }
}

/// Result of recomputing a partition's width from the definition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct WidthReport {
    pub declared: usize,
    pub measured: usize,
}

/// Recompute connectivity of every part and the true width; fails on
/// overlaps, uncovered vertices, disconnected parts, or measured width
/// above the declared one.
pub fn validate_partition(g: &Graph, p: &ConnectedPartition) -> Result<WidthReport, Error> {
    let part_of = p.part_of(g.n())?;
    let sets = p.part_sets();
    for (i, set) in sets.iter().enumerate() {
        if !g.is_connected_set(set) {
            return Err(Error::InvalidPartition(format!("part {i} is disconnected")));
        }
    }
    let mut measured = 0usize;
    let mut remaining: BTreeSet<usize> = (0..g.n()).collect();
    for i in 0..sets.len().saturating_sub(1) {
        for &v in &p.parts[i] {
            remaining.remove(&v);
        }
        for comp in g.components_within(&remaining) {
            let mut adjacent: BTreeSet<usize> = BTreeSet::new();
            for &v in &comp {
                for &w in g.neighbours(v) {
                    if !remaining.contains(&w) && part_of[w] <= i {
                        adjacent.insert(part_of[w]);
                    }
                }
            }
            measured = measured.max(adjacent.len());
        }
    }
    if measured > p.width {
        return Err(Error::InvalidPartition(format!(
            "measured width {measured} exceeds declared width {}",
            p.width
        )));
    }
    Ok(WidthReport { declared: p.width, measured })
}

/// Quotient graph: one vertex per part, edges between adjacent parts.
pub fn quotient(g: &Graph, p: &ConnectedPartition) -> Result<Graph, Error> {
    let part_of = p.part_of(g.n())?;
    let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    for (u, v) in g.edges() {
        let (a, b) = (part_of[u], part_of[v]);
        if a != b {
            edges.insert((a.min(b), a.max(b)));
        }
    }
    Graph::from_edges(p.parts.len(), &edges.into_iter().collect::<Vec<_>>())
}

/// Greedy colouring of the quotient in part order with the smallest
/// available colour. Every vertex may see at most `width` earlier
/// neighbours; a violation is detected and reported.
pub fn greedy_part_colouring(q: &Graph, width: usize) -> Result<Vec<usize>, Error> {
    let mut colour = vec![0usize; q.n()];
    for v in 0..q.n() {
        let earlier: BTreeSet<usize> =
            q.neighbours(v).iter().filter(|&&w| w < v).map(|&w| colour[w]).collect();
        let earlier_count = q.neighbours(v).iter().filter(|&&w| w < v).count();
        if earlier_count > width {
            return Err(Error::InvalidPartition(format!(
                "part {v} is adjacent to {earlier_count} earlier parts, width is {width}"
            )));
        }
        colour[v] = (0..).find(|c| !earlier.contains(c)).unwrap();
    }
    Ok(colour)
}

/// Vertex colouring with validator-recomputed metrics.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Colouring {
    pub colour: Vec<usize>,
    pub num_colours: usize,
    pub defect: usize,
    pub clustering: usize,
}

impl Colouring {
    /// Wrap a colour vector; metrics always come from the oracle recomputation.
    pub fn new(g: &Graph, colour: Vec<usize>) -> Result<Colouring, Error> {
        let m = colouring_metrics(g, &colour)?;
        Ok(Colouring {
            colour,
            num_colours: m.num_colours,
            defect: m.defect,
            clustering: m.clustering,
        })
    }
}

/// Colouring modes derivable from a width-`k` partition whose parts carry
/// subtree metadata with at most `p` leaves.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PartitionColourMode {
    /// `k+1` colours, defect at most `3p-1` (BFS subtrees).
    BfsDefect,
    /// `k+1` colours, defect at most `2p` (LexBFS subtrees).
    LexDefect,
    /// `2k+2` colours, clustering at most `p` (part colour x layer parity).
    Clustered,
}

/// Colour the graph through its partition. Defect modes use the part colour
/// alone; the clustered mode multiplies it with the parity of each vertex's
/// subtree layer.
pub fn partition_colouring(
    g: &Graph,
    p: &ConnectedPartition,
    mode: PartitionColourMode,
) -> Result<Colouring, Error> {
    let meta = p.meta.as_ref().ok_or(Error::MissingMetadata("subtree"))?;
    let part_of = p.part_of(g.n())?;
    let q = quotient(g, p)?;
    let part_colour = greedy_part_colouring(&q, p.width)?;
    match mode {
        PartitionColourMode::BfsDefect | PartitionColourMode::LexDefect => {
            for (i, m) in meta.iter().enumerate() {
                match m {
                    PartMeta::Subtree { lex, .. } => {
                        if mode == PartitionColourMode::LexDefect && !lex {
                            return Err(Error::MissingMetadata("LexBFS subtree"));
                        }
                    }
                    _ => {
                        return Err(Error::MissingMetadata("subtree"));
                    }
                }
                let _ = i;
            }
            let colour: Vec<usize> = (0..g.n()).map(|v| part_colour[part_of[v]]).collect();
            Colouring::new(g, colour)
        }
        PartitionColourMode::Clustered => {
            let mut parity = vec![0usize; g.n()];
            for m in meta.iter() {
                let PartMeta::Subtree { layers, .. } = m else {
                    return Err(Error::MissingMetadata("subtree layers"));
                };
                for (li, layer) in layers.iter().enumerate() {
                    for &v in layer {
                        parity[v] = li % 2;
                    }
                }
            }
            let colour: Vec<usize> =
                (0..g.n()).map(|v| 2 * part_colour[part_of[v]] + parity[v]).collect();
            Colouring::new(g, colour)
        }
    }
}

/// Ordering for colouring-number bounds: parts in order, pieces in order
/// within each part, vertices along each piece.
pub fn partition_ordering(g: &Graph, p: &ConnectedPartition) -> Result<VertexOrdering, Error> {
    let meta = p.meta.as_ref().ok_or(Error::MissingMetadata("shortest-path pieces"))?;
    let mut order = Vec::with_capacity(g.n());
    for m in meta {
        let pieces = m.pieces().ok_or(Error::MissingMetadata("shortest-path pieces"))?;
        for piece in pieces {
            order.extend(piece.iter().copied());
        }
    }
    VertexOrdering::from_order(order)
}
