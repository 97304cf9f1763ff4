//! Simple undirected graphs over dense vertex ids, generators for the test
//! families, block-cut trees, and the edge-list / JSON / DOT formats.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt::Write as _;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::Error;

/// Simple undirected graph on vertices `0..n`.
///
/// Adjacency is stored as per-vertex sorted sets; no self-loops, no parallel
/// edges. Values are immutable once built, so they can be shared freely.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<BTreeSet<usize>>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Graph {
        Graph {
            n,
            adj: vec![BTreeSet::new(); n],
        }
    }

    /// Build from an explicit edge list, rejecting loops, duplicates and
    /// out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, Error> {
        let mut g = Graph::new(n);
        for &(u, v) in edges {
            g.add_edge_checked(u, v)?;
        }
        Ok(g)
    }

    fn add_edge_checked(&mut self, u: usize, v: usize) -> Result<(), Error> {
        if u >= self.n {
            return Err(Error::VertexOutOfRange(u));
        }
        if v >= self.n {
            return Err(Error::VertexOutOfRange(v));
        }
        if u == v {
            return Err(Error::InvalidParam(format!("self-loop at vertex {u}")));
        }
        if self.adj[u].contains(&v) {
            return Err(Error::InvalidParam(format!("duplicate edge {u} {v}")));
        }
        self.adj[u].insert(v);
        self.adj[v].insert(u);
        Ok(())
    }

    fn add_edge(&mut self, u: usize, v: usize) {
        debug_assert!(u != v && u < self.n && v < self.n);
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    /// Parse the edge-list document: first line `n m`, then `m` lines `u v`.
    pub fn from_edge_list(text: &str) -> Result<Graph, Error> {
        let mut lines = text.lines().enumerate();
        let (_, header) = lines
            .next()
            .ok_or_else(|| Error::ParseMalformed { line: 1, text: String::new() })?;
        let mut it = header.split_whitespace();
        let parse_usize = |tok: Option<&str>, line: usize, text: &str| -> Result<usize, Error> {
            tok.and_then(|s| s.parse().ok()).ok_or_else(|| Error::ParseMalformed {
                line,
                text: text.to_string(),
            })
        };
        let n = parse_usize(it.next(), 1, header)?;
        let m = parse_usize(it.next(), 1, header)?;
        if it.next().is_some() {
            return Err(Error::ParseMalformed { line: 1, text: header.to_string() });
        }
        let mut g = Graph::new(n);
        let mut read = 0usize;
        for (idx, raw) in lines {
            let line = idx + 1;
            if raw.trim().is_empty() {
                continue;
            }
            if read == m {
                return Err(Error::ParseMalformed { line, text: raw.to_string() });
            }
            let mut it = raw.split_whitespace();
            let u = parse_usize(it.next(), line, raw)?;
            let v = parse_usize(it.next(), line, raw)?;
            if it.next().is_some() {
                return Err(Error::ParseMalformed { line, text: raw.to_string() });
            }
            if u >= n || v >= n {
                return Err(Error::ParseOutOfRange { line, n });
            }
            if u == v {
                return Err(Error::ParseLoop { line, v: u });
            }
            if g.adj[u].contains(&v) {
                return Err(Error::ParseDuplicate { line, u, v });
            }
            g.add_edge(u, v);
            read += 1;
        }
        if read != m {
            return Err(Error::ParseMalformed {
                line: text.lines().count(),
                text: format!("expected {m} edges, found {read}"),
            });
        }
        Ok(g)
    }

    /// Render as the edge-list document accepted by [`Graph::from_edge_list`].
    pub fn to_edge_list(&self) -> String {
        let edges = self.edges();
        let mut out = format!("{} {}\n", self.n, edges.len());
        for (u, v) in edges {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }

    /// DOT export; `colours[v]` selects a fill colour when provided.
    pub fn to_dot(&self, colours: Option<&[usize]>) -> String {
        const PALETTE: [&str; 12] = [
            "#e41a1c", "#377eb8", "#4daf4a", "#984ea3", "#ff7f00", "#ffff33",
            "#a65628", "#f781bf", "#999999", "#66c2a5", "#fc8d62", "#8da0cb",
        ];
        let mut out = String::from("graph g {\n  node [shape=circle];\n");
        for v in 0..self.n {
            match colours.and_then(|c| c.get(v)) {
                Some(&c) => {
                    let _ = writeln!(
                        out,
                        "  {v} [label=\"{v}\", style=filled, fillcolor=\"{}\"];",
                        PALETTE[c % PALETTE.len()]
                    );
                }
                None => {
                    let _ = writeln!(out, "  {v} [label=\"{v}\"];");
                }
            }
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {u} -- {v};");
        }
        out.push_str("}\n");
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|a| a.len()).sum::<usize>() / 2
    }

    /// Sorted edge list with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = vec![];
        for u in 0..self.n {
            for &v in self.adj[u].iter().filter(|&&v| v > u) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn neighbours(&self, v: usize) -> &BTreeSet<usize> {
        &self.adj[v]
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && self.adj[u].contains(&v)
    }

    /// True when some edge joins `s` and `t`.
    pub fn sets_adjacent(&self, s: &BTreeSet<usize>, t: &BTreeSet<usize>) -> bool {
        s.iter().any(|&u| self.adj[u].iter().any(|v| t.contains(v)))
    }

    /// BFS distances from `v`; `None` for unreachable vertices.
    pub fn distances_from(&self, v: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.n];
        let mut queue = VecDeque::from([v]);
        dist[v] = Some(0);
        while let Some(u) = queue.pop_front() {
            let d = dist[u].unwrap();
            for &w in &self.adj[u] {
                if dist[w].is_none() {
                    dist[w] = Some(d + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        self.distances_from(0).iter().all(|d| d.is_some())
    }

    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn components(&self) -> Vec<BTreeSet<usize>> {
        let all: BTreeSet<usize> = (0..self.n).collect();
        self.components_within(&all)
    }

    /// Connected components of the subgraph induced by `within`.
    pub fn components_within(&self, within: &BTreeSet<usize>) -> Vec<BTreeSet<usize>> {
        let mut seen = BTreeSet::new();
        let mut comps = vec![];
        for &start in within {
            if seen.contains(&start) {
                continue;
            }
            let mut comp = BTreeSet::new();
            let mut queue = VecDeque::from([start]);
            seen.insert(start);
            while let Some(u) = queue.pop_front() {
                comp.insert(u);
                for &w in &self.adj[u] {
                    if within.contains(&w) && seen.insert(w) {
                        queue.push_back(w);
                    }
                }
            }
            comps.push(comp);
        }
        comps
    }

    /// True when `set` induces a connected subgraph (empty sets are not).
    pub fn is_connected_set(&self, set: &BTreeSet<usize>) -> bool {
        !set.is_empty() && self.components_within(set).len() == 1
    }

    /// Induced subgraph on `set`, plus the new-id -> old-id map.
    pub fn induced(&self, set: &BTreeSet<usize>) -> (Graph, Vec<usize>) {
        let new_to_old: Vec<usize> = set.iter().copied().collect();
        let old_to_new: BTreeMap<usize, usize> =
            new_to_old.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut g = Graph::new(new_to_old.len());
        for (i, &v) in new_to_old.iter().enumerate() {
            for w in self.adj[v].iter().filter(|w| set.contains(w)) {
                let j = old_to_new[w];
                if j > i {
                    g.add_edge(i, j);
                }
            }
        }
        (g, new_to_old)
    }

    /// Contract the connected set `s` to a single vertex.
    ///
    /// Returns the contracted graph and the old-id -> new-id map (every member
    /// of `s` maps to the same new vertex). Vertices keep their relative
    /// order; the contracted vertex sits where `min(s)` used to.
    pub fn contract_set(&self, s: &BTreeSet<usize>) -> Result<(Graph, Vec<usize>), Error> {
        if s.is_empty() {
            return Err(Error::EmptySet);
        }
        if let Some(&v) = s.iter().find(|&&v| v >= self.n) {
            return Err(Error::VertexOutOfRange(v));
        }
        if !self.is_connected_set(s) {
            return Err(Error::DisconnectedSet);
        }
        let rep = *s.iter().next().unwrap();
        let mut map = vec![0usize; self.n];
        let mut next = 0usize;
        for v in 0..self.n {
            if s.contains(&v) {
                if v == rep {
                    map[v] = next;
                    next += 1;
                }
            } else {
                map[v] = next;
                next += 1;
            }
        }
        for v in s {
            map[*v] = map[rep];
        }
        let mut g = Graph::new(self.n - s.len() + 1);
        for (u, v) in self.edges() {
            let (nu, nv) = (map[u], map[v]);
            if nu != nv && !g.has_edge(nu, nv) {
                g.add_edge(nu, nv);
            }
        }
        Ok((g, map))
    }

    /// Block-cut decomposition of a connected graph.
    pub fn block_cut_tree(&self) -> Result<BlockCutTree, Error> {
        if !self.is_connected() {
            return Err(Error::Disconnected);
        }
        let n = self.n;
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut cut = vec![false; n];
        let mut blocks: Vec<BTreeSet<usize>> = vec![];
        if n == 0 {
            return Ok(BlockCutTree::build(blocks, cut));
        }

        // Iterative DFS with an edge stack; blocks pop when low[w] >= disc[v].
        let mut timer = 0usize;
        let mut parent = vec![usize::MAX; n];
        let mut edge_stack: Vec<(usize, usize)> = vec![];
        let mut iters: Vec<std::collections::btree_set::Iter<usize>> = Vec::with_capacity(n);
        let root = 0usize;
        disc[root] = timer;
        low[root] = timer;
        timer += 1;
        let mut stack = vec![root];
        iters.push(self.adj[root].iter());
        let mut root_children = 0usize;
        while let Some(&v) = stack.last() {
            if let Some(&w) = iters.last_mut().unwrap().next() {
                if disc[w] == usize::MAX {
                    parent[w] = v;
                    disc[w] = timer;
                    low[w] = timer;
                    timer += 1;
                    if v == root {
                        root_children += 1;
                    }
                    edge_stack.push((v, w));
                    stack.push(w);
                    iters.push(self.adj[w].iter());
                } else if w != parent[v] && disc[w] < disc[v] {
                    edge_stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                stack.pop();
                iters.pop();
                if let Some(&p) = stack.last() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        if p != root {
                            cut[p] = true;
                        }
                        let mut block = BTreeSet::new();
                        while let Some(&(a, b)) = edge_stack.last() {
                            if disc[a] >= disc[v] || (a, b) == (p, v) {
                                block.insert(a);
                                block.insert(b);
                                edge_stack.pop();
                                if (a, b) == (p, v) {
                                    break;
                                }
                            } else {
                                break;
                            }
                        }
                        blocks.push(block);
                    }
                }
            }
        }
        if root_children >= 2 {
            cut[root] = true;
        }
        blocks.sort();
        Ok(BlockCutTree::build(blocks, cut))
    }
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr {
            n: usize,
            edges: Vec<(usize, usize)>,
        }
        Repr { n: self.n, edges: self.edges() }.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Graph, D::Error> {
        #[derive(Deserialize)]
        struct Repr {
            n: usize,
            edges: Vec<(usize, usize)>,
        }
        let repr = Repr::deserialize(deserializer)?;
        Graph::from_edges(repr.n, &repr.edges).map_err(D::Error::custom)
    }
}

/// Biconnected components of a connected graph.
///
/// Every edge lies in exactly one block; two blocks share at most one vertex
/// and that vertex is a cut vertex. A leaf block touches exactly one cut
/// vertex (when the graph has at least two blocks).
#[derive(Debug, Clone)]
pub struct BlockCutTree {
    pub blocks: Vec<BTreeSet<usize>>,
    pub cut_vertices: BTreeSet<usize>,
    /// Per block, the cut vertices it contains.
    pub incidence: Vec<BTreeSet<usize>>,
}

impl BlockCutTree {
    fn build(blocks: Vec<BTreeSet<usize>>, cut: Vec<bool>) -> BlockCutTree {
        let cut_vertices: BTreeSet<usize> =
            cut.iter().enumerate().filter(|(_, &c)| c).map(|(v, _)| v).collect();
        let incidence = blocks
            .iter()
            .map(|b| b.intersection(&cut_vertices).copied().collect())
            .collect();
        BlockCutTree { blocks, cut_vertices, incidence }
    }

    /// Blocks incident to exactly one cut vertex, as `(block index, cut vertex)`.
    pub fn leaf_blocks(&self) -> Vec<(usize, usize)> {
        self.incidence
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() == 1)
            .map(|(i, c)| (i, *c.iter().next().unwrap()))
            .collect()
    }
}

/// Deterministic generator families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// p x q grid; vertex `r*q + c`.
    Grid { p: usize, q: usize },
    /// Random triangulation of a convex polygon on `n >= 3` vertices.
    MaximalOuterplanar { n: usize },
    /// Random k-tree on `n` vertices, `1 <= k < n`.
    RandomKTree { n: usize, k: usize },
    /// Random maximal planar graph on `n >= 4` vertices.
    PlanarTriangulation { n: usize },
    /// Recursive family: level 1 is the path on `c+1` vertices; level `s` is
    /// `c` disjoint copies of level `s-1` plus one dominant vertex.
    LowerboundGs { s: usize, c: usize },
    Cycle { n: usize },
    Complete { n: usize },
    Petersen,
}

impl Family {
    /// Parse `name` plus comma-separated parameters, as used by the CLI.
    pub fn parse(name: &str, params: &[usize]) -> Result<Family, Error> {
        let want = |k: usize| -> Result<(), Error> {
            if params.len() == k {
                Ok(())
            } else {
                Err(Error::InvalidParam(format!(
                    "family {name} expects {k} parameter(s), got {}",
                    params.len()
                )))
            }
        };
        match name {
            "grid" => {
                want(2)?;
                Ok(Family::Grid { p: params[0], q: params[1] })
            }
            "maximal_outerplanar" => {
                want(1)?;
                Ok(Family::MaximalOuterplanar { n: params[0] })
            }
            "random_ktree" => {
                want(2)?;
                Ok(Family::RandomKTree { n: params[0], k: params[1] })
            }
            "planar_triangulation" => {
                want(1)?;
                Ok(Family::PlanarTriangulation { n: params[0] })
            }
            "lowerbound_gs" => {
                want(2)?;
                Ok(Family::LowerboundGs { s: params[0], c: params[1] })
            }
            "cycle" => {
                want(1)?;
                Ok(Family::Cycle { n: params[0] })
            }
            "complete" => {
                want(1)?;
                Ok(Family::Complete { n: params[0] })
            }
            "petersen" => {
                want(0)?;
                Ok(Family::Petersen)
            }
            _ => Err(Error::InvalidParam(format!("unknown family {name:?}"))),
        }
    }
}

/// Generate a member of `family`. Randomised families draw from ChaCha8
/// seeded with `seed`, so output is identical for identical inputs.
pub fn generate(family: Family, seed: u64) -> Result<Graph, Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    match family {
        Family::Grid { p, q } => grid(p, q),
        Family::MaximalOuterplanar { n } => maximal_outerplanar(n, &mut rng),
        Family::RandomKTree { n, k } => random_ktree(n, k, &mut rng),
        Family::PlanarTriangulation { n } => planar_triangulation(n, &mut rng),
        Family::LowerboundGs { s, c } => lowerbound_gs(s, c),
        Family::Cycle { n } => cycle(n),
        Family::Complete { n } => complete(n),
        Family::Petersen => petersen(),
    }
}

fn grid(p: usize, q: usize) -> Result<Graph, Error> {
    if p == 0 || q == 0 {
        return Err(Error::InvalidParam("grid dimensions must be positive".into()));
    }
    let mut g = Graph::new(p * q);
    for r in 0..p {
        for c in 0..q {
            let v = r * q + c;
            if c + 1 < q {
                g.add_edge(v, v + 1);
            }
            if r + 1 < p {
                g.add_edge(v, v + q);
            }
        }
    }
    Ok(g)
}

fn maximal_outerplanar(n: usize, rng: &mut ChaCha8Rng) -> Result<Graph, Error> {
    if n < 3 {
        return Err(Error::InvalidParam("maximal outerplanar needs n >= 3".into()));
    }
    let mut g = Graph::new(n);
    for v in 0..n {
        g.add_edge(v, (v + 1) % n);
    }
    // Triangulate the polygon by recursive random splitting of each arc.
    let mut stack = vec![(0usize, n - 1)];
    while let Some((a, b)) = stack.pop() {
        if b - a < 2 {
            continue;
        }
        let k = rng.gen_range(a + 1..b);
        if k > a + 1 && !g.has_edge(a, k) {
            g.add_edge(a, k);
        }
        if k < b - 1 && !g.has_edge(k, b) {
            g.add_edge(k, b);
        }
        stack.push((a, k));
        stack.push((k, b));
    }
    Ok(g)
}

fn random_ktree(n: usize, k: usize, rng: &mut ChaCha8Rng) -> Result<Graph, Error> {
    if k == 0 || k >= n {
        return Err(Error::InvalidParam(format!("k-tree needs 1 <= k < n, got k={k}, n={n}")));
    }
    let mut g = Graph::new(n);
    for u in 0..=k {
        for v in u + 1..=k {
            g.add_edge(u, v);
        }
    }
    let mut cliques: Vec<Vec<usize>> = vec![];
    for drop in 0..=k {
        let c: Vec<usize> = (0..=k).filter(|&v| v != drop).collect();
        cliques.push(c);
    }
    for v in k + 1..n {
        let pick = rng.gen_range(0..cliques.len());
        let base = cliques[pick].clone();
        for &u in &base {
            g.add_edge(u, v);
        }
        for drop in 0..base.len() {
            let mut c: Vec<usize> = base.clone();
            c[drop] = v;
            c.sort_unstable();
            cliques.push(c);
        }
    }
    Ok(g)
}

fn planar_triangulation(n: usize, rng: &mut ChaCha8Rng) -> Result<Graph, Error> {
    if n < 4 {
        return Err(Error::InvalidParam("planar triangulation needs n >= 4".into()));
    }
    let mut faces: Vec<[usize; 3]> = vec![[0, 1, 2], [0, 1, 3], [0, 2, 3], [1, 2, 3]];
    for v in 4..n {
        let i = rng.gen_range(0..faces.len());
        let [a, b, c] = faces[i];
        faces[i] = [a, b, v];
        faces.push([b, c, v]);
        faces.push([c, a, v]);
    }
    let mut g = Graph::new(n);
    for face in &faces {
        for (i, j) in [(0, 1), (0, 2), (1, 2)] {
            if !g.has_edge(face[i], face[j]) {
                g.add_edge(face[i], face[j]);
            }
        }
    }
    Ok(g)
}

fn lowerbound_gs(s: usize, c: usize) -> Result<Graph, Error> {
    if s == 0 || c == 0 {
        return Err(Error::InvalidParam("lowerbound_gs needs s >= 1 and c >= 1".into()));
    }
    if s == 1 {
        let mut g = Graph::new(c + 1);
        for v in 0..c {
            g.add_edge(v, v + 1);
        }
        return Ok(g);
    }
    let sub = lowerbound_gs(s - 1, c)?;
    let m = sub.n();
    let mut g = Graph::new(c * m + 1);
    let dominant = c * m;
    for copy in 0..c {
        let off = copy * m;
        for (u, v) in sub.edges() {
            g.add_edge(off + u, off + v);
        }
    }
    for v in 0..c * m {
        g.add_edge(v, dominant);
    }
    Ok(g)
}

fn cycle(n: usize) -> Result<Graph, Error> {
    if n < 3 {
        return Err(Error::InvalidParam("cycle needs n >= 3".into()));
    }
    let mut g = Graph::new(n);
    for v in 0..n {
        g.add_edge(v, (v + 1) % n);
    }
    Ok(g)
}

fn complete(n: usize) -> Result<Graph, Error> {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            g.add_edge(u, v);
        }
    }
    Ok(g)
}

fn petersen() -> Result<Graph, Error> {
    let mut g = Graph::new(10);
    for v in 0..5 {
        g.add_edge(v, (v + 1) % 5);
        g.add_edge(v, v + 5);
        g.add_edge(v + 5, (v + 2) % 5 + 5);
    }
    Ok(g)
}
