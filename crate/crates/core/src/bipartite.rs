//! Connected partitions of width 1 / 2 / s for graphs excluding a complete
//! split minor K*_{2,t} / K*_{3,t} / K*_{s,t}, each with a minor-model
//! certificate on failure; a recursive 3-colouring with clustering `t-1`;
//! and the subtree-or-star separator routine underlying the width-2 case.

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::Error;
use crate::graph::Graph;
use crate::kt_decomp::{DecompositionOutcome, MinorModel, Pattern};
use crate::lexbfs::{
    componentwise_layering, lexbfs_tree, subtree_pieces, subtree_to, LexSubtree, LexTree,
};
use crate::oracles::validate_minor_model;
use crate::partition::{
    partition_colouring, Colouring, ConnectedPartition, PartMeta, PartitionColourMode,
};

/// Either a separating subtree with few leaves or a star minor whose every
/// branch set meets both terminal sides.
#[derive(Debug, Clone)]
pub enum SeparatorOutcome {
    /// `V(subtree)` separates the two sides, the subtree meets both, and it
    /// has at most `2t+1` leaves.
    Subtree { tree: LexTree, subtree: LexSubtree },
    /// K_{1,t} minor model; every branch set intersects both sides.
    Certificate(MinorModel),
}

fn subtree_meta(tree: &LexTree, sub: &LexSubtree) -> PartMeta {
    let depth = sub.vertices.iter().map(|&v| tree.layer_index[v]).max().unwrap_or(0);
    let mut layers: Vec<Vec<usize>> = vec![vec![]; depth + 1];
    for layer in &tree.layer_order {
        for &v in layer {
            if sub.vertices.contains(&v) {
                layers[tree.layer_index[v]].push(v);
            }
        }
    }
    PartMeta::Subtree {
        lex: true,
        leaves: sub.leaf_count(),
        layers,
        pieces: subtree_pieces(tree, sub),
    }
}

fn singleton_meta(v: usize) -> PartMeta {
    PartMeta::Subtree { lex: true, leaves: 0, layers: vec![vec![v]], pieces: vec![vec![v]] }
}

/// Width-1 partition whose parts are induced by LexBFS subtrees with at most
/// `t-1` leaves, or a K*_{2,t} minor model.
///
/// Each component adjacent to an earlier part grows one LexBFS tree from its
/// smallest attachment vertex and keeps the root paths of all attachment
/// vertices. A subtree with `t` or more leaves closes the certificate: the
/// earlier part and the leaf-stripped subtree are the join side, `t` leaves
/// are the independent side.
pub fn decompose_k2t(g: &Graph, t: usize) -> Result<DecompositionOutcome, Error> {
    if t < 2 {
        return Err(Error::InvalidParam(format!(
            "K*_{{2,t}} decomposition needs t >= 2, got {t}"
        )));
    }
    let n = g.n();
    let mut part_of: Vec<Option<usize>> = vec![None; n];
    let mut parts: Vec<Vec<usize>> = vec![];
    let mut metas: Vec<PartMeta> = vec![];
    let mut remaining: BTreeSet<usize> = (0..n).collect();

    while let Some(&seed) = remaining.iter().next() {
        let comp = component_containing(g, &remaining, seed);
        let touched = adjacent_parts(g, &comp, &part_of);
        match touched.len() {
            0 => {
                push_part(
                    &mut parts,
                    &mut metas,
                    &mut part_of,
                    &mut remaining,
                    BTreeSet::from([seed]),
                    singleton_meta(seed),
                );
            }
            1 => {
                let ha = *touched.iter().next().unwrap();
                let attach = attachment_vertices(g, &comp, &part_of, ha);
                let root = *attach.iter().next().unwrap();
                let (cg, new_to_old) = g.induced(&comp);
                let old_to_new: BTreeMap<usize, usize> =
                    new_to_old.iter().enumerate().map(|(i, &v)| (v, i)).collect();
                let tree = lexbfs_tree(&cg, old_to_new[&root])?;
                let local_a: BTreeSet<usize> = attach.iter().map(|v| old_to_new[v]).collect();
                let sub = subtree_to(&tree, &local_a)?;
                if sub.leaf_count() >= t {
                    // join side: the earlier part and the leaf-stripped subtree
                    let stripped: BTreeSet<usize> = sub
                        .vertices
                        .difference(&sub.leaves)
                        .map(|&v| new_to_old[v])
                        .collect();
                    let mut branch_sets =
                        vec![parts[ha].iter().copied().collect::<BTreeSet<usize>>(), stripped];
                    branch_sets.extend(
                        sub.leaves.iter().take(t).map(|&v| BTreeSet::from([new_to_old[v]])),
                    );
                    let model = MinorModel::new(Pattern::CompleteSplit { s: 2, t }, branch_sets);
                    validate_minor_model(g, &model)?;
                    return Ok(DecompositionOutcome::Certificate(model));
                }
                let meta = remap_meta(subtree_meta(&tree, &sub), &new_to_old);
                let vertices: BTreeSet<usize> =
                    sub.vertices.iter().map(|&v| new_to_old[v]).collect();
                push_part(&mut parts, &mut metas, &mut part_of, &mut remaining, vertices, meta);
            }
            k => {
                return Err(Error::Internal(format!(
                    "width-1 invariant broken: component touches {k} parts"
                )));
            }
        }
    }
    Ok(DecompositionOutcome::Partition(ConnectedPartition::with_meta(parts, 1, metas)))
}

/// 2-colouring with defect at most `2(t-1)` from the width-1 partition.
pub fn colour_k2t_defect(g: &Graph, t: usize) -> Result<Colouring, Error> {
    match decompose_k2t(g, t)? {
        DecompositionOutcome::Partition(p) => {
            partition_colouring(g, &p, PartitionColourMode::LexDefect)
        }
        DecompositionOutcome::Certificate(m) => Err(Error::MinorFound(Box::new(m))),
    }
}

/// 3-colouring with clustering at most `t-1`, or a K*_{2,t} minor model.
///
/// With an anchor edge both endpoints end up isolated inside their colour
/// classes. Components are handled independently; the anchor applies to its
/// component.
pub fn three_colour_k2t(
    g: &Graph,
    t: usize,
    anchor: Option<(usize, usize)>,
) -> Result<Colouring, Error> {
    if t < 2 {
        return Err(Error::InvalidParam(format!("3-colouring needs t >= 2, got {t}")));
    }
    if let Some((v, w)) = anchor {
        if !g.has_edge(v, w) {
            return Err(Error::NotAnEdge(v, w));
        }
    }
    let mut colour = vec![0usize; g.n()];
    for comp in g.components() {
        let (cg, new_to_old) = g.induced(&comp);
        let local_anchor = anchor.and_then(|(v, w)| {
            if comp.contains(&v) {
                let lv = new_to_old.iter().position(|&x| x == v).unwrap();
                let lw = new_to_old.iter().position(|&x| x == w).unwrap();
                Some((lv, lw))
            } else {
                None
            }
        });
        match gon_colour(&cg, t, local_anchor) {
            Ok(local) => {
                for (lv, &c) in local.iter().enumerate() {
                    colour[new_to_old[lv]] = c;
                }
            }
            Err(model) => {
                let model = model.mapped(&new_to_old);
                validate_minor_model(g, &model)?;
                return Err(Error::MinorFound(Box::new(model)));
            }
        }
    }
    Colouring::new(g, colour)
}

/// Recursive 3-colouring of one connected graph. Returns the colour vector
/// or a K*_{2,t} model in local coordinates.
fn gon_colour(
    g: &Graph,
    t: usize,
    anchor: Option<(usize, usize)>,
) -> Result<Vec<usize>, MinorModel> {
    let n = g.n();
    // base: small graphs are coloured directly
    if n <= t + 1 {
        return Ok(base_colouring(n, anchor));
    }
    let (v, w) = match anchor.or_else(|| g.edges().first().copied()) {
        Some(e) => e,
        None => return Ok(vec![0; n]), // edgeless
    };

    // degree-1 shortcut: strip the leaf, keep its neighbour isolated
    for (leaf, other) in [(v, w), (w, v)] {
        if g.degree(leaf) == 1 {
            let keep: BTreeSet<usize> = (0..n).filter(|&x| x != leaf).collect();
            let (cg, new_to_old) = g.induced(&keep);
            let old_to_new: BTreeMap<usize, usize> =
                new_to_old.iter().enumerate().map(|(i, &x)| (x, i)).collect();
            let sub_anchor = g
                .neighbours(other)
                .iter()
                .copied()
                .find(|&x| x != leaf)
                .map(|x| (old_to_new[&other], old_to_new[&x]));
            let local = match gon_colour(&cg, t, sub_anchor) {
                Ok(c) => c,
                Err(m) => return Err(m.mapped(&new_to_old)),
            };
            let mut colour = vec![0usize; n];
            for (lv, &c) in local.iter().enumerate() {
                colour[new_to_old[lv]] = c;
            }
            colour[leaf] = (0..3).find(|&c| c != colour[other]).unwrap();
            return Ok(colour);
        }
    }

    // grow disjoint connected sides around the anchor edge, keeping it the
    // only edge between them; smallest absorbable vertex first
    let mut side_a = BTreeSet::from([v]);
    let mut side_b = BTreeSet::from([w]);
    loop {
        let mut grown = false;
        for u in 0..n {
            if side_a.contains(&u) || side_b.contains(&u) {
                continue;
            }
            let to_a = g.neighbours(u).iter().any(|x| side_a.contains(x));
            let to_b = g.neighbours(u).iter().any(|x| side_b.contains(x));
            if to_a && !to_b {
                side_a.insert(u);
                grown = true;
                break;
            }
            if to_b && !to_a {
                side_b.insert(u);
                grown = true;
                break;
            }
        }
        if !grown {
            break;
        }
    }
    let hub: BTreeSet<usize> = (0..n)
        .filter(|&u| {
            !side_a.contains(&u)
                && !side_b.contains(&u)
                && g.neighbours(u).iter().any(|x| side_a.contains(x))
                && g.neighbours(u).iter().any(|x| side_b.contains(x))
        })
        .collect();
    if hub.len() >= t {
        let mut branch_sets = vec![side_a, side_b];
        branch_sets.extend(hub.iter().take(t).map(|&z| BTreeSet::from([z])));
        return Err(MinorModel::new(Pattern::CompleteSplit { s: 2, t }, branch_sets));
    }

    // contract each side (plus the hub) and recurse three ways
    let bz: BTreeSet<usize> = side_b.union(&hub).copied().collect();
    let az: BTreeSet<usize> = side_a.union(&hub).copied().collect();
    let abz: BTreeSet<usize> = az.union(&side_b).copied().collect();

    let (g1, map1) = g.contract_set(&bz).expect("side B with hub is connected");
    let x1 = map1[*bz.iter().next().unwrap()];
    let c1 = recurse_contracted(g, g1, &map1, t, (map1[v], x1))?;

    let (g2, map2) = g.contract_set(&az).expect("side A with hub is connected");
    let y2 = map2[*az.iter().next().unwrap()];
    let c2 = recurse_contracted(g, g2, &map2, t, (map2[w], y2))?;

    let (g3, map3) = g.contract_set(&abz).expect("both sides with hub are connected");
    let z3 = map3[*abz.iter().next().unwrap()];
    let c3 = if g3.n() == 1 {
        vec![0usize]
    } else {
        let z_anchor = g3.neighbours(z3).iter().next().map(|&x| (z3, x));
        recurse_contracted(g, g3, &map3, t, z_anchor.unwrap_or((z3, z3)))?
    };

    // align: hub colour shared by all three pieces, anchor ends distinct
    let ca_v = c1[map1[v]];
    let ca_x = c1[x1];
    debug_assert_ne!(ca_v, ca_x);
    let perm2 = align_colours(c2[y2], ca_x, c2[map2[w]], ca_v);
    let perm3 = permute_to(c3[z3], ca_x);

    let mut colour = vec![0usize; n];
    for &u in &side_a {
        colour[u] = c1[map1[u]];
    }
    for &u in &side_b {
        colour[u] = perm2[c2[map2[u]]];
    }
    for &u in &hub {
        colour[u] = ca_x;
    }
    for u in 0..n {
        if !abz.contains(&u) {
            colour[u] = perm3[c3[map3[u]]];
        }
    }
    Ok(colour)
}

/// Recurse on a contracted graph; certificates are expanded back through the
/// contraction map.
fn recurse_contracted(
    original: &Graph,
    contracted: Graph,
    map: &[usize],
    t: usize,
    anchor: (usize, usize),
) -> Result<Vec<usize>, MinorModel> {
    debug_assert!(contracted.n() < original.n());
    let anchor = if anchor.0 == anchor.1 { None } else { Some(anchor) };
    match gon_colour(&contracted, t, anchor) {
        Ok(c) => Ok(c),
        Err(model) => {
            // expand every contracted vertex to its preimage
            let mut pre: Vec<Vec<usize>> = vec![vec![]; contracted.n()];
            for (old, &new) in map.iter().enumerate() {
                pre[new].push(old);
            }
            let branch_sets = model
                .branch_sets
                .iter()
                .map(|s| s.iter().flat_map(|&nv| pre[nv].iter().copied()).collect())
                .collect();
            Err(MinorModel::new(model.pattern, branch_sets))
        }
    }
}

fn base_colouring(n: usize, anchor: Option<(usize, usize)>) -> Vec<usize> {
    match anchor {
        Some((v, w)) => {
            let mut colour = vec![2usize; n];
            colour[v] = 0;
            colour[w] = 1;
            colour
        }
        None => {
            // three nearly equal chunks
            let third = n.div_ceil(3);
            (0..n).map(|i| (i / third.max(1)).min(2)).collect()
        }
    }
}

/// Permutation of three colours sending `from_hub` to `to_hub` and `from_w`
/// away from `avoid`.
fn align_colours(from_hub: usize, to_hub: usize, from_w: usize, avoid: usize) -> [usize; 3] {
    debug_assert_ne!(from_hub, from_w);
    debug_assert_ne!(to_hub, avoid);
    let third_target = (0..3).find(|&c| c != to_hub && c != avoid).unwrap();
    let mut perm = [usize::MAX; 3];
    perm[from_hub] = to_hub;
    perm[from_w] = third_target;
    let left_src = (0..3).find(|&c| c != from_hub && c != from_w).unwrap();
    perm[left_src] = avoid;
    perm
}

/// Permutation of three colours sending `from` to `to`, remaining colours in
/// ascending order.
fn permute_to(from: usize, to: usize) -> [usize; 3] {
    let mut perm = [usize::MAX; 3];
    perm[from] = to;
    let srcs: Vec<usize> = (0..3).filter(|&c| c != from).collect();
    let dsts: Vec<usize> = (0..3).filter(|&c| c != to).collect();
    perm[srcs[0]] = dsts[0];
    perm[srcs[1]] = dsts[1];
    perm
}

/// Separating LexBFS subtree with at most `2t+1` leaves, or a K_{1,t} minor
/// with every branch set meeting both `a` and `b`.
///
/// One LexBFS spanning tree is fixed per call. The leaf set starts at `b`
/// and descends: each round strips leaf paths, contracts them, computes a
/// minimum vertex separator by unit-capacity flow, and either extracts `t+1`
/// disjoint paths (the star model) or a strictly smaller leaf set. At the
/// fixed point the subtree has at most `2t` leaves; a shortest tree path to
/// `b` adds at most one more.
pub fn separator_ab(
    g: &Graph,
    a: &BTreeSet<usize>,
    b: &BTreeSet<usize>,
    t: usize,
) -> Result<SeparatorOutcome, Error> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptySet);
    }
    if t == 0 {
        return Err(Error::InvalidParam("separator routine needs t >= 1".into()));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let root = *a.iter().next().unwrap();
    let tree = lexbfs_tree(g, root)?;

    let mut leaf_set: BTreeSet<usize> = b.clone();
    loop {
        let sub = subtree_for(&tree, &leaf_set, root)?;
        debug_assert!(separates(g, &sub.vertices, a, b), "candidate subtree must separate");
        let current: BTreeSet<usize> = sub.leaves.clone();

        // leaf paths: from each leaf up to (excluding) the first branching
        // vertex or the root
        let degree = subtree_degrees(&tree, &sub);
        let mut leaf_path: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        let mut anchor_of: BTreeMap<usize, usize> = BTreeMap::new(); // leaf -> nearest branch vertex
        for &x in &current {
            let mut path = vec![];
            let mut v = x;
            loop {
                path.push(v);
                let p = tree.parent[v].expect("leaf path cannot pass the root");
                if p == root || degree[&p] >= 3 {
                    anchor_of.insert(x, p);
                    break;
                }
                v = p;
            }
            leaf_path.insert(x, path);
        }
        let stripped: BTreeSet<usize> = leaf_path.values().flatten().copied().collect();
        let trunk: BTreeSet<usize> = sub.vertices.difference(&stripped).copied().collect();

        // contracted remainder: delete the trunk, shrink every leaf path to
        // one vertex, keep everything else
        let keep: BTreeSet<usize> = (0..g.n()).filter(|v| !trunk.contains(v)).collect();
        if keep.is_empty() {
            return finish_subtree(g, &tree, leaf_set, a, b, t);
        }
        let (hg, h_to_g) = g.induced(&keep);
        let g_to_h: BTreeMap<usize, usize> =
            h_to_g.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut contract_groups: Vec<BTreeSet<usize>> = vec![];
        let mut group_leaf: Vec<usize> = vec![];
        for (&leaf, path) in &leaf_path {
            contract_groups.push(path.iter().map(|v| g_to_h[v]).collect());
            group_leaf.push(leaf);
        }
        let (hc, hmap, group_rep) = contract_groups_in(&hg, &contract_groups)?;

        // terminal sides in the contracted graph
        let lift = |side: &BTreeSet<usize>| -> BTreeSet<usize> {
            let mut out = BTreeSet::new();
            for &v in side {
                if let Some(&hv) = g_to_h.get(&v) {
                    out.insert(hmap[hv]);
                }
            }
            out
        };
        let ha = lift(a);
        let hb = lift(b);

        let (sep, paths) = min_vertex_separator(&hc, &ha, &hb, t + 1);
        if paths.len() >= t + 1 {
            // expand t+1 disjoint paths into the star model
            let expand = |hv: usize| -> Vec<usize> {
                match group_rep.get(&hv) {
                    Some(&gi) => contract_groups[gi].iter().map(|&x| h_to_g[x]).collect(),
                    None => {
                        let orig = (0..hg.n()).find(|&x| hmap[x] == hv).unwrap();
                        vec![h_to_g[orig]]
                    }
                }
            };
            let mut spokes = paths;
            spokes.truncate(t + 1);
            let hub_path = spokes.pop().expect("t+1 >= 2 paths");
            let mut hub: BTreeSet<usize> = trunk.clone();
            for hv in hub_path {
                hub.extend(expand(hv));
            }
            let mut branch_sets: Vec<BTreeSet<usize>> = vec![hub];
            for path in spokes {
                let mut set = BTreeSet::new();
                for hv in path {
                    set.extend(expand(hv));
                }
                branch_sets.push(set);
            }
            let model = MinorModel::new(Pattern::CompleteBipartite { s: 1, t }, branch_sets);
            validate_minor_model(g, &model)?;
            for set in &model.branch_sets {
                let set: BTreeSet<usize> = set.iter().copied().collect();
                if set.intersection(a).next().is_none() || set.intersection(b).next().is_none() {
                    return Err(Error::Internal("star branch set misses a terminal side".into()));
                }
            }
            return Ok(SeparatorOutcome::Certificate(model));
        }

        // descend: separator vertices (leaf paths keep their leaf) plus
        // trunk leaves all of whose leaf paths survive the cut
        let mut next: BTreeSet<usize> = BTreeSet::new();
        let mut sep_leaves: BTreeSet<usize> = BTreeSet::new();
        for &hv in &sep {
            match group_rep.get(&hv) {
                Some(&gi) => {
                    let leaf = group_leaf[gi];
                    sep_leaves.insert(leaf);
                    next.insert(leaf);
                }
                None => {
                    let orig = (0..hg.n()).find(|&x| hmap[x] == hv).unwrap();
                    next.insert(h_to_g[orig]);
                }
            }
        }
        let trunk_sub = LexSubtree { root, vertices: trunk.clone(), leaves: BTreeSet::new() };
        let trunk_deg = subtree_degrees(&tree, &trunk_sub);
        for (&z, &d) in trunk_deg.iter() {
            if z == root || d != 1 {
                continue;
            }
            let from_surviving =
                current.iter().any(|x| !sep_leaves.contains(x) && anchor_of[x] == z);
            let from_cut = current.iter().any(|x| sep_leaves.contains(x) && anchor_of[x] == z);
            if from_surviving && !from_cut {
                next.insert(z);
            }
        }
        if next.len() < current.len() {
            leaf_set = next;
            continue;
        }
        return finish_subtree(g, &tree, leaf_set, a, b, t);
    }
}

/// Close the fixed point: verify the leaf bound, extend the subtree by a
/// shortest tree path into `b`, and re-verify the separator property.
fn finish_subtree(
    g: &Graph,
    tree: &LexTree,
    leaf_set: BTreeSet<usize>,
    a: &BTreeSet<usize>,
    b: &BTreeSet<usize>,
    t: usize,
) -> Result<SeparatorOutcome, Error> {
    let root = tree.root;
    let sub = subtree_for(tree, &leaf_set, root)?;
    if sub.leaf_count() > 2 * t {
        return Err(Error::Internal(format!(
            "fixed point has {} leaves, expected at most {}",
            sub.leaf_count(),
            2 * t
        )));
    }
    let mut vertices = sub.vertices.clone();
    if vertices.intersection(b).next().is_none() {
        // shortest suffix of a root path into b, measured from the subtree
        let mut best: Option<(usize, usize, Vec<usize>)> = None; // (len, target, suffix)
        for &target in b {
            let mut suffix = vec![];
            let mut v = target;
            while !vertices.contains(&v) {
                suffix.push(v);
                v = tree.parent[v].expect("root path ends inside the subtree");
            }
            suffix.reverse();
            let cand = (suffix.len(), target, suffix);
            if best.as_ref().map_or(true, |bst| (cand.0, cand.1) < (bst.0, bst.1)) {
                best = Some(cand);
            }
        }
        let (_, _, suffix) = best.expect("b is non-empty");
        vertices.extend(suffix);
    }
    let final_sub = rebuild_subtree(tree, vertices, root);
    if final_sub.leaf_count() > 2 * t + 1 {
        return Err(Error::Internal("extended subtree exceeds the leaf bound".into()));
    }
    if !separates(g, &final_sub.vertices, a, b) {
        return Err(Error::Internal("subtree fails to separate the terminal sides".into()));
    }
    if final_sub.vertices.intersection(a).next().is_none()
        || final_sub.vertices.intersection(b).next().is_none()
    {
        return Err(Error::Internal("subtree misses a terminal side".into()));
    }
    Ok(SeparatorOutcome::Subtree { tree: tree.clone(), subtree: final_sub })
}

fn subtree_for(
    tree: &LexTree,
    leaf_set: &BTreeSet<usize>,
    root: usize,
) -> Result<LexSubtree, Error> {
    if leaf_set.is_empty() {
        return subtree_to(tree, &BTreeSet::from([root]));
    }
    subtree_to(tree, leaf_set)
}

fn rebuild_subtree(tree: &LexTree, vertices: BTreeSet<usize>, root: usize) -> LexSubtree {
    let mut has_child: BTreeMap<usize, bool> = vertices.iter().map(|&v| (v, false)).collect();
    for &v in &vertices {
        if let Some(p) = tree.parent[v] {
            if vertices.contains(&p) {
                has_child.insert(p, true);
            }
        }
    }
    let leaves = vertices.iter().copied().filter(|&v| v != root && !has_child[&v]).collect();
    LexSubtree { root, vertices, leaves }
}

/// Degrees inside the subtree induced by its vertex set on the tree edges.
fn subtree_degrees(tree: &LexTree, sub: &LexSubtree) -> BTreeMap<usize, usize> {
    let mut deg: BTreeMap<usize, usize> = sub.vertices.iter().map(|&v| (v, 0)).collect();
    for &v in &sub.vertices {
        if let Some(p) = tree.parent[v] {
            if sub.vertices.contains(&p) {
                *deg.get_mut(&v).unwrap() += 1;
                *deg.get_mut(&p).unwrap() += 1;
            }
        }
    }
    deg
}

/// Does removing `cut` disconnect every remaining `a` vertex from every
/// remaining `b` vertex? Vertices of `a ∩ b` must lie inside `cut`.
fn separates(g: &Graph, cut: &BTreeSet<usize>, a: &BTreeSet<usize>, b: &BTreeSet<usize>) -> bool {
    if a.intersection(b).any(|v| !cut.contains(v)) {
        return false;
    }
    let rest: BTreeSet<usize> = (0..g.n()).filter(|v| !cut.contains(v)).collect();
    for comp in g.components_within(&rest) {
        if comp.intersection(a).next().is_some() && comp.intersection(b).next().is_some() {
            return false;
        }
    }
    true
}

/// Contract each group (assumed connected) to a single vertex. Returns the
/// contracted graph, the vertex map, and a contracted-id -> group-index map.
fn contract_groups_in(
    g: &Graph,
    groups: &[BTreeSet<usize>],
) -> Result<(Graph, Vec<usize>, BTreeMap<usize, usize>), Error> {
    let mut group_of: Vec<Option<usize>> = vec![None; g.n()];
    for (gi, group) in groups.iter().enumerate() {
        for &v in group {
            if group_of[v].is_some() {
                return Err(Error::Internal("leaf paths must be disjoint".into()));
            }
            group_of[v] = Some(gi);
        }
    }
    // representatives keep ascending order
    let mut map = vec![usize::MAX; g.n()];
    let mut next = 0usize;
    let mut rep_of_group: BTreeMap<usize, usize> = BTreeMap::new();
    for v in 0..g.n() {
        match group_of[v] {
            None => {
                map[v] = next;
                next += 1;
            }
            Some(gi) => {
                if let Some(&r) = rep_of_group.get(&gi) {
                    map[v] = r;
                } else {
                    map[v] = next;
                    rep_of_group.insert(gi, next);
                    next += 1;
                }
            }
        }
    }
    let mut edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    for (u, v) in g.edges() {
        let (a, b) = (map[u], map[v]);
        if a != b {
            edges.insert((a.min(b), a.max(b)));
        }
    }
    let h = Graph::from_edges(next, &edges.into_iter().collect::<Vec<_>>())?;
    let group_rep: BTreeMap<usize, usize> =
        rep_of_group.into_iter().map(|(gi, r)| (r, gi)).collect();
    Ok((h, map, group_rep))
}

/// Minimum vertex a-b separator by unit-capacity vertex-split max-flow,
/// stopped once the flow reaches `cap`. Returns the separator (meaningful
/// when the flow stalls below `cap`) and the vertex-disjoint a-b paths
/// realising the flow.
fn min_vertex_separator(
    g: &Graph,
    a: &BTreeSet<usize>,
    b: &BTreeSet<usize>,
    cap: usize,
) -> (BTreeSet<usize>, Vec<Vec<usize>>) {
    // node 2v = v_in, 2v+1 = v_out; the source feeds a_in, b_out drains out
    let n = g.n();
    let nodes = 2 * n + 2;
    let source = 2 * n;
    let sink = 2 * n + 1;
    const INF: i64 = 1 << 40;
    let mut cap_map: BTreeMap<(usize, usize), i64> = BTreeMap::new();
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); nodes];
    {
        let mut add = |from: usize, to: usize, c: i64| {
            *cap_map.entry((from, to)).or_insert(0) += c;
            cap_map.entry((to, from)).or_insert(0);
            adj[from].insert(to);
            adj[to].insert(from);
        };
        for v in 0..n {
            add(2 * v, 2 * v + 1, 1);
        }
        for (u, v) in g.edges() {
            add(2 * u + 1, 2 * v, INF);
            add(2 * v + 1, 2 * u, INF);
        }
        for &v in a {
            add(source, 2 * v, INF);
        }
        for &v in b {
            add(2 * v + 1, sink, INF);
        }
    }

    // BFS augmenting paths (unit flow each) until cap or no augmenting path
    let mut flow = 0usize;
    while flow < cap {
        let mut parent: Vec<Option<usize>> = vec![None; nodes];
        parent[source] = Some(source);
        let mut queue = VecDeque::from([source]);
        'bfs: while let Some(u) = queue.pop_front() {
            for &w in &adj[u] {
                if parent[w].is_none() && cap_map[&(u, w)] > 0 {
                    parent[w] = Some(u);
                    if w == sink {
                        break 'bfs;
                    }
                    queue.push_back(w);
                }
            }
        }
        if parent[sink].is_none() {
            break;
        }
        let mut v = sink;
        while v != source {
            let u = parent[v].unwrap();
            *cap_map.get_mut(&(u, v)).unwrap() -= 1;
            *cap_map.get_mut(&(v, u)).unwrap() += 1;
            v = u;
        }
        flow += 1;
    }

    let paths = extract_paths(g, a, b, &cap_map, flow);
    if flow >= cap {
        let used: BTreeSet<usize> = paths.iter().map(|p| p[0]).collect();
        return (used, paths);
    }

    // min cut: vertices whose in->out edge is saturated and crosses the cut
    let mut reach = vec![false; nodes];
    reach[source] = true;
    let mut queue = VecDeque::from([source]);
    while let Some(u) = queue.pop_front() {
        for &w in &adj[u] {
            if !reach[w] && cap_map[&(u, w)] > 0 {
                reach[w] = true;
                queue.push_back(w);
            }
        }
    }
    let sep: BTreeSet<usize> = (0..n).filter(|&v| reach[2 * v] && !reach[2 * v + 1]).collect();
    (sep, paths)
}

/// Walk unit flow from each saturated source edge to the sink.
fn extract_paths(
    g: &Graph,
    a: &BTreeSet<usize>,
    b: &BTreeSet<usize>,
    cap_map: &BTreeMap<(usize, usize), i64>,
    count: usize,
) -> Vec<Vec<usize>> {
    let n = g.n();
    // residual of the reverse edge equals the flow pushed on a unit edge
    let flow_on = |from: usize, to: usize| -> bool {
        cap_map.contains_key(&(from, to)) && cap_map.get(&(to, from)).is_some_and(|&r| r > 0)
    };
    let mut used_vertex = vec![false; n];
    let mut paths = vec![];
    for &start in a {
        if paths.len() == count {
            break;
        }
        if used_vertex[start] || !flow_on(2 * n, 2 * start) {
            continue;
        }
        if !flow_on(2 * start, 2 * start + 1) {
            continue;
        }
        let mut path = vec![start];
        used_vertex[start] = true;
        let mut v = start;
        loop {
            if b.contains(&v) && flow_on(2 * v + 1, 2 * n + 1) {
                break;
            }
            let mut advanced = false;
            for &w in g.neighbours(v) {
                if !used_vertex[w] && flow_on(2 * v + 1, 2 * w) && flow_on(2 * w, 2 * w + 1) {
                    path.push(w);
                    used_vertex[w] = true;
                    v = w;
                    advanced = true;
                    break;
                }
            }
            if !advanced {
                break;
            }
        }
        if b.contains(path.last().unwrap()) {
            paths.push(path);
        }
    }
    paths
}

/// Width-2 partition whose parts are induced by LexBFS subtrees with at most
/// `2t+1` leaves, or a K*_{3,t} minor model.
///
/// Every remainder component touches at most two parts and those two parts
/// are adjacent. A two-part component is split by [`separator_ab`]; its star
/// certificate joins the two parts to complete the model.
pub fn decompose_k3t(g: &Graph, t: usize) -> Result<DecompositionOutcome, Error> {
    if t == 0 {
        return Err(Error::InvalidParam("K*_{3,t} decomposition needs t >= 1".into()));
    }
    let n = g.n();
    let mut part_of: Vec<Option<usize>> = vec![None; n];
    let mut parts: Vec<Vec<usize>> = vec![];
    let mut metas: Vec<PartMeta> = vec![];
    let mut remaining: BTreeSet<usize> = (0..n).collect();

    while let Some(&seed) = remaining.iter().next() {
        let comp = component_containing(g, &remaining, seed);
        let touched = adjacent_parts(g, &comp, &part_of);
        match touched.len() {
            0 => push_part(
                &mut parts,
                &mut metas,
                &mut part_of,
                &mut remaining,
                BTreeSet::from([seed]),
                singleton_meta(seed),
            ),
            1 => {
                let ha = *touched.iter().next().unwrap();
                let v = *attachment_vertices(g, &comp, &part_of, ha).iter().next().unwrap();
                push_part(
                    &mut parts,
                    &mut metas,
                    &mut part_of,
                    &mut remaining,
                    BTreeSet::from([v]),
                    singleton_meta(v),
                );
            }
            2 => {
                let mut it = touched.iter();
                let ha = *it.next().unwrap();
                let hb = *it.next().unwrap();
                let a = attachment_vertices(g, &comp, &part_of, ha);
                let b = attachment_vertices(g, &comp, &part_of, hb);
                let (cg, new_to_old) = g.induced(&comp);
                let old_to_new: BTreeMap<usize, usize> =
                    new_to_old.iter().enumerate().map(|(i, &v)| (v, i)).collect();
                let la: BTreeSet<usize> = a.iter().map(|v| old_to_new[v]).collect();
                let lb: BTreeSet<usize> = b.iter().map(|v| old_to_new[v]).collect();
                match separator_ab(&cg, &la, &lb, t)? {
                    SeparatorOutcome::Subtree { tree, subtree } => {
                        let meta = remap_meta(subtree_meta(&tree, &subtree), &new_to_old);
                        let vertices: BTreeSet<usize> =
                            subtree.vertices.iter().map(|&v| new_to_old[v]).collect();
                        push_part(
                            &mut parts,
                            &mut metas,
                            &mut part_of,
                            &mut remaining,
                            vertices,
                            meta,
                        );
                    }
                    SeparatorOutcome::Certificate(star) => {
                        let star = star.mapped(&new_to_old);
                        let Pattern::CompleteBipartite { t: st, .. } = star.pattern else {
                            return Err(Error::Internal("separator must return a star".into()));
                        };
                        let mut branch_sets: Vec<BTreeSet<usize>> = vec![
                            parts[ha].iter().copied().collect(),
                            parts[hb].iter().copied().collect(),
                            star.branch_sets[0].iter().copied().collect(),
                        ];
                        for spoke in &star.branch_sets[1..] {
                            branch_sets.push(spoke.iter().copied().collect());
                        }
                        let model =
                            MinorModel::new(Pattern::CompleteSplit { s: 3, t: st }, branch_sets);
                        validate_minor_model(g, &model)?;
                        return Ok(DecompositionOutcome::Certificate(model));
                    }
                }
            }
            k => {
                return Err(Error::Internal(format!(
                    "width-2 invariant broken: component touches {k} parts"
                )));
            }
        }
    }
    Ok(DecompositionOutcome::Partition(ConnectedPartition::with_meta(parts, 2, metas)))
}

/// Colouring modes for graphs without a K*_{3,t} minor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum K3tColourMode {
    /// 3 colours, defect at most `2(2t+1)`.
    Defect,
    /// 6 colours, clustering at most `2t+1`.
    Clustered6,
    /// 6 colours, clustering at most `t-1`: layer the graph breadth-first
    /// and 3-colour each layer, alternating disjoint colour triples.
    Layered6,
}

/// Colour `g` through [`decompose_k3t`] (defect/clustered) or through
/// per-layer 3-colourings (layered). Certificates surface as
/// [`Error::MinorFound`].
pub fn colour_k3t(g: &Graph, t: usize, mode: K3tColourMode) -> Result<Colouring, Error> {
    match mode {
        K3tColourMode::Defect | K3tColourMode::Clustered6 => {
            let partition = match decompose_k3t(g, t)? {
                DecompositionOutcome::Partition(p) => p,
                DecompositionOutcome::Certificate(m) => {
                    return Err(Error::MinorFound(Box::new(m)))
                }
            };
            let pmode = match mode {
                K3tColourMode::Defect => PartitionColourMode::LexDefect,
                _ => PartitionColourMode::Clustered,
            };
            partition_colouring(g, &partition, pmode)
        }
        K3tColourMode::Layered6 => {
            let layering = componentwise_layering(g);
            let mut colour = vec![0usize; g.n()];
            for (li, layer) in layering.layers.iter().enumerate() {
                let set: BTreeSet<usize> = layer.iter().copied().collect();
                if set.is_empty() {
                    continue;
                }
                let (lg, new_to_old) = g.induced(&set);
                match three_colour_k2t(&lg, t, None) {
                    Ok(c) => {
                        for (lv, &cc) in c.colour.iter().enumerate() {
                            colour[new_to_old[lv]] = (li % 2) * 3 + cc;
                        }
                    }
                    Err(Error::MinorFound(m)) => {
                        // the layers below are connected per component and
                        // dominate this layer: the certificate upgrades
                        let m = m.mapped(&new_to_old);
                        let model = upgrade_layer_certificate(g, &layering.layers, li, &m)?;
                        return Err(Error::MinorFound(Box::new(model)));
                    }
                    Err(e) => return Err(e),
                }
            }
            Colouring::new(g, colour)
        }
    }
}

/// A K*_{2,t} model inside BFS layer `li` extends to K*_{3,t} by adding the
/// union of the earlier layers of the component hosting it.
fn upgrade_layer_certificate(
    g: &Graph,
    layers: &[Vec<usize>],
    li: usize,
    m: &MinorModel,
) -> Result<MinorModel, Error> {
    let Pattern::CompleteSplit { t, .. } = m.pattern else {
        return Err(Error::Internal("layer certificate must be a complete split".into()));
    };
    if li == 0 {
        return Err(Error::Internal("layer zero is edgeless per component".into()));
    }
    let witness = m.branch_sets[0][0];
    let comp = g
        .components()
        .into_iter()
        .find(|c| c.contains(&witness))
        .expect("witness vertex exists");
    let below: BTreeSet<usize> =
        layers[..li].iter().flatten().copied().filter(|v| comp.contains(v)).collect();
    let mut branch_sets: Vec<BTreeSet<usize>> = vec![below];
    for set in &m.branch_sets {
        branch_sets.push(set.iter().copied().collect());
    }
    let model = MinorModel::new(Pattern::CompleteSplit { s: 3, t }, branch_sets);
    validate_minor_model(g, &model)?;
    Ok(model)
}

/// Width-s partition whose parts are unions of at most `s(t-1)` shortest
/// paths, or a K*_{s,t} minor model.
///
/// Components touching fewer than `s` parts get one minimal BFS subtree
/// reaching all attachment sets. Components touching exactly `s` parts grow
/// a maximal family of disjoint subtrees, each reaching every attachment
/// set; `t` of them close the certificate with the touched parts.
pub fn decompose_kst(g: &Graph, s: usize, t: usize) -> Result<DecompositionOutcome, Error> {
    if s == 0 || t < s {
        return Err(Error::InvalidParam(format!(
            "K*_{{s,t}} decomposition needs 1 <= s <= t, got s={s}, t={t}"
        )));
    }
    let n = g.n();
    let mut part_of: Vec<Option<usize>> = vec![None; n];
    let mut parts: Vec<Vec<usize>> = vec![];
    let mut metas: Vec<PartMeta> = vec![];
    let mut remaining: BTreeSet<usize> = (0..n).collect();

    while let Some(&seed) = remaining.iter().next() {
        let comp = component_containing(g, &remaining, seed);
        let touched: Vec<usize> = adjacent_parts(g, &comp, &part_of).into_iter().collect();
        let k = touched.len();
        if k > s {
            return Err(Error::Internal(format!(
                "width-{s} invariant broken: component touches {k} parts"
            )));
        }
        let attach: Vec<BTreeSet<usize>> =
            touched.iter().map(|&q| attachment_vertices(g, &comp, &part_of, q)).collect();
        if k < s {
            let root = if k == 0 { seed } else { *attach[0].iter().next().unwrap() };
            let (set, pieces) = bfs_piece_subtree(g, &comp, root, &attach)?;
            push_part(
                &mut parts,
                &mut metas,
                &mut part_of,
                &mut remaining,
                set,
                PartMeta::Paths { pieces },
            );
        } else {
            // maximal family of disjoint subtrees, each meeting every
            // attachment set
            let mut family: Vec<(BTreeSet<usize>, Vec<Vec<usize>>)> = vec![];
            let mut used: BTreeSet<usize> = BTreeSet::new();
            loop {
                if family.len() == t {
                    let mut branch_sets: Vec<BTreeSet<usize>> =
                        touched.iter().map(|&q| parts[q].iter().copied().collect()).collect();
                    branch_sets.extend(family.into_iter().map(|(set, _)| set));
                    let model = MinorModel::new(Pattern::CompleteSplit { s, t }, branch_sets);
                    validate_minor_model(g, &model)?;
                    return Ok(DecompositionOutcome::Certificate(model));
                }
                let free: BTreeSet<usize> = comp.difference(&used).copied().collect();
                let candidate_root = if family.is_empty() {
                    attach[0]
                        .iter()
                        .copied()
                        .find(|v| free.contains(v) && reaches_all(g, &free, *v, &attach))
                } else {
                    free.iter().copied().find(|&v| {
                        g.neighbours(v).iter().any(|w| used.contains(w))
                            && reaches_all(g, &free, v, &attach)
                    })
                };
                let Some(root) = candidate_root else { break };
                let free_comp = component_containing(g, &free, root);
                let (set, pieces) = bfs_piece_subtree(g, &free_comp, root, &attach)?;
                used.extend(set.iter().copied());
                family.push((set, pieces));
            }
            if family.is_empty() {
                return Err(Error::Internal("family construction found no subtree".into()));
            }
            let mut set = BTreeSet::new();
            let mut pieces = vec![];
            for (fset, fpieces) in family {
                set.extend(fset);
                pieces.extend(fpieces);
            }
            push_part(
                &mut parts,
                &mut metas,
                &mut part_of,
                &mut remaining,
                set,
                PartMeta::Paths { pieces },
            );
        }
    }
    Ok(DecompositionOutcome::Partition(ConnectedPartition::with_meta(parts, s, metas)))
}

/// Can every attachment set be reached from `root` inside `free`?
fn reaches_all(g: &Graph, free: &BTreeSet<usize>, root: usize, attach: &[BTreeSet<usize>]) -> bool {
    let comp = component_containing(g, free, root);
    attach.iter().all(|a| a.iter().any(|v| comp.contains(v)))
}

/// Minimal BFS subtree of `comp` rooted at `root` that meets every
/// attachment set, returned with its root-leaf path decomposition.
fn bfs_piece_subtree(
    g: &Graph,
    comp: &BTreeSet<usize>,
    root: usize,
    attach: &[BTreeSet<usize>],
) -> Result<(BTreeSet<usize>, Vec<Vec<usize>>), Error> {
    let (cg, new_to_old) = g.induced(comp);
    let old_to_new: BTreeMap<usize, usize> =
        new_to_old.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let tree = lexbfs_tree(&cg, old_to_new[&root])?;
    let mut targets: BTreeSet<usize> = BTreeSet::from([old_to_new[&root]]);
    for aset in attach {
        let rep = aset
            .iter()
            .copied()
            .filter(|v| comp.contains(v))
            .min()
            .ok_or_else(|| Error::Internal("attachment set unreachable in component".into()))?;
        targets.insert(old_to_new[&rep]);
    }
    let sub = subtree_to(&tree, &targets)?;
    let pieces = subtree_pieces(&tree, &sub)
        .into_iter()
        .map(|p| p.into_iter().map(|v| new_to_old[v]).collect())
        .collect();
    let set = sub.vertices.iter().map(|&v| new_to_old[v]).collect();
    Ok((set, pieces))
}

fn component_containing(g: &Graph, remaining: &BTreeSet<usize>, seed: usize) -> BTreeSet<usize> {
    g.components_within(remaining)
        .into_iter()
        .find(|c| c.contains(&seed))
        .expect("seed lies in the remaining set")
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

fn attachment_vertices(
    g: &Graph,
    comp: &BTreeSet<usize>,
    part_of: &[Option<usize>],
    part: usize,
) -> BTreeSet<usize> {
    comp.iter()
        .copied()
        .filter(|&v| g.neighbours(v).iter().any(|&w| part_of[w] == Some(part)))
        .collect()
}

fn push_part(
    parts: &mut Vec<Vec<usize>>,
    metas: &mut Vec<PartMeta>,
    part_of: &mut [Option<usize>],
    remaining: &mut BTreeSet<usize>,
    vertices: BTreeSet<usize>,
    meta: PartMeta,
) {
    let idx = parts.len();
    for &v in &vertices {
        part_of[v] = Some(idx);
        remaining.remove(&v);
    }
    parts.push(vertices.into_iter().collect());
    metas.push(meta);
}

fn remap_meta(meta: PartMeta, new_to_old: &[usize]) -> PartMeta {
    match meta {
        PartMeta::Subtree { lex, leaves, layers, pieces } => PartMeta::Subtree {
            lex,
            leaves,
            layers: layers
                .into_iter()
                .map(|l| l.into_iter().map(|v| new_to_old[v]).collect())
                .collect(),
            pieces: pieces
                .into_iter()
                .map(|p| p.into_iter().map(|v| new_to_old[v]).collect())
                .collect(),
        },
        other => other,
    }
}
