//! Shared corpus builders and independent enumeration oracles for the
//! integration suites.
#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use minor_decomp::colnums::VertexOrdering;
use minor_decomp::graph::Graph;

/// Random connected graph: a random spanning tree plus `extra` random edges.
pub fn random_connected(n: usize, extra: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges: Vec<(usize, usize)> = vec![];
    for v in 1..n {
        let u = rng.gen_range(0..v);
        edges.push((u, v));
    }
    let mut have: BTreeSet<(usize, usize)> = edges.iter().copied().collect();
    let mut added = 0usize;
    let mut guard = 0usize;
    while added < extra && guard < 20 * (extra + 1) {
        guard += 1;
        if n < 2 {
            break;
        }
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v {
            continue;
        }
        let e = (u.min(v), u.max(v));
        if have.insert(e) {
            edges.push(e);
            added += 1;
        }
    }
    Graph::from_edges(n, &edges).expect("constructed edges are simple")
}

/// Random vertex subset of the given size (requires `size <= n`).
pub fn random_subset(n: usize, size: usize, rng: &mut ChaCha8Rng) -> BTreeSet<usize> {
    let mut out = BTreeSet::new();
    while out.len() < size {
        out.insert(rng.gen_range(0..n));
    }
    out
}

/// All simple paths from `v` of length at most `r`, filtered by the strong
/// reachability condition: target at or before `v`, interiors strictly
/// after `v`.
pub fn sreach_by_paths(g: &Graph, ord: &VertexOrdering, v: usize, r: usize) -> BTreeSet<usize> {
    let mut out = BTreeSet::from([v]);
    let mut path = vec![v];
    let mut on_path = vec![false; g.n()];
    on_path[v] = true;
    enumerate_paths(g, r, &mut path, &mut on_path, &mut |path: &[usize]| {
        let x = *path.last().unwrap();
        if ord.position(x) <= ord.position(v)
            && path[1..path.len() - 1].iter().all(|&w| ord.position(w) > ord.position(v))
        {
            out.insert(x);
        }
    });
    out
}

/// Same enumeration with the weak condition: interiors strictly after the
/// target.
pub fn wreach_by_paths(g: &Graph, ord: &VertexOrdering, v: usize, r: usize) -> BTreeSet<usize> {
    let mut out = BTreeSet::from([v]);
    let mut path = vec![v];
    let mut on_path = vec![false; g.n()];
    on_path[v] = true;
    enumerate_paths(g, r, &mut path, &mut on_path, &mut |path: &[usize]| {
        let x = *path.last().unwrap();
        if ord.position(x) <= ord.position(v)
            && path[1..path.len() - 1].iter().all(|&w| ord.position(w) > ord.position(x))
        {
            out.insert(x);
        }
    });
    out
}

fn enumerate_paths(
    g: &Graph,
    budget: usize,
    path: &mut Vec<usize>,
    on_path: &mut Vec<bool>,
    visit: &mut impl FnMut(&[usize]),
) {
    if budget == 0 {
        return;
    }
    let last = *path.last().unwrap();
    let nbrs: Vec<usize> = g.neighbours(last).iter().copied().collect();
    for w in nbrs {
        if on_path[w] {
            continue;
        }
        path.push(w);
        on_path[w] = true;
        visit(path);
        enumerate_paths(g, budget - 1, path, on_path, visit);
        on_path[w] = false;
        path.pop();
    }
}

/// Binomial coefficient for the weak-colouring bounds.
pub fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut out = 1usize;
    for i in 0..k.min(n - k) {
        out = out * (n - i) / (i + 1);
    }
    out
}
