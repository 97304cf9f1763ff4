use std::collections::BTreeSet;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use minor_decomp::graph::Graph;
use minor_decomp::lexbfs::{lexbfs_tree, subtree_to, check_lex_rules};
use minor_decomp::skeleton::build_skeleton;

fn random_connected(n: usize, extra: usize, seed: u64) -> Graph {
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
        if n < 2 { break; }
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        if u == v { continue; }
        let e = (u.min(v), u.max(v));
        if have.insert(e) { edges.push(e); added += 1; }
    }
    Graph::from_edges(n, &edges).unwrap()
}

fn main() {
    let mut rng = ChaCha8Rng::seed_from_u64(4242);
    for trial in 0..200u64 {
        let n = 8 + (trial as usize * 13) % 43;
        let extra = (trial as usize * 5) % (2 * n);
        let g = random_connected(n, extra, 1000 + trial);
        let k = 2 + (rng.gen_range(0u32..5) as usize);
        let mut a = BTreeSet::new();
        while a.len() < k.min(n) { a.insert(rng.gen_range(0..n)); }
        let root = *a.iter().next().unwrap();
        let tree = lexbfs_tree(&g, root).unwrap();
        let rules = check_lex_rules(&g, &tree);
        let sub = subtree_to(&tree, &a).unwrap();
        for v in 0..n {
            let c = g.neighbours(v).iter().filter(|w| sub.vertices.contains(w)).count();
            if c > 2 * k {
                println!("trial {trial}: n={n} extra={extra} k={k} a={a:?} v={v} count={c} leaves={} rules={rules}", sub.leaf_count());
                println!("  sub.vertices={:?}", sub.vertices);
                println!("  sub.leaves={:?}", sub.leaves);
                println!("  N(v)={:?}", g.neighbours(v));
                println!("  edges={:?}", g.edges());
                println!("  layer_order={:?}", tree.layer_order);
                println!("  parent={:?}", tree.parent);
                return;
            }
        }
        let sk = build_skeleton(&g, &a).unwrap();
        for v in 0..n {
            let c = g.neighbours(v).iter().filter(|w| sk.vertices.contains(w)).count();
            if c > 2 * k - 2 {
                println!("SKELETON trial {trial}: n={n} k={k} v={v} count={c}");
                println!("  rules={rules} leaves={}", sub.leaf_count());
                println!("  sk={:?} a={:?}", sk.vertices, a);
                println!("  N(v)={:?}", g.neighbours(v));
                println!("  edges={:?}", g.edges());
                return;
            }
        }
    }
    println!("no violation found");
}
