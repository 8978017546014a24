//! Shared test support: brute-force oracles that are independent of the
//! library's solver paths, and isomorph-free enumeration of small graphs
//! used to synthesize acceptance corpora.

// each test binary compiles this module separately and uses a subset of it
#![allow(dead_code)]

use noc::graph::{Graph, VertexSet};
use noc::iso;
use std::collections::HashMap;
use std::sync::LazyLock;

// ---------------------------------------------------------------------------
// Brute-force oracles
// ---------------------------------------------------------------------------

/// Largest pairwise-adjacent subset, by enumerating all vertex subsets.
pub fn brute_clique_number(g: &Graph) -> usize {
    let n = g.n();
    assert!(n <= 16, "oracle is exponential");
    let mut best = 0;
    'mask: for mask in 0u32..(1 << n) {
        let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if members.len() <= best {
            continue;
        }
        for (i, &u) in members.iter().enumerate() {
            for &v in &members[i + 1..] {
                if !g.has_edge(u, v) {
                    continue 'mask;
                }
            }
        }
        best = members.len();
    }
    best
}

/// Minimum number of blocks over all partitions of the vertices into stable
/// sets, enumerated in restricted-growth order. No clique bounds, no greedy
/// ordering: a different path from the production solver.
pub fn brute_chromatic_number(g: &Graph) -> usize {
    fn assign(g: &Graph, v: usize, blocks: &mut Vec<VertexSet>, best: &mut usize) {
        if blocks.len() >= *best {
            return;
        }
        if v == g.n() {
            *best = blocks.len();
            return;
        }
        for i in 0..blocks.len() {
            if !blocks[i].intersects(&g.neighbours(v)) {
                blocks[i].insert(v);
                assign(g, v + 1, blocks, best);
                blocks[i].remove(v);
            }
        }
        blocks.push(VertexSet::singleton(v));
        assign(g, v + 1, blocks, best);
        blocks.pop();
    }
    if g.n() == 0 {
        return 0;
    }
    let mut best = g.n() + 1;
    assign(g, 0, &mut Vec::new(), &mut best);
    best
}

/// Induced containment by enumerating subsets and permutations.
pub fn brute_contains_induced(host: &Graph, pattern: &Graph) -> bool {
    let k = pattern.n();
    if k > host.n() {
        return false;
    }
    let mut subset: Vec<usize> = Vec::with_capacity(k);
    choose(host, pattern, 0, &mut subset)
}

fn choose(host: &Graph, pattern: &Graph, from: usize, subset: &mut Vec<usize>) -> bool {
    if subset.len() == pattern.n() {
        let mut perm: Vec<usize> = subset.clone();
        return permutations_match(host, pattern, &mut perm, 0);
    }
    for v in from..host.n() {
        subset.push(v);
        if choose(host, pattern, v + 1, subset) {
            subset.pop();
            return true;
        }
        subset.pop();
    }
    false
}

fn permutations_match(host: &Graph, pattern: &Graph, perm: &mut [usize], at: usize) -> bool {
    if at == perm.len() {
        return (0..perm.len()).all(|a| {
            (a + 1..perm.len()).all(|b| pattern.has_edge(a, b) == host.has_edge(perm[a], perm[b]))
        });
    }
    for i in at..perm.len() {
        perm.swap(at, i);
        if permutations_match(host, pattern, perm, at + 1) {
            perm.swap(at, i);
            return true;
        }
        perm.swap(at, i);
    }
    false
}

/// Definition-based perfectness: every induced subgraph has equal brute
/// chromatic and clique numbers.
pub fn brute_is_perfect(g: &Graph) -> bool {
    let n = g.n();
    assert!(n <= 8, "oracle is doubly exponential");
    for mask in 0u32..(1 << n) {
        let s: VertexSet = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        let h = g.induced(&s);
        if brute_chromatic_number(&h) != brute_clique_number(&h) {
            return false;
        }
    }
    true
}

/// A from-scratch graph6 reader used to cross-check the production codec.
pub fn independent_graph6_decode(text: &str) -> Option<(usize, Vec<(usize, usize)>)> {
    let bytes = text.trim_end().as_bytes();
    let (n, at) = if bytes.first()? == &126 {
        let n = bytes.get(1..4)?.iter().try_fold(0usize, |acc, &b| {
            (63..=126).contains(&b).then(|| acc * 64 + (b - 63) as usize)
        })?;
        (n, 4)
    } else {
        let b = *bytes.first()?;
        if !(63..=126).contains(&b) {
            return None;
        }
        ((b - 63) as usize, 1)
    };
    let mut bits = Vec::new();
    for &b in bytes.get(at..)? {
        if !(63..=126).contains(&b) {
            return None;
        }
        for shift in (0..6).rev() {
            bits.push((b - 63) >> shift & 1 == 1);
        }
    }
    if bits.len() < n * n.saturating_sub(1) / 2 {
        return None;
    }
    let mut edges = Vec::new();
    let mut idx = 0;
    for j in 1..n {
        for i in 0..j {
            if bits[idx] {
                edges.push((i, j));
            }
            idx += 1;
        }
    }
    Some((n, edges))
}

// ---------------------------------------------------------------------------
// Isomorph-free enumeration
// ---------------------------------------------------------------------------

/// Dedup container: an isomorphism-invariant key narrows candidates to a
/// bucket, then an exact isomorphism test decides.
#[derive(Default)]
pub struct IsoClassSet {
    buckets: HashMap<Vec<u32>, Vec<Graph>>,
    pub reps: Vec<Graph>,
}

impl IsoClassSet {
    pub fn insert(&mut self, g: Graph) -> bool {
        let key = invariant_key(&g);
        let bucket = self.buckets.entry(key).or_default();
        if bucket.iter().any(|h| iso::are_isomorphic(h, &g)) {
            return false;
        }
        bucket.push(g.clone());
        self.reps.push(g);
        true
    }
}

fn invariant_key(g: &Graph) -> Vec<u32> {
    let n = g.n();
    let mut rows: Vec<Vec<u32>> = (0..n)
        .map(|v| {
            let nbrs = g.neighbours(v);
            // twice the number of triangles through v
            let tri: u32 = nbrs
                .iter()
                .map(|u| g.neighbours(u).intersection(&nbrs).len() as u32)
                .sum();
            let mut nd: Vec<u32> = nbrs.iter().map(|u| g.degree(u) as u32).collect();
            nd.sort_unstable();
            let mut row = vec![g.degree(v) as u32, tri];
            row.extend(nd);
            row
        })
        .collect();
    rows.sort();
    let mut key = vec![n as u32, g.edge_count() as u32];
    for r in rows {
        key.push(u32::MAX); // row separator
        key.extend(r);
    }
    key
}

/// Adds one vertex adjacent to the `mask`-selected vertices.
pub fn extend_with_neighbourhood(g: &Graph, mask: u64) -> Graph {
    let n = g.n();
    let mut edges: Vec<(usize, usize)> = g.edges().collect();
    for v in 0..n {
        if mask >> v & 1 == 1 {
            edges.push((v, n));
        }
    }
    Graph::build(n + 1, &edges).expect("extension stays in range")
}

/// All isomorphism classes on exactly `n` vertices, grown from the classes
/// on `n - 1` vertices. `keep` prunes candidates; for a hereditary property
/// the result is exactly the classes satisfying it.
pub fn grow(parents: &[Graph], n: usize, keep: impl Fn(&Graph) -> bool) -> Vec<Graph> {
    assert!(n >= 1);
    let mut set = IsoClassSet::default();
    for p in parents {
        assert_eq!(p.n(), n - 1);
        for mask in 0u64..(1 << (n - 1)) {
            let cand = extend_with_neighbourhood(p, mask);
            if keep(&cand) {
                set.insert(cand);
            }
        }
    }
    set.reps
}

/// Isomorphism-class representatives of all graphs, by order, up to `max_n`.
/// Index 0 holds the empty graph.
pub fn graphs_by_order(max_n: usize) -> Vec<Vec<Graph>> {
    let mut by_order = vec![vec![Graph::empty(0).expect("static")]];
    for n in 1..=max_n {
        let next = grow(&by_order[n - 1], n, |_| true);
        by_order.push(next);
    }
    by_order
}

/// Same, restricted to a hereditary family given by forbidden patterns.
pub fn free_graphs_by_order(max_n: usize, patterns: &[Graph]) -> Vec<Vec<Graph>> {
    let mut by_order = vec![vec![Graph::empty(0).expect("static")]];
    for n in 1..=max_n {
        let next = grow(&by_order[n - 1], n, |g| iso::is_free(g, patterns));
        by_order.push(next);
    }
    by_order
}

/// All forests by order up to `max_n` (acyclicity is hereditary).
pub fn forests_by_order(max_n: usize) -> Vec<Vec<Graph>> {
    let mut by_order = vec![vec![Graph::empty(0).expect("static")]];
    for n in 1..=max_n {
        let next = grow(&by_order[n - 1], n, noc::recognize::is_forest);
        by_order.push(next);
    }
    by_order
}

/// The full corpus of graphs on up to 8 vertices, built once per process.
pub static CORPUS8: LazyLock<Vec<Vec<Graph>>> = LazyLock::new(|| graphs_by_order(8));

/// Flattens a by-order corpus into one list, orders 1..=max.
pub fn flatten(by_order: &[Vec<Graph>]) -> Vec<&Graph> {
    by_order.iter().skip(1).flatten().collect()
}

/// Writes a corpus as graph6 lines.
pub fn corpus_to_graph6(graphs: &[&Graph]) -> String {
    let mut out = String::new();
    for g in graphs {
        out.push_str(&noc::graph6::encode(g));
        out.push('\n');
    }
    out
}
