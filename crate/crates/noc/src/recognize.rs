//! Recognizers for the graph shapes the pair classifier branches on:
//! forests, linear forests and their complements, induced subgraphs of P4,
//! and the four join shapes `P4 v Kn`, `(K2+K1) v Kn`, `K_n - e`, `K_n`.

use crate::catalog;
use crate::graph::{Graph, VertexSet};
use crate::iso;

/// True iff `g` is acyclic.
pub fn is_forest(g: &Graph) -> bool {
    let mut seen = VertexSet::EMPTY;
    for start in g.vertices() {
        if seen.contains(start) {
            continue;
        }
        // DFS with parent tracking; a visited non-parent neighbour is a cycle.
        let mut stack = vec![(start, usize::MAX)];
        seen.insert(start);
        while let Some((v, parent)) = stack.pop() {
            for u in g.neighbours(v).iter() {
                if u == parent {
                    continue;
                }
                if seen.contains(u) {
                    return false;
                }
                seen.insert(u);
                stack.push((u, v));
            }
        }
    }
    true
}

/// True iff every component of `g` is a path.
pub fn is_linear_forest(g: &Graph) -> bool {
    is_forest(g) && g.vertices().all(|v| g.degree(v) <= 2)
}

/// True iff the complement of `g` is a linear forest.
pub fn is_co_linear_forest(g: &Graph) -> bool {
    is_linear_forest(&g.complement())
}

/// True iff `g` is isomorphic to an induced subgraph of P4, i.e. one of
/// K0, K1, 2K1, K2, K2+K1, P3, P4.
pub fn is_sub_p4(g: &Graph) -> bool {
    g.n() <= 4 && iso::contains_induced(&catalog::path(4).expect("static graph"), g)
}

/// Universal vertices: adjacent to every other vertex. Always a clique.
fn universal_set(g: &Graph) -> VertexSet {
    g.vertices().filter(|&v| g.degree(v) == g.n() - 1).collect()
}

fn match_join_with(g: &Graph, remainder: &Graph) -> Option<usize> {
    let u = universal_set(g);
    let rest = g.induced(&g.vertex_set().difference(&u));
    if iso::are_isomorphic(&rest, remainder) {
        Some(u.len())
    } else {
        None
    }
}

/// Some(n) iff `g` is `P4 v K_n` (n may be 0).
pub fn match_p4_join_kn(g: &Graph) -> Option<usize> {
    match_join_with(g, &catalog::path(4).expect("static graph"))
}

/// Some(n) iff `g` is `(K2+K1) v K_n` (n may be 0).
pub fn match_k2k1_join_kn(g: &Graph) -> Option<usize> {
    match_join_with(g, &catalog::k2_plus_k1())
}

/// Some(n) iff `g` is complete on n vertices.
pub fn match_complete(g: &Graph) -> Option<usize> {
    let n = g.n();
    if g.edge_count() == n * n.saturating_sub(1) / 2 {
        Some(n)
    } else {
        None
    }
}

/// Some(n) iff `g` is `K_n` minus exactly one edge (n >= 2).
pub fn match_complete_minus_edge(g: &Graph) -> Option<usize> {
    let n = g.n();
    if n >= 2 && g.edge_count() + 1 == n * (n - 1) / 2 {
        Some(n)
    } else {
        None
    }
}

/// All recognizer outcomes for one graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ShapeReport {
    pub is_forest: bool,
    pub is_linear_forest: bool,
    pub is_co_linear_forest: bool,
    pub is_sub_p4: bool,
    pub p4_join_k: Option<usize>,
    pub k2k1_join_k: Option<usize>,
    pub complete: Option<usize>,
    pub complete_minus_edge: Option<usize>,
    pub is_2k2: bool,
    pub is_paw: bool,
}

pub fn shape_report(g: &Graph) -> ShapeReport {
    ShapeReport {
        is_forest: is_forest(g),
        is_linear_forest: is_linear_forest(g),
        is_co_linear_forest: is_co_linear_forest(g),
        is_sub_p4: is_sub_p4(g),
        p4_join_k: match_p4_join_kn(g),
        k2k1_join_k: match_k2k1_join_kn(g),
        complete: match_complete(g),
        complete_minus_edge: match_complete_minus_edge(g),
        is_2k2: iso::are_isomorphic(g, &catalog::two_k2()),
        is_paw: iso::are_isomorphic(g, &catalog::paw()),
    }
}
