//! Induced-subgraph containment: does a host graph contain a pattern as an
//! induced subgraph?
//!
//! Plain backtracking over pattern vertices with bitmask candidate pruning.
//! Patterns and hosts here are small (at most a few dozen vertices), so no
//! VF2-style state machinery is needed; what matters is that the search is
//! exact and deterministic. Pattern vertices are tried in descending degree
//! order and host candidates in ascending index order, so the first embedding
//! found is a stable function of the inputs.

use crate::graph::{Graph, VertexSet};

/// An injective map from pattern vertices to host vertices that preserves
/// both adjacency and non-adjacency.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Embedding {
    /// `map[p]` is the host vertex carrying pattern vertex `p`.
    pub map: Vec<usize>,
}

impl Embedding {
    /// Checks the defining property against concrete graphs.
    pub fn is_valid(&self, host: &Graph, pattern: &Graph) -> bool {
        if self.map.len() != pattern.n() {
            return false;
        }
        let mut seen = VertexSet::EMPTY;
        for &h in &self.map {
            if h >= host.n() || seen.contains(h) {
                return false;
            }
            seen.insert(h);
        }
        for a in 0..pattern.n() {
            for b in (a + 1)..pattern.n() {
                if pattern.has_edge(a, b) != host.has_edge(self.map[a], self.map[b]) {
                    return false;
                }
            }
        }
        true
    }
}

/// True iff `host` contains `pattern` as an induced subgraph.
pub fn contains_induced(host: &Graph, pattern: &Graph) -> bool {
    find_induced(host, pattern).is_some()
}

/// Finds an induced embedding of `pattern` into `host`, if one exists.
pub fn find_induced(host: &Graph, pattern: &Graph) -> Option<Embedding> {
    if pattern.n() > host.n() {
        return None;
    }
    if pattern.n() == 0 {
        return Some(Embedding { map: Vec::new() });
    }

    // Pattern vertices in descending degree order (ties by index).
    let mut order: Vec<usize> = (0..pattern.n()).collect();
    order.sort_by_key(|&p| (std::cmp::Reverse(pattern.degree(p)), p));

    let mut search = Search {
        host,
        pattern,
        order: &order,
        image: vec![0; pattern.n()],
        used: VertexSet::EMPTY,
    };
    if search.extend(0) {
        let mut map = vec![0; pattern.n()];
        for (depth, &p) in order.iter().enumerate() {
            map[p] = search.image[depth];
        }
        let emb = Embedding { map };
        debug_assert!(emb.is_valid(host, pattern));
        Some(emb)
    } else {
        None
    }
}

struct Search<'a> {
    host: &'a Graph,
    pattern: &'a Graph,
    order: &'a [usize],
    /// `image[d]` hosts the pattern vertex `order[d]`.
    image: Vec<usize>,
    used: VertexSet,
}

impl Search<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let p = self.order[depth];
        let mut cand = self.host.vertex_set().difference(&self.used);
        for d in 0..depth {
            let q = self.order[d];
            let hq = self.image[d];
            if self.pattern.has_edge(p, q) {
                cand = cand.intersection(&self.host.neighbours(hq));
            } else {
                cand = cand.difference(&self.host.neighbours(hq));
            }
        }
        let need_deg = self.pattern.degree(p);
        let need_codeg = self.pattern.n() - 1 - need_deg;
        for w in cand.iter() {
            let deg = self.host.degree(w);
            if deg < need_deg || self.host.n() - 1 - deg < need_codeg {
                continue;
            }
            self.image[depth] = w;
            self.used.insert(w);
            if self.extend(depth + 1) {
                return true;
            }
            self.used.remove(w);
        }
        false
    }
}

/// True iff `g` contains none of `patterns` as an induced subgraph.
///
/// Patterns are tested in ascending order so the cheap ones fail fast.
pub fn is_free(g: &Graph, patterns: &[Graph]) -> bool {
    let mut idx: Vec<usize> = (0..patterns.len()).collect();
    idx.sort_by_key(|&i| patterns[i].n());
    idx.iter().all(|&i| !contains_induced(g, &patterns[i]))
}

/// Labelled-graph isomorphism; both orders must match.
pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && contains_induced(a, b)
}

/// Finds an induced 5-cycle and returns it in cyclic order, canonicalized so
/// the smallest vertex comes first and its smaller cycle-neighbour second.
pub fn find_induced_c5(g: &Graph) -> Option<[usize; 5]> {
    let c5 = crate::catalog::cycle(5).expect("static graph");
    let emb = find_induced(g, &c5)?;
    let cyc: [usize; 5] = emb.map.try_into().expect("five vertices");
    Some(canonical_cycle_order(cyc))
}

pub(crate) fn canonical_cycle_order(cyc: [usize; 5]) -> [usize; 5] {
    let start = (0..5).min_by_key(|&i| cyc[i]).expect("nonempty");
    let fwd = cyc[(start + 1) % 5];
    let bwd = cyc[(start + 4) % 5];
    let mut out = [0; 5];
    for k in 0..5 {
        out[k] = if fwd <= bwd {
            cyc[(start + k) % 5]
        } else {
            cyc[(start + 5 - k) % 5]
        };
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn cycle_contains_path() {
        let c5 = catalog::cycle(5).unwrap();
        let p4 = catalog::path(4).unwrap();
        assert!(contains_induced(&c5, &p4));
    }

    #[test]
    fn x1_is_2k2_free() {
        let x1 = catalog::x_family(1).unwrap();
        assert!(!contains_induced(&x1, &catalog::two_k2()));
    }

    #[test]
    fn p5_contains_stable_triple() {
        let p5 = catalog::path(5).unwrap();
        assert!(contains_induced(&p5, &catalog::three_k1()));
    }

    #[test]
    fn big_antihole_contains_gem() {
        let g = catalog::odd_antihole(7).unwrap();
        assert!(contains_induced(&g, &catalog::gem()));
    }

    #[test]
    fn identity_embedding_on_p4() {
        let p4 = catalog::path(4).unwrap();
        let emb = find_induced(&p4, &p4).unwrap();
        assert!(emb.is_valid(&p4, &p4));
    }

    #[test]
    fn no_stable_pair_in_triangle() {
        let k3 = catalog::complete(3).unwrap();
        assert!(find_induced(&k3, &Graph::empty(2).unwrap()).is_none());
    }

    #[test]
    fn y2_avoids_hvn() {
        let y2 = catalog::y_family(2).unwrap();
        assert!(find_induced(&y2, &catalog::hvn()).is_none());
    }

    #[test]
    fn freeness_conjunctions() {
        let x3 = catalog::x_family(3).unwrap();
        let c4 = catalog::cycle(4).unwrap();
        assert!(is_free(
            &x3,
            &[catalog::two_k2(), catalog::three_k1(), c4.clone()]
        ));
        let c5 = catalog::cycle(5).unwrap();
        assert!(!is_free(&c5, std::slice::from_ref(&c5)));
        // brute-force checkable: the complement of C9 contains a C4
        assert!(!is_free(&catalog::odd_antihole(9).unwrap(), &[c4]));
    }

    #[test]
    fn empty_pattern_always_embeds() {
        let g = Graph::empty(0).unwrap();
        assert!(contains_induced(&g, &Graph::empty(0).unwrap()));
        assert!(contains_induced(&catalog::complete(3).unwrap(), &Graph::empty(0).unwrap()));
    }

    #[test]
    fn c5_search_finds_the_rim() {
        let c5 = catalog::cycle(5).unwrap();
        assert_eq!(find_induced_c5(&c5), Some([0, 1, 2, 3, 4]));
        assert_eq!(find_induced_c5(&catalog::complete(5).unwrap()), None);
        // in X_2 the rim is the unique induced C5 class
        let x2 = catalog::x_family(2).unwrap();
        let q = find_induced_c5(&x2).unwrap();
        assert_eq!(q, [0, 1, 2, 3, 4]);
    }

    #[test]
    fn cycle_order_is_cyclically_valid() {
        let x1 = catalog::x_family(1).unwrap();
        let q = find_induced_c5(&x1).unwrap();
        for i in 0..5 {
            assert!(x1.has_edge(q[i], q[(i + 1) % 5]));
            assert!(!x1.has_edge(q[i], q[(i + 2) % 5]));
        }
    }
}
