//! Property tests: random graphs against algebraic identities and against
//! the brute-force oracles.

mod support;

use noc::graph::{Graph, VertexSet};
use noc::{catalog, graph6, iso, solver};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::SeedableRng;

/// Random graph on up to `max_n` vertices as (n, edge bits).
fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n)
        .prop_flat_map(|n| {
            let bits = n * n.saturating_sub(1) / 2;
            (Just(n), proptest::collection::vec(any::<bool>(), bits))
        })
        .prop_map(|(n, bits)| {
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
            Graph::build(n, &edges).expect("valid by construction")
        })
}

fn permute(g: &Graph, seed: u64) -> Graph {
    let mut order: Vec<usize> = (0..g.n()).collect();
    let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
    order.shuffle(&mut rng);
    let edges: Vec<(usize, usize)> = g.edges().map(|(u, v)| (order[u], order[v])).collect();
    Graph::build(g.n(), &edges).expect("permutation keeps validity")
}

proptest! {
    #[test]
    fn complement_is_an_involution(g in arb_graph(10)) {
        prop_assert_eq!(g.complement().complement(), g);
    }

    #[test]
    fn union_and_join_are_complement_dual(g in arb_graph(6), h in arb_graph(6)) {
        let lhs = g.disjoint_union(&h).unwrap().complement();
        let rhs = g.complement().join(&h.complement()).unwrap();
        prop_assert!(iso::are_isomorphic(&lhs, &rhs));
    }

    #[test]
    fn graph6_round_trips(g in arb_graph(12)) {
        let enc = graph6::encode(&g);
        prop_assert_eq!(graph6::decode(&enc).unwrap(), g.clone());
        let (n, edges) = support::independent_graph6_decode(&enc).unwrap();
        prop_assert_eq!(Graph::build(n, &edges).unwrap(), g);
    }

    #[test]
    fn containment_is_label_invariant(g in arb_graph(7), seed in any::<u64>()) {
        let h = permute(&g, seed);
        for pat in [catalog::path(3).unwrap(), catalog::two_k2(), catalog::complete(3).unwrap()] {
            prop_assert_eq!(
                iso::contains_induced(&g, &pat),
                iso::contains_induced(&h, &pat)
            );
        }
        let pat = permute(&catalog::path(4).unwrap(), seed.wrapping_add(1));
        prop_assert_eq!(
            iso::contains_induced(&g, &pat),
            iso::contains_induced(&h, &catalog::path(4).unwrap())
        );
    }

    #[test]
    fn containment_matches_brute_force(g in arb_graph(7), h in arb_graph(4)) {
        prop_assert_eq!(
            iso::contains_induced(&g, &h),
            support::brute_contains_induced(&g, &h)
        );
    }

    #[test]
    fn containment_is_transitive(g in arb_graph(8), h in arb_graph(5), k in arb_graph(3)) {
        if iso::contains_induced(&g, &h) && iso::contains_induced(&h, &k) {
            prop_assert!(iso::contains_induced(&g, &k));
        }
    }

    #[test]
    fn solvers_match_brute_force(g in arb_graph(7)) {
        let (omega, witness) = solver::clique_number(&g);
        prop_assert_eq!(omega, support::brute_clique_number(&g));
        prop_assert_eq!(witness.len(), omega);
        let (chi, colouring) = solver::chromatic_number(&g).unwrap();
        prop_assert_eq!(chi, support::brute_chromatic_number(&g));
        prop_assert!(colouring.is_proper(&g));
        prop_assert!(chi >= omega);
    }

    #[test]
    fn embeddings_are_valid_when_found(g in arb_graph(8), h in arb_graph(4)) {
        if let Some(emb) = iso::find_induced(&g, &h) {
            prop_assert!(emb.is_valid(&g, &h));
        }
    }

    #[test]
    fn induced_c5_really_is_one(g in arb_graph(9)) {
        if let Some(q) = iso::find_induced_c5(&g) {
            for i in 0..5 {
                prop_assert!(g.has_edge(q[i], q[(i + 1) % 5]));
                prop_assert!(!g.has_edge(q[i], q[(i + 2) % 5]));
            }
        }
    }

    #[test]
    fn reduction_never_grows_and_preserves_invariants(g in arb_graph(8)) {
        let r = solver::reduce_comparable(&g);
        prop_assert!(r.n() <= g.n());
        prop_assert_eq!(solver::clique_number(&r).0, solver::clique_number(&g).0);
        prop_assert_eq!(
            solver::chromatic_number(&r).unwrap().0,
            solver::chromatic_number(&g).unwrap().0
        );
    }

    #[test]
    fn vertex_set_algebra(bits in proptest::collection::vec(any::<bool>(), 128)) {
        let s: VertexSet = bits
            .iter()
            .enumerate()
            .filter_map(|(i, &b)| b.then_some(i))
            .collect();
        let full = VertexSet::full(128);
        prop_assert_eq!(s.union(&full.difference(&s)), full);
        prop_assert_eq!(s.intersection(&full.difference(&s)), VertexSet::EMPTY);
        prop_assert_eq!(s.iter().count(), s.len());
        prop_assert!(s.is_subset_of(&full));
    }
}
