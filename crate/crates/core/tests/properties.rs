//! Randomised invariants over small arbitrary graphs.

use nbcx_core::graph::{blowup, parse_edge_list, write_edge_list, Graph, VertexSet};
use nbcx_core::signatures::{
    proper_signatures, sigma_in_neighbourhood, sigma_neighbourhood, Colouring, SigmaMode,
};
use nbcx_core::wcol::{wcol_given_order, wreach, Ordering};
use proptest::prelude::*;

/// An arbitrary graph on 1..=7 vertices: `bits` selects edges from the
/// lexicographic pair list.
fn arb_graph() -> impl Strategy<Value = Graph> {
    (1usize..=7, any::<u32>()).prop_map(|(n, bits)| {
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
        let edges: Vec<(usize, usize)> = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| bits >> (i % 32) & 1 == 1 && i < 32)
            .map(|(_, &p)| p)
            .collect();
        Graph::from_edges(n, &edges).unwrap()
    })
}

fn arb_colouring(n: usize) -> impl Strategy<Value = Colouring> {
    proptest::collection::vec(0u32..3, n).prop_map(|cols| Colouring::new(3, cols).unwrap())
}

proptest! {
    #[test]
    fn edge_list_round_trip(g in arb_graph()) {
        let text = write_edge_list(&g);
        let back = parse_edge_list(&text).unwrap();
        prop_assert_eq!(g.n(), back.n());
        prop_assert_eq!(g.edges().collect::<Vec<_>>(), back.edges().collect::<Vec<_>>());
    }

    #[test]
    fn ball_is_union_of_spheres(g in arb_graph(), r in 0usize..4) {
        for v in 0..g.n() {
            let mut acc = VertexSet::empty();
            for d in 0..=r {
                acc = acc.union(&g.exact_sphere(v, d));
            }
            prop_assert_eq!(acc, g.closed_ball(v, r));
        }
    }

    #[test]
    fn single_copy_blowup_is_identity(g in arb_graph()) {
        let b = blowup(&g, 1).unwrap();
        let bg = b.graph();
        prop_assert_eq!(bg.n(), g.n());
        let mapped: Vec<(usize, usize)> = g
            .edges()
            .map(|(u, v)| (b.vertex_id(u, 1), b.vertex_id(v, 1)))
            .collect();
        prop_assert_eq!(bg.edges().collect::<Vec<_>>(), mapped);
    }

    #[test]
    fn sigma_neighbourhood_within_radius(g in arb_graph(), bits in any::<u64>()) {
        let n = g.n();
        let cols: Vec<u32> = (0..n).map(|v| (bits >> (2 * v) & 3) as u32 % 3).collect();
        let c = Colouring::new(3, cols).unwrap();
        for sig in proper_signatures(3, 3) {
            for v in 0..n {
                let nb = sigma_neighbourhood(&g, &c, v, &sig, SigmaMode::Paths).unwrap();
                prop_assert!(nb.is_subset_of(&g.closed_ball(v, sig.len() - 1)));
            }
        }
    }

    #[test]
    fn sigma_reversal_symmetry(g in arb_graph(), c_seed in any::<u64>()) {
        let n = g.n();
        let cols: Vec<u32> = (0..n).map(|v| (c_seed >> (2 * v) & 3) as u32 % 3).collect();
        let c = Colouring::new(3, cols).unwrap();
        for sig in proper_signatures(3, 3) {
            for v in 0..n {
                let fwd = sigma_neighbourhood(&g, &c, v, &sig, SigmaMode::Paths).unwrap();
                for w in fwd.iter() {
                    let back = sigma_in_neighbourhood(&g, &c, w, &sig, SigmaMode::Paths).unwrap();
                    prop_assert!(back.contains(v),
                        "w in N^sig(v) must imply v in N^-sig(w)");
                }
            }
        }
    }

    #[test]
    fn wreach_monotone_in_radius(g in arb_graph(), seq in any::<u64>()) {
        let n = g.n();
        let mut perm: Vec<usize> = (0..n).collect();
        // Cheap seeded shuffle.
        for i in (1..n).rev() {
            let j = (seq >> (i * 7) | seq << (i * 3)) as usize % (i + 1);
            perm.swap(i, j);
        }
        let order = Ordering::from_sequence(&perm).unwrap();
        for r in 0..3 {
            let small = wreach(&g, &order, r).unwrap();
            let big = wreach(&g, &order, r + 1).unwrap();
            for v in 0..n {
                prop_assert!(small.set(v).is_subset_of(big.set(v)));
            }
            prop_assert!(wcol_given_order(&g, &order, r).unwrap()
                <= wcol_given_order(&g, &order, r + 1).unwrap());
        }
    }

    #[test]
    fn colouring_strategy_sanity(g in arb_graph(), c in (1usize..=7).prop_flat_map(arb_colouring)) {
        // Length-1 proper signatures always return self or nothing.
        if c.n() == g.n() {
            for v in 0..g.n() {
                for sig in proper_signatures(c.palette(), 1) {
                    let nb = sigma_neighbourhood(&g, &c, v, &sig, SigmaMode::WalkDp).unwrap();
                    if sig.entry(0) == c.colour(v) {
                        prop_assert_eq!(nb, VertexSet::singleton(v));
                    } else {
                        prop_assert!(nb.is_empty());
                    }
                }
            }
        }
    }
}
