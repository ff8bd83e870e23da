mod common;

use proptest::prelude::*;
use tsr_core::graph::*;

proptest! {
    #[test]
    fn adjacency_symmetric_and_irreflexive(g in common::arb_graph(9)) {
        for u in 0..g.n() as u32 {
            prop_assert!(!g.adjacent(u, u));
            for &v in g.neighbors(u) {
                prop_assert!(g.adjacent(v, u));
                prop_assert!(g.neighbors(v).contains(&u));
            }
        }
    }

    #[test]
    fn independence_matches_pairwise_check(g in common::arb_graph(8), pick in any::<u16>()) {
        let s: VertexSet = (0..g.n() as u32).filter(|v| pick >> v & 1 == 1).collect();
        let brute = g.edges().all(|(u, v)| !(s.contains(u) && s.contains(v)));
        prop_assert_eq!(is_independent(&g, &s).unwrap(), brute);
    }

    #[test]
    fn private_neighbours_are_neighbours(g in common::arb_graph(8), pick in 1u16..) {
        let s: VertexSet = (0..g.n() as u32).filter(|v| pick >> v & 1 == 1).collect();
        for v in s.iter() {
            for x in private_neighbours(&g, &s, v).unwrap().iter() {
                prop_assert!(g.adjacent(v, x));
            }
        }
    }

    #[test]
    fn singleton_blocks_iff_isolated(g in common::arb_graph(8)) {
        for v in 0..g.n() as u32 {
            prop_assert_eq!(is_blocking(&g, &VertexSet::new([v])).unwrap(), g.degree(v) == 0);
        }
    }

    #[test]
    fn smallest_blocking_set_is_nonempty_and_blocking(g in common::arb_graph(7), m in 0usize..4) {
        if let Some(b) = smallest_blocking_set_upto(&g, m) {
            prop_assert!(!b.is_empty() && b.len() <= m);
            prop_assert!(is_blocking(&g, &b).unwrap());
        }
    }
}

#[test]
fn domination_on_paths() {
    let p4 = families::path(4);
    assert!(is_dominating(&p4, &VertexSet::new([1, 2])).unwrap());
    assert!(!is_dominating(&families::path(3), &VertexSet::new([0])).unwrap());
}

#[test]
fn out_of_range_ids_rejected() {
    let g = families::path(3);
    assert!(matches!(is_independent(&g, &VertexSet::new([5])), Err(tsr_core::Error::InvalidInput(_))));
    assert!(Graph::from_edges(2, &[(0, 2)]).is_err());
    assert!(Graph::from_edges(2, &[(1, 1)]).is_err());
}

#[test]
fn canonical_json_is_sorted() {
    let g = Graph::from_edges(3, &[(2, 1), (0, 2), (1, 2)]).unwrap();
    assert_eq!(g.canonical_json(), r#"{"n":3,"edges":[[0,2],[1,2]]}"#);
}
