mod common;

use proptest::prelude::*;
use tsr_core::engine::*;
use tsr_core::graph::{is_independent, Graph, VertexSet};

const B: u64 = DEFAULT_BUDGET;

/// Materializes every k-independent set and labels components by union-find.
fn naive_components(g: &Graph, k: usize) -> (Vec<Vec<u32>>, Vec<usize>) {
    let n = g.n();
    let sets: Vec<Vec<u32>> = (0u32..1 << n)
        .filter(|m| m.count_ones() as usize == k)
        .map(|m| (0..n as u32).filter(|v| m >> v & 1 == 1).collect::<Vec<_>>())
        .filter(|s| is_independent(g, &VertexSet::new(s.iter().copied())).unwrap())
        .collect();
    let mut comp: Vec<usize> = (0..sets.len()).collect();
    fn find(c: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while c[r] != r {
            r = c[r];
        }
        c[x] = r;
        r
    }
    for a in 0..sets.len() {
        for b in a + 1..sets.len() {
            let only_a: Vec<u32> = sets[a].iter().filter(|x| !sets[b].contains(x)).copied().collect();
            let only_b: Vec<u32> = sets[b].iter().filter(|x| !sets[a].contains(x)).copied().collect();
            if only_a.len() == 1 && g.adjacent(only_a[0], only_b[0]) {
                let (ra, rb) = (find(&mut comp, a), find(&mut comp, b));
                comp[ra] = rb;
            }
        }
    }
    let labels = (0..sets.len()).map(|i| find(&mut comp, i)).collect();
    (sets, labels)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn counts_match_brute_force(g in common::arb_graph(9), k in 0usize..4) {
        let (sets, _) = naive_components(&g, k);
        prop_assert_eq!(count_k_independent_sets(&g, k), sets.len() as u64);
    }

    #[test]
    fn reachability_matches_naive(g in common::arb_graph(7), k in 1usize..4) {
        let (sets, comp) = naive_components(&g, k);
        for a in 0..sets.len().min(10) {
            for b in 0..sets.len().min(10) {
                let from = TokenConfig::new(&g, sets[a].clone()).unwrap();
                let to = TokenConfig::new(&g, sets[b].clone()).unwrap();
                let r = ts_reachable(&g, &from, &to, B).unwrap();
                prop_assert_eq!(r.is_some(), comp[a] == comp[b]);
                if let Some(seq) = r {
                    prop_assert_eq!(seq.replay(&g).unwrap(), to);
                }
            }
        }
    }

    #[test]
    fn reachability_is_symmetric(g in common::arb_graph(8), k in 1usize..4, i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        let (sets, _) = naive_components(&g, k);
        prop_assume!(!sets.is_empty());
        let a = TokenConfig::new(&g, sets[i.index(sets.len())].clone()).unwrap();
        let b = TokenConfig::new(&g, sets[j.index(sets.len())].clone()).unwrap();
        let ab = ts_reachable(&g, &a, &b, B).unwrap();
        let ba = ts_reachable(&g, &b, &a, B).unwrap();
        prop_assert_eq!(ab.is_some(), ba.is_some());
        if let (Some(x), Some(y)) = (ab, ba) {
            prop_assert_eq!(x.slides.len(), y.slides.len());
        }
    }

    #[test]
    fn successor_relation_is_symmetric(g in common::arb_graph(8), k in 1usize..4) {
        let (sets, _) = naive_components(&g, k);
        for s in sets.iter().take(20) {
            let c = TokenConfig::new(&g, s.clone()).unwrap();
            for nxt in successors(&g, &c) {
                prop_assert!(successors(&g, &nxt).contains(&c));
            }
        }
    }

    #[test]
    fn connectivity_agrees_with_component_count(g in common::arb_graph(8), k in 0usize..4) {
        let conn = ts_connected(&g, k, B).unwrap();
        let comps = component_count(&g, k, B).unwrap();
        let (sets, labels) = naive_components(&g, k);
        let mut distinct = labels.clone();
        distinct.sort();
        distinct.dedup();
        prop_assert_eq!(comps, distinct.len() as u64);
        match conn {
            Connectivity::Empty => prop_assert!(sets.is_empty()),
            Connectivity::Connected => prop_assert_eq!(comps, 1),
            Connectivity::Disconnected(a, b) => {
                prop_assert!(comps > 1);
                prop_assert!(ts_reachable(&g, &a, &b, B).unwrap().is_none());
            }
        }
    }

    #[test]
    fn frozen_configs_are_isolated(g in common::arb_graph(8), k in 1usize..4) {
        let (sets, _) = naive_components(&g, k);
        for s in sets.iter().take(20) {
            let c = TokenConfig::new(&g, s.clone()).unwrap();
            if is_frozen(&g, &c) {
                let r = reachable_configs(&g, &c, None, B).unwrap();
                prop_assert_eq!(r, vec![c]);
            }
        }
    }
}

#[test]
fn budget_is_reported() {
    let g = Graph::empty(20);
    assert!(matches!(ts_connected(&g, 5, 100), Err(tsr_core::Error::Budget { limit: 100, .. })));
}

#[test]
fn mismatched_sizes_rejected() {
    let g = tsr_core::graph::families::path(5);
    let a = TokenConfig::new(&g, [0]).unwrap();
    let b = TokenConfig::new(&g, [0, 2]).unwrap();
    assert!(ts_reachable(&g, &a, &b, B).is_err());
}
