mod common;

use proptest::prelude::*;
use tsr_core::chordal::*;

proptest! {
    #[test]
    fn realized_models_are_chordal(m in common::arb_model()) {
        let g = realize(&m).unwrap();
        let order = recognize_chordal(&g);
        prop_assert!(order.is_some());
        prop_assert!(order.unwrap().is_perfect_for(&g));
    }

    #[test]
    fn built_clique_trees_pass_the_check(m in common::arb_model()) {
        let g = realize(&m).unwrap();
        let ct = build_clique_tree(&g).unwrap();
        prop_assert!(check_clique_tree(&g, &ct));
        prop_assert!(ct.bags.len() <= g.n());
    }

    #[test]
    fn recognition_agrees_with_cycle_search(g in common::arb_graph(7)) {
        prop_assert_eq!(recognize_chordal(&g).is_some(), !has_chordless_cycle(&g));
    }

    #[test]
    fn non_chordal_graphs_have_no_clique_tree(g in common::arb_graph(7)) {
        if recognize_chordal(&g).is_none() {
            prop_assert_eq!(build_clique_tree(&g), Err(tsr_core::Error::NotChordal));
        }
    }
}

/// Brute force: some vertex subset of size >= 4 induces a cycle.
fn has_chordless_cycle(g: &tsr_core::Graph) -> bool {
    let n = g.n();
    (0u32..1 << n).any(|mask| {
        let vs: Vec<u32> = (0..n as u32).filter(|v| mask >> v & 1 == 1).collect();
        if vs.len() < 4 {
            return false;
        }
        let sub = g.induced(&vs);
        let connected = {
            let mut seen = vec![false; sub.n()];
            let mut stack = vec![0u32];
            seen[0] = true;
            while let Some(v) = stack.pop() {
                for &w in sub.neighbors(v) {
                    if !seen[w as usize] {
                        seen[w as usize] = true;
                        stack.push(w);
                    }
                }
            }
            seen.iter().all(|&s| s)
        };
        connected && (0..sub.n() as u32).all(|v| sub.degree(v) == 2)
    })
}

#[test]
fn wrong_bag_fails_check() {
    let p3 = tsr_core::graph::families::path(3);
    let bad = CliqueTree {
        bags: vec![tsr_core::VertexSet::new([0, 1]), tsr_core::VertexSet::new([0, 2])],
        edges: vec![(0, 1)],
    };
    assert!(!check_clique_tree(&p3, &bad));
    let good = build_clique_tree(&p3).unwrap();
    assert_eq!(good.bags.len(), 2);
    assert_eq!(max_degree(&good), 1);
}

#[test]
fn star_clique_tree_any_shape_accepted() {
    let s = tsr_core::graph::families::star(3);
    let ct = build_clique_tree(&s).unwrap();
    assert_eq!(ct.bags.len(), 3);
    assert!(check_clique_tree(&s, &ct));
    let k4 = tsr_core::graph::families::complete(4);
    let single = build_clique_tree(&k4).unwrap();
    assert_eq!(single.bags.len(), 1);
    assert_eq!(max_degree(&single), 0);
}

#[test]
fn leaf_counts() {
    use std::collections::BTreeMap;
    let path = HostTree::new(4, vec![(0, 1), (1, 2), (2, 3)], BTreeMap::new()).unwrap();
    assert_eq!(leaf_count(&TreeModel::new(path, vec![vec![0]])), 2);
    let single = HostTree::new(1, vec![], BTreeMap::new()).unwrap();
    assert_eq!(leaf_count(&TreeModel::new(single, vec![vec![0]])), 1);
}
