mod common;

use proptest::prelude::*;
use tsr_core::graph::{is_dominating, is_independent, Graph, VertexSet};
use tsr_core::oracles::*;

fn subsets(n: usize) -> impl Iterator<Item = Vec<u32>> {
    (0u32..1 << n).map(move |m| (0..n as u32).filter(|v| m >> v & 1 == 1).collect())
}

fn brute_domination_number(g: &Graph) -> usize {
    subsets(g.n())
        .filter(|s| is_dominating(g, &VertexSet::new(s.iter().copied())).unwrap())
        .map(|s| s.len())
        .min()
        .unwrap()
}

fn brute_split(g: &Graph) -> bool {
    subsets(g.n()).any(|c| {
        let rest: Vec<u32> = (0..g.n() as u32).filter(|v| !c.contains(v)).collect();
        c.iter().all(|&a| c.iter().all(|&b| a == b || g.adjacent(a, b)))
            && is_independent(g, &VertexSet::new(rest)).unwrap()
    })
}

/// Split iff no induced C4, C5 or 2K2.
fn forbidden_free(g: &Graph) -> bool {
    subsets(g.n()).filter(|s| s.len() == 4 || s.len() == 5).all(|s| {
        let h = g.induced(&s);
        let degs: Vec<usize> = (0..h.n() as u32).map(|v| h.degree(v)).collect();
        let cycle = degs.iter().all(|&d| d == 2) && {
            let mut seen = vec![false; h.n()];
            let mut stack = vec![0u32];
            seen[0] = true;
            while let Some(v) = stack.pop() {
                for &w in h.neighbors(v) {
                    if !seen[w as usize] {
                        seen[w as usize] = true;
                        stack.push(w);
                    }
                }
            }
            seen.iter().all(|&x| x)
        };
        let two_k2 = h.n() == 4 && degs.iter().all(|&d| d == 1);
        !cycle && !two_k2
    })
}

fn arb_partitioned(k: usize, n: usize) -> impl Strategy<Value = PartitionedGraph> {
    let pairs = k * (k - 1) / 2 * n * n;
    proptest::collection::vec(any::<bool>(), pairs).prop_map(move |mask| {
        let mut edges = Vec::new();
        let mut bit = 0;
        for i in 0..k {
            for j in i + 1..k {
                for p in 0..n {
                    for q in 0..n {
                        if mask[bit] {
                            edges.push(((i * n + p) as u32, (j * n + q) as u32));
                        }
                        bit += 1;
                    }
                }
            }
        }
        let g = Graph::from_edges(k * n, &edges).unwrap();
        let classes = (0..k).map(|i| (0..n).map(|p| (i * n + p) as u32).collect()).collect();
        PartitionedGraph::new(g, classes).unwrap()
    })
}

proptest! {
    #[test]
    fn domination_matches_brute_force(g in common::arb_graph(8)) {
        let gamma = brute_domination_number(&g);
        let d = min_dominating_set(&g, g.n()).unwrap();
        prop_assert_eq!(d.len(), gamma);
        prop_assert!(is_dominating(&g, &d).unwrap());
        if gamma > 0 {
            prop_assert!(min_dominating_set(&g, gamma - 1).is_none());
        }
    }

    #[test]
    fn split_recognition_matches_brute_force(g in common::arb_graph(8)) {
        let w = split_partition(&g);
        prop_assert_eq!(w.is_some(), brute_split(&g));
        prop_assert_eq!(w.is_some(), forbidden_free(&g));
        if let Some(w) = w {
            prop_assert_eq!(w.clique.len() + w.independent.len(), g.n());
            prop_assert!(is_independent(&g, &w.independent).unwrap());
        }
    }

    #[test]
    fn multicolored_solvers_match_brute_force(pg in (2usize..4, 1usize..4).prop_flat_map(|(k, n)| arb_partitioned(k, n))) {
        let mut any_is = false;
        let mut any_clique = false;
        tsr_core::combinatorics::for_each_tuple(pg.n, pg.k, |t| {
            let vs: Vec<u32> = t.iter().enumerate().map(|(i, &p)| pg.vertex(i, p)).collect();
            let pairs = || vs.iter().enumerate().flat_map(|(a, &x)| vs[a + 1..].iter().map(move |&y| (x, y)));
            any_is |= pairs().all(|(x, y)| !pg.graph.adjacent(x, y));
            any_clique |= pairs().all(|(x, y)| pg.graph.adjacent(x, y));
            true
        });
        prop_assert_eq!(multicolored_independent_set(&pg).is_some(), any_is);
        if pg.every_class_has_edge() {
            prop_assert_eq!(multicolored_clique(&pg).unwrap().is_some(), any_clique);
        } else {
            prop_assert!(multicolored_clique(&pg).is_err());
        }
    }
}

#[test]
fn partition_validation() {
    let g = Graph::from_edges(4, &[(0, 1)]).unwrap();
    assert!(PartitionedGraph::new(g.clone(), vec![vec![0, 1], vec![2, 3]]).is_err());
    assert!(PartitionedGraph::new(g.clone(), vec![vec![0, 2], vec![1]]).is_err());
    assert!(PartitionedGraph::new(g.clone(), vec![vec![0, 2], vec![1, 1]]).is_err());
    let pg = PartitionedGraph::new(g, vec![vec![0, 2], vec![1, 3]]).unwrap();
    assert_eq!((pg.k, pg.n), (2, 2));
    assert_eq!(pg.locate(3), (1, 1));
}
