use tsr_core::graph::smallest_blocking_set_upto;
use tsr_core::oracles::multicolored_clique;
use tsr_harness::gen::*;
use tsr_harness::HarnessError;

#[test]
fn nonblocking_is_certified_and_reproducible() {
    for seed in 0..5 {
        let g = gen_nonblocking_instance(6, 2, seed).unwrap();
        assert!(smallest_blocking_set_upto(&g, 3).is_none());
        assert_eq!(gen_nonblocking_instance(6, 2, seed).unwrap(), g);
    }
}

#[test]
fn nonblocking_rejects_impossible_requests() {
    assert!(matches!(gen_nonblocking_instance(1, 2, 0), Err(HarnessError::Generation(_))));
    assert!(matches!(gen_nonblocking_instance(6, 1, 0), Err(HarnessError::Generation(_))));
}

#[test]
fn partitioned_density_one_is_complete_multipartite() {
    let pg = gen_partitioned(2, 1, 1.0, 0, Variant::Is).unwrap();
    assert_eq!(pg.graph.edges().collect::<Vec<_>>(), vec![(0, 1)]);
    let pg = gen_partitioned(3, 2, 1.0, 0, Variant::Is).unwrap();
    assert_eq!(pg.graph.edge_count(), 12);
}

#[test]
fn clique_variant_touches_every_class() {
    for seed in 0..50 {
        let pg = gen_partitioned(3, 2, 0.05, seed, Variant::Clique).unwrap();
        assert!(pg.every_class_has_edge());
        assert!(multicolored_clique(&pg).is_ok());
        assert_eq!(gen_partitioned(3, 2, 0.05, seed, Variant::Clique).unwrap(), pg);
    }
}

#[test]
fn exhaustive_counts() {
    assert_eq!(all_partitioned(2, 2, Variant::Is).unwrap().len(), 16);
    // patterns where both classes see an edge: 16 minus the empty pattern
    assert_eq!(all_partitioned(2, 2, Variant::Clique).unwrap().len(), 15);
    assert_eq!(all_split_graphs(2, 3).len(), 64);
    assert_eq!(all_graphs(4).count(), 64);
    for g in all_split_graphs(3, 2) {
        assert!(tsr_core::oracles::split_partition(&g).is_some());
    }
}
