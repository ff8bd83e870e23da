use tsr_core::engine::{ts_connected, DEFAULT_BUDGET};
use tsr_core::graph::families;
use tsr_core::oracles::PartitionedGraph;
use tsr_core::reductions::{reduce_tsconn_degree, DegreeOptions, ReductionKind};
use tsr_core::{Error, Graph};
use tsr_harness::json::Source;
use tsr_harness::sweep::{instances, sweep, Family, InstanceSpec, Status};
use tsr_harness::verify::*;
use tsr_harness::HarnessError;

fn two_by_two(edges: &[(u32, u32)]) -> Source {
    let g = Graph::from_edges(4, edges).unwrap();
    Source::Partitioned(PartitionedGraph::new(g, vec![vec![0, 1], vec![2, 3]]).unwrap())
}

#[test]
fn polarity_table() {
    assert_eq!(polarity(ReductionKind::TsConnDegree), Polarity::Flip);
    assert_eq!(polarity(ReductionKind::TsConnLeafage), Polarity::Flip);
    assert_eq!(polarity(ReductionKind::TsReachDegree), Polarity::Preserve);
    assert_eq!(polarity(ReductionKind::TsReachLeafage), Polarity::Preserve);
}

#[test]
fn path_four_is_refused_but_its_reduction_is_disconnected() {
    let src = Source::Dominating { graph: families::path(4), k: 2 };
    let err = verify_lemma(ReductionKind::TsConnDegree, &src, &VerifyOptions::default()).unwrap_err();
    assert!(matches!(err, HarnessError::Core(Error::Precondition(_))));
    let a = reduce_tsconn_degree(&families::path(4), 2, DegreeOptions { blocking_check_limit: 0 }).unwrap();
    assert!(!ts_connected(&a.reduced, a.target_k, DEFAULT_BUDGET).unwrap().is_connected());
}

#[test]
fn leafage_conn_with_independent_set() {
    let r = verify_lemma(ReductionKind::TsConnLeafage, &two_by_two(&[(0, 2)]), &VerifyOptions::default()).unwrap();
    assert_eq!(r.source_verdict, "yes");
    assert_eq!(r.reduced_verdict, "disconnected");
    assert!(r.ok());
}

#[test]
fn leafage_reach_with_a_cross_edge() {
    let r = verify_lemma(ReductionKind::TsReachLeafage, &two_by_two(&[(0, 2)]), &VerifyOptions::default()).unwrap();
    assert_eq!(r.source_verdict, "yes");
    assert_eq!(r.reduced_verdict, "reachable");
    assert!(r.ok());
}

#[test]
fn timings_only_on_request() {
    let src = two_by_two(&[(0, 2)]);
    let quiet = verify_lemma(ReductionKind::TsConnLeafage, &src, &VerifyOptions::default()).unwrap();
    assert!(quiet.timings.is_none());
    let timed =
        verify_lemma(ReductionKind::TsConnLeafage, &src, &VerifyOptions { timings: true, ..Default::default() }).unwrap();
    assert!(timed.timings.is_some());
    assert_eq!(VerifyOptions { timings: false, ..Default::default() }.budget, DEFAULT_BUDGET);
}

#[test]
fn mismatched_source_kind() {
    let err = verify_lemma(ReductionKind::TsReachDegree, &two_by_two(&[]), &VerifyOptions::default()).unwrap_err();
    assert_eq!(err.exit_code(), 2);
}

#[test]
fn budget_surfaces() {
    let r = verify_lemma(
        ReductionKind::TsReachLeafage,
        &two_by_two(&[(0, 2)]),
        &VerifyOptions { budget: 50, timings: false },
    );
    assert!(matches!(r, Err(HarnessError::Core(Error::Budget { limit: 50, .. }))));
    assert_eq!(r.unwrap_err().exit_code(), 3);
}

#[test]
fn sweep_items_are_sorted_and_failures_bundled() {
    let spec = InstanceSpec { family: Family::ExhaustiveSmall, sizes: vec![2, 2], ..Default::default() };
    let r = sweep(ReductionKind::TsConnLeafage, &spec, &VerifyOptions::default()).unwrap();
    assert_eq!(r.instances, 16);
    assert!(r.items.windows(2).all(|w| w[0].digest <= w[1].digest));
    let bad = r.items.iter().filter(|i| i.status != Status::Agree).count();
    assert_eq!(bad, r.counterexamples.len());
    for b in &r.counterexamples {
        assert!(b.rerun.starts_with("tsr verify-lemma tsconn-leafage --input "));
        let again = verify_lemma(
            ReductionKind::TsConnLeafage,
            &Source::from_json(&b.source).unwrap(),
            &VerifyOptions::default(),
        )
        .unwrap();
        assert_eq!(again, b.report);
    }
}

#[test]
fn path_family_rejects_uncertified_sources() {
    let spec = InstanceSpec { family: Family::Path, sizes: vec![4, 5], ..Default::default() };
    let r = sweep(ReductionKind::TsConnDegree, &spec, &VerifyOptions::default()).unwrap();
    assert_eq!(r.rejected, 2);
    assert!(r.all_agree());
}

#[test]
fn split_random_family() {
    let spec = InstanceSpec { family: Family::SplitRandom, sizes: vec![3, 3], count: 30, seed: 4, ..Default::default() };
    assert_eq!(instances(ReductionKind::TsReachDegree, &spec).unwrap().len(), 30);
    let r = sweep(ReductionKind::TsReachDegree, &spec, &VerifyOptions::default()).unwrap();
    assert!(r.all_agree());
    assert_eq!(r.agreed, 30);
}

#[test]
fn unsupported_family() {
    let spec = InstanceSpec { family: Family::Cycle, sizes: vec![2, 2], ..Default::default() };
    assert!(instances(ReductionKind::TsConnLeafage, &spec).is_err());
}
