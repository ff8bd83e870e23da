#![allow(dead_code)]

use std::collections::BTreeMap;

use proptest::prelude::*;
use tsr_core::chordal::{HostTree, TreeModel};
use tsr_core::graph::Graph;

pub fn graph_from_mask(n: usize, mask: &[bool]) -> Graph {
    let mut edges = Vec::new();
    let mut bit = 0;
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            if mask[bit] {
                edges.push((u, v));
            }
            bit += 1;
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

pub fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |m| graph_from_mask(n, &m))
    })
}

fn path_nodes(parent: &[usize], a: usize, b: usize) -> Vec<u32> {
    let up = |mut x: usize| {
        let mut v = vec![x];
        while x != 0 {
            x = parent[x];
            v.push(x);
        }
        v
    };
    let (pa, pb) = (up(a), up(b));
    let mut out: Vec<u32> = pa.iter().filter(|x| !pb.contains(x)).map(|&x| x as u32).collect();
    out.extend(pb.iter().filter(|x| !pa.contains(x)).map(|&x| x as u32));
    let lca = pa.iter().find(|x| pb.contains(x)).unwrap();
    out.push(*lca as u32);
    out
}

/// Random host tree plus connected subtrees, each the union of tree paths
/// from an anchor node.
pub fn arb_model() -> impl Strategy<Value = TreeModel> {
    (1usize..=9)
        .prop_flat_map(|h| {
            let parents = (1..h).map(|i| 0..i).collect::<Vec<_>>();
            let models = proptest::collection::vec((0..h, proptest::collection::vec(0..h, 0..3)), 1..=8);
            (Just(h), parents, models)
        })
        .prop_map(|(h, parents, models)| {
            let mut parent = vec![0usize];
            parent.extend(parents);
            let edges: Vec<(u32, u32)> = (1..h).map(|i| (parent[i] as u32, i as u32)).collect();
            let host = HostTree::new(h, edges, BTreeMap::new()).unwrap();
            let models = models
                .into_iter()
                .map(|(anchor, targets)| {
                    let mut m = vec![anchor as u32];
                    for t in targets {
                        m.extend(path_nodes(&parent, anchor, t));
                    }
                    m
                })
                .collect();
            TreeModel::new(host, models)
        })
}
