//! Multicolored independent set to token-sliding connectivity on chordal
//! graphs of bounded leafage.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use super::{
    add_class_vertices, add_parking_vertices, parking, source_json, split_tokens, Branch, ClaimResult, ModelBuilder,
    ReductionArtifact, ReductionKind, Role, RoleLabel, Witness,
};
use crate::combinatorics::for_each_tuple;
use crate::engine::{bfs, for_each_successor, Scratch};
use crate::error::{Error, Result};
use crate::oracles::PartitionedGraph;

pub(crate) fn partition_json(pg: &PartitionedGraph) -> String {
    let mut extra = format!(",\"k\":{},\"class_size\":{},\"classes\":[", pg.k, pg.n);
    for (i, c) in pg.classes.iter().enumerate() {
        if i > 0 {
            extra.push(',');
        }
        extra.push_str(&super::json_ids(c));
    }
    extra.push(']');
    source_json(&pg.graph, &extra)
}

/// Source edges as `(i, p, j, q)`, 1-based, with `i < j`.
pub(crate) fn class_edges(pg: &PartitionedGraph) -> Vec<(usize, usize, usize, usize)> {
    let mut out: Vec<_> = pg
        .graph
        .edges()
        .map(|(a, b)| {
            let (i, p) = pg.locate(a);
            let (j, q) = pg.locate(b);
            if i < j {
                (i + 1, p + 1, j + 1, q + 1)
            } else {
                (j + 1, q + 1, i + 1, p + 1)
            }
        })
        .collect();
    out.sort_unstable();
    out
}

pub fn reduce_tsconn_leafage(pg: &PartitionedGraph) -> Result<ReductionArtifact> {
    let pg = PartitionedGraph::new(pg.graph.clone(), pg.classes.clone())?;
    let (k, n) = (pg.k, pg.n);
    let mut b = ModelBuilder::new();
    let t0 = b.node(None, Some("t_0".into()));
    let branches: Vec<Branch> = (1..=k).map(|i| Branch::build(&mut b, t0, i, n)).collect();
    let park = parking(&mut b, t0, n * k, "t_p".into());

    add_parking_vertices(&mut b, &park, 1);
    let mut bstar = vec![t0, park[0]];
    bstar.extend(branches.iter().map(Branch::root));
    b.vertex(RoleLabel::new(Role::BStar, &[]), bstar);

    for i in 0..k {
        for j in 0..k {
            if i == j {
                continue;
            }
            let mut m = branches[i].span(0, 4 * n);
            m.push(t0);
            m.extend(branches[j].span(2 * n - 1, 2 * n + 1));
            b.vertex(RoleLabel::new(Role::Orange, &[i as u32 + 1, j as u32 + 1]), m);
        }
    }
    for (i, br) in branches.iter().enumerate() {
        add_class_vertices(&mut b, br, i as u32 + 1);
    }
    for (i, br) in branches.iter().enumerate() {
        for p in 1..n {
            b.vertex(RoleLabel::new(Role::Pink, &[i as u32 + 1, p as u32]), br.span(2 * p - 1, 2 * n + 2 * p + 1));
        }
    }
    for (i, p, j, q) in class_edges(&pg) {
        let (bi, bj) = (&branches[i - 1], &branches[j - 1]);
        let idx = |which: u32| [i as u32, p as u32, j as u32, q as u32, which];
        let mut h1 = bi.span(2 * p - 1, 2 * n + 2 * p);
        h1.extend(bj.span(2 * q + 1, 2 * n + 2 * q - 1));
        h1.extend([t0, bi.root(), bj.root()]);
        b.vertex(RoleLabel::new(Role::HType, &idx(1)), h1);
        let mut h2 = bj.span(2 * q - 1, 2 * n + 2 * q);
        h2.extend(bi.span(2 * p + 1, 2 * n + 2 * p - 1));
        h2.extend([t0, bi.root(), bj.root()]);
        b.vertex(RoleLabel::new(Role::HType, &idx(2)), h2);
    }

    let (reduced, model, labels) = b.finish()?;
    Ok(ReductionArtifact {
        kind: ReductionKind::TsConnLeafage,
        reduced,
        labels,
        witness: Witness::TreeModel(model),
        target_k: n * k,
        initial: None,
        final_: None,
        provenance: super::digest_hex(partition_json(&pg).as_bytes()),
        unchecked_precondition: false,
    })
}

fn class_of(a: &ReductionArtifact, v: u32) -> Option<u32> {
    let l = &a.labels[v as usize];
    matches!(l.role, Role::LeftInterval | Role::RightInterval | Role::Connector).then(|| l.idx[0])
}

fn splits_config(a: &ReductionArtifact, n: usize, splits: &[usize]) -> Vec<u32> {
    let mut c: Vec<u32> =
        splits.iter().enumerate().flat_map(|(i, &s)| split_tokens(a, i as u32 + 1, n, s)).collect();
    c.sort_unstable();
    c
}

/// Executable versions of the three gadget claims, checked on `a`.
pub fn conn_claims(pg: &PartitionedGraph, a: &ReductionArtifact, budget: u64) -> Result<Vec<ClaimResult>> {
    if a.kind != ReductionKind::TsConnLeafage {
        return Err(Error::InvalidInput("not a connectivity leafage artifact".into()));
    }
    let (k, n) = (pg.k, pg.n);
    let g = &a.reduced;
    let mut scratch = Scratch::new(g.n());

    // a full class never feeds a pink vertex
    let mut ntokens = ClaimResult::new("cl:ntokens");
    for_each_tuple(n + 1, k, |splits| {
        let c = splits_config(a, n, splits);
        let mut ok = true;
        for_each_successor(g, &c, None, &mut scratch, |s, _| {
            if a.labels[s.to as usize].role == Role::Pink {
                ok = false;
            }
        });
        ntokens.record(ok, &c);
        true
    });

    // fewer than n tokens drain to the far end of the parking path
    let mut lessthann = ClaimResult::new("cl:lessthann");
    let bstar = a.vertex(Role::BStar, &[]).expect("b*");
    let blues = a.vertices_of(Role::Blue);
    for i in 1..=k as u32 {
        let mut allowed = vec![false; g.n()];
        for v in 0..g.n() as u32 {
            let l = &a.labels[v as usize];
            allowed[v as usize] = class_of(a, v) == Some(i)
                || (l.role == Role::Pink && l.idx[0] == i)
                || matches!(l.role, Role::BStar | Role::Blue | Role::Green);
        }
        for left in 0..n {
            for right in 0..n - left {
                let mut start: Vec<u32> =
                    (1..=left).map(|p| a.vertex(Role::LeftInterval, &[i, p as u32]).unwrap()).collect();
                start.extend((n - right + 1..=n).map(|p| a.vertex(Role::RightInterval, &[i, p as u32]).unwrap()));
                start.sort_unstable();
                let mut goal: Vec<u32> = blues[blues.len() - start.len()..].to_vec();
                goal.sort_unstable();
                let (_, hit) = bfs(g, &start, Some(&allowed), budget, |s| s == goal.as_slice())?;
                lessthann.record(hit.is_some(), &start);
            }
        }
    }

    // an edge gadget opens exactly when the other class sits at the matching split
    let mut edge = ClaimResult::new("cl:edge");
    for (i, p, j, q) in class_edges(pg) {
        for (which, mover, own, other, want) in [(1u32, i, p, j, q), (2, j, q, i, p)] {
            let h = a.vertex(Role::HType, &[i as u32, p as u32, j as u32, q as u32, which]).expect("H vertex");
            let mut err = None;
            for_each_tuple(n, k, |t| {
                let splits: Vec<usize> = t.iter().map(|&s| s + 1).collect();
                if splits[mover - 1] != own {
                    return true;
                }
                let c = splits_config(a, n, &splits);
                let mut entered = None;
                for_each_successor(g, &c, None, &mut scratch, |s, next| {
                    if s.to == h && class_of(a, s.from) == Some(mover as u32) {
                        entered = Some(next.to_vec());
                    }
                });
                let onward = entered.as_ref().is_none_or(|next| {
                    let mut found = false;
                    for_each_successor(g, next, None, &mut scratch, |s, _| found |= s.from == h && s.to == bstar);
                    found
                });
                let expect = splits[other - 1] == want;
                edge.record(entered.is_some() == expect && onward, &c);
                if edge.checked > budget {
                    err = Some(Error::Budget { limit: budget, attempted: edge.checked });
                    return false;
                }
                true
            });
            if let Some(e) = err {
                return Err(e);
            }
        }
    }
    Ok(vec![ntokens, lessthann, edge])
}

