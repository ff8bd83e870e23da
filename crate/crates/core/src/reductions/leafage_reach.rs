//! Multicolored clique to token-sliding reachability on chordal graphs of
//! bounded leafage.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use super::leafage_conn::{class_edges, partition_json};
use super::{
    add_class_vertices, add_parking_vertices, parking, split_tokens, Branch, ClaimResult, ModelBuilder,
    ReductionArtifact, ReductionKind, Role, RoleLabel, Witness,
};
use crate::engine::{bfs, for_each_successor, Scratch, TokenConfig};
use crate::error::{Error, Result};
use crate::oracles::PartitionedGraph;

pub fn reduce_tsreach_leafage(pg: &PartitionedGraph) -> Result<ReductionArtifact> {
    let pg = PartitionedGraph::new(pg.graph.clone(), pg.classes.clone())?;
    if !pg.every_class_has_edge() {
        return Err(Error::InvalidInput("some class has no incident edge".into()));
    }
    let (k, n) = (pg.k, pg.n);
    if k < 2 {
        return Err(Error::Parameter(format!("k = {k}, the reduction needs k >= 2")));
    }
    let pairs: Vec<(usize, usize)> = (1..=k).flat_map(|i| (i + 1..=k).map(move |j| (i, j))).collect();
    let kk = pairs.len();

    let mut b = ModelBuilder::new();
    let t0 = b.node(None, Some("t_0".into()));
    let branches: Vec<Branch> = (1..=k).map(|i| Branch::build(&mut b, t0, i, n)).collect();
    let park_i = parking(&mut b, t0, n * k, "t_P^I".into());
    let park_j = parking(&mut b, t0, n * k, "t_P^J".into());
    let mut l_i = Vec::with_capacity(kk);
    let mut t_i = Vec::with_capacity(kk);
    let mut l_j = Vec::with_capacity(kk);
    let mut t_j = Vec::with_capacity(kk);
    for x in 1..=kk {
        let l = b.node(Some(t0), Some(format!("l^I_{x}")));
        l_i.push(l);
        t_i.push(b.node(Some(l), Some(format!("t^I_{x}"))));
    }
    for x in 1..=kk {
        let l = b.node(Some(t0), Some(format!("l^J_{x}")));
        l_j.push(l);
        t_j.push(b.node(Some(l), Some(format!("t^J_{x}"))));
    }
    let mut l_k = Vec::with_capacity(kk);
    let mut t_k = Vec::with_capacity(kk);
    for &(i, j) in &pairs {
        let l = b.node(Some(t0), Some(format!("l^K_{i}{j}")));
        l_k.push(l);
        t_k.push(b.node(Some(l), Some(format!("t^K_{i}{j}"))));
    }

    let blues_i = add_parking_vertices(&mut b, &park_i, 1);
    let blues_j = add_parking_vertices(&mut b, &park_j, 2);
    let mut bstar = vec![t0, park_i[0], park_j[0]];
    bstar.extend(branches.iter().map(Branch::root));
    b.vertex(RoleLabel::new(Role::BStar, &[]), bstar);

    let mut choke = vec![t0];
    choke.extend(&park_i);
    choke.extend(&park_j);
    choke.extend(&l_j);
    for x in 0..kk {
        let mut m = choke.clone();
        m.push(l_i[x]);
        m.extend(&l_k);
        b.vertex(RoleLabel::new(Role::Orange, &[x as u32 + 1]), m);
    }
    b.vertex(RoleLabel::new(Role::Choke, &[1]), choke);

    for (i, br) in branches.iter().enumerate() {
        add_class_vertices(&mut b, br, i as u32 + 1);
    }
    for (i, p, j, q) in class_edges(&pg) {
        let pair = pairs.iter().position(|&x| x == (i, j)).expect("pair index");
        let mut m = branches[i - 1].span(2 * p, 2 * n + 2 * p);
        m.extend(branches[j - 1].span(2 * q, 2 * n + 2 * q));
        m.extend([t0, l_k[pair]]);
        b.vertex(RoleLabel::new(Role::RedH, &[i as u32, p as u32, j as u32, q as u32]), m);
    }

    let mut initial = Vec::with_capacity(n * k + kk);
    let mut final_ = Vec::with_capacity(n * k + kk);
    for x in 0..kk {
        initial.push(b.vertex(RoleLabel::new(Role::IIndex, &[x as u32 + 1]), vec![t_i[x], l_i[x]]));
    }
    for x in 0..kk {
        final_.push(b.vertex(RoleLabel::new(Role::JIndex, &[x as u32 + 1]), vec![t_j[x], l_j[x]]));
    }
    for (pair, &(i, j)) in pairs.iter().enumerate() {
        b.vertex(RoleLabel::new(Role::KIndex, &[i as u32, j as u32]), vec![t_k[pair], l_k[pair]]);
    }
    for (pair, &(i, j)) in pairs.iter().enumerate() {
        for x in 0..kk {
            b.vertex(
                RoleLabel::new(Role::CijConnector, &[i as u32, j as u32, x as u32 + 1]),
                vec![l_k[pair], t0, l_j[x]],
            );
        }
    }
    initial.extend(&blues_i);
    final_.extend(&blues_j);

    let (reduced, model, labels) = b.finish()?;
    let initial = TokenConfig::new(&reduced, initial)?;
    let final_ = TokenConfig::new(&reduced, final_)?;
    Ok(ReductionArtifact {
        kind: ReductionKind::TsReachLeafage,
        reduced,
        labels,
        witness: Witness::TreeModel(model),
        target_k: n * k + kk,
        initial: Some(initial),
        final_: Some(final_),
        provenance: super::digest_hex(partition_json(&pg).as_bytes()),
        unchecked_precondition: false,
    })
}

/// Positions of red vertex `r` as seen from class `i`: its index there, if it touches `T_i`.
fn red_side(a: &ReductionArtifact, r: u32, i: u32) -> Option<usize> {
    let idx = &a.labels[r as usize].idx;
    if idx[0] == i {
        Some(idx[1] as usize)
    } else if idx[2] == i {
        Some(idx[3] as usize)
    } else {
        None
    }
}

/// Executable versions of the three gadget claims, checked on `a`.
pub fn reach_claims(pg: &PartitionedGraph, a: &ReductionArtifact, budget: u64) -> Result<Vec<ClaimResult>> {
    if a.kind != ReductionKind::TsReachLeafage {
        return Err(Error::InvalidInput("not a reachability leafage artifact".into()));
    }
    let (k, n) = (pg.k, pg.n);
    let g = &a.reduced;
    let mut scratch = Scratch::new(g.n());
    let reds = a.vertices_of(Role::RedH);
    let bstar = a.vertex(Role::BStar, &[]).expect("b*");

    // index tokens stay put while parking or K-index tokens exist
    let mut choke = ClaimResult::new("cl:choke1");
    let start = a.initial.as_ref().expect("initial configuration");
    let (search, _) = bfs(g, start.tokens(), None, budget, |_| false)?;
    for idx in 0..search.store.len() as u32 {
        let c = search.store.get(idx);
        let guarded = c.iter().any(|&v| {
            let l = &a.labels[v as usize];
            matches!(l.role, Role::Blue | Role::Green | Role::KIndex)
        });
        if !guarded {
            continue;
        }
        let mut ok = true;
        for_each_successor(g, c, None, &mut scratch, |s, _| {
            if a.labels[s.from as usize].role == Role::IIndex {
                ok = false;
            }
        });
        choke.record(ok, c);
    }

    // n + 1 tokens on a branch block every red vertex touching it
    let mut atmost = ClaimResult::new("cl:atmostn+1tokens");
    for i in 1..=k as u32 {
        for p in 1..=n {
            let mut c: Vec<u32> =
                (1..=p).map(|x| a.vertex(Role::LeftInterval, &[i, x as u32]).unwrap()).collect();
            c.extend((p..=n).map(|x| a.vertex(Role::RightInterval, &[i, x as u32]).unwrap()));
            c.sort_unstable();
            let ok = reds
                .iter()
                .filter(|&&r| red_side(a, r, i).is_some())
                .all(|&r| c.iter().any(|&t| g.adjacent(t, r)));
            atmost.record(ok, &c);
        }
    }

    // with n tokens at split s, a red vertex is free on T_i iff it encodes s
    let mut usable = ClaimResult::new("cl:usable");
    for i in 1..=k as u32 {
        for s in 1..=n {
            let mut c = split_tokens(a, i, n, s);
            c.sort_unstable();
            for &r in &reds {
                let Some(q) = red_side(a, r, i) else { continue };
                let free = c.iter().all(|&t| !g.adjacent(t, r));
                let mut with_b = c.clone();
                with_b.push(bstar);
                with_b.sort_unstable();
                let mut enters = false;
                for_each_successor(g, &with_b, None, &mut scratch, |sl, _| enters |= sl.from == bstar && sl.to == r);
                usable.record(free == (s == q) && enters == (s == q), &c);
            }
        }
    }
    Ok(vec![choke, atmost, usable])
}
