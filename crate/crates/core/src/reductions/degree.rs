//! Reductions producing chordal graphs of bounded clique-tree degree.

use alloc::format;
use alloc::vec::Vec;

use super::{json_ids, source_json, ReductionArtifact, ReductionKind, Role, RoleLabel, Witness};
use crate::chordal::CliqueTree;
use crate::engine::TokenConfig;
use crate::error::{Error, Result};
use crate::graph::{smallest_blocking_set_upto, Graph, VertexSet};
use crate::oracles::split_partition;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct DegreeOptions {
    /// Largest source order for which the blocking-set promise is verified
    /// exhaustively; larger sources are trusted and flagged.
    pub blocking_check_limit: usize,
}

impl Default for DegreeOptions {
    fn default() -> Self {
        DegreeOptions { blocking_check_limit: 20 }
    }
}

/// Dominating set instance `(g, k)` to a connectivity instance with `k + 1` tokens.
pub fn reduce_tsconn_degree(g: &Graph, k: usize, opts: DegreeOptions) -> Result<ReductionArtifact> {
    if k < 2 {
        return Err(Error::Parameter(format!("k = {k}, the reduction needs k >= 2")));
    }
    let n = g.n();
    let mut unchecked = false;
    if n <= opts.blocking_check_limit {
        if let Some(b) = smallest_blocking_set_upto(g, 2 * k - 1) {
            return Err(Error::Precondition(format!("blocking set {:?} of size <= {}", b.as_slice(), 2 * k - 1)));
        }
    } else {
        unchecked = true;
    }
    let nc = n + k + 1;
    let nw = n + k + 2;
    let c = |i: usize| (i - 1) as u32;
    let w = |i: usize| (nc + i - 1) as u32;
    let x = |i: usize| (nc + nw + i - 1) as u32;
    let y = |i: usize| (nc + 2 * nw + i - 1) as u32;
    let total = nc + 3 * nw;

    let mut edges = Vec::new();
    for i in 1..=nc {
        for j in i + 1..=nc {
            edges.push((c(i), c(j)));
        }
    }
    for (a, b) in g.edges() {
        let (i, j) = (a as usize + 1, b as usize + 1);
        edges.push((c(i), w(j)));
        edges.push((c(j), w(i)));
    }
    for i in 1..=nc {
        edges.push((c(i), w(i)));
    }
    for i in 1..=n {
        edges.push((c(i), w(nw)));
    }
    for i in 1..=nw {
        edges.push((x(i), y(i)));
        for j in 1..=nc {
            edges.push((x(i), c(j)));
        }
    }
    let reduced = Graph::from_edges(total, &edges)?;

    let mut labels = Vec::with_capacity(total);
    labels.extend((1..=nc).map(|i| RoleLabel::new(Role::C, &[i as u32])));
    for role in [Role::W, Role::X, Role::Y] {
        labels.extend((1..=nw).map(|i| RoleLabel::new(role, &[i as u32])));
    }

    let clique: Vec<u32> = (1..=nc).map(c).collect();
    let mut bags = Vec::with_capacity(3 * nw);
    for i in 1..=nw {
        bags.push(VertexSet::new(clique.iter().copied().chain([x(i)])));
    }
    for i in 1..=nw {
        bags.push(VertexSet::new(reduced.neighbors(w(i)).iter().copied().chain([w(i)])));
    }
    for i in 1..=nw {
        bags.push(VertexSet::new([x(i), y(i)]));
    }
    let ui = |i: usize| (i - 1) as u32;
    let mut tree_edges = Vec::new();
    for i in 1..nw {
        tree_edges.push((ui(i), ui(i + 1)));
    }
    for i in 1..=nw {
        tree_edges.push((ui(i), (nw + i - 1) as u32));
        tree_edges.push((ui(i), (2 * nw + i - 1) as u32));
    }

    Ok(ReductionArtifact {
        kind: ReductionKind::TsConnDegree,
        reduced,
        labels,
        witness: Witness::CliqueTree(CliqueTree { bags, edges: tree_edges }),
        target_k: k + 1,
        initial: None,
        final_: None,
        provenance: super::digest_hex(source_json(g, &format!(",\"k\":{k}")).as_bytes()),
        unchecked_precondition: unchecked,
    })
}

/// The configuration `{w_i : v_i in D} ∪ {w_{n+k+2}}`, with `D` padded by the
/// smallest unused source vertices up to size `k`.
pub fn frozen_witness(a: &ReductionArtifact, source_n: usize, k: usize, d: &VertexSet) -> Result<TokenConfig> {
    if d.len() > k || source_n < k {
        return Err(Error::Parameter(format!("cannot pad a set of size {} to {k} in {source_n} vertices", d.len())));
    }
    let mut picks: Vec<u32> = d.as_slice().to_vec();
    for v in 0..source_n as u32 {
        if picks.len() == k {
            break;
        }
        if !d.contains(v) {
            picks.push(v);
        }
    }
    let w = |i: u32| a.vertex(Role::W, &[i]).ok_or_else(|| Error::InvalidInput("artifact has no W family".into()));
    let mut tokens = Vec::with_capacity(k + 1);
    for v in picks {
        tokens.push(w(v + 1)?);
    }
    tokens.push(w((source_n + k + 2) as u32)?);
    TokenConfig::new(&a.reduced, tokens)
}

/// Reachability on a split graph to reachability on a split graph of
/// clique-tree degree at most three.
pub fn reduce_tsreach_degree(g: &Graph, i0: &TokenConfig, j0: &TokenConfig) -> Result<ReductionArtifact> {
    let split = split_partition(g).ok_or_else(|| Error::InvalidInput("source graph is not split".into()))?;
    let i0 = TokenConfig::new(g, i0.tokens().iter().copied())?;
    let j0 = TokenConfig::new(g, j0.tokens().iter().copied())?;
    if i0.len() != j0.len() {
        return Err(Error::InvalidInput(format!("configurations differ in size: {} vs {}", i0.len(), j0.len())));
    }
    let cs = split.clique.as_slice();
    let us = split.independent.as_slice();
    let (p, q) = (cs.len(), us.len());
    let d = |i: usize| i as u32;
    let w = |j: usize| (p + j) as u32;
    let s = |j: usize| (p + q + j) as u32;
    let mut phi = alloc::vec![0u32; g.n()];
    for (i, &v) in cs.iter().enumerate() {
        phi[v as usize] = d(i);
    }
    for (j, &v) in us.iter().enumerate() {
        phi[v as usize] = w(j);
    }

    let mut edges = Vec::new();
    for a in 0..p {
        for b in a + 1..p {
            edges.push((d(a), d(b)));
        }
    }
    for (i, &cv) in cs.iter().enumerate() {
        for (j, &uv) in us.iter().enumerate() {
            if g.adjacent(cv, uv) {
                edges.push((d(i), w(j)));
            }
        }
    }
    for j in 0..q {
        for i in 0..p {
            edges.push((s(j), d(i)));
        }
    }
    let reduced = Graph::from_edges(p + 2 * q, &edges)?;

    let mut labels = Vec::with_capacity(p + 2 * q);
    labels.extend((1..=p).map(|i| RoleLabel::new(Role::CPrime, &[i as u32])));
    labels.extend((1..=q).map(|j| RoleLabel::new(Role::W, &[j as u32])));
    labels.extend((1..=q).map(|j| RoleLabel::new(Role::S, &[j as u32])));

    let clique: Vec<u32> = (0..p).map(d).collect();
    let (bags, tree_edges) = if q == 0 {
        let bags = if p == 0 { Vec::new() } else { alloc::vec![VertexSet::new(clique)] };
        (bags, Vec::new())
    } else {
        let mut bags = Vec::with_capacity(2 * q);
        for j in 0..q {
            bags.push(VertexSet::new(clique.iter().copied().chain([s(j)])));
        }
        for j in 0..q {
            bags.push(VertexSet::new(reduced.neighbors(w(j)).iter().copied().chain([w(j)])));
        }
        let mut te = Vec::new();
        for j in 0..q as u32 {
            if j + 1 < q as u32 {
                te.push((j, j + 1));
            }
            te.push((j, q as u32 + j));
        }
        (bags, te)
    };

    let map = |c: &TokenConfig| TokenConfig::new(&reduced, c.tokens().iter().map(|&v| phi[v as usize]));
    let initial = map(&i0)?;
    let final_ = map(&j0)?;
    let source = source_json(g, &format!(",\"initial\":{},\"final\":{}", json_ids(i0.tokens()), json_ids(j0.tokens())));
    Ok(ReductionArtifact {
        kind: ReductionKind::TsReachDegree,
        labels,
        witness: Witness::CliqueTree(CliqueTree { bags, edges: tree_edges }),
        target_k: i0.len(),
        initial: Some(initial),
        final_: Some(final_),
        reduced,
        provenance: super::digest_hex(source.as_bytes()),
        unchecked_precondition: false,
    })
}
