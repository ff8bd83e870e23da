//! Seeded and exhaustive instance generators.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use tsr_core::engine::{for_each_independent_set, TokenConfig};
use tsr_core::graph::smallest_blocking_set_upto;
use tsr_core::oracles::PartitionedGraph;
use tsr_core::Graph;

use crate::error::{HResult, HarnessError};

pub const MAX_ATTEMPTS: usize = 20_000;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn gnp(n: usize, p: f64, rng: &mut impl Rng) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n as u32 {
        for v in u + 1..n as u32 {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).expect("valid edges")
}

/// G(n, 1/2) samples rejected until no blocking set of size at most 2k-1 exists.
pub fn gen_nonblocking_instance(n: usize, k: usize, seed: u64) -> HResult<Graph> {
    if k < 2 {
        return Err(HarnessError::Generation(format!("k = {k} is below 2")));
    }
    let mut r = rng(seed);
    for _ in 0..MAX_ATTEMPTS {
        let g = gnp(n, 0.5, &mut r);
        if smallest_blocking_set_upto(&g, 2 * k - 1).is_none() {
            return Ok(g);
        }
    }
    Err(HarnessError::Generation(format!("no certified graph on {n} vertices for k = {k} after {MAX_ATTEMPTS} attempts")))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Variant {
    Is,
    Clique,
}

fn class_lists(k: usize, n: usize) -> Vec<Vec<u32>> {
    (0..k).map(|i| (0..n).map(|p| (i * n + p) as u32).collect()).collect()
}

fn cross_pairs(k: usize, n: usize) -> Vec<(u32, u32)> {
    let mut out = Vec::new();
    for i in 0..k {
        for j in i + 1..k {
            for p in 0..n {
                for q in 0..n {
                    out.push(((i * n + p) as u32, (j * n + q) as u32));
                }
            }
        }
    }
    out
}

/// Classes `V_i = {i*n, .., i*n+n-1}`; cross edges kept with probability
/// `density`. The clique variant then patches every class without an
/// incident edge.
pub fn gen_partitioned(k: usize, n: usize, density: f64, seed: u64, variant: Variant) -> HResult<PartitionedGraph> {
    if k == 0 || n == 0 {
        return Err(HarnessError::Generation("k and n must be positive".into()));
    }
    if variant == Variant::Clique && k < 2 {
        return Err(HarnessError::Generation("clique variant needs two classes".into()));
    }
    let mut r = rng(seed);
    let pairs = cross_pairs(k, n);
    let mut edges: Vec<(u32, u32)> = pairs.iter().copied().filter(|_| r.gen_bool(density.clamp(0.0, 1.0))).collect();
    if variant == Variant::Clique {
        for i in 0..k {
            let lo = (i * n) as u32;
            let hi = lo + n as u32;
            let touched = edges.iter().any(|&(a, b)| (lo..hi).contains(&a) || (lo..hi).contains(&b));
            if !touched {
                let candidates: Vec<_> =
                    pairs.iter().filter(|&&(a, b)| (lo..hi).contains(&a) || (lo..hi).contains(&b)).collect();
                edges.push(**candidates.choose(&mut r).expect("k >= 2"));
            }
        }
        edges.sort_unstable();
    }
    let g = Graph::from_edges(k * n, &edges)?;
    Ok(PartitionedGraph::new(g, class_lists(k, n))?)
}

/// Every cross-edge pattern for `k` classes of size `n`, in mask order.
pub fn all_partitioned(k: usize, n: usize, variant: Variant) -> HResult<Vec<PartitionedGraph>> {
    let pairs = cross_pairs(k, n);
    if pairs.len() > 20 {
        return Err(HarnessError::Generation(format!("{} cross pairs is too many to enumerate", pairs.len())));
    }
    let mut out = Vec::new();
    for mask in 0u32..1 << pairs.len() {
        let edges: Vec<_> = (0..pairs.len()).filter(|b| mask >> b & 1 == 1).map(|b| pairs[b]).collect();
        let pg = PartitionedGraph::new(Graph::from_edges(k * n, &edges)?, class_lists(k, n))?;
        if variant == Variant::Is || pg.every_class_has_edge() {
            out.push(pg);
        }
    }
    Ok(out)
}

/// Split graph: clique on `0..p`, independent set `p..p+q`, each clique to
/// independent edge kept with probability `density`.
pub fn gen_split(p: usize, q: usize, density: f64, rng: &mut impl Rng) -> Graph {
    let mut edges = Vec::new();
    for a in 0..p as u32 {
        for b in a + 1..p as u32 {
            edges.push((a, b));
        }
        for b in p as u32..(p + q) as u32 {
            if rng.gen_bool(density.clamp(0.0, 1.0)) {
                edges.push((a, b));
            }
        }
    }
    Graph::from_edges(p + q, &edges).expect("valid edges")
}

/// All split graphs with the fixed clique `0..p` and independent part `p..p+q`.
pub fn all_split_graphs(p: usize, q: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    let bits = p * q;
    for mask in 0u64..1 << bits {
        let mut edges = Vec::new();
        for a in 0..p {
            for b in a + 1..p {
                edges.push((a as u32, b as u32));
            }
            for b in 0..q {
                if mask >> (a * q + b) & 1 == 1 {
                    edges.push((a as u32, (p + b) as u32));
                }
            }
        }
        out.push(Graph::from_edges(p + q, &edges).expect("valid edges"));
    }
    out
}

/// All graphs on `n` labelled vertices.
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(u32, u32)> = (0..n as u32).flat_map(|u| (u + 1..n as u32).map(move |v| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<_> = (0..pairs.len()).filter(|b| mask >> b & 1 == 1).map(|b| pairs[b]).collect();
        Graph::from_edges(n, &edges).expect("valid edges")
    })
}

pub fn independent_sets(g: &Graph, k: usize) -> Vec<TokenConfig> {
    let mut out = Vec::new();
    for_each_independent_set(g, k, |s| {
        out.push(TokenConfig::new(g, s.iter().copied()).expect("independent"));
        true
    });
    out
}

/// A uniformly chosen `k`-independent set, if any.
pub fn random_independent_set(g: &Graph, k: usize, rng: &mut impl Rng) -> Option<TokenConfig> {
    independent_sets(g, k).choose(rng).cloned()
}
