//! Exhaustive solvers for the source problems of the reductions.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use crate::combinatorics::{for_each_combination, for_each_tuple};
use crate::error::{Error, Result};
use crate::graph::{is_dominating, Graph, VertexSet};

/// A graph whose vertices are split into `k` classes of exactly `n` vertices.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct PartitionedGraph {
    pub graph: Graph,
    pub k: usize,
    pub n: usize,
    pub classes: Vec<Vec<u32>>,
}

impl PartitionedGraph {
    /// Checks that the classes partition the vertex set into `k` independent
    /// classes of `n` vertices each.
    pub fn new(graph: Graph, classes: Vec<Vec<u32>>) -> Result<Self> {
        let k = classes.len();
        let n = classes.first().map_or(0, Vec::len);
        if k == 0 || n == 0 {
            return Err(Error::InvalidInput("partition needs at least one nonempty class".into()));
        }
        let mut seen = vec![false; graph.n()];
        for (i, class) in classes.iter().enumerate() {
            if class.len() != n {
                return Err(Error::InvalidInput(format!("class {i} has {} vertices, expected {n}", class.len())));
            }
            for &v in class {
                if v as usize >= graph.n() || seen[v as usize] {
                    return Err(Error::InvalidInput(format!("vertex {v} out of range or repeated")));
                }
                seen[v as usize] = true;
            }
            for (a, &u) in class.iter().enumerate() {
                if class[a + 1..].iter().any(|&w| graph.adjacent(u, w)) {
                    return Err(Error::InvalidInput(format!("class {i} is not independent")));
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return Err(Error::InvalidInput("classes do not cover every vertex".into()));
        }
        Ok(PartitionedGraph { graph, k, n, classes })
    }

    /// Vertex in position `p` (0-based) of class `i`.
    pub fn vertex(&self, i: usize, p: usize) -> u32 {
        self.classes[i][p]
    }

    /// Class and position of `v`.
    pub fn locate(&self, v: u32) -> (usize, usize) {
        for (i, class) in self.classes.iter().enumerate() {
            if let Some(p) = class.iter().position(|&x| x == v) {
                return (i, p);
            }
        }
        unreachable!("partition covers every vertex")
    }

    pub fn every_class_has_edge(&self) -> bool {
        self.classes.iter().all(|c| c.iter().any(|&v| self.graph.degree(v) > 0))
    }
}

/// A dominating set of size at most `bound`, searched by increasing size.
pub fn min_dominating_set(g: &Graph, bound: usize) -> Option<VertexSet> {
    let bound = bound.min(g.n());
    for size in 0..=bound {
        let mut found = None;
        for_each_combination(g.n(), size, |c| {
            let d = VertexSet::new(c.iter().copied());
            if is_dominating(g, &d).unwrap_or(false) {
                found = Some(d);
                false
            } else {
                true
            }
        });
        if found.is_some() {
            return found;
        }
    }
    None
}

fn multicolored(pg: &PartitionedGraph, want_edges: bool) -> Option<VertexSet> {
    let mut found = None;
    for_each_tuple(pg.n, pg.k, |t| {
        let pick: Vec<u32> = t.iter().enumerate().map(|(i, &p)| pg.vertex(i, p)).collect();
        let ok = pick
            .iter()
            .enumerate()
            .all(|(a, &u)| pick[a + 1..].iter().all(|&v| pg.graph.adjacent(u, v) == want_edges));
        if ok {
            found = Some(VertexSet::new(pick));
        }
        !ok
    });
    found
}

/// One vertex per class, pairwise non-adjacent.
pub fn multicolored_independent_set(pg: &PartitionedGraph) -> Option<VertexSet> {
    multicolored(pg, false)
}

/// One vertex per class, pairwise adjacent. Every class must touch an edge.
pub fn multicolored_clique(pg: &PartitionedGraph) -> Result<Option<VertexSet>> {
    if !pg.every_class_has_edge() {
        return Err(Error::InvalidInput("some class has no incident edge".into()));
    }
    Ok(multicolored(pg, true))
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct SplitWitness {
    pub clique: VertexSet,
    pub independent: VertexSet,
}

/// Partition into a clique and an independent set, if `g` is split.
pub fn split_partition(g: &Graph) -> Option<SplitWitness> {
    let mut order: Vec<u32> = (0..g.n() as u32).collect();
    order.sort_by_key(|&v| (core::cmp::Reverse(g.degree(v)), v));
    let deg: Vec<usize> = order.iter().map(|&v| g.degree(v)).collect();
    let m = deg.iter().enumerate().take_while(|&(i, &d)| d >= i).count();
    let head: usize = deg[..m].iter().sum();
    let tail: usize = deg[m..].iter().sum();
    if head != m * m.saturating_sub(1) + tail {
        return None;
    }
    let clique = VertexSet::new(order[..m].iter().copied());
    let independent = VertexSet::new(order[m..].iter().copied());
    let c = clique.as_slice();
    let u = independent.as_slice();
    let clique_ok = c.iter().enumerate().all(|(a, &x)| c[a + 1..].iter().all(|&y| g.adjacent(x, y)));
    let indep_ok = u.iter().enumerate().all(|(a, &x)| u[a + 1..].iter().all(|&y| !g.adjacent(x, y)));
    (clique_ok && indep_ok).then_some(SplitWitness { clique, independent })
}
