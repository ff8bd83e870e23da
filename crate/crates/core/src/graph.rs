//! Simple undirected graphs with dense vertex ids and the domination and
//! blocking-set predicates used by the degree-bounded connectivity reduction.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt::Write;

use crate::error::{Error, Result};

/// A finite simple undirected graph on vertices `0..n`.
///
/// Adjacency is stored twice: as sorted neighbour lists for iteration and as
/// a dense bit matrix for constant-time adjacency tests.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<u32>>,
    words: usize,
    matrix: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64).max(1);
        Graph { n, adj: vec![Vec::new(); n], words, matrix: vec![0; words * n] }
    }

    /// Builds a graph from an edge list. Duplicate edges are merged; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges(n: usize, edges: &[(u32, u32)]) -> Result<Self> {
        let mut g = Graph::empty(n);
        for &(u, v) in edges {
            if u as usize >= n || v as usize >= n {
                return Err(Error::InvalidInput(format!("edge ({u},{v}) out of range for n={n}")));
            }
            if u == v {
                return Err(Error::InvalidInput(format!("loop at vertex {u}")));
            }
            g.set(u, v);
            g.set(v, u);
        }
        for (v, list) in g.adj.iter_mut().enumerate() {
            let row = &g.matrix[v * g.words..(v + 1) * g.words];
            list.extend(crate::bits::iter(row).map(|x| x as u32));
        }
        Ok(g)
    }

    fn set(&mut self, u: u32, v: u32) {
        let idx = u as usize * self.words + v as usize / 64;
        self.matrix[idx] |= 1u64 << (v % 64);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    #[inline]
    pub fn neighbors(&self, v: u32) -> &[u32] {
        &self.adj[v as usize]
    }

    #[inline]
    pub fn degree(&self, v: u32) -> usize {
        self.adj[v as usize].len()
    }

    #[inline]
    pub fn adjacent(&self, u: u32, v: u32) -> bool {
        let idx = u as usize * self.words + v as usize / 64;
        self.matrix[idx] >> (v % 64) & 1 == 1
    }

    /// Neighbourhood of `v` as a bit row of `words()` words.
    #[inline]
    pub fn row(&self, v: u32) -> &[u64] {
        &self.matrix[v as usize * self.words..(v as usize + 1) * self.words]
    }

    pub fn words(&self) -> usize {
        self.words
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (u32, u32)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| v as usize > u).map(move |&v| (u as u32, v)))
    }

    pub fn contains(&self, v: u32) -> bool {
        (v as usize) < self.n
    }

    /// Subgraph induced by `keep`, with vertices renumbered in the order given.
    pub fn induced(&self, keep: &[u32]) -> Graph {
        let mut pos = vec![u32::MAX; self.n];
        for (i, &v) in keep.iter().enumerate() {
            pos[v as usize] = i as u32;
        }
        let edges: Vec<(u32, u32)> = self
            .edges()
            .filter(|&(u, v)| pos[u as usize] != u32::MAX && pos[v as usize] != u32::MAX)
            .map(|(u, v)| (pos[u as usize], pos[v as usize]))
            .collect();
        Graph::from_edges(keep.len(), &edges).expect("induced edges are in range")
    }

    /// Compact canonical JSON form `{"n":..,"edges":[[u,v],..]}`; this is the
    /// byte string hashed into artifact provenance digests.
    pub fn canonical_json(&self) -> String {
        let mut s = String::new();
        write!(s, "{{\"n\":{},\"edges\":[", self.n).unwrap();
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                s.push(',');
            }
            write!(s, "[{u},{v}]").unwrap();
        }
        s.push_str("]}");
        s
    }
}

/// A sorted, duplicate-free set of vertex ids.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct VertexSet(Vec<u32>);

impl VertexSet {
    pub fn new(members: impl IntoIterator<Item = u32>) -> Self {
        let mut v: Vec<u32> = members.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }

    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<u32> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: u32) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = u32> + '_ {
        self.0.iter().copied()
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.0.iter().all(|&v| other.contains(v))
    }

    /// Fails unless every member is a vertex of `g`.
    pub fn validate(&self, g: &Graph) -> Result<()> {
        match self.0.last() {
            Some(&v) if !g.contains(v) => {
                Err(Error::InvalidInput(format!("vertex {v} out of range for n={}", g.n())))
            }
            _ => Ok(()),
        }
    }
}

impl FromIterator<u32> for VertexSet {
    fn from_iter<I: IntoIterator<Item = u32>>(iter: I) -> Self {
        VertexSet::new(iter)
    }
}

impl From<Vec<u32>> for VertexSet {
    fn from(v: Vec<u32>) -> Self {
        VertexSet::new(v)
    }
}

pub fn is_independent(g: &Graph, s: &VertexSet) -> Result<bool> {
    s.validate(g)?;
    let m = s.as_slice();
    Ok(m.iter().enumerate().all(|(i, &u)| m[i + 1..].iter().all(|&v| !g.adjacent(u, v))))
}

pub fn is_dominating(g: &Graph, d: &VertexSet) -> Result<bool> {
    d.validate(g)?;
    let mut covered = vec![0u64; g.words()];
    for v in d.iter() {
        crate::bits::or_into(&mut covered, g.row(v));
        crate::bits::insert(&mut covered, v as usize);
    }
    Ok(crate::bits::count(&covered) == g.n())
}

/// Neighbours of `v` outside the closed neighbourhood of every other member of `s`.
pub fn private_neighbours(g: &Graph, s: &VertexSet, v: u32) -> Result<VertexSet> {
    s.validate(g)?;
    if !s.contains(v) {
        return Err(Error::InvalidInput(format!("vertex {v} is not a member of the set")));
    }
    Ok(g
        .neighbors(v)
        .iter()
        .copied()
        .filter(|&x| s.iter().filter(|&t| t != v).all(|t| t != x && !g.adjacent(t, x)))
        .collect())
}

/// True when no member of `s` has a private neighbour. The empty set is
/// vacuously blocking.
pub fn is_blocking(g: &Graph, s: &VertexSet) -> Result<bool> {
    s.validate(g)?;
    for v in s.iter() {
        if !private_neighbours(g, s, v)?.is_empty() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Smallest nonempty blocking set of size at most `m`, found by exhaustive
/// search in order of increasing size.
pub fn smallest_blocking_set_upto(g: &Graph, m: usize) -> Option<VertexSet> {
    let m = m.min(g.n());
    for size in 1..=m {
        let mut found = None;
        crate::combinatorics::for_each_combination(g.n(), size, |c| {
            let s = VertexSet(c.to_vec());
            if is_blocking(g, &s).unwrap_or(false) {
                found = Some(s);
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

/// Standard small graphs, handy in tests and generators.
pub mod families {
    use super::Graph;
    use alloc::vec::Vec;

    pub fn path(n: usize) -> Graph {
        let edges: Vec<(u32, u32)> = (1..n as u32).map(|v| (v - 1, v)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn cycle(n: usize) -> Graph {
        let mut edges: Vec<(u32, u32)> = (1..n as u32).map(|v| (v - 1, v)).collect();
        if n >= 3 {
            edges.push((n as u32 - 1, 0));
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n as u32 {
            for v in u + 1..n as u32 {
                edges.push((u, v));
            }
        }
        Graph::from_edges(n, &edges).unwrap()
    }

    /// Star with center 0 and leaves `1..=leaves`.
    pub fn star(leaves: usize) -> Graph {
        let edges: Vec<(u32, u32)> = (1..=leaves as u32).map(|v| (0, v)).collect();
        Graph::from_edges(leaves + 1, &edges).unwrap()
    }
}
