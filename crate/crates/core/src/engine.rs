//! Exact token-sliding search over canonical `k`-independent sets.
//!
//! States are sorted token lists kept in a flat arena; the reconfiguration
//! graph is never materialized, successors are recomputed on demand.

use alloc::collections::VecDeque;
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::hash::BuildHasher;

use hashbrown::hash_table::{Entry, HashTable};
use hashbrown::DefaultHashBuilder;

use crate::error::{Error, Result};
use crate::graph::{is_independent, Graph, VertexSet};

/// Default ceiling on the number of configurations a single search may touch.
pub const DEFAULT_BUDGET: u64 = 5_000_000;

/// A canonical (sorted) independent set of tokens.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct TokenConfig(Vec<u32>);

impl TokenConfig {
    /// Validates that `tokens` is an independent set of `g` without repeats.
    pub fn new(g: &Graph, tokens: impl IntoIterator<Item = u32>) -> Result<Self> {
        let raw: Vec<u32> = tokens.into_iter().collect();
        let set = VertexSet::new(raw.iter().copied());
        if set.len() != raw.len() {
            return Err(Error::InvalidInput("repeated token position".into()));
        }
        if !is_independent(g, &set)? {
            return Err(Error::InvalidInput(format!("tokens {:?} are not independent", set.as_slice())));
        }
        Ok(TokenConfig(set.into_vec()))
    }

    pub fn tokens(&self) -> &[u32] {
        &self.0
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
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub struct Slide {
    pub from: u32,
    pub to: u32,
}

/// A start configuration and the slides applied to it in order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct MoveSeq {
    pub start: TokenConfig,
    pub slides: Vec<Slide>,
}

impl MoveSeq {
    /// Applies every slide, checking each intermediate configuration, and
    /// returns the final one.
    pub fn replay(&self, g: &Graph) -> Result<TokenConfig> {
        let mut cur = TokenConfig::new(g, self.start.0.iter().copied())?;
        for (step, s) in self.slides.iter().enumerate() {
            if !cur.contains(s.from) || cur.contains(s.to) || !g.adjacent(s.from, s.to) {
                return Err(Error::InvalidInput(format!("step {step}: illegal slide {}->{}", s.from, s.to)));
            }
            let next = cur.0.iter().map(|&t| if t == s.from { s.to } else { t });
            cur = TokenConfig::new(g, next)
                .map_err(|_| Error::InvalidInput(format!("step {step}: slide {}->{} breaks independence", s.from, s.to)))?;
        }
        Ok(cur)
    }
}

/// Outcome of a connectivity query.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Connectivity {
    Connected,
    /// Two configurations lying in different components.
    Disconnected(TokenConfig, TokenConfig),
    /// No independent set of the requested size exists.
    Empty,
}

impl Connectivity {
    pub fn is_connected(&self) -> bool {
        matches!(self, Connectivity::Connected)
    }
}

/// Flat arena of equal-length sorted token lists with hash lookup.
pub(crate) struct StateStore {
    k: usize,
    arena: Vec<u32>,
    table: HashTable<u32>,
    hasher: DefaultHashBuilder,
    len: usize,
}

impl StateStore {
    pub(crate) fn new(k: usize) -> Self {
        StateStore { k, arena: Vec::new(), table: HashTable::new(), hasher: DefaultHashBuilder::default(), len: 0 }
    }

    pub(crate) fn len(&self) -> usize {
        self.len
    }

    pub(crate) fn get(&self, idx: u32) -> &[u32] {
        let at = idx as usize * self.k;
        &self.arena[at..at + self.k]
    }

    pub(crate) fn find(&self, state: &[u32]) -> Option<u32> {
        let h = self.hasher.hash_one(state);
        let (arena, k) = (&self.arena, self.k);
        self.table.find(h, |&i| &arena[i as usize * k..i as usize * k + k] == state).copied()
    }

    /// Returns the index of `state` and whether it was newly inserted.
    pub(crate) fn insert(&mut self, state: &[u32]) -> (u32, bool) {
        let h = self.hasher.hash_one(state);
        let (arena, k, hasher) = (&self.arena, self.k, &self.hasher);
        match self.table.entry(
            h,
            |&i| &arena[i as usize * k..i as usize * k + k] == state,
            |&i| hasher.hash_one(&arena[i as usize * k..i as usize * k + k]),
        ) {
            Entry::Occupied(e) => (*e.get(), false),
            Entry::Vacant(e) => {
                let idx = self.len as u32;
                e.insert(idx);
                self.arena.extend_from_slice(state);
                self.len += 1;
                (idx, true)
            }
        }
    }
}

/// Reusable buffers for successor generation.
pub(crate) struct Scratch {
    blockers: Vec<u32>,
    occupied: Vec<bool>,
    next: Vec<u32>,
}

impl Scratch {
    pub(crate) fn new(n: usize) -> Self {
        Scratch { blockers: vec![0; n], occupied: vec![false; n], next: Vec::new() }
    }
}

/// Calls `f(slide, successor)` for every legal single slide from `config`,
/// optionally restricted to destinations with `allowed[v]`.
pub(crate) fn for_each_successor(
    g: &Graph,
    config: &[u32],
    allowed: Option<&[bool]>,
    scratch: &mut Scratch,
    mut f: impl FnMut(Slide, &[u32]),
) {
    for &t in config {
        scratch.occupied[t as usize] = true;
        for &w in g.neighbors(t) {
            scratch.blockers[w as usize] += 1;
        }
    }
    for (ti, &t) in config.iter().enumerate() {
        for &w in g.neighbors(t) {
            let wi = w as usize;
            // w is adjacent to t itself, so it must see no other token
            if scratch.occupied[wi] || scratch.blockers[wi] != 1 {
                continue;
            }
            if allowed.is_some_and(|a| !a[wi]) {
                continue;
            }
            scratch.next.clear();
            scratch.next.extend_from_slice(&config[..ti]);
            scratch.next.extend_from_slice(&config[ti + 1..]);
            let at = scratch.next.partition_point(|&x| x < w);
            scratch.next.insert(at, w);
            f(Slide { from: t, to: w }, &scratch.next);
        }
    }
    for &t in config {
        scratch.occupied[t as usize] = false;
        for &w in g.neighbors(t) {
            scratch.blockers[w as usize] = 0;
        }
    }
}

pub fn successors(g: &Graph, c: &TokenConfig) -> Vec<TokenConfig> {
    let mut out = Vec::new();
    let mut scratch = Scratch::new(g.n());
    for_each_successor(g, &c.0, None, &mut scratch, |_, next| out.push(TokenConfig(next.to_vec())));
    out
}

pub fn is_frozen(g: &Graph, c: &TokenConfig) -> bool {
    let mut scratch = Scratch::new(g.n());
    let mut any = false;
    for_each_successor(g, &c.0, None, &mut scratch, |_, _| any = true);
    !any
}

/// Visits every independent set of size `k` in lexicographic order until `f`
/// returns `false`.
pub fn for_each_independent_set(g: &Graph, k: usize, mut f: impl FnMut(&[u32]) -> bool) {
    let words = g.words();
    let mut all = vec![0u64; words];
    for v in 0..g.n() {
        crate::bits::insert(&mut all, v);
    }
    let mut pool: Vec<Vec<u64>> = vec![vec![0; words]; k];
    let mut chosen = Vec::with_capacity(k);
    enumerate(g, k, &all, &mut pool, &mut chosen, &mut f);
}

fn enumerate(
    g: &Graph,
    k: usize,
    cand: &[u64],
    pool: &mut [Vec<u64>],
    chosen: &mut Vec<u32>,
    f: &mut dyn FnMut(&[u32]) -> bool,
) -> bool {
    let depth = chosen.len();
    if depth == k {
        return f(chosen);
    }
    let need = k - depth;
    let members: Vec<usize> = crate::bits::iter(cand).collect();
    if members.len() < need {
        return true;
    }
    let Some((next, rest)) = pool.split_first_mut() else { return true };
    for (pos, &v) in members.iter().enumerate() {
        if members.len() - pos < need {
            break;
        }
        let row = g.row(v as u32);
        for (wi, w) in next.iter_mut().enumerate() {
            let lo = wi * 64;
            let mut keep = cand[wi] & !row[wi];
            if lo + 64 <= v + 1 {
                keep = 0;
            } else if lo <= v {
                keep &= !0u64 << (v + 1 - lo);
            }
            *w = keep;
        }
        chosen.push(v as u32);
        let go_on = enumerate(g, k, next, rest, chosen, f);
        chosen.pop();
        if !go_on {
            return false;
        }
    }
    true
}

/// Number of independent sets of size `k`, or `limit + 1` if there are more
/// than `limit`.
pub fn count_independent_sets_upto(g: &Graph, k: usize, limit: u64) -> u64 {
    let mut c = 0u64;
    for_each_independent_set(g, k, |_| {
        c += 1;
        c <= limit
    });
    c
}

pub fn count_k_independent_sets(g: &Graph, k: usize) -> u64 {
    count_independent_sets_upto(g, k, u64::MAX - 1)
}

fn over_budget(limit: u64, attempted: u64) -> Error {
    Error::Budget { limit, attempted }
}

/// Breadth-first exploration record.
pub(crate) struct Search {
    pub(crate) store: StateStore,
    pub(crate) parent: Vec<(u32, Slide)>,
}

impl Search {
    fn path_to(&self, mut idx: u32) -> Vec<Slide> {
        let mut out = Vec::new();
        while idx != 0 {
            let (p, s) = self.parent[idx as usize];
            out.push(s);
            idx = p;
        }
        out.reverse();
        out
    }
}

/// BFS from `start` over destinations allowed by `allowed`, stopping early
/// once `stop(state)` holds. Returns the search and the stopping index.
pub(crate) fn bfs(
    g: &Graph,
    start: &[u32],
    allowed: Option<&[bool]>,
    budget: u64,
    mut stop: impl FnMut(&[u32]) -> bool,
) -> Result<(Search, Option<u32>)> {
    let mut search = Search { store: StateStore::new(start.len()), parent: Vec::new() };
    search.store.insert(start);
    search.parent.push((0, Slide { from: 0, to: 0 }));
    if stop(start) {
        return Ok((search, Some(0)));
    }
    let mut scratch = Scratch::new(g.n());
    let mut queue = VecDeque::new();
    queue.push_back(0u32);
    let mut cur = Vec::with_capacity(start.len());
    while let Some(idx) = queue.pop_front() {
        cur.clear();
        cur.extend_from_slice(search.store.get(idx));
        let mut found = None;
        let mut blown = false;
        let Search { store, parent } = &mut search;
        for_each_successor(g, &cur, allowed, &mut scratch, |slide, next| {
            if found.is_some() || blown {
                return;
            }
            let (ni, fresh) = store.insert(next);
            if fresh {
                parent.push((idx, slide));
                if store.len() as u64 > budget {
                    blown = true;
                    return;
                }
                if stop(next) {
                    found = Some(ni);
                }
                queue.push_back(ni);
            }
        });
        if blown {
            return Err(over_budget(budget, search.store.len() as u64));
        }
        if found.is_some() {
            return Ok((search, found));
        }
    }
    Ok((search, None))
}

/// All configurations reachable from `start`, moving only onto vertices with
/// `allowed[v]` when given.
pub fn reachable_configs(
    g: &Graph,
    start: &TokenConfig,
    allowed: Option<&[bool]>,
    budget: u64,
) -> Result<Vec<TokenConfig>> {
    let (search, _) = bfs(g, &start.0, allowed, budget, |_| false)?;
    Ok((0..search.store.len() as u32).map(|i| TokenConfig(search.store.get(i).to_vec())).collect())
}

/// Shortest slide sequence from `from` to `to`, or `None` if unreachable.
pub fn ts_reachable(g: &Graph, from: &TokenConfig, to: &TokenConfig, budget: u64) -> Result<Option<MoveSeq>> {
    let a = TokenConfig::new(g, from.0.iter().copied())?;
    let b = TokenConfig::new(g, to.0.iter().copied())?;
    if a.len() != b.len() {
        return Err(Error::InvalidInput(format!("token counts differ: {} vs {}", a.len(), b.len())));
    }
    let (search, hit) = bfs(g, &a.0, None, budget, |s| s == b.0.as_slice())?;
    Ok(hit.map(|i| MoveSeq { start: a, slides: search.path_to(i) }))
}

/// Decides whether the token-sliding graph on `k`-independent sets of `g`
/// is connected.
pub fn ts_connected(g: &Graph, k: usize, budget: u64) -> Result<Connectivity> {
    let total = count_independent_sets_upto(g, k, budget);
    if total > budget {
        return Err(over_budget(budget, total));
    }
    if total == 0 {
        return Ok(Connectivity::Empty);
    }
    let mut seed = Vec::new();
    for_each_independent_set(g, k, |s| {
        seed = s.to_vec();
        false
    });
    let (search, _) = bfs(g, &seed, None, budget, |_| false)?;
    if search.store.len() as u64 == total {
        return Ok(Connectivity::Connected);
    }
    let mut other = None;
    for_each_independent_set(g, k, |s| {
        if search.store.find(s).is_none() {
            other = Some(s.to_vec());
            false
        } else {
            true
        }
    });
    let other = other.ok_or_else(|| Error::InvalidInput("inconsistent state count".into()))?;
    Ok(Connectivity::Disconnected(TokenConfig(seed), TokenConfig(other)))
}

/// Number of connected components of the token-sliding graph.
pub fn component_count(g: &Graph, k: usize, budget: u64) -> Result<u64> {
    let total = count_independent_sets_upto(g, k, budget);
    if total > budget {
        return Err(over_budget(budget, total));
    }
    let mut all = Vec::new();
    for_each_independent_set(g, k, |s| {
        all.push(s.to_vec());
        true
    });
    let mut seen = StateStore::new(k);
    let mut comps = 0;
    for s in &all {
        if seen.find(s).is_some() {
            continue;
        }
        comps += 1;
        let (search, _) = bfs(g, s, None, budget, |_| false)?;
        for i in 0..search.store.len() as u32 {
            seen.insert(search.store.get(i));
        }
    }
    Ok(comps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    fn cfg(g: &Graph, v: &[u32]) -> TokenConfig {
        TokenConfig::new(g, v.iter().copied()).unwrap()
    }

    #[test]
    fn counts_on_small_families() {
        assert_eq!(count_k_independent_sets(&families::path(5), 2), 6);
        assert_eq!(count_k_independent_sets(&families::cycle(6), 3), 2);
        assert_eq!(count_k_independent_sets(&families::complete(4), 2), 0);
        assert_eq!(count_k_independent_sets(&families::path(3), 0), 1);
    }

    #[test]
    fn star_leaves_are_frozen_for_two_tokens() {
        let g = families::star(3);
        let c = cfg(&g, &[1, 2]);
        assert!(is_frozen(&g, &c));
        assert_eq!(ts_connected(&g, 2, DEFAULT_BUDGET).unwrap(), Connectivity::Disconnected(cfg(&g, &[1, 2]), cfg(&g, &[1, 3])));
        assert_eq!(component_count(&g, 2, DEFAULT_BUDGET).unwrap(), 3);
    }

    #[test]
    fn path_reach_and_replay() {
        let g = families::path(5);
        let a = cfg(&g, &[0, 2]);
        let b = cfg(&g, &[2, 4]);
        let seq = ts_reachable(&g, &a, &b, DEFAULT_BUDGET).unwrap().unwrap();
        assert_eq!(seq.slides.len(), 4);
        assert_eq!(seq.replay(&g).unwrap(), b);
    }

    #[test]
    fn zero_tokens_connected() {
        assert!(ts_connected(&families::complete(3), 0, 10).unwrap().is_connected());
    }

    #[test]
    fn empty_when_no_sets() {
        assert_eq!(ts_connected(&families::complete(3), 2, 10).unwrap(), Connectivity::Empty);
    }

    #[test]
    fn budget_exceeded() {
        let g = Graph::empty(12);
        assert!(matches!(ts_connected(&g, 3, 50), Err(Error::Budget { .. })));
    }

    #[test]
    fn rejects_dependent_tokens() {
        let g = families::path(3);
        assert!(TokenConfig::new(&g, [0, 1]).is_err());
    }
}
