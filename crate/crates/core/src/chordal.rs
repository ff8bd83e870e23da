//! Subtree models, chordality recognition, maximal cliques and clique trees.

use alloc::collections::{BTreeMap, VecDeque};
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// A host tree with optional node labels such as `t_0` or `t_2^a`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HostTree {
    nodes: usize,
    edges: Vec<(u32, u32)>,
    labels: BTreeMap<u32, String>,
    adj: Vec<Vec<u32>>,
}

impl HostTree {
    pub fn new(nodes: usize, edges: Vec<(u32, u32)>, labels: BTreeMap<u32, String>) -> Result<Self> {
        if nodes == 0 {
            return Err(Error::InvalidHost("host tree has no nodes".into()));
        }
        if edges.len() != nodes - 1 {
            return Err(Error::InvalidHost(format!("{} edges for {} nodes", edges.len(), nodes)));
        }
        let mut adj = vec![Vec::new(); nodes];
        for &(a, b) in &edges {
            if a as usize >= nodes || b as usize >= nodes || a == b {
                return Err(Error::InvalidHost(format!("bad tree edge ({a},{b})")));
            }
            adj[a as usize].push(b);
            adj[b as usize].push(a);
        }
        if let Some((&node, _)) = labels.iter().find(|(&v, _)| v as usize >= nodes) {
            return Err(Error::InvalidHost(format!("label on missing node {node}")));
        }
        let tree = HostTree { nodes, edges, labels, adj };
        let all: Vec<u32> = (0..nodes as u32).collect();
        if !tree.is_connected_subset(&all) {
            return Err(Error::InvalidHost("host tree is disconnected".into()));
        }
        Ok(tree)
    }

    pub fn nodes(&self) -> usize {
        self.nodes
    }

    pub fn edges(&self) -> &[(u32, u32)] {
        &self.edges
    }

    pub fn labels(&self) -> &BTreeMap<u32, String> {
        &self.labels
    }

    pub fn label(&self, node: u32) -> Option<&str> {
        self.labels.get(&node).map(String::as_str)
    }

    pub fn degree(&self, node: u32) -> usize {
        self.adj[node as usize].len()
    }

    pub fn neighbors(&self, node: u32) -> &[u32] {
        &self.adj[node as usize]
    }

    /// Whether the nodes of `set` induce a connected subtree. Empty sets are not connected.
    pub fn is_connected_subset(&self, set: &[u32]) -> bool {
        if set.is_empty() || set.iter().any(|&v| v as usize >= self.nodes) {
            return false;
        }
        let mut inside = vec![false; self.nodes];
        for &v in set {
            inside[v as usize] = true;
        }
        let mut seen = vec![false; self.nodes];
        let mut stack = vec![set[0]];
        seen[set[0] as usize] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for &w in &self.adj[v as usize] {
                if inside[w as usize] && !seen[w as usize] {
                    seen[w as usize] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        let distinct = inside.iter().filter(|&&b| b).count();
        reached == distinct
    }
}

/// A host tree plus one node set per graph vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeModel {
    pub host: HostTree,
    /// Sorted host-node ids for each graph vertex.
    pub models: Vec<Vec<u32>>,
}

impl TreeModel {
    pub fn new(host: HostTree, models: Vec<Vec<u32>>) -> Self {
        let models = models
            .into_iter()
            .map(|mut m| {
                m.sort_unstable();
                m.dedup();
                m
            })
            .collect();
        TreeModel { host, models }
    }

    /// Every model must be a nonempty connected subtree of the host.
    pub fn validate(&self) -> Result<()> {
        for (v, m) in self.models.iter().enumerate() {
            if !self.host.is_connected_subset(m) {
                return Err(Error::InvalidModel { vertex: v as u32 });
            }
        }
        Ok(())
    }
}

/// Intersection graph of the model's subtrees.
pub fn realize(model: &TreeModel) -> Result<Graph> {
    model.validate()?;
    let mut at_node: Vec<Vec<u32>> = vec![Vec::new(); model.host.nodes()];
    for (v, m) in model.models.iter().enumerate() {
        for &t in m {
            at_node[t as usize].push(v as u32);
        }
    }
    let mut edges = Vec::new();
    for here in &at_node {
        for (i, &a) in here.iter().enumerate() {
            for &b in &here[i + 1..] {
                edges.push((a, b));
            }
        }
    }
    edges.sort_unstable();
    edges.dedup();
    Graph::from_edges(model.models.len(), &edges)
}

/// Vertex order in which the later neighbours of each vertex form a clique.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EliminationOrder(pub Vec<u32>);

impl EliminationOrder {
    pub fn is_perfect_for(&self, g: &Graph) -> bool {
        let n = g.n();
        if self.0.len() != n {
            return false;
        }
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in self.0.iter().enumerate() {
            if v as usize >= n || pos[v as usize] != usize::MAX {
                return false;
            }
            pos[v as usize] = i;
        }
        for &v in &self.0 {
            let later: Vec<u32> =
                g.neighbors(v).iter().copied().filter(|&w| pos[w as usize] > pos[v as usize]).collect();
            if let Some(&first) = later.iter().min_by_key(|&&w| pos[w as usize]) {
                if later.iter().any(|&w| w != first && !g.adjacent(first, w)) {
                    return false;
                }
            }
        }
        true
    }
}

/// Maximum cardinality search; returns a perfect elimination order iff `g` is chordal.
pub fn recognize_chordal(g: &Graph) -> Option<EliminationOrder> {
    let n = g.n();
    let mut weight = vec![0usize; n];
    let mut numbered = vec![false; n];
    let mut visit = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n).filter(|&v| !numbered[v]).max_by_key(|&v| (weight[v], core::cmp::Reverse(v)))?;
        numbered[v] = true;
        visit.push(v as u32);
        for &w in g.neighbors(v as u32) {
            weight[w as usize] += 1;
        }
    }
    visit.reverse();
    let order = EliminationOrder(visit);
    order.is_perfect_for(g).then_some(order)
}

/// Inclusion-maximal cliques, sorted, read off a perfect elimination order.
pub fn maximal_cliques(g: &Graph, order: &EliminationOrder) -> Result<Vec<VertexSet>> {
    if !order.is_perfect_for(g) {
        return Err(Error::InvalidInput("not a perfect elimination order".into()));
    }
    let mut pos = vec![0usize; g.n()];
    for (i, &v) in order.0.iter().enumerate() {
        pos[v as usize] = i;
    }
    let mut candidates: Vec<VertexSet> = order
        .0
        .iter()
        .map(|&v| {
            let mut c: Vec<u32> =
                g.neighbors(v).iter().copied().filter(|&w| pos[w as usize] > pos[v as usize]).collect();
            c.push(v);
            VertexSet::new(c)
        })
        .collect();
    candidates.sort();
    candidates.dedup();
    let maximal: Vec<VertexSet> = candidates
        .iter()
        .filter(|c| !candidates.iter().any(|d| d.len() > c.len() && c.is_subset(d)))
        .cloned()
        .collect();
    Ok(maximal)
}

/// Bags plus tree edges over bag indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CliqueTree {
    pub bags: Vec<VertexSet>,
    pub edges: Vec<(u32, u32)>,
}

impl CliqueTree {
    fn adjacency(&self) -> Vec<Vec<u32>> {
        let mut adj = vec![Vec::new(); self.bags.len()];
        for &(a, b) in &self.edges {
            adj[a as usize].push(b);
            adj[b as usize].push(a);
        }
        adj
    }
}

/// A clique tree from a maximum-weight spanning tree of the clique
/// intersection graph.
pub fn build_clique_tree(g: &Graph) -> Result<CliqueTree> {
    let order = recognize_chordal(g).ok_or(Error::NotChordal)?;
    let bags = maximal_cliques(g, &order)?;
    let m = bags.len();
    let mut pairs = Vec::new();
    for i in 0..m {
        for j in i + 1..m {
            let w = bags[i].iter().filter(|&v| bags[j].contains(v)).count();
            pairs.push((w, i as u32, j as u32));
        }
    }
    pairs.sort_by(|a, b| b.0.cmp(&a.0).then((a.1, a.2).cmp(&(b.1, b.2))));
    let mut parent: Vec<usize> = (0..m).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    let mut edges = Vec::new();
    for (_, a, b) in pairs {
        let (ra, rb) = (find(&mut parent, a as usize), find(&mut parent, b as usize));
        if ra != rb {
            parent[ra] = rb;
            edges.push((a, b));
        }
    }
    Ok(CliqueTree { bags, edges })
}

/// Checks that the bags are exactly the maximal cliques of `g`, the edges
/// form a tree, and every pairwise bag intersection lies in all bags on the
/// tree path between them.
pub fn check_clique_tree(g: &Graph, ct: &CliqueTree) -> bool {
    let Some(order) = recognize_chordal(g) else { return false };
    let Ok(expected) = maximal_cliques(g, &order) else { return false };
    let mut got = ct.bags.clone();
    got.sort();
    if got.windows(2).any(|w| w[0] == w[1]) || got != expected {
        return false;
    }
    let m = ct.bags.len();
    if m == 0 {
        return ct.edges.is_empty();
    }
    if ct.edges.len() != m - 1 || ct.edges.iter().any(|&(a, b)| a as usize >= m || b as usize >= m) {
        return false;
    }
    // root the tree at bag 0
    let adj = ct.adjacency();
    let mut parent = vec![usize::MAX; m];
    let mut depth = vec![0usize; m];
    let mut seen = vec![false; m];
    let mut queue = VecDeque::from([0usize]);
    seen[0] = true;
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            let w = w as usize;
            if !seen[w] {
                seen[w] = true;
                parent[w] = v;
                depth[w] = depth[v] + 1;
                queue.push_back(w);
            }
        }
    }
    if seen.iter().any(|&s| !s) {
        return false;
    }
    for a in 0..m {
        for b in a + 1..m {
            let common: Vec<u32> = ct.bags[a].iter().filter(|&v| ct.bags[b].contains(v)).collect();
            if common.is_empty() {
                continue;
            }
            let (mut x, mut y) = (a, b);
            while x != y {
                if depth[x] >= depth[y] {
                    x = parent[x];
                } else {
                    y = parent[y];
                }
                for z in [x, y] {
                    if common.iter().any(|&v| !ct.bags[z].contains(v)) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

pub fn max_degree(ct: &CliqueTree) -> usize {
    ct.adjacency().iter().map(Vec::len).max().unwrap_or(0)
}

/// Number of degree-one host nodes; a single-node host counts as one leaf.
pub fn leaf_count(model: &TreeModel) -> usize {
    let host = &model.host;
    if host.nodes() == 1 {
        return 1;
    }
    (0..host.nodes() as u32).filter(|&t| host.degree(t) == 1).count()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families::*;

    fn host(nodes: usize, edges: &[(u32, u32)]) -> HostTree {
        HostTree::new(nodes, edges.to_vec(), BTreeMap::new()).unwrap()
    }

    fn vs(v: &[u32]) -> VertexSet {
        VertexSet::new(v.iter().copied())
    }

    #[test]
    fn realize_examples() {
        let single = TreeModel::new(host(1, &[]), vec![vec![0], vec![0]]);
        assert_eq!(realize(&single).unwrap(), complete(2));

        let path = TreeModel::new(host(3, &[(0, 1), (1, 2)]), vec![vec![0], vec![2]]);
        assert_eq!(realize(&path).unwrap(), Graph::empty(2));

        // star center 0, leaves 1, 2, 3
        let star = TreeModel::new(host(4, &[(0, 1), (0, 2), (0, 3)]), vec![vec![0, 1], vec![0, 2], vec![0, 3]]);
        assert_eq!(realize(&star).unwrap(), complete(3));
    }

    #[test]
    fn realize_rejects_disconnected_model() {
        let m = TreeModel::new(host(3, &[(0, 1), (1, 2)]), vec![vec![1], vec![0, 2]]);
        assert_eq!(realize(&m), Err(Error::InvalidModel { vertex: 1 }));
        let empty = TreeModel::new(host(2, &[(0, 1)]), vec![vec![]]);
        assert_eq!(realize(&empty), Err(Error::InvalidModel { vertex: 0 }));
    }

    #[test]
    fn host_validation() {
        assert!(HostTree::new(3, vec![(0, 1)], BTreeMap::new()).is_err());
        assert!(HostTree::new(3, vec![(0, 1), (0, 1)], BTreeMap::new()).is_err());
        assert!(HostTree::new(0, vec![], BTreeMap::new()).is_err());
    }

    #[test]
    fn recognition() {
        assert!(recognize_chordal(&cycle(4)).is_none());
        assert!(recognize_chordal(&cycle(5)).is_none());
        assert!(recognize_chordal(&path(6)).is_some());
        assert!(recognize_chordal(&star(4)).is_some());
        // K3 on {0,1,2} with pendant 3 on 0
        let split = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (0, 3)]).unwrap();
        let order = recognize_chordal(&split).unwrap();
        assert!(order.is_perfect_for(&split));
    }

    #[test]
    fn cliques() {
        let p3 = path(3);
        let order = recognize_chordal(&p3).unwrap();
        assert_eq!(maximal_cliques(&p3, &order).unwrap(), vec![vs(&[0, 1]), vs(&[1, 2])]);
        let k4 = complete(4);
        let order = recognize_chordal(&k4).unwrap();
        assert_eq!(maximal_cliques(&k4, &order).unwrap(), vec![vs(&[0, 1, 2, 3])]);
        assert!(maximal_cliques(&p3, &EliminationOrder(vec![1, 0, 2])).is_err());
    }

    #[test]
    fn clique_tree_examples() {
        let p3 = path(3);
        let ct = build_clique_tree(&p3).unwrap();
        assert_eq!(ct.bags.len(), 2);
        assert_eq!(ct.edges.len(), 1);
        assert!(check_clique_tree(&p3, &ct));

        let bad = CliqueTree { bags: vec![vs(&[0, 1]), vs(&[0, 2])], edges: vec![(0, 1)] };
        assert!(!check_clique_tree(&p3, &bad));

        let s3 = star(3);
        let ct = build_clique_tree(&s3).unwrap();
        assert_eq!(ct.bags.len(), 3);
        assert!(check_clique_tree(&s3, &ct));

        let k4 = complete(4);
        let ct = build_clique_tree(&k4).unwrap();
        assert_eq!(ct.bags.len(), 1);
        assert_eq!(max_degree(&ct), 0);

        assert_eq!(build_clique_tree(&cycle(4)), Err(Error::NotChordal));
    }

    #[test]
    fn clique_intersection_violation_detected() {
        // path a-b-c-d: bags {0,1},{1,2},{2,3}; put {1,2} at an end
        let p4 = path(4);
        let ct = CliqueTree { bags: vec![vs(&[0, 1]), vs(&[2, 3]), vs(&[1, 2])], edges: vec![(0, 1), (1, 2)] };
        assert!(!check_clique_tree(&p4, &ct));
        let good = CliqueTree { bags: ct.bags.clone(), edges: vec![(0, 2), (2, 1)] };
        assert!(check_clique_tree(&p4, &good));
    }

    #[test]
    fn leaves() {
        let m = TreeModel::new(host(4, &[(0, 1), (1, 2), (2, 3)]), vec![vec![0]]);
        assert_eq!(leaf_count(&m), 2);
        let single = TreeModel::new(host(1, &[]), vec![vec![0]]);
        assert_eq!(leaf_count(&single), 1);
    }
}
