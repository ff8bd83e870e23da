//! Compilers from source problems to token-sliding instances on chordal
//! graphs, each emitting the reduced graph together with a structural
//! witness and a role label for every vertex.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write;

use sha2::{Digest, Sha256};

use crate::chordal::{check_clique_tree, realize, recognize_chordal, CliqueTree, HostTree, TreeModel};
use crate::engine::TokenConfig;
use crate::error::{Error, Result};
use crate::graph::Graph;

mod degree;
mod leafage_conn;
mod leafage_reach;

pub use degree::{frozen_witness, reduce_tsconn_degree, reduce_tsreach_degree, DegreeOptions};
pub use leafage_conn::{conn_claims, reduce_tsconn_leafage};
pub use leafage_reach::{reach_claims, reduce_tsreach_leafage};

/// Vertex families appearing in the reduced graphs.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Role {
    C,
    W,
    X,
    Y,
    CPrime,
    S,
    Blue,
    Green,
    BStar,
    Orange,
    LeftInterval,
    RightInterval,
    Connector,
    Pink,
    HType,
    RedH,
    IIndex,
    JIndex,
    KIndex,
    Choke,
    CijConnector,
}

impl Role {
    pub const ALL: [Role; 21] = [
        Role::C,
        Role::W,
        Role::X,
        Role::Y,
        Role::CPrime,
        Role::S,
        Role::Blue,
        Role::Green,
        Role::BStar,
        Role::Orange,
        Role::LeftInterval,
        Role::RightInterval,
        Role::Connector,
        Role::Pink,
        Role::HType,
        Role::RedH,
        Role::IIndex,
        Role::JIndex,
        Role::KIndex,
        Role::Choke,
        Role::CijConnector,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Role::C => "C",
            Role::W => "W",
            Role::X => "X",
            Role::Y => "Y",
            Role::CPrime => "Cprime",
            Role::S => "S",
            Role::Blue => "blue",
            Role::Green => "green",
            Role::BStar => "purple-bstar",
            Role::Orange => "orange",
            Role::LeftInterval => "u",
            Role::RightInterval => "w",
            Role::Connector => "connector",
            Role::Pink => "pink",
            Role::HType => "H-type",
            Role::RedH => "red-H",
            Role::IIndex => "I-index",
            Role::JIndex => "J-index",
            Role::KIndex => "K-index",
            Role::Choke => "choke",
            Role::CijConnector => "cij-connector",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Role> {
        Role::ALL.into_iter().find(|r| r.tag() == tag)
    }
}

/// A role plus the 1-based indices that pin the vertex down within its family.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct RoleLabel {
    pub role: Role,
    pub idx: Vec<u32>,
}

impl RoleLabel {
    pub fn new(role: Role, idx: &[u32]) -> Self {
        RoleLabel { role, idx: idx.to_vec() }
    }
}

impl fmt::Display for RoleLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.role.tag())?;
        for (i, x) in self.idx.iter().enumerate() {
            f.write_str(if i == 0 { ":" } else { "," })?;
            write!(f, "{x}")?;
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Witness {
    CliqueTree(CliqueTree),
    TreeModel(TreeModel),
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ReductionKind {
    TsConnDegree,
    TsReachDegree,
    TsConnLeafage,
    TsReachLeafage,
}

impl ReductionKind {
    pub const ALL: [ReductionKind; 4] =
        [ReductionKind::TsConnDegree, ReductionKind::TsReachDegree, ReductionKind::TsConnLeafage, ReductionKind::TsReachLeafage];

    pub fn name(self) -> &'static str {
        match self {
            ReductionKind::TsConnDegree => "tsconn-degree",
            ReductionKind::TsReachDegree => "tsreach-degree",
            ReductionKind::TsConnLeafage => "tsconn-leafage",
            ReductionKind::TsReachLeafage => "tsreach-leafage",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        ReductionKind::ALL.into_iter().find(|k| k.name() == s)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionArtifact {
    pub kind: ReductionKind,
    pub reduced: Graph,
    pub labels: Vec<RoleLabel>,
    pub witness: Witness,
    pub target_k: usize,
    pub initial: Option<TokenConfig>,
    pub final_: Option<TokenConfig>,
    /// Lowercase hex SHA-256 of the canonical source serialization.
    pub provenance: String,
    /// Set when a source promise could not be checked exhaustively.
    pub unchecked_precondition: bool,
}

impl ReductionArtifact {
    /// Vertex carrying exactly this label.
    pub fn vertex(&self, role: Role, idx: &[u32]) -> Option<u32> {
        self.labels.iter().position(|l| l.role == role && l.idx == idx).map(|v| v as u32)
    }

    /// All vertices of one role, in id order.
    pub fn vertices_of(&self, role: Role) -> Vec<u32> {
        (0..self.labels.len() as u32).filter(|&v| self.labels[v as usize].role == role).collect()
    }

    pub fn label_index(&self) -> BTreeMap<RoleLabel, u32> {
        self.labels.iter().cloned().zip(0u32..).collect()
    }

    /// Re-checks every structural invariant of the artifact.
    pub fn validate(&self) -> Result<()> {
        let g = &self.reduced;
        if self.labels.len() != g.n() {
            return Err(Error::InvalidInput(format!("{} labels for {} vertices", self.labels.len(), g.n())));
        }
        if self.label_index().len() != g.n() {
            return Err(Error::InvalidInput("duplicate role labels".into()));
        }
        if recognize_chordal(g).is_none() {
            return Err(Error::NotChordal);
        }
        match &self.witness {
            Witness::CliqueTree(ct) => {
                if !check_clique_tree(g, ct) {
                    return Err(Error::InvalidInput("witness clique tree fails the check".into()));
                }
            }
            Witness::TreeModel(m) => {
                if realize(m)? != *g {
                    return Err(Error::InvalidInput("tree model does not realize the reduced graph".into()));
                }
            }
        }
        for c in [&self.initial, &self.final_].into_iter().flatten() {
            TokenConfig::new(g, c.tokens().iter().copied())?;
            if c.len() != self.target_k {
                return Err(Error::InvalidInput(format!("configuration of size {} for target {}", c.len(), self.target_k)));
            }
        }
        Ok(())
    }
}

/// Lowercase hex SHA-256 of `bytes`.
pub fn digest_hex(bytes: &[u8]) -> String {
    let out = Sha256::digest(bytes);
    let mut s = String::with_capacity(64);
    for b in out.iter() {
        write!(s, "{b:02x}").unwrap();
    }
    s
}

/// `{"n":..,"edges":[..]` followed by extra members and the closing brace.
pub(crate) fn source_json(g: &Graph, extra: &str) -> String {
    let mut s = g.canonical_json();
    s.pop();
    s.push_str(extra);
    s.push('}');
    s
}

pub(crate) fn json_ids(ids: &[u32]) -> String {
    let mut s = String::from("[");
    for (i, v) in ids.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        write!(s, "{v}").unwrap();
    }
    s.push(']');
    s
}

/// Incrementally assembled tree model with labelled host nodes and vertices.
pub(crate) struct ModelBuilder {
    nodes: usize,
    edges: Vec<(u32, u32)>,
    node_labels: BTreeMap<u32, String>,
    models: Vec<Vec<u32>>,
    labels: Vec<RoleLabel>,
}

impl ModelBuilder {
    pub(crate) fn new() -> Self {
        ModelBuilder { nodes: 0, edges: Vec::new(), node_labels: BTreeMap::new(), models: Vec::new(), labels: Vec::new() }
    }

    /// Adds a host node, attached to `parent` when given.
    pub(crate) fn node(&mut self, parent: Option<u32>, label: Option<String>) -> u32 {
        let id = self.nodes as u32;
        self.nodes += 1;
        if let Some(p) = parent {
            self.edges.push((p, id));
        }
        if let Some(l) = label {
            self.node_labels.insert(id, l);
        }
        id
    }

    pub(crate) fn vertex(&mut self, label: RoleLabel, model: Vec<u32>) -> u32 {
        self.models.push(model);
        self.labels.push(label);
        self.models.len() as u32 - 1
    }

    pub(crate) fn finish(self) -> Result<(Graph, TreeModel, Vec<RoleLabel>)> {
        let host = HostTree::new(self.nodes, self.edges, self.node_labels)?;
        let model = TreeModel::new(host, self.models);
        let g = realize(&model)?;
        Ok((g, model, self.labels))
    }
}

/// Host path of one class branch: positions `0..=4n`, with the branch root
/// `t_i` at position `2n`, `t_i^a` at 0 and `t_i^b` at `4n`.
pub(crate) struct Branch {
    pub(crate) pos: Vec<u32>,
    pub(crate) n: usize,
}

impl Branch {
    pub(crate) fn build(b: &mut ModelBuilder, root: u32, i: usize, n: usize) -> Branch {
        let mut pos = alloc::vec![0u32; 4 * n + 1];
        pos[2 * n] = b.node(Some(root), Some(format!("t_{i}")));
        for p in (0..2 * n).rev() {
            let label = (p == 0).then(|| format!("t_{i}^a"));
            pos[p] = b.node(Some(pos[p + 1]), label);
        }
        for p in 2 * n + 1..=4 * n {
            let label = (p == 4 * n).then(|| format!("t_{i}^b"));
            pos[p] = b.node(Some(pos[p - 1]), label);
        }
        Branch { pos, n }
    }

    pub(crate) fn root(&self) -> u32 {
        self.pos[2 * self.n]
    }

    /// Host nodes for positions `lo..=hi`.
    pub(crate) fn span(&self, lo: usize, hi: usize) -> Vec<u32> {
        self.pos[lo..=hi].to_vec()
    }

    /// Left interval `u^p`, 1-based.
    pub(crate) fn u(&self, p: usize) -> Vec<u32> {
        self.span(2 * p - 2, 2 * p - 1)
    }

    /// Right interval `w^p`, 1-based.
    pub(crate) fn w(&self, p: usize) -> Vec<u32> {
        self.span(2 * self.n + 2 * p - 1, 2 * self.n + 2 * p)
    }
}

/// Parking path of `2m` host nodes hanging off `root`: `m` blue vertices
/// joined by `m - 1` green ones. Returns the host nodes in order from `root`.
pub(crate) fn parking(b: &mut ModelBuilder, root: u32, m: usize, end_label: String) -> Vec<u32> {
    let mut nodes = Vec::with_capacity(2 * m);
    let mut at = root;
    for s in 0..2 * m {
        let label = (s + 1 == 2 * m).then(|| end_label.clone());
        at = b.node(Some(at), label);
        nodes.push(at);
    }
    nodes
}

pub(crate) fn add_parking_vertices(b: &mut ModelBuilder, nodes: &[u32], path: u32) -> Vec<u32> {
    let m = nodes.len() / 2;
    let mut blues = Vec::with_capacity(m);
    for s in 1..=m {
        blues.push(b.vertex(RoleLabel::new(Role::Blue, &[path, s as u32]), alloc::vec![nodes[2 * s - 2], nodes[2 * s - 1]]));
    }
    for s in 1..m {
        b.vertex(RoleLabel::new(Role::Green, &[path, s as u32]), alloc::vec![nodes[2 * s - 1], nodes[2 * s]]);
    }
    blues
}

/// Class interval and connector vertices for one branch.
pub(crate) fn add_class_vertices(b: &mut ModelBuilder, br: &Branch, i: u32) {
    let n = br.n;
    for p in 1..=n {
        b.vertex(RoleLabel::new(Role::LeftInterval, &[i, p as u32]), br.u(p));
    }
    for p in 1..=n {
        b.vertex(RoleLabel::new(Role::RightInterval, &[i, p as u32]), br.w(p));
    }
    for p in 1..n {
        b.vertex(RoleLabel::new(Role::Connector, &[i, 1, p as u32]), br.span(2 * p - 1, 2 * p));
    }
    for p in 1..n {
        b.vertex(RoleLabel::new(Role::Connector, &[i, 2, p as u32]), br.span(2 * n + 2 * p, 2 * n + 2 * p + 1));
    }
}

/// Tokens for class `i` at split `s`: `u^1..u^s` and `w^{s+1}..w^n`.
pub fn split_tokens(a: &ReductionArtifact, i: u32, n: usize, s: usize) -> Vec<u32> {
    let mut out = Vec::with_capacity(n);
    for p in 1..=s {
        out.push(a.vertex(Role::LeftInterval, &[i, p as u32]).expect("left interval"));
    }
    for p in s + 1..=n {
        out.push(a.vertex(Role::RightInterval, &[i, p as u32]).expect("right interval"));
    }
    out
}

/// Outcome of one executable claim.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClaimResult {
    pub id: &'static str,
    pub passed: bool,
    pub checked: u64,
    pub counterexample: Option<Vec<u32>>,
}

impl ClaimResult {
    pub(crate) fn new(id: &'static str) -> Self {
        ClaimResult { id, passed: true, checked: 0, counterexample: None }
    }

    pub(crate) fn record(&mut self, ok: bool, config: &[u32]) {
        self.checked += 1;
        if !ok && self.passed {
            self.passed = false;
            self.counterexample = Some(config.to_vec());
        }
    }
}
