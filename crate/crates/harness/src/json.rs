//! JSON file formats. Every `to_*` writer emits a canonical compact form so
//! that parse followed by write reproduces the input bytes.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use tsr_core::chordal::{CliqueTree, HostTree, TreeModel};
use tsr_core::engine::TokenConfig;
use tsr_core::oracles::PartitionedGraph;
use tsr_core::reductions::{ReductionArtifact, ReductionKind, Role, RoleLabel, Witness};
use tsr_core::{Graph, VertexSet};

use crate::error::{HResult, HarnessError};

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[u32; 2]>,
}

impl GraphJson {
    pub fn from_graph(g: &Graph) -> Self {
        GraphJson { n: g.n(), edges: g.edges().map(|(u, v)| [u, v]).collect() }
    }

    pub fn to_graph(&self) -> HResult<Graph> {
        let edges: Vec<(u32, u32)> = self.edges.iter().map(|e| (e[0], e[1])).collect();
        Ok(Graph::from_edges(self.n, &edges)?)
    }
}

/// Source instance as stored on disk: a graph plus whichever problem fields
/// apply.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq, Default)]
#[serde(deny_unknown_fields)]
pub struct SourceJson {
    pub n: usize,
    pub edges: Vec<[u32; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub class_size: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub classes: Option<Vec<Vec<u32>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub initial: Option<Vec<u32>>,
    #[serde(default, rename = "final", skip_serializing_if = "Option::is_none")]
    pub final_: Option<Vec<u32>>,
}

/// A decoded source instance.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Source {
    /// Graph and solution size for domination.
    Dominating { graph: Graph, k: usize },
    /// Split graph with two token configurations.
    Reach { graph: Graph, initial: TokenConfig, final_: TokenConfig },
    Partitioned(PartitionedGraph),
}

impl Source {
    pub fn graph(&self) -> &Graph {
        match self {
            Source::Dominating { graph, .. } | Source::Reach { graph, .. } => graph,
            Source::Partitioned(pg) => &pg.graph,
        }
    }

    pub fn to_json(&self) -> SourceJson {
        let base = GraphJson::from_graph(self.graph());
        let mut s = SourceJson { n: base.n, edges: base.edges, ..Default::default() };
        match self {
            Source::Dominating { k, .. } => s.k = Some(*k),
            Source::Reach { initial, final_, .. } => {
                s.initial = Some(initial.tokens().to_vec());
                s.final_ = Some(final_.tokens().to_vec());
            }
            Source::Partitioned(pg) => {
                s.k = Some(pg.k);
                s.class_size = Some(pg.n);
                s.classes = Some(pg.classes.clone());
            }
        }
        s
    }

    /// Canonical compact serialization; its SHA-256 is the artifact provenance.
    pub fn canonical(&self) -> String {
        to_string(&self.to_json())
    }

    pub fn digest(&self) -> String {
        tsr_core::reductions::digest_hex(self.canonical().as_bytes())
    }

    pub fn from_json(s: &SourceJson) -> HResult<Source> {
        let graph = GraphJson { n: s.n, edges: s.edges.clone() }.to_graph()?;
        match (&s.classes, &s.initial, &s.final_) {
            (Some(classes), None, None) => {
                let pg = PartitionedGraph::new(graph, classes.clone())?;
                if s.k.is_some_and(|k| k != pg.k) || s.class_size.is_some_and(|n| n != pg.n) {
                    return Err(HarnessError::Parse("k or class_size disagrees with classes".into()));
                }
                Ok(Source::Partitioned(pg))
            }
            (None, Some(i), Some(j)) if s.k.is_none() => {
                let initial = TokenConfig::new(&graph, i.iter().copied())?;
                let final_ = TokenConfig::new(&graph, j.iter().copied())?;
                Ok(Source::Reach { graph, initial, final_ })
            }
            (None, None, None) => match s.k {
                Some(k) => Ok(Source::Dominating { graph, k }),
                None => Err(HarnessError::Parse("source needs k, classes, or initial/final".into())),
            },
            _ => Err(HarnessError::Parse("inconsistent source fields".into())),
        }
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct CliqueTreeJson {
    pub bags: Vec<Vec<u32>>,
    pub edges: Vec<[u32; 2]>,
}

impl CliqueTreeJson {
    pub fn from_tree(ct: &CliqueTree) -> Self {
        CliqueTreeJson {
            bags: ct.bags.iter().map(|b| b.as_slice().to_vec()).collect(),
            edges: ct.edges.iter().map(|&(a, b)| [a, b]).collect(),
        }
    }

    pub fn to_tree(&self) -> CliqueTree {
        CliqueTree {
            bags: self.bags.iter().map(|b| VertexSet::new(b.iter().copied())).collect(),
            edges: self.edges.iter().map(|e| (e[0], e[1])).collect(),
        }
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct TreeModelJson {
    pub tree_nodes: usize,
    pub tree_edges: Vec<[u32; 2]>,
    pub labels: BTreeMap<u32, String>,
    pub models: BTreeMap<u32, Vec<u32>>,
}

impl TreeModelJson {
    pub fn from_model(m: &TreeModel) -> Self {
        TreeModelJson {
            tree_nodes: m.host.nodes(),
            tree_edges: m.host.edges().iter().map(|&(a, b)| [a, b]).collect(),
            labels: m.host.labels().clone(),
            models: m.models.iter().cloned().zip(0u32..).map(|(m, v)| (v, m)).collect(),
        }
    }

    pub fn to_model(&self) -> HResult<TreeModel> {
        let edges = self.tree_edges.iter().map(|e| (e[0], e[1])).collect();
        let host = HostTree::new(self.tree_nodes, edges, self.labels.clone())?;
        if self.models.keys().copied().ne(0..self.models.len() as u32) {
            return Err(HarnessError::Parse("model vertices must be 0..n".into()));
        }
        let m = TreeModel::new(host, self.models.values().cloned().collect());
        m.validate()?;
        Ok(m)
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(rename_all = "snake_case")]
pub enum WitnessJson {
    CliqueTree(CliqueTreeJson),
    TreeModel(TreeModelJson),
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct ArtifactJson {
    pub kind: String,
    pub reduced: GraphJson,
    pub labels: Vec<String>,
    pub witness: WitnessJson,
    pub target_k: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub initial: Option<Vec<u32>>,
    #[serde(default, rename = "final", skip_serializing_if = "Option::is_none")]
    pub final_: Option<Vec<u32>>,
    pub provenance: String,
    pub unchecked_precondition: bool,
}

pub fn parse_label(s: &str) -> HResult<RoleLabel> {
    let (tag, rest) = s.split_once(':').unwrap_or((s, ""));
    let role = Role::from_tag(tag).ok_or_else(|| HarnessError::Parse(format!("unknown role tag {tag:?}")))?;
    let idx = if rest.is_empty() {
        Vec::new()
    } else {
        rest.split(',')
            .map(|x| x.parse::<u32>().map_err(|_| HarnessError::Parse(format!("bad label index in {s:?}"))))
            .collect::<HResult<_>>()?
    };
    Ok(RoleLabel { role, idx })
}

impl ArtifactJson {
    pub fn from_artifact(a: &ReductionArtifact) -> Self {
        ArtifactJson {
            kind: a.kind.name().to_string(),
            reduced: GraphJson::from_graph(&a.reduced),
            labels: a.labels.iter().map(|l| l.to_string()).collect(),
            witness: match &a.witness {
                Witness::CliqueTree(ct) => WitnessJson::CliqueTree(CliqueTreeJson::from_tree(ct)),
                Witness::TreeModel(m) => WitnessJson::TreeModel(TreeModelJson::from_model(m)),
            },
            target_k: a.target_k,
            initial: a.initial.as_ref().map(|c| c.tokens().to_vec()),
            final_: a.final_.as_ref().map(|c| c.tokens().to_vec()),
            provenance: a.provenance.clone(),
            unchecked_precondition: a.unchecked_precondition,
        }
    }

    /// Decodes and re-validates the artifact.
    pub fn to_artifact(&self) -> HResult<ReductionArtifact> {
        let kind = ReductionKind::from_name(&self.kind)
            .ok_or_else(|| HarnessError::Parse(format!("unknown reduction kind {:?}", self.kind)))?;
        let reduced = self.reduced.to_graph()?;
        let config = |c: &Option<Vec<u32>>| -> HResult<Option<TokenConfig>> {
            c.as_ref().map(|t| TokenConfig::new(&reduced, t.iter().copied())).transpose().map_err(Into::into)
        };
        let a = ReductionArtifact {
            kind,
            labels: self.labels.iter().map(|s| parse_label(s)).collect::<HResult<_>>()?,
            witness: match &self.witness {
                WitnessJson::CliqueTree(ct) => Witness::CliqueTree(ct.to_tree()),
                WitnessJson::TreeModel(m) => Witness::TreeModel(m.to_model()?),
            },
            target_k: self.target_k,
            initial: config(&self.initial)?,
            final_: config(&self.final_)?,
            reduced,
            provenance: self.provenance.clone(),
            unchecked_precondition: self.unchecked_precondition,
        };
        a.validate()?;
        Ok(a)
    }
}

pub fn to_string<T: Serialize>(x: &T) -> String {
    serde_json::to_string(x).expect("serializable")
}

pub fn to_pretty<T: Serialize>(x: &T) -> String {
    serde_json::to_string_pretty(x).expect("serializable")
}

pub fn graph_to_json(g: &Graph) -> String {
    to_string(&GraphJson::from_graph(g))
}

pub fn graph_from_json(s: &str) -> HResult<Graph> {
    serde_json::from_str::<GraphJson>(s)?.to_graph()
}

pub fn config_to_json(c: &TokenConfig) -> String {
    to_string(&c.tokens())
}

pub fn config_from_json(g: &Graph, s: &str) -> HResult<TokenConfig> {
    let ids: Vec<u32> = serde_json::from_str(s)?;
    Ok(TokenConfig::new(g, ids)?)
}

pub fn artifact_to_json(a: &ReductionArtifact) -> String {
    to_string(&ArtifactJson::from_artifact(a))
}

pub fn artifact_from_json(s: &str) -> HResult<ReductionArtifact> {
    serde_json::from_str::<ArtifactJson>(s)?.to_artifact()
}

pub fn source_from_json(s: &str) -> HResult<Source> {
    Source::from_json(&serde_json::from_str(s)?)
}
