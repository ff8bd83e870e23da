//! Graphviz output.

use std::collections::HashMap;
use std::fmt::Write;

use tsr_core::chordal::{CliqueTree, TreeModel};
use tsr_core::engine::{for_each_independent_set, reachable_configs, successors, TokenConfig};
use tsr_core::reductions::{ReductionArtifact, Role, RoleLabel, Witness};
use tsr_core::Graph;

use crate::error::HResult;

const PALETTE: [&str; 21] = [
    "#e6194b", "#3cb44b", "#ffe119", "#4363d8", "#f58231", "#911eb4", "#46f0f0", "#f032e6", "#bcf60c", "#fabebe",
    "#008080", "#e6beff", "#9a6324", "#fffac8", "#800000", "#aaffc3", "#808000", "#ffd8b1", "#000075", "#808080",
    "#a9a9a9",
];

fn role_color(r: Role) -> &'static str {
    PALETTE[Role::ALL.iter().position(|&x| x == r).expect("known role")]
}

fn set_label(s: &[u32]) -> String {
    let parts: Vec<String> = s.iter().map(|v| v.to_string()).collect();
    format!("{{{}}}", parts.join(","))
}

pub fn graph_dot(g: &Graph) -> String {
    let mut s = String::from("graph G {\n");
    for v in 0..g.n() {
        writeln!(s, "  {v};").unwrap();
    }
    for (u, v) in g.edges() {
        writeln!(s, "  {u} -- {v};").unwrap();
    }
    s.push_str("}\n");
    s
}

/// TS_k(G) with one fill color per connected component.
pub fn ts_graph_dot(g: &Graph, k: usize, budget: u64) -> HResult<String> {
    let mut all = Vec::new();
    for_each_independent_set(g, k, |c| {
        all.push(c.to_vec());
        (all.len() as u64) <= budget
    });
    if all.len() as u64 > budget {
        return Err(tsr_core::Error::Budget { limit: budget, attempted: all.len() as u64 }.into());
    }
    let index: HashMap<Vec<u32>, usize> = all.iter().cloned().zip(0..).collect();
    let mut comp = vec![usize::MAX; all.len()];
    let mut next = 0;
    for i in 0..all.len() {
        if comp[i] != usize::MAX {
            continue;
        }
        let start = TokenConfig::new(g, all[i].iter().copied())?;
        for c in reachable_configs(g, &start, None, budget)? {
            comp[index[c.tokens()]] = next;
        }
        next += 1;
    }
    let mut s = String::from("graph TS {\n  node [style=filled];\n");
    for (i, c) in all.iter().enumerate() {
        writeln!(s, "  s{i} [label=\"{}\", fillcolor=\"{}\"];", set_label(c), PALETTE[comp[i] % PALETTE.len()]).unwrap();
    }
    for (i, c) in all.iter().enumerate() {
        let cfg = TokenConfig::new(g, c.iter().copied())?;
        for nb in successors(g, &cfg) {
            let j = index[nb.tokens()];
            if i < j {
                writeln!(s, "  s{i} -- s{j};").unwrap();
            }
        }
    }
    s.push_str("}\n");
    Ok(s)
}

pub fn clique_tree_dot(ct: &CliqueTree, labels: Option<&[RoleLabel]>) -> String {
    let mut s = String::from("graph CliqueTree {\n  node [shape=box, style=filled];\n");
    for (i, b) in ct.bags.iter().enumerate() {
        let (text, color) = match labels {
            Some(l) => {
                let names: Vec<String> = b.iter().map(|v| l[v as usize].to_string()).collect();
                let first = b.iter().next().map_or("#ffffff", |v| role_color(l[v as usize].role));
                (names.join("\\n"), first)
            }
            None => (set_label(b.as_slice()), "#ffffff"),
        };
        writeln!(s, "  b{i} [label=\"{text}\", fillcolor=\"{color}\"];").unwrap();
    }
    for &(a, b) in &ct.edges {
        writeln!(s, "  b{a} -- b{b};").unwrap();
    }
    s.push_str("}\n");
    s
}

/// Host tree plus one role-colored node per vertex, joined by dotted edges
/// to the host nodes of its subtree.
pub fn tree_model_dot(m: &TreeModel, labels: Option<&[RoleLabel]>) -> String {
    let mut s = String::from("graph TreeModel {\n");
    for t in 0..m.host.nodes() as u32 {
        let name = m.host.label(t).map_or_else(|| t.to_string(), str::to_string);
        writeln!(s, "  h{t} [shape=circle, label=\"{name}\"];").unwrap();
    }
    for &(a, b) in m.host.edges() {
        writeln!(s, "  h{a} -- h{b} [penwidth=2];").unwrap();
    }
    for (v, nodes) in m.models.iter().enumerate() {
        let (text, color) = match labels {
            Some(l) => (l[v].to_string(), role_color(l[v].role)),
            None => (v.to_string(), "#ffffff"),
        };
        writeln!(s, "  v{v} [shape=box, style=filled, label=\"{text}\", fillcolor=\"{color}\"];").unwrap();
        for t in nodes {
            writeln!(s, "  v{v} -- h{t} [style=dotted];").unwrap();
        }
    }
    s.push_str("}\n");
    s
}

pub fn artifact_dot(a: &ReductionArtifact) -> String {
    match &a.witness {
        Witness::CliqueTree(ct) => clique_tree_dot(ct, Some(&a.labels)),
        Witness::TreeModel(m) => tree_model_dot(m, Some(&a.labels)),
    }
}
