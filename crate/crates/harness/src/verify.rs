//! End-to-end lemma checks: source oracle, reduction, engine, claim suite.

use std::time::Instant;

use serde::{Deserialize, Serialize};
use tsr_core::engine::{is_frozen, ts_connected, ts_reachable, Connectivity, DEFAULT_BUDGET};
use tsr_core::oracles::{min_dominating_set, multicolored_clique, multicolored_independent_set};
use tsr_core::reductions::{
    conn_claims, frozen_witness, reach_claims, reduce_tsconn_degree, reduce_tsconn_leafage, reduce_tsreach_degree,
    reduce_tsreach_leafage, ClaimResult, DegreeOptions, ReductionArtifact, ReductionKind,
};

use crate::error::{HResult, HarnessError};
use crate::json::Source;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Polarity {
    /// Source YES iff reduced NO.
    Flip,
    /// Source YES iff reduced YES.
    Preserve,
}

/// The lemma table. Connectivity lemmas flip, reachability lemmas preserve.
pub const POLARITY: [(ReductionKind, Polarity); 4] = [
    (ReductionKind::TsConnDegree, Polarity::Flip),
    (ReductionKind::TsReachDegree, Polarity::Preserve),
    (ReductionKind::TsConnLeafage, Polarity::Flip),
    (ReductionKind::TsReachLeafage, Polarity::Preserve),
];

pub fn polarity(kind: ReductionKind) -> Polarity {
    POLARITY.iter().find(|(k, _)| *k == kind).map(|&(_, p)| p).expect("every kind is in the table")
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyOptions {
    pub budget: u64,
    pub timings: bool,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { budget: DEFAULT_BUDGET, timings: false }
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct ClaimReport {
    pub id: String,
    pub passed: bool,
    pub checked: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Vec<u32>>,
}

impl From<ClaimResult> for ClaimReport {
    fn from(c: ClaimResult) -> Self {
        ClaimReport { id: c.id.to_string(), passed: c.passed, checked: c.checked, counterexample: c.counterexample }
    }
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct Timings {
    pub oracle_us: u64,
    pub reduce_us: u64,
    pub engine_us: u64,
    pub claims_us: u64,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct LemmaReport {
    pub lemma: String,
    pub source_digest: String,
    /// "yes" or "no" for the source problem.
    pub source_verdict: String,
    /// "connected", "disconnected", "reachable" or "unreachable".
    pub reduced_verdict: String,
    pub agrees: bool,
    pub claims: Vec<ClaimReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub timings: Option<Timings>,
}

impl LemmaReport {
    pub fn claims_pass(&self) -> bool {
        self.claims.iter().all(|c| c.passed)
    }

    pub fn ok(&self) -> bool {
        self.agrees && self.claims_pass()
    }
}

struct Clock {
    on: bool,
    last: Instant,
}

impl Clock {
    fn lap(&mut self) -> u64 {
        let now = Instant::now();
        let d = now.duration_since(self.last).as_micros() as u64;
        self.last = now;
        if self.on {
            d
        } else {
            0
        }
    }
}

fn mismatch(kind: ReductionKind) -> HarnessError {
    HarnessError::Parse(format!("source instance does not fit lemma {}", kind.name()))
}

/// Builds the artifact for `src` under `kind`.
pub fn reduce(kind: ReductionKind, src: &Source) -> HResult<ReductionArtifact> {
    Ok(match (kind, src) {
        (ReductionKind::TsConnDegree, Source::Dominating { graph, k }) => {
            reduce_tsconn_degree(graph, *k, DegreeOptions::default())?
        }
        (ReductionKind::TsReachDegree, Source::Reach { graph, initial, final_ }) => {
            reduce_tsreach_degree(graph, initial, final_)?
        }
        (ReductionKind::TsConnLeafage, Source::Partitioned(pg)) => reduce_tsconn_leafage(pg)?,
        (ReductionKind::TsReachLeafage, Source::Partitioned(pg)) => reduce_tsreach_leafage(pg)?,
        _ => return Err(mismatch(kind)),
    })
}

fn conn_word(c: &Connectivity) -> (bool, &'static str) {
    match c {
        Connectivity::Disconnected(..) => (false, "disconnected"),
        // no configurations at all: vacuously connected
        Connectivity::Connected | Connectivity::Empty => (true, "connected"),
    }
}

pub fn verify_lemma(kind: ReductionKind, src: &Source, opts: &VerifyOptions) -> HResult<LemmaReport> {
    let mut clock = Clock { on: opts.timings, last: Instant::now() };
    let budget = opts.budget;

    let (source_yes, dominating) = match (kind, src) {
        (ReductionKind::TsConnDegree, Source::Dominating { graph, k }) => {
            let d = min_dominating_set(graph, (*k).min(graph.n()));
            (d.is_some(), d)
        }
        (ReductionKind::TsReachDegree, Source::Reach { graph, initial, final_ }) => {
            (ts_reachable(graph, initial, final_, budget)?.is_some(), None)
        }
        (ReductionKind::TsConnLeafage, Source::Partitioned(pg)) => (multicolored_independent_set(pg).is_some(), None),
        (ReductionKind::TsReachLeafage, Source::Partitioned(pg)) => (multicolored_clique(pg)?.is_some(), None),
        _ => return Err(mismatch(kind)),
    };
    let oracle_us = clock.lap();

    let a = reduce(kind, src)?;
    let reduce_us = clock.lap();

    let (reduced_yes, word) = match kind {
        ReductionKind::TsConnDegree | ReductionKind::TsConnLeafage => {
            conn_word(&ts_connected(&a.reduced, a.target_k, budget)?)
        }
        ReductionKind::TsReachDegree | ReductionKind::TsReachLeafage => {
            let (i, j) = (a.initial.as_ref().expect("initial"), a.final_.as_ref().expect("final"));
            match ts_reachable(&a.reduced, i, j, budget)? {
                Some(_) => (true, "reachable"),
                None => (false, "unreachable"),
            }
        }
    };
    let engine_us = clock.lap();

    let claims: Vec<ClaimReport> = match (kind, src) {
        (ReductionKind::TsConnDegree, Source::Dominating { graph, k }) => match &dominating {
            Some(d) => {
                let c = frozen_witness(&a, graph.n(), *k, d)?;
                let frozen = is_frozen(&a.reduced, &c);
                vec![ClaimReport {
                    id: "cl:frozen".into(),
                    passed: frozen,
                    checked: 1,
                    counterexample: (!frozen).then(|| c.tokens().to_vec()),
                }]
            }
            None => Vec::new(),
        },
        (ReductionKind::TsConnLeafage, Source::Partitioned(pg)) => {
            conn_claims(pg, &a, budget)?.into_iter().map(Into::into).collect()
        }
        (ReductionKind::TsReachLeafage, Source::Partitioned(pg)) => {
            reach_claims(pg, &a, budget)?.into_iter().map(Into::into).collect()
        }
        _ => Vec::new(),
    };
    let claims_us = clock.lap();

    let expected = match polarity(kind) {
        Polarity::Flip => !source_yes,
        Polarity::Preserve => source_yes,
    };
    Ok(LemmaReport {
        lemma: kind.name().to_string(),
        source_digest: a.provenance.clone(),
        source_verdict: if source_yes { "yes" } else { "no" }.to_string(),
        reduced_verdict: word.to_string(),
        agrees: reduced_yes == expected,
        claims,
        timings: opts.timings.then_some(Timings { oracle_us, reduce_us, engine_us, claims_us }),
    })
}
