//! Batch verification over generated families.

use rand::Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use tsr_core::engine::TokenConfig;
use tsr_core::graph::{families, smallest_blocking_set_upto};
use tsr_core::reductions::ReductionKind;
use tsr_core::Graph;

use crate::error::{HResult, HarnessError};
use crate::gen::{self, Variant};
use crate::json::{Source, SourceJson};
use crate::verify::{verify_lemma, LemmaReport, VerifyOptions};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize, clap::ValueEnum)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Path,
    Cycle,
    SplitRandom,
    PartitionedRandom,
    ExhaustiveSmall,
    NonblockingRandom,
}

/// What to generate. `sizes` is read per lemma: vertex counts for
/// tsconn-degree, `[p, q]` for tsreach-degree, `[k, n]` for the leafage
/// lemmas. `tokens` is `k` for tsconn-degree and the largest token count
/// for tsreach-degree.
#[derive(Clone, Debug, PartialEq)]
pub struct InstanceSpec {
    pub family: Family,
    pub sizes: Vec<usize>,
    pub seed: u64,
    pub count: usize,
    pub density: f64,
    pub tokens: usize,
}

impl Default for InstanceSpec {
    fn default() -> Self {
        InstanceSpec { family: Family::ExhaustiveSmall, sizes: Vec::new(), seed: 0, count: 10, density: 0.5, tokens: 2 }
    }
}

fn size(spec: &InstanceSpec, i: usize, name: &str) -> HResult<usize> {
    spec.sizes.get(i).copied().ok_or_else(|| HarnessError::Parse(format!("sizes needs a value for {name}")))
}

fn reach_pairs(g: &Graph, max_tokens: usize, out: &mut Vec<Source>) {
    for t in 0..=max_tokens {
        let sets = gen::independent_sets(g, t);
        for a in &sets {
            for b in &sets {
                out.push(Source::Reach { graph: g.clone(), initial: a.clone(), final_: b.clone() });
            }
        }
    }
}

fn seeded(spec: &InstanceSpec, i: usize) -> u64 {
    spec.seed.wrapping_add(i as u64)
}

/// Source instances of `spec` for `kind`, in generation order.
pub fn instances(kind: ReductionKind, spec: &InstanceSpec) -> HResult<Vec<Source>> {
    let mut out = Vec::new();
    let unsupported =
        || HarnessError::Parse(format!("family {:?} is not available for {}", spec.family, kind.name()));
    match kind {
        ReductionKind::TsConnDegree => {
            let k = spec.tokens;
            for &n in &spec.sizes {
                match spec.family {
                    Family::Path => out.push(Source::Dominating { graph: families::path(n), k }),
                    Family::Cycle => out.push(Source::Dominating { graph: families::cycle(n), k }),
                    Family::NonblockingRandom => {
                        for i in 0..spec.count {
                            let graph = gen::gen_nonblocking_instance(n, k, seeded(spec, i))?;
                            out.push(Source::Dominating { graph, k });
                        }
                    }
                    Family::ExhaustiveSmall => {
                        if n > 7 {
                            return Err(HarnessError::Parse("exhaustive graphs stop at 7 vertices".into()));
                        }
                        for graph in gen::all_graphs(n) {
                            if k >= 2 && smallest_blocking_set_upto(&graph, 2 * k - 1).is_none() {
                                out.push(Source::Dominating { graph, k });
                            }
                        }
                    }
                    _ => return Err(unsupported()),
                }
            }
        }
        ReductionKind::TsReachDegree => match spec.family {
            Family::Path | Family::Cycle => {
                for &n in &spec.sizes {
                    let g = if spec.family == Family::Path { families::path(n) } else { families::cycle(n) };
                    reach_pairs(&g, spec.tokens, &mut out);
                }
            }
            Family::ExhaustiveSmall => {
                let (pmax, qmax) = (size(spec, 0, "p")?, size(spec, 1, "q")?);
                for p in 0..=pmax {
                    for q in 0..=qmax {
                        for g in gen::all_split_graphs(p, q) {
                            reach_pairs(&g, spec.tokens, &mut out);
                        }
                    }
                }
            }
            Family::SplitRandom => {
                let (p, q) = (size(spec, 0, "p")?, size(spec, 1, "q")?);
                let mut r = gen::rng(spec.seed);
                while out.len() < spec.count {
                    let g = gen::gen_split(p, q, spec.density, &mut r);
                    let t = r.gen_range(0..=spec.tokens);
                    if let (Some(a), Some(b)) =
                        (gen::random_independent_set(&g, t, &mut r), gen::random_independent_set(&g, t, &mut r))
                    {
                        out.push(Source::Reach { graph: g, initial: a, final_: b });
                    } else if t == 0 || p + q == 0 {
                        let e = TokenConfig::new(&g, []).expect("empty");
                        out.push(Source::Reach { graph: g, initial: e.clone(), final_: e });
                    }
                }
            }
            _ => return Err(unsupported()),
        },
        ReductionKind::TsConnLeafage | ReductionKind::TsReachLeafage => {
            let (k, n) = (size(spec, 0, "k")?, size(spec, 1, "n")?);
            let variant = if kind == ReductionKind::TsReachLeafage { Variant::Clique } else { Variant::Is };
            match spec.family {
                Family::ExhaustiveSmall => {
                    out.extend(gen::all_partitioned(k, n, variant)?.into_iter().map(Source::Partitioned))
                }
                Family::PartitionedRandom => {
                    for i in 0..spec.count {
                        let pg = gen::gen_partitioned(k, n, spec.density, seeded(spec, i), variant)?;
                        out.push(Source::Partitioned(pg));
                    }
                }
                _ => return Err(unsupported()),
            }
        }
    }
    Ok(out)
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Agree,
    Disagree,
    ClaimFailure,
    /// The reduction refused the source (promise or parameter violation).
    Rejected,
    Budget,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct SweepItem {
    pub digest: String,
    pub status: Status,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

/// Everything needed to replay one failure with `tsr verify-lemma`.
#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct Bundle {
    pub lemma: String,
    pub source: SourceJson,
    pub report: LemmaReport,
    pub rerun: String,
}

#[derive(Serialize, Deserialize, Clone, Debug, PartialEq, Eq)]
#[serde(deny_unknown_fields)]
pub struct SweepReport {
    pub lemma: String,
    pub family: Family,
    pub instances: usize,
    pub agreed: usize,
    pub disagreed: usize,
    pub claim_failures: usize,
    pub rejected: usize,
    pub over_budget: usize,
    pub source_yes: usize,
    pub items: Vec<SweepItem>,
    pub counterexamples: Vec<Bundle>,
    /// Per-instance reports, kept in memory only.
    #[serde(skip)]
    pub reports: Vec<LemmaReport>,
}

impl SweepReport {
    pub fn all_agree(&self) -> bool {
        self.disagreed == 0 && self.claim_failures == 0 && self.over_budget == 0
    }
}

pub fn bundle_file_name(b: &Bundle) -> String {
    format!("{}-{}.json", b.lemma, &b.report.source_digest[..16])
}

pub fn sweep(kind: ReductionKind, spec: &InstanceSpec, opts: &VerifyOptions) -> HResult<SweepReport> {
    let sources = instances(kind, spec)?;
    let opts = VerifyOptions { timings: false, ..*opts };
    let mut results: Vec<(Source, String, HResult<LemmaReport>)> = sources
        .into_par_iter()
        .map(|s| {
            let digest = s.digest();
            let r = verify_lemma(kind, &s, &opts);
            (s, digest, r)
        })
        .collect();
    results.sort_by(|a, b| a.1.cmp(&b.1));

    let mut rep = SweepReport {
        lemma: kind.name().to_string(),
        family: spec.family,
        instances: results.len(),
        agreed: 0,
        disagreed: 0,
        claim_failures: 0,
        rejected: 0,
        over_budget: 0,
        source_yes: 0,
        items: Vec::new(),
        counterexamples: Vec::new(),
        reports: Vec::new(),
    };
    for (src, digest, r) in results {
        let (status, detail) = match r {
            Ok(report) => {
                if report.source_verdict == "yes" {
                    rep.source_yes += 1;
                }
                let status = if !report.agrees {
                    rep.disagreed += 1;
                    Status::Disagree
                } else if !report.claims_pass() {
                    rep.claim_failures += 1;
                    Status::ClaimFailure
                } else {
                    rep.agreed += 1;
                    Status::Agree
                };
                if status != Status::Agree {
                    let b = Bundle {
                        lemma: kind.name().to_string(),
                        source: src.to_json(),
                        report: report.clone(),
                        rerun: String::new(),
                    };
                    let rerun = format!("tsr verify-lemma {} --input {}", kind.name(), bundle_file_name(&b));
                    rep.counterexamples.push(Bundle { rerun, ..b });
                }
                rep.reports.push(report);
                (status, None)
            }
            Err(HarnessError::Core(e @ tsr_core::Error::Budget { .. })) => {
                rep.over_budget += 1;
                (Status::Budget, Some(e.to_string()))
            }
            Err(e) => {
                rep.rejected += 1;
                (Status::Rejected, Some(e.to_string()))
            }
        };
        rep.items.push(SweepItem { digest, status, detail });
    }
    Ok(rep)
}
