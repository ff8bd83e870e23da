//! Command-line surface of `tsr`.

use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use tsr_core::chordal::{build_clique_tree, recognize_chordal};
use tsr_core::engine::{ts_connected, ts_reachable, Connectivity, TokenConfig, DEFAULT_BUDGET};
use tsr_core::reductions::ReductionKind;

use crate::dot;
use crate::error::{HResult, HarnessError};
use crate::gen::{self, Variant};
use crate::json::{self, CliqueTreeJson, Source};
use crate::sweep::{self, bundle_file_name, Family, InstanceSpec};
use crate::verify::{self, VerifyOptions};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_DISAGREE: i32 = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Dot,
}

#[derive(Parser, Debug)]
#[command(name = "tsr", version, about = "Token sliding on chordal graphs: solver, reductions and lemma checks")]
pub struct Cli {
    /// Maximum number of configurations any search may store.
    #[arg(long, global = true, default_value_t = DEFAULT_BUDGET)]
    pub budget: u64,
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

fn parse_kind(s: &str) -> Result<ReductionKind, String> {
    ReductionKind::from_name(s).ok_or_else(|| {
        let names: Vec<&str> = ReductionKind::ALL.iter().map(|k| k.name()).collect();
        format!("expected one of {}", names.join(", "))
    })
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Recognize chordality and print a perfect elimination order.
    CheckChordal {
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Clique tree of a chordal graph.
    CliqueTree {
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Is TS_k(G) connected?
    TsConn {
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(short, long)]
        k: usize,
    },
    /// Shortest slide sequence between two independent sets.
    TsReach {
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        from: Vec<u32>,
        #[arg(long, value_delimiter = ',', num_args = 0..)]
        to: Vec<u32>,
    },
    /// Compile a source instance into a token-sliding artifact.
    Reduce {
        #[arg(value_parser = parse_kind)]
        which: ReductionKind,
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Check one lemma end to end on a source instance or a counterexample bundle.
    VerifyLemma {
        #[arg(value_parser = parse_kind)]
        which: ReductionKind,
        #[arg(long)]
        input: Option<PathBuf>,
        /// Include wall-clock timings in the report.
        #[arg(long)]
        timings: bool,
    },
    /// Run verify-lemma over a generated family.
    Sweep {
        #[arg(value_parser = parse_kind)]
        which: ReductionKind,
        #[arg(long, value_enum, default_value_t = Family::ExhaustiveSmall)]
        family: Family,
        #[arg(long, value_delimiter = ',')]
        sizes: Vec<usize>,
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        #[arg(long, default_value_t = 2)]
        tokens: usize,
        /// Directory receiving one bundle file per failure.
        #[arg(long)]
        out_dir: Option<PathBuf>,
    },
    /// Generate a source instance.
    Gen {
        #[command(subcommand)]
        kind: GenKind,
    },
}

#[derive(Subcommand, Debug)]
pub enum GenKind {
    /// Graph with no blocking set of size at most 2k-1, plus k.
    Nonblocking {
        #[arg(short)]
        n: usize,
        #[arg(short)]
        k: usize,
    },
    /// Partitioned graph with independent classes.
    Partitioned {
        #[arg(short)]
        k: usize,
        #[arg(short)]
        n: usize,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        #[arg(long, value_enum, default_value_t = GenVariant::Is)]
        variant: GenVariant,
    },
    /// Split graph with two random independent sets of equal size.
    Split {
        #[arg(short)]
        p: usize,
        #[arg(short)]
        q: usize,
        #[arg(long, default_value_t = 0.5)]
        density: f64,
        #[arg(long, default_value_t = 1)]
        tokens: usize,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum GenVariant {
    Is,
    Clique,
}

fn read_input(path: &Option<PathBuf>) -> HResult<String> {
    match path {
        Some(p) if p != Path::new("-") => Ok(std::fs::read_to_string(p)?),
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s)?;
            Ok(s)
        }
    }
}

/// Accepts a bare source instance or a counterexample bundle.
fn read_source(path: &Option<PathBuf>) -> HResult<Source> {
    let v: Value = serde_json::from_str(&read_input(path)?)?;
    let src = match v.get("source") {
        Some(inner) if v.get("lemma").is_some() => inner.clone(),
        _ => v,
    };
    Source::from_json(&serde_json::from_value(src)?)
}

fn no_dot(cmd: &str) -> HarnessError {
    HarnessError::Parse(format!("{cmd} has no dot output"))
}

/// Runs one parsed command, writing results to `out`; returns the exit code.
pub fn run(cli: &Cli, out: &mut dyn Write) -> HResult<i32> {
    let budget = cli.budget;
    let dot_out = cli.format == Format::Dot;
    let mut code = EXIT_OK;
    let text = match &cli.command {
        Command::CheckChordal { input } => {
            let g = json::graph_from_json(&read_input(input)?)?;
            if dot_out {
                dot::graph_dot(&g)
            } else {
                let order = recognize_chordal(&g);
                json::to_pretty(&json!({
                    "chordal": order.is_some(),
                    "elimination_order": order.map(|o| o.0),
                }))
            }
        }
        Command::CliqueTree { input } => {
            let g = json::graph_from_json(&read_input(input)?)?;
            let ct = build_clique_tree(&g)?;
            if dot_out {
                dot::clique_tree_dot(&ct, None)
            } else {
                json::to_pretty(&CliqueTreeJson::from_tree(&ct))
            }
        }
        Command::TsConn { input, k } => {
            let g = json::graph_from_json(&read_input(input)?)?;
            if dot_out {
                dot::ts_graph_dot(&g, *k, budget)?
            } else {
                let v = match ts_connected(&g, *k, budget)? {
                    Connectivity::Connected => json!({"k": k, "verdict": "connected"}),
                    Connectivity::Empty => json!({"k": k, "verdict": "empty"}),
                    Connectivity::Disconnected(a, b) => json!({
                        "k": k,
                        "verdict": "disconnected",
                        "witness": [a.tokens(), b.tokens()],
                    }),
                };
                json::to_pretty(&v)
            }
        }
        Command::TsReach { input, from, to } => {
            let g = json::graph_from_json(&read_input(input)?)?;
            let a = TokenConfig::new(&g, from.iter().copied())?;
            let b = TokenConfig::new(&g, to.iter().copied())?;
            let path = ts_reachable(&g, &a, &b, budget)?;
            if dot_out {
                dot::ts_graph_dot(&g, a.len(), budget)?
            } else {
                let slides: Option<Vec<[u32; 2]>> = path.map(|p| p.slides.iter().map(|s| [s.from, s.to]).collect());
                json::to_pretty(&json!({
                    "reachable": slides.is_some(),
                    "length": slides.as_ref().map(Vec::len),
                    "slides": slides,
                }))
            }
        }
        Command::Reduce { which, input } => {
            let src = read_source(input)?;
            let a = verify::reduce(*which, &src)?;
            if dot_out {
                dot::artifact_dot(&a)
            } else {
                json::to_pretty(&json::ArtifactJson::from_artifact(&a))
            }
        }
        Command::VerifyLemma { which, input, timings } => {
            if dot_out {
                return Err(no_dot("verify-lemma"));
            }
            let src = read_source(input)?;
            let report = verify::verify_lemma(*which, &src, &VerifyOptions { budget, timings: *timings })?;
            if !report.ok() {
                code = EXIT_DISAGREE;
            }
            json::to_pretty(&report)
        }
        Command::Sweep { which, family, sizes, count, density, tokens, out_dir } => {
            if dot_out {
                return Err(no_dot("sweep"));
            }
            let spec = InstanceSpec {
                family: *family,
                sizes: sizes.clone(),
                seed: cli.seed,
                count: *count,
                density: *density,
                tokens: *tokens,
            };
            let report = sweep::sweep(*which, &spec, &VerifyOptions { budget, timings: false })?;
            if let Some(dir) = out_dir {
                std::fs::create_dir_all(dir)?;
                for b in &report.counterexamples {
                    std::fs::write(dir.join(bundle_file_name(b)), json::to_pretty(b) + "\n")?;
                }
            }
            if report.disagreed > 0 || report.claim_failures > 0 {
                code = EXIT_DISAGREE;
            } else if report.over_budget > 0 {
                code = EXIT_BUDGET;
            }
            json::to_pretty(&report)
        }
        Command::Gen { kind } => {
            if dot_out {
                return Err(no_dot("gen"));
            }
            let src = generate(kind, cli.seed)?;
            src.canonical()
        }
    };
    writeln!(out, "{}", text.trim_end())?;
    Ok(code)
}

pub fn generate(kind: &GenKind, seed: u64) -> HResult<Source> {
    Ok(match *kind {
        GenKind::Nonblocking { n, k } => Source::Dominating { graph: gen::gen_nonblocking_instance(n, k, seed)?, k },
        GenKind::Partitioned { k, n, density, variant } => {
            let v = if variant == GenVariant::Clique { Variant::Clique } else { Variant::Is };
            Source::Partitioned(gen::gen_partitioned(k, n, density, seed, v)?)
        }
        GenKind::Split { p, q, density, tokens } => {
            let mut r = gen::rng(seed);
            let graph = gen::gen_split(p, q, density, &mut r);
            let pick = |r: &mut _| {
                gen::random_independent_set(&graph, tokens, r)
                    .ok_or_else(|| HarnessError::Generation(format!("no independent set of size {tokens}")))
            };
            let initial = pick(&mut r)?;
            let final_ = pick(&mut r)?;
            Source::Reach { graph, initial, final_ }
        }
    })
}

/// Parses `args`, runs, and maps errors to exit codes, writing diagnostics
/// to `err`.
pub fn main_with<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = write!(err, "{e}");
            return if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
        }
    };
    match run(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}
