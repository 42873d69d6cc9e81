//! Command-line front end: per-graph analyses as JSON lines on stdout,
//! batch runs over corpus files with per-graph certificates, and offline
//! certificate verification.
//!
//! Input files hold one graph per line (graph6 or jsonmg); `-` reads
//! stdin. Exit codes: 0 success, 2 verification failure, 1 usage or IO
//! error.

mod batch;

use anyhow::{anyhow, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use snarklab_core::certificate::{verify_certificate, Certificate};
use snarklab_core::construction::{apply_recipe, certify, random_recipe, Recipe};
use snarklab_core::cycle_cover::{
    cover_for_recipe, cover_from_4cover, cover_via_heavy_pentagon, exact_scc, verify_cover,
    CycleCover,
};
use snarklab_core::decomposition::canonical_decomposition;
use snarklab_core::defect::{colouring_defect, core_position_audit};
use snarklab_core::families;
use snarklab_core::graph::{isomorphic, parse_graph, serialize_graph, GraphFormat};
use snarklab_core::pm_cover::{char_audit_pi5, cut_parity_audit, find_4cover, perfect_matching_index};
use snarklab_core::CubicGraph;
use std::fmt;
use std::io::Read;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

/// Marker error for "the analysis ran, the claim did not verify" (exit 2,
/// as opposed to usage/IO problems which exit 1).
#[derive(Debug)]
pub struct VerificationFailure(pub String);

impl fmt::Display for VerificationFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "verification failed: {}", self.0)
    }
}

impl std::error::Error for VerificationFailure {}

#[derive(Parser)]
#[command(name = "snarklab", version, about = "cubic-graph uncolourability toolkit")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// graph encoding for inputs and outputs
    #[arg(long, global = true, default_value = "graph6")]
    format: GraphFormatArg,
    /// worker threads for batch analysis
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// seed for randomized operations (generation, decomposition order)
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// per-graph time budget in seconds; timed-out analyses report "unknown"
    #[arg(long, global = true)]
    timeout: Option<u64>,
    /// directory for per-graph certificate files
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum GraphFormatArg {
    Graph6,
    Jsonmg,
}

impl From<GraphFormatArg> for GraphFormat {
    fn from(f: GraphFormatArg) -> GraphFormat {
        match f {
            GraphFormatArg::Graph6 => GraphFormat::Graph6,
            GraphFormatArg::Jsonmg => GraphFormat::Jsonmg,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum SccStrategy {
    /// symmetric differences of a perfect-matching 4-cover (length 4m/3)
    #[value(name = "4cover")]
    FourCover,
    /// replay a generation recipe (length 4m/3 + 1)
    Recipe,
    /// inflate a heavy-pentagon vertex and contract back
    Pentagon,
    /// exhaustive cycle-space search, small graphs only
    Exact,
}

#[derive(Subcommand)]
enum Cmd {
    /// Parse graphs and report sizes
    Parse { input: Option<PathBuf> },
    /// Colouring defect with an optimal 3-array witness
    Defect { input: Option<PathBuf> },
    /// Perfect matching index, computed up to 5
    Pmi { input: Option<PathBuf> },
    /// Canonical decomposition into cyclically 4-edge-connected factors
    Decompose { input: Option<PathBuf> },
    /// Generate certified defect-3 index-5 graphs from random recipes
    Generate {
        /// operations per recipe
        #[arg(long, default_value_t = 2)]
        ops: usize,
        /// number of graphs (seeds seed, seed+1, ...)
        #[arg(long, default_value_t = 1)]
        count: usize,
        /// comma-separated piece pool: k4, k33, prism, cube
        #[arg(long, default_value = "k4,k33,prism,cube")]
        pool: String,
    },
    /// Build a short cycle cover
    SccBuild {
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "4cover")]
        strategy: SccStrategy,
        /// recipe JSON file (strategy "recipe")
        #[arg(long)]
        recipe: Option<PathBuf>,
    },
    /// Verify a cycle cover against a graph
    SccVerify {
        input: Option<PathBuf>,
        /// cycle cover JSON file
        #[arg(long)]
        cover: PathBuf,
    },
    /// Structural audits: core position, 4-cover cut parity, index-5 shape
    Audit { input: Option<PathBuf> },
    /// Analyze a corpus file and aggregate a summary
    Batch {
        input: Option<PathBuf>,
        /// comma-separated tasks: defect, pmi, decompose, scc, audits,
        /// strong, or "all"
        #[arg(long, default_value = "defect")]
        tasks: String,
    },
    /// Re-verify stored certificates
    VerifyCert { certs: Vec<PathBuf> },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap's own exit code conventions differ; usage errors are 1 here
            let is_help = matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            );
            let _ = e.print();
            return if is_help { ExitCode::SUCCESS } else { ExitCode::from(1) };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<VerificationFailure>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn read_input(path: Option<&Path>) -> Result<String> {
    match path {
        None => {
            let mut buf = String::new();
            std::io::stdin().read_to_string(&mut buf).context("reading stdin")?;
            Ok(buf)
        }
        Some(p) if p.as_os_str() == "-" => read_input(None),
        Some(p) => std::fs::read_to_string(p).with_context(|| format!("reading {}", p.display())),
    }
}

/// One graph per non-empty line; parse failures are reported per line, not
/// fatal, so a bad corpus line cannot hide the rest.
fn read_graphs(
    path: Option<&Path>,
    format: GraphFormat,
) -> Result<Vec<(usize, std::result::Result<CubicGraph, String>)>> {
    let text = read_input(path)?;
    Ok(text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .enumerate()
        .map(|(i, line)| (i, parse_graph(line, format).map_err(|e| e.to_string())))
        .collect())
}

fn print_json(value: &serde_json::Value) {
    println!("{value}");
}

pub fn write_certificate(out: &Path, stem: &str, cert: &Certificate) -> Result<()> {
    std::fs::create_dir_all(out)
        .with_context(|| format!("creating {}", out.display()))?;
    let path = out.join(format!("{stem}.json"));
    let json = serde_json::to_string_pretty(cert)?;
    std::fs::write(&path, json).with_context(|| format!("writing {}", path.display()))?;
    Ok(())
}

fn parse_pool(spec: &str) -> Result<Vec<CubicGraph>> {
    spec.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|name| match name {
            "k4" => Ok(families::k4()),
            "k33" => Ok(families::k33()),
            "prism" => Ok(families::prism3()),
            "cube" => Ok(families::cube()),
            other => Err(anyhow!("unknown pool piece {other:?} (want k4, k33, prism, cube)")),
        })
        .collect()
}

fn run(cli: Cli) -> Result<()> {
    let format: GraphFormat = cli.format.into();
    match &cli.cmd {
        Cmd::Parse { input } => {
            let graphs = read_graphs(input.as_deref(), format)?;
            let mut bad = 0usize;
            for (i, g) in &graphs {
                match g {
                    Ok(g) => print_json(&json!({
                        "index": i,
                        "n": g.num_vertices(),
                        "m": g.num_edges(),
                        "graph": serialize_graph(g, format)?,
                    })),
                    Err(e) => {
                        bad += 1;
                        print_json(&json!({ "index": i, "error": e }));
                    }
                }
            }
            if bad > 0 {
                return Err(anyhow!("{bad} of {} lines failed to parse", graphs.len()));
            }
            Ok(())
        }
        Cmd::Defect { input } => {
            for_each_graph(input.as_deref(), format, |i, g| {
                let cert = colouring_defect(g)?;
                print_json(&json!({
                    "index": i,
                    "defect": cert.defect,
                    "hexagonal": cert.hexagonal,
                    "certificate": serde_json::to_value(&cert)?,
                }));
                if let Some(out) = &cli.out {
                    let mut file = Certificate::new(g.clone(), cli.seed);
                    file.analyses.defect = Some(cert);
                    write_certificate(out, &format!("defect-{i}"), &file)?;
                }
                Ok(())
            })
        }
        Cmd::Pmi { input } => {
            for_each_graph(input.as_deref(), format, |i, g| {
                let pmi = perfect_matching_index(g, 5)?;
                print_json(&json!({
                    "index": i,
                    "pmi": pmi.value(),
                    "result": serde_json::to_value(&pmi)?,
                }));
                if let Some(out) = &cli.out {
                    let mut file = Certificate::new(g.clone(), cli.seed);
                    file.analyses.pmi = Some(pmi);
                    write_certificate(out, &format!("pmi-{i}"), &file)?;
                }
                Ok(())
            })
        }
        Cmd::Decompose { input } => {
            for_each_graph(input.as_deref(), format, |i, g| {
                let tree = canonical_decomposition(g, cli.seed.unwrap_or(0))?;
                let root = tree.reassemble()?;
                if isomorphic(&root, g).is_none() {
                    return Err(VerificationFailure("reassembly does not round-trip".into()).into());
                }
                let factors: Vec<String> = tree
                    .factor_graphs()
                    .iter()
                    .map(|f| serialize_graph(f, format))
                    .collect::<snarklab_core::Result<_>>()?;
                print_json(&json!({
                    "index": i,
                    "factors": factors,
                    "kinds": serde_json::to_value(&tree.kinds)?,
                    "reassembles": true,
                }));
                if let Some(out) = &cli.out {
                    let mut file = Certificate::new(g.clone(), cli.seed);
                    file.analyses.factors =
                        Some(tree.factor_graphs().into_iter().cloned().collect());
                    write_certificate(out, &format!("decompose-{i}"), &file)?;
                }
                Ok(())
            })
        }
        Cmd::Generate { ops, count, pool } => {
            let pool = parse_pool(pool)?;
            let base_seed = cli.seed.unwrap_or(0);
            for k in 0..*count {
                let seed = base_seed + k as u64;
                let recipe = random_recipe(seed, *ops, &pool)?;
                let applied = apply_recipe(&recipe)?;
                let cert = certify(&applied.graph, &recipe, Some(seed))
                    .map_err(|e| VerificationFailure(e.to_string()))?;
                print_json(&json!({
                    "seed": seed,
                    "n": applied.graph.num_vertices(),
                    "m": applied.graph.num_edges(),
                    "graph": serialize_graph(&applied.graph, format)?,
                }));
                if let Some(out) = &cli.out {
                    write_certificate(out, &format!("generated-{seed}"), &cert)?;
                }
            }
            Ok(())
        }
        Cmd::SccBuild { input, strategy, recipe } => {
            let recipe: Option<Recipe> = match recipe {
                Some(path) => {
                    let text = std::fs::read_to_string(path)
                        .with_context(|| format!("reading {}", path.display()))?;
                    Some(serde_json::from_str(&text).context("parsing recipe JSON")?)
                }
                None => None,
            };
            for_each_graph(input.as_deref(), format, |i, g| {
                let cover: Option<CycleCover> = match strategy {
                    SccStrategy::FourCover => {
                        let Some(p) = find_4cover(g)? else {
                            return Err(VerificationFailure("no 4-cover exists".into()).into());
                        };
                        Some(cover_from_4cover(g, &p)?)
                    }
                    SccStrategy::Recipe => {
                        let r = recipe
                            .as_ref()
                            .ok_or_else(|| anyhow!("--strategy recipe needs --recipe FILE"))?;
                        Some(cover_for_recipe(g, r).map_err(|e| VerificationFailure(e.to_string()))?)
                    }
                    SccStrategy::Pentagon => cover_via_heavy_pentagon(g)
                        .map_err(|e| VerificationFailure(e.to_string()))?,
                    SccStrategy::Exact => {
                        let len = exact_scc(g, 14)?;
                        print_json(&json!({ "index": i, "length": len, "exact": true }));
                        None
                    }
                };
                if let Some(cover) = cover {
                    let report = verify_cover(g, &cover)
                        .map_err(|e| VerificationFailure(e.to_string()))?;
                    print_json(&json!({
                        "index": i,
                        "length": cover.length,
                        "bound": serde_json::to_value(&report.bound)?,
                        "cover": serde_json::to_value(&cover)?,
                    }));
                    if let Some(out) = &cli.out {
                        let mut file = Certificate::new(g.clone(), cli.seed);
                        file.analyses.cover = Some(cover);
                        write_certificate(out, &format!("scc-{i}"), &file)?;
                    }
                } else if matches!(strategy, SccStrategy::Pentagon) {
                    print_json(&json!({ "index": i, "cover": null }));
                }
                Ok(())
            })
        }
        Cmd::SccVerify { input, cover } => {
            let text = std::fs::read_to_string(cover)
                .with_context(|| format!("reading {}", cover.display()))?;
            let cover: CycleCover = serde_json::from_str(&text).context("parsing cover JSON")?;
            for_each_graph(input.as_deref(), format, |i, g| {
                let report =
                    verify_cover(g, &cover).map_err(|e| VerificationFailure(e.to_string()))?;
                print_json(&json!({
                    "index": i,
                    "length": cover.length,
                    "report": serde_json::to_value(&report)?,
                }));
                Ok(())
            })
        }
        Cmd::Audit { input } => {
            for_each_graph(input.as_deref(), format, |i, g| {
                let mut clauses = Vec::new();
                let cert = colouring_defect(g)?;
                if cert.hexagonal {
                    let audit = core_position_audit(g, &cert);
                    clauses.extend(audit.clauses);
                }
                if let Some(p) = find_4cover(g)? {
                    clauses.extend(cut_parity_audit(g, &p));
                }
                let shape = if cert.defect == 3 {
                    match char_audit_pi5(g) {
                        Ok(audit) => {
                            if !audit.pass {
                                clauses.push(snarklab_core::defect::AuditClause {
                                    name: "index-5-shape".into(),
                                    checked: audit.ops.len(),
                                    pass: false,
                                });
                            }
                            Some(serde_json::to_value(&audit)?)
                        }
                        Err(snarklab_core::Error::PreconditionFailed(_)) => None,
                        Err(e) => return Err(e.into()),
                    }
                } else {
                    None
                };
                let pass = clauses.iter().all(|c| c.pass);
                print_json(&json!({
                    "index": i,
                    "defect": cert.defect,
                    "clauses": serde_json::to_value(&clauses)?,
                    "shape": shape,
                    "pass": pass,
                }));
                if !pass {
                    return Err(VerificationFailure(format!("audit clauses failed on graph {i}")).into());
                }
                Ok(())
            })
        }
        Cmd::Batch { input, tasks } => {
            let tasks = batch::Tasks::parse(tasks)?;
            let graphs = read_graphs(input.as_deref(), format)?;
            let summary = batch::run_batch(
                &graphs,
                &tasks,
                cli.jobs.max(1),
                cli.timeout.map(std::time::Duration::from_secs),
                cli.seed,
                cli.out.as_deref(),
            )?;
            print_json(&serde_json::to_value(&summary)?);
            Ok(())
        }
        Cmd::VerifyCert { certs } => {
            if certs.is_empty() {
                return Err(anyhow!("no certificate files given"));
            }
            let mut invalid = 0usize;
            for path in certs {
                let text = std::fs::read_to_string(path)
                    .with_context(|| format!("reading {}", path.display()))?;
                let cert: Certificate = serde_json::from_str(&text)
                    .with_context(|| format!("parsing {}", path.display()))?;
                let valid = verify_certificate(&cert)?;
                print_json(&json!({ "file": path.display().to_string(), "valid": valid }));
                if !valid {
                    invalid += 1;
                }
            }
            if invalid > 0 {
                return Err(VerificationFailure(format!("{invalid} certificate(s) invalid")).into());
            }
            Ok(())
        }
    }
}

/// Runs `f` on every successfully parsed graph; a parse failure or an
/// analysis error aborts with context naming the graph.
fn for_each_graph(
    input: Option<&Path>,
    format: GraphFormat,
    mut f: impl FnMut(usize, &CubicGraph) -> Result<()>,
) -> Result<()> {
    let graphs = read_graphs(input, format)?;
    if graphs.is_empty() {
        return Err(anyhow!("no graphs in input"));
    }
    for (i, g) in &graphs {
        match g {
            Ok(g) => f(*i, g).with_context(|| format!("graph {i}"))?,
            Err(e) => return Err(anyhow!("graph {i}: {e}")),
        }
    }
    Ok(())
}
