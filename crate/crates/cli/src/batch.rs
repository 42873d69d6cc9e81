//! Corpus batch runner: a bounded worker pool analyzes graphs
//! independently, writes one certificate file per graph, and aggregates a
//! summary whose buckets are independent of the worker count. A per-graph
//! timeout records "unknown" for the affected dimensions instead of a
//! failure.

use anyhow::{anyhow, Result};
use serde::Serialize;
use snarklab_core::certificate::Certificate;
use snarklab_core::colouring::{heavy_pentagons, strong_snark};
use snarklab_core::cycle_cover::cover_from_4cover;
use snarklab_core::decomposition::canonical_decomposition;
use snarklab_core::defect::colouring_defect;
use snarklab_core::pm_cover::perfect_matching_index;
use snarklab_core::CubicGraph;
use std::collections::BTreeMap;
use std::path::Path;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::mpsc;
use std::sync::Mutex;
use std::time::Duration;

#[derive(Clone, Copy, Debug, Default)]
pub struct Tasks {
    pub defect: bool,
    pub pmi: bool,
    pub decompose: bool,
    pub scc: bool,
    pub audits: bool,
    pub strong: bool,
}

impl Tasks {
    pub fn parse(spec: &str) -> Result<Tasks> {
        let mut t = Tasks::default();
        for name in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            match name {
                "defect" => t.defect = true,
                "pmi" => t.pmi = true,
                "decompose" => t.decompose = true,
                "scc" => t.scc = true,
                "audits" => t.audits = true,
                "strong" => t.strong = true,
                "all" => {
                    t = Tasks {
                        defect: true,
                        pmi: true,
                        decompose: true,
                        scc: true,
                        audits: true,
                        strong: true,
                    }
                }
                other => return Err(anyhow!("unknown task {other:?}")),
            }
        }
        Ok(t)
    }
}

/// Counts per classification dimension; within each dimension the buckets
/// (including "unknown") sum to the number of successfully analyzed
/// graphs, and together with `failures` account for the whole corpus.
#[derive(Debug, Default, Serialize)]
pub struct CorpusSummary {
    pub total: usize,
    pub defect: BTreeMap<String, usize>,
    pub pmi: BTreeMap<String, usize>,
    pub heavy_pentagon: BTreeMap<String, usize>,
    pub strength: BTreeMap<String, usize>,
    pub audits: BTreeMap<String, usize>,
    pub failures: Vec<String>,
}

struct GraphOutcome {
    defect: String,
    pmi: String,
    heavy: String,
    strength: String,
    audits: String,
    cert: Box<Certificate>,
}

fn analyze(g: &CubicGraph, tasks: &Tasks, seed: Option<u64>) -> Result<GraphOutcome> {
    let mut cert = Certificate::new(g.clone(), seed);
    let mut out = GraphOutcome {
        defect: "unknown".into(),
        pmi: "unknown".into(),
        heavy: "unknown".into(),
        strength: "unknown".into(),
        audits: "unknown".into(),
        cert: Box::new(Certificate::new(g.clone(), seed)),
    };
    if tasks.defect || tasks.audits {
        let d = colouring_defect(g)?;
        out.defect = d.defect.to_string();
        if tasks.audits {
            // positional audit only applies to hexagonal cores
            out.audits = if d.hexagonal {
                let audit = snarklab_core::defect::core_position_audit(g, &d);
                if audit.all_pass() { "pass" } else { "fail" }
            } else {
                "not-applicable"
            }
            .to_string();
        }
        cert.analyses.defect = Some(d);
        out.heavy = if heavy_pentagons(g).is_empty() { "no" } else { "yes" }.to_string();
        cert.analyses.heavy_pentagon = Some(out.heavy == "yes");
    }
    if tasks.pmi {
        let pmi = perfect_matching_index(g, 5)?;
        out.pmi = match pmi.value() {
            Some(v) => v.to_string(),
            None => ">5".to_string(),
        };
        if tasks.scc {
            if let Some(cover) = pmi.cover().filter(|c| c.is_four_cover(g)) {
                cert.analyses.cover = Some(cover_from_4cover(g, cover)?);
            }
        }
        cert.analyses.pmi = Some(pmi);
    }
    if tasks.decompose {
        let tree = canonical_decomposition(g, seed.unwrap_or(0))?;
        cert.analyses.factors = Some(tree.factor_graphs().into_iter().cloned().collect());
    }
    if tasks.strong {
        // strength only classifies snarks
        match strong_snark(g) {
            Ok(strong) => {
                out.strength = if strong { "strong" } else { "weak" }.to_string();
                cert.analyses.strong = Some(strong);
            }
            Err(snarklab_core::Error::NotSnark) => out.strength = "not-applicable".into(),
            Err(e) => return Err(e.into()),
        }
    }
    out.cert = Box::new(cert);
    Ok(out)
}

fn with_timeout<T: Send + 'static>(
    budget: Option<Duration>,
    f: impl FnOnce() -> T + Send + 'static,
) -> Option<T> {
    let Some(budget) = budget else {
        return Some(f());
    };
    let (tx, rx) = mpsc::channel();
    // the worker is detached on timeout; it finishes in the background
    std::thread::spawn(move || {
        let _ = tx.send(f());
    });
    rx.recv_timeout(budget).ok()
}

pub fn run_batch(
    graphs: &[(usize, std::result::Result<CubicGraph, String>)],
    tasks: &Tasks,
    jobs: usize,
    timeout: Option<Duration>,
    seed: Option<u64>,
    out_dir: Option<&Path>,
) -> Result<CorpusSummary> {
    enum Slot {
        Pending,
        Done(Box<GraphOutcome>),
        TimedOut,
        Failed(String),
    }
    let slots: Vec<Mutex<Slot>> = graphs.iter().map(|_| Mutex::new(Slot::Pending)).collect();
    let next = AtomicUsize::new(0);
    std::thread::scope(|scope| {
        for _ in 0..jobs.min(graphs.len().max(1)) {
            scope.spawn(|| loop {
                let idx = next.fetch_add(1, Ordering::Relaxed);
                let Some((line, parsed)) = graphs.get(idx) else {
                    break;
                };
                let result = match parsed {
                    Err(e) => Slot::Failed(format!("graph {line}: {e}")),
                    Ok(g) => {
                        let g = g.clone();
                        let tasks = *tasks;
                        match with_timeout(timeout, move || analyze(&g, &tasks, seed)) {
                            None => Slot::TimedOut,
                            Some(Ok(outcome)) => Slot::Done(Box::new(outcome)),
                            Some(Err(e)) => Slot::Failed(format!("graph {line}: {e}")),
                        }
                    }
                };
                *slots[idx].lock().unwrap() = result;
            });
        }
    });
    let mut summary = CorpusSummary {
        total: graphs.len(),
        ..CorpusSummary::default()
    };
    for (i, slot) in slots.into_iter().enumerate() {
        let line = graphs[i].0;
        match slot.into_inner().unwrap() {
            Slot::Pending => unreachable!("worker pool exhausted the queue"),
            Slot::Failed(e) => summary.failures.push(e),
            Slot::TimedOut => {
                for dim in [
                    &mut summary.defect,
                    &mut summary.pmi,
                    &mut summary.heavy_pentagon,
                    &mut summary.strength,
                    &mut summary.audits,
                ] {
                    *dim.entry("unknown".into()).or_default() += 1;
                }
            }
            Slot::Done(outcome) => {
                *summary.defect.entry(outcome.defect).or_default() += 1;
                *summary.pmi.entry(outcome.pmi).or_default() += 1;
                *summary.heavy_pentagon.entry(outcome.heavy).or_default() += 1;
                *summary.strength.entry(outcome.strength).or_default() += 1;
                *summary.audits.entry(outcome.audits).or_default() += 1;
                if let Some(out) = out_dir {
                    crate::write_certificate(out, &format!("batch-{line}"), &outcome.cert)?;
                }
            }
        }
    }
    Ok(summary)
}
