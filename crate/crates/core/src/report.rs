//! Corpus scanning: per-graph verification records as JSON Lines, a worker
//! pool with order-restoring output, and the scan summary.

use crate::claims::{verify_claims, ClaimReport};
use crate::connectivity::vertex_connectivity;
use crate::error::Error;
use crate::graph::{Cycle, Graph};
use crate::graph6::{emit_graph6, parse_graph6};
use crate::intersect::{
    bound_cycles, bound_paths, chen_bound, check_conjecture, check_separator_property,
    pair_stats_from, ConjectureVerdict, PairStats, SeparatorVerdict,
};
use crate::reduction::{verify_reduction, ReductionReport};
use crate::solve::{dirac_check, enumerate_longest, DiracVerdict, Kind, DEFAULT_ENUM_CAP};
use serde::Serialize;
use std::collections::BTreeMap;
use std::io::{BufRead, Write};
use std::sync::mpsc;
use std::sync::{Arc, Mutex};
use std::time::Instant;

/// Environment variable overriding the default enumeration cap.
pub const CAP_ENV_VAR: &str = "CYCLEMEET_CAP";

/// Which verification passes a scan runs per graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CheckSet {
    pub conjectures: bool,
    pub dirac: bool,
    pub separator: bool,
    pub reduction: bool,
    pub proofkit: bool,
}

impl CheckSet {
    pub fn default_scan() -> CheckSet {
        CheckSet {
            conjectures: true,
            dirac: true,
            separator: false,
            reduction: false,
            proofkit: false,
        }
    }

    pub fn all() -> CheckSet {
        CheckSet {
            conjectures: true,
            dirac: true,
            separator: true,
            reduction: true,
            proofkit: true,
        }
    }

    pub fn parse(list: &str) -> Result<CheckSet, Error> {
        let mut cs = CheckSet {
            conjectures: false,
            dirac: false,
            separator: false,
            reduction: false,
            proofkit: false,
        };
        for item in list.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            match item {
                "conjectures" => cs.conjectures = true,
                "dirac" => cs.dirac = true,
                "separator" => cs.separator = true,
                "reduction" => cs.reduction = true,
                "proofkit" => cs.proofkit = true,
                "all" => cs = CheckSet::all(),
                other => {
                    return Err(Error::InvalidArgument(format!(
                        "unknown check '{other}' (expected conjectures, dirac, separator, reduction, proofkit, all)"
                    )))
                }
            }
        }
        Ok(cs)
    }
}

#[derive(Debug, Clone)]
pub struct ScanOptions {
    pub checks: CheckSet,
    pub cap: usize,
    pub workers: usize,
    pub budget_ms: Option<u64>,
}

impl Default for ScanOptions {
    fn default() -> Self {
        ScanOptions {
            checks: CheckSet::default_scan(),
            cap: default_cap(),
            workers: 1,
            budget_ms: None,
        }
    }
}

/// The default enumeration cap, honoring the environment override.
pub fn default_cap() -> usize {
    std::env::var(CAP_ENV_VAR)
        .ok()
        .and_then(|v| v.parse().ok())
        .unwrap_or(DEFAULT_ENUM_CAP)
}

/// Aggregated claim outcomes over all checked cycle pairs of one graph.
#[derive(Debug, Clone, Serialize)]
pub struct ClaimsSummary {
    pub pairs_checked: usize,
    pub pairs_violated: usize,
    pub pairs_not_applicable: usize,
    /// first report with a violation, if any
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_violation: Option<ClaimReport>,
    pub truncated: bool,
}

/// One per-graph record of a scan or inspection.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub record_type: &'static str,
    pub graph6: String,
    pub n: usize,
    pub edge_count: usize,
    pub kappa: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub circumference: Option<usize>,
    pub longest_path_length: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub path_pairs: Option<PairStats>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cycle_pairs: Option<PairStats>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound_paths: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub bound_cycles: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chen_bound: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conjecture_paths: Option<ConjectureVerdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub conjecture_cycles: Option<ConjectureVerdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dirac: Option<DiracVerdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub separator: Option<SeparatorVerdict>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reduction: Option<ReductionReport>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub claims: Option<ClaimsSummary>,
    pub timed_out: bool,
    /// elapsed milliseconds; excluded from scan output so reports diff cleanly
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct ErrorRecord {
    pub record_type: &'static str,
    pub line: usize,
    pub error: String,
}

/// Per-check verdict tallies across a scan.
#[derive(Debug, Clone, Copy, Default, Serialize, PartialEq, Eq)]
pub struct CheckCounts {
    pub holds: usize,
    pub violated: usize,
    pub inconclusive: usize,
    pub not_applicable: usize,
}

#[derive(Debug, Clone, Default, Serialize, PartialEq, Eq)]
pub struct Summary {
    pub record_type: String,
    pub graphs: usize,
    pub line_errors: usize,
    pub conjecture_paths: CheckCounts,
    pub conjecture_cycles: CheckCounts,
    pub dirac: CheckCounts,
    pub separator: CheckCounts,
    pub reduction: CheckCounts,
    pub proofkit: CheckCounts,
}

impl Summary {
    pub fn new() -> Summary {
        Summary {
            record_type: "summary".into(),
            ..Default::default()
        }
    }

    pub fn violations(&self) -> usize {
        self.conjecture_paths.violated
            + self.conjecture_cycles.violated
            + self.dirac.violated
            + self.separator.violated
            + self.reduction.violated
            + self.proofkit.violated
    }

    fn absorb(&mut self, r: &VerificationReport) {
        self.graphs += 1;
        if let Some(v) = &r.conjecture_paths {
            tally_conjecture(&mut self.conjecture_paths, v, r.timed_out);
        }
        if let Some(v) = &r.conjecture_cycles {
            tally_conjecture(&mut self.conjecture_cycles, v, r.timed_out);
        }
        if let Some(v) = &r.dirac {
            match v {
                DiracVerdict::Holds { .. } => self.dirac.holds += 1,
                DiracVerdict::Violated { .. } => self.dirac.violated += 1,
                DiracVerdict::NotApplicable => self.dirac.not_applicable += 1,
            }
        }
        if let Some(v) = &r.separator {
            match v {
                SeparatorVerdict::Holds => self.separator.holds += 1,
                SeparatorVerdict::Violated => self.separator.violated += 1,
                SeparatorVerdict::NotApplicable { .. } => self.separator.not_applicable += 1,
            }
        }
        if let Some(v) = &r.reduction {
            if v.inconclusive {
                self.reduction.inconclusive += 1;
            } else if v.kappa_offset_ok
                && v.every_cone_cycle_through_apex
                && v.count_bijection_ok
                && v.intersection_offset_ok
            {
                self.reduction.holds += 1;
            } else {
                self.reduction.violated += 1;
            }
        }
        if let Some(v) = &r.claims {
            if v.pairs_violated > 0 {
                self.proofkit.violated += 1;
            } else if v.truncated {
                self.proofkit.inconclusive += 1;
            } else if v.pairs_checked == v.pairs_not_applicable {
                self.proofkit.not_applicable += 1;
            } else {
                self.proofkit.holds += 1;
            }
        }
    }
}

fn tally_conjecture(counts: &mut CheckCounts, v: &ConjectureVerdict, timed_out: bool) {
    if timed_out {
        counts.inconclusive += 1;
        return;
    }
    match v {
        ConjectureVerdict::Holds { .. } => counts.holds += 1,
        ConjectureVerdict::Violated { .. } => counts.violated += 1,
        ConjectureVerdict::Inconclusive { .. } => counts.inconclusive += 1,
    }
}

/// Runs every selected check on one graph. `detailed` keeps witnesses and
/// timing in the record (used by inspect); scans drop them for diffability.
pub fn verify_graph(g: &Graph, opts: &ScanOptions, detailed: bool) -> VerificationReport {
    let start = Instant::now();
    let over_budget =
        |start: &Instant| opts.budget_ms.map_or(false, |b| start.elapsed().as_millis() as u64 > b);

    let n = g.n();
    let kappa = vertex_connectivity(g);
    let paths = enumerate_longest(g, Kind::Path, opts.cap).ok();
    let cycles = enumerate_longest(g, Kind::Cycle, opts.cap).ok();
    let circumference = cycles.as_ref().filter(|c| !c.witnesses.is_empty()).map(|c| c.best_length);
    let longest_path_length = paths.as_ref().map_or(0, |p| p.best_length);

    let path_pairs = paths.as_ref().and_then(|p| pair_stats_from(p).ok());
    let cycle_pairs = cycles.as_ref().and_then(|c| pair_stats_from(c).ok());

    let bp = bound_paths(n, kappa).ok();
    let bc = bound_cycles(n, kappa).ok();

    let mut timed_out = over_budget(&start);

    let (conjecture_paths, conjecture_cycles) = if opts.checks.conjectures && !timed_out {
        let cp = bp.and_then(|r| check_conjecture(g, Kind::Path, r, opts.cap).ok());
        let cc = bc.and_then(|r| check_conjecture(g, Kind::Cycle, r, opts.cap).ok());
        (cp, cc)
    } else {
        (None, None)
    };
    timed_out |= over_budget(&start);

    let dirac = if opts.checks.dirac && !timed_out {
        Some(dirac_check(g))
    } else {
        None
    };

    let separator = if opts.checks.separator && !timed_out {
        cycle_pairs.as_ref().and_then(|cs| {
            if cs.truncated {
                return Some(SeparatorVerdict::NotApplicable {
                    reason: "enumeration truncated".into(),
                });
            }
            let c = Cycle::new(g, &cs.witness_pair.0).ok()?;
            let d = Cycle::new(g, &cs.witness_pair.1).ok()?;
            check_separator_property(g, &c, &d).ok()
        })
    } else {
        None
    };
    timed_out |= over_budget(&start);

    let reduction = if opts.checks.reduction && !timed_out {
        verify_reduction(g, opts.cap).ok()
    } else {
        None
    };
    timed_out |= over_budget(&start);

    let claims = if opts.checks.proofkit && !timed_out {
        cycles.as_ref().and_then(|cs| {
            if cs.witnesses.is_empty() {
                return None;
            }
            let parsed: Vec<Cycle> = cs
                .witnesses
                .iter()
                .filter_map(|w| Cycle::new(g, w).ok())
                .collect();
            let mut summary = ClaimsSummary {
                pairs_checked: 0,
                pairs_violated: 0,
                pairs_not_applicable: 0,
                first_violation: None,
                truncated: cs.truncated,
            };
            'outer: for i in 0..parsed.len() {
                for j in i + 1..parsed.len() {
                    match verify_claims(g, &parsed[i], &parsed[j], kappa) {
                        Ok(report) => {
                            summary.pairs_checked += 1;
                            if report.branch.starts_with("not-applicable") {
                                summary.pairs_not_applicable += 1;
                            }
                            if report.any_violation() {
                                summary.pairs_violated += 1;
                                if summary.first_violation.is_none() {
                                    summary.first_violation = Some(report);
                                }
                            }
                        }
                        Err(_) => {
                            // internal inconsistency aborts the instance only
                            summary.truncated = true;
                        }
                    }
                    if over_budget(&start) {
                        summary.truncated = true;
                        break 'outer;
                    }
                }
            }
            Some(summary)
        })
    } else {
        None
    };
    timed_out |= over_budget(&start);

    let mut report = VerificationReport {
        record_type: "graph",
        graph6: emit_graph6(g),
        n,
        edge_count: g.edge_count(),
        kappa,
        circumference,
        longest_path_length,
        path_pairs,
        cycle_pairs,
        bound_paths: bp,
        bound_cycles: bc,
        chen_bound: if kappa >= 2 { Some(chen_bound(kappa)) } else { None },
        conjecture_paths,
        conjecture_cycles,
        dirac,
        separator,
        reduction,
        claims,
        timed_out,
        wall_time_ms: None,
    };
    if detailed {
        report.wall_time_ms = Some(start.elapsed().as_millis() as u64);
    }
    report
}

fn process_line(line: &str, idx: usize, opts: &ScanOptions) -> String {
    match parse_graph6(line.trim()) {
        Ok(g) => {
            let report = verify_graph(&g, opts, false);
            serde_json::to_string(&report).expect("report serializes")
        }
        Err(e) => serde_json::to_string(&ErrorRecord {
            record_type: "error",
            line: idx + 1,
            error: e.to_string(),
        })
        .expect("error record serializes"),
    }
}

/// Scans a graph6 stream: one JSON record per input line, input order
/// preserved, summary record last. Byte-identical output for any worker
/// count.
pub fn run_scan<R: BufRead, W: Write>(
    input: R,
    output: &mut W,
    opts: &ScanOptions,
) -> Result<Summary, Error> {
    let lines: Vec<String> = input
        .lines()
        .collect::<Result<_, _>>()
        .map_err(Error::Io)?;
    let jobs: Vec<(usize, String)> = lines
        .into_iter()
        .filter(|l| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('#')
        })
        .enumerate()
        .collect();

    let workers = opts.workers.max(1).min(jobs.len().max(1));
    let mut results: BTreeMap<usize, String> = BTreeMap::new();
    if workers <= 1 {
        for (idx, line) in &jobs {
            results.insert(*idx, process_line(line, *idx, opts));
        }
    } else {
        let queue = Arc::new(Mutex::new(jobs.clone().into_iter()));
        let (tx, rx) = mpsc::channel::<(usize, String)>();
        std::thread::scope(|scope| {
            for _ in 0..workers {
                let queue = Arc::clone(&queue);
                let tx = tx.clone();
                let opts = opts.clone();
                scope.spawn(move || loop {
                    let job = queue.lock().unwrap().next();
                    let Some((idx, line)) = job else { break };
                    let record = process_line(&line, idx, &opts);
                    if tx.send((idx, record)).is_err() {
                        break;
                    }
                });
            }
            drop(tx);
            for (idx, record) in rx {
                results.insert(idx, record);
            }
        });
    }

    let mut summary = Summary::new();
    for (_, record) in &results {
        writeln!(output, "{record}").map_err(Error::Io)?;
        // re-absorb from the serialized record to keep one canonical path
        if let Ok(report) = serde_json::from_str::<serde_json::Value>(record) {
            match report["record_type"].as_str() {
                Some("error") => summary.line_errors += 1,
                Some("graph") => absorb_value(&mut summary, &report),
                _ => {}
            }
        }
    }
    writeln!(
        output,
        "{}",
        serde_json::to_string(&summary).expect("summary serializes")
    )
    .map_err(Error::Io)?;
    Ok(summary)
}

/// Summary accumulation from the serialized record (single writer owns the
/// tallies; workers never touch them).
fn absorb_value(summary: &mut Summary, v: &serde_json::Value) {
    summary.graphs += 1;
    let timed_out = v["timed_out"].as_bool().unwrap_or(false);
    let tally = |counts: &mut CheckCounts, verdict: &serde_json::Value| {
        match verdict["verdict"].as_str() {
            Some("holds") => counts.holds += 1,
            Some("violated") => counts.violated += 1,
            Some("inconclusive") => counts.inconclusive += 1,
            Some("not-applicable") => counts.not_applicable += 1,
            _ => {}
        }
    };
    if !v["conjecture_paths"].is_null() {
        if timed_out {
            summary.conjecture_paths.inconclusive += 1;
        } else {
            tally(&mut summary.conjecture_paths, &v["conjecture_paths"]);
        }
    }
    if !v["conjecture_cycles"].is_null() {
        if timed_out {
            summary.conjecture_cycles.inconclusive += 1;
        } else {
            tally(&mut summary.conjecture_cycles, &v["conjecture_cycles"]);
        }
    }
    if !v["dirac"].is_null() {
        tally(&mut summary.dirac, &v["dirac"]);
    }
    if !v["separator"].is_null() {
        tally(&mut summary.separator, &v["separator"]);
    }
    if !v["reduction"].is_null() {
        let r = &v["reduction"];
        if r["inconclusive"].as_bool() == Some(true) {
            summary.reduction.inconclusive += 1;
        } else if r["kappa_offset_ok"].as_bool() == Some(true)
            && r["every_cone_cycle_through_apex"].as_bool() == Some(true)
            && r["count_bijection_ok"].as_bool() == Some(true)
            && r["intersection_offset_ok"].as_bool() == Some(true)
        {
            summary.reduction.holds += 1;
        } else {
            summary.reduction.violated += 1;
        }
    }
    if !v["claims"].is_null() {
        let c = &v["claims"];
        let violated = c["pairs_violated"].as_u64().unwrap_or(0);
        let checked = c["pairs_checked"].as_u64().unwrap_or(0);
        let na = c["pairs_not_applicable"].as_u64().unwrap_or(0);
        if violated > 0 {
            summary.proofkit.violated += 1;
        } else if c["truncated"].as_bool() == Some(true) {
            summary.proofkit.inconclusive += 1;
        } else if checked == na {
            summary.proofkit.not_applicable += 1;
        } else {
            summary.proofkit.holds += 1;
        }
    }
}

// keep the method-based accumulation available for in-process callers
impl Summary {
    pub fn absorb_report(&mut self, r: &VerificationReport) {
        self.absorb(r);
    }
}
