//! The audit engine: evaluate every requested bound on every corpus graph,
//! compare with the exact index of the constructed transform, and emit one
//! verdict row per `(graph, pattern, kind, variant)` — plus the structural
//! crosschecks (constructed vs claimed degrees, eccentricities vs caps,
//! complement degree identity) and the CSV/JSON report writers.
//!
//! Determinism contract: for a fixed corpus spec and options, reports are
//! byte-identical across runs and across `--jobs` values. Graphs are pulled
//! from the corpus in order, processed in fixed-size chunks (optionally on a
//! rayon pool), and re-emitted in input order; nothing in a row depends on
//! thread timing, and headers carry no timestamps.

use std::io::Write;

use num_rational::BigRational;
use rayon::prelude::*;
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::bounds::{bound_value, variants_for, BoundKind, BoundOutcome, Variant};
use crate::corpus::{CorpusError, CorpusSpec, GENERATOR};
use crate::graph::Graph;
use crate::graph6::encode_graph6;
use crate::invariants::{
    degree_invariants, ecc_invariants, edge_ecc_invariants, EccInvariants,
};
use crate::ratio::{fmt_rat, rat_int};
use crate::transform::{apply, ecc_caps, predicted_degrees, Provenance, SignPattern};

/// Graphs per work unit handed to the thread pool.
const CHUNK: usize = 512;

/// A failed audit run: either the corpus broke or the output did.
#[derive(Debug, Error)]
pub enum AuditError {
    #[error(transparent)]
    Corpus(#[from] CorpusError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Outcome of comparing one exact index against one bound.
///
/// Rules, in order: a graph that is disconnected is skipped entirely —
/// every cell `undef`, verdict `undefined`. A connected graph with no edges
/// is skipped with verdict `inapplicable` (the bound families assume
/// edge-vertices exist), exact still reported honestly. Otherwise: exact
/// undefined (disconnected transform) → `undefined`; bound guarded off →
/// `inapplicable`; else compare exactly.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Holds,
    Violated,
    Undefined,
    Inapplicable,
}

impl Verdict {
    /// Report name.
    pub fn name(self) -> &'static str {
        match self {
            Verdict::Holds => "holds",
            Verdict::Violated => "violated",
            Verdict::Undefined => "undefined",
            Verdict::Inapplicable => "inapplicable",
        }
    }
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl Serialize for Verdict {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

/// One audit verdict. `n`/`m` are the order/size of the *input* graph;
/// `exact` is the index of the transform (`None` = undefined), `bound` the
/// formula value, `slack = bound - exact` when both exist.
#[derive(Debug, Clone, PartialEq)]
pub struct AuditRow {
    pub graph6: String,
    pub n: u64,
    pub m: u64,
    pub pattern: SignPattern,
    pub kind: BoundKind,
    pub variant: Variant,
    pub transform_connected: bool,
    pub exact: Option<BigRational>,
    pub bound: BoundOutcome,
    pub slack: Option<BigRational>,
    pub verdict: Verdict,
}

fn opt_rat_text(x: &Option<BigRational>) -> String {
    x.as_ref().map(fmt_rat).unwrap_or_else(|| "undef".to_string())
}

fn bound_text(b: &BoundOutcome) -> String {
    match b {
        BoundOutcome::Value(v) => fmt_rat(v),
        BoundOutcome::Inapplicable => "inapplicable".to_string(),
        BoundOutcome::Undefined => "undef".to_string(),
    }
}

impl Serialize for AuditRow {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("AuditRow", 11)?;
        s.serialize_field("graph6", &self.graph6)?;
        s.serialize_field("n", &self.n)?;
        s.serialize_field("m", &self.m)?;
        s.serialize_field("pattern", &self.pattern)?;
        s.serialize_field("kind", &self.kind)?;
        s.serialize_field("variant", &self.variant)?;
        s.serialize_field("transform_connected", &self.transform_connected)?;
        s.serialize_field("exact", &opt_rat_text(&self.exact))?;
        s.serialize_field("bound", &bound_text(&self.bound))?;
        s.serialize_field("slack", &opt_rat_text(&self.slack))?;
        s.serialize_field("verdict", &self.verdict)?;
        s.end()
    }
}

/// Which structural property a [`CrosscheckRow`] checks.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CheckKind {
    /// Constructed degree equals the family's claimed degree (`match` is
    /// equality).
    Degree,
    /// Constructed eccentricity is at most the pattern's cap (`match` is
    /// `<=`); emitted only when the transform is connected.
    EccCap,
    /// Degrees of the transform and its all-signs-flipped partner sum to
    /// `n + m - 1` at every vertex (`match` is equality); emitted once per
    /// unordered pattern pair.
    ComplementDegreeSum,
}

impl CheckKind {
    /// Report name.
    pub fn name(self) -> &'static str {
        match self {
            CheckKind::Degree => "degree",
            CheckKind::EccCap => "ecc_cap",
            CheckKind::ComplementDegreeSum => "complement_degree_sum",
        }
    }
}

impl std::fmt::Display for CheckKind {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// One structural crosscheck comparison at one transform vertex.
#[derive(Debug, Clone, PartialEq)]
pub struct CrosscheckRow {
    pub graph6: String,
    pub pattern: SignPattern,
    pub index: usize,
    pub provenance: Provenance,
    pub check: CheckKind,
    pub actual: i64,
    pub expected: i64,
    pub matched: bool,
}

impl Serialize for CrosscheckRow {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("CrosscheckRow", 8)?;
        s.serialize_field("graph6", &self.graph6)?;
        s.serialize_field("pattern", &self.pattern)?;
        s.serialize_field("index", &self.index)?;
        s.serialize_field("provenance", &self.provenance)?;
        s.serialize_field("check", self.check.name())?;
        s.serialize_field("actual", &self.actual)?;
        s.serialize_field("expected", &self.expected)?;
        s.serialize_field("match", &self.matched)?;
        s.end()
    }
}

/// What to audit. Construct through [`AuditOptions::new`] (or
/// [`AuditOptions::all`]), which dedups and fixes report order.
#[derive(Debug, Clone)]
pub struct AuditOptions {
    patterns: Vec<SignPattern>,
    kinds: Vec<BoundKind>,
    variants: Vec<Variant>,
    jobs: usize,
}

impl AuditOptions {
    /// Normalizes the requested sets into report order (input order and
    /// duplicates are irrelevant). Empty slices mean "all". `jobs` is
    /// clamped to at least 1.
    pub fn new(
        patterns: &[SignPattern],
        kinds: &[BoundKind],
        variants: &[Variant],
        jobs: usize,
    ) -> AuditOptions {
        let pick = |requested: &[SignPattern]| {
            SignPattern::ALL
                .into_iter()
                .filter(|p| requested.is_empty() || requested.contains(p))
                .collect()
        };
        AuditOptions {
            patterns: pick(patterns),
            kinds: BoundKind::ALL
                .into_iter()
                .filter(|k| kinds.is_empty() || kinds.contains(k))
                .collect(),
            variants: [Variant::Statement, Variant::Proof]
                .into_iter()
                .filter(|v| variants.is_empty() || variants.contains(v))
                .collect(),
            jobs: jobs.max(1),
        }
    }

    /// Every pattern, kind, and variant, single-threaded.
    pub fn all() -> AuditOptions {
        AuditOptions::new(&[], &[], &[], 1)
    }

    /// Same selection on `jobs` worker threads.
    pub fn with_jobs(mut self, jobs: usize) -> AuditOptions {
        self.jobs = jobs.max(1);
        self
    }

    /// Patterns in report order.
    pub fn patterns(&self) -> &[SignPattern] {
        &self.patterns
    }
}

fn extract_exact(kind: BoundKind, inv: &EccInvariants) -> Option<BigRational> {
    match kind {
        BoundKind::IEci => inv.i_eci.clone(),
        BoundKind::M1Eci => Some(rat_int(inv.m1_eci)),
        BoundKind::Eci1 => Some(rat_int(inv.eci1)),
        BoundKind::M1Eci1 => Some(rat_int(inv.m1_eci1)),
    }
}

/// Audits a single graph; rows in report order. This is the unit the
/// parallel engine distributes.
pub fn process_graph(g: &Graph, opts: &AuditOptions) -> Vec<AuditRow> {
    let graph6 = encode_graph6(g);
    let n = g.n() as u64;
    let m = g.m() as u64;
    let connected = g.is_connected();
    let evaluated = connected && m > 0;
    let bundles = evaluated.then(|| {
        (
            degree_invariants(g),
            ecc_invariants(g).expect("connected input"),
            edge_ecc_invariants(g).expect("connected input"),
        )
    });
    let mut rows = Vec::new();
    for &pattern in &opts.patterns {
        let t = apply(g, pattern);
        let transform_connected = t.graph.is_connected();
        // Exact indices of the transform; not computed for skipped
        // (disconnected) inputs, undefined for disconnected transforms.
        let t_inv = if connected { ecc_invariants(&t.graph) } else { None };
        for &kind in &opts.kinds {
            for &variant in variants_for(pattern, kind) {
                if !opts.variants.contains(&variant) {
                    continue;
                }
                let (exact, bound, verdict) = if !connected {
                    (None, BoundOutcome::Undefined, Verdict::Undefined)
                } else {
                    let exact = t_inv.as_ref().and_then(|inv| extract_exact(kind, inv));
                    if m == 0 {
                        (exact, BoundOutcome::Inapplicable, Verdict::Inapplicable)
                    } else {
                        let (d, e, ee) = bundles.as_ref().expect("evaluated input");
                        let bound =
                            bound_value(pattern, kind, variant, d, Some(e), Some(ee));
                        let verdict = match (&exact, &bound) {
                            (None, _) => Verdict::Undefined,
                            (Some(_), BoundOutcome::Inapplicable) => Verdict::Inapplicable,
                            (Some(_), BoundOutcome::Undefined) => Verdict::Undefined,
                            (Some(x), BoundOutcome::Value(b)) => {
                                if x <= b {
                                    Verdict::Holds
                                } else {
                                    Verdict::Violated
                                }
                            }
                        };
                        (exact, bound, verdict)
                    }
                };
                let slack = match (&exact, &bound) {
                    (Some(x), BoundOutcome::Value(b)) => Some(b - x),
                    _ => None,
                };
                rows.push(AuditRow {
                    graph6: graph6.clone(),
                    n,
                    m,
                    pattern,
                    kind,
                    variant,
                    transform_connected,
                    exact,
                    bound,
                    slack,
                    verdict,
                });
            }
        }
    }
    rows
}

/// Crosschecks a single graph; rows in report order (per pattern: degrees,
/// then eccentricity caps, then — for the pair owner — the complement
/// degree sums).
pub fn process_graph_crosscheck(g: &Graph, patterns: &[SignPattern]) -> Vec<CrosscheckRow> {
    let graph6 = encode_graph6(g);
    let total = g.n() + g.m();
    let pair_sum = (total as i64) - 1;
    let pos = |p: SignPattern| {
        SignPattern::ALL
            .iter()
            .position(|&q| q == p)
            .expect("all patterns listed")
    };
    let mut rows = Vec::new();
    for &pattern in patterns {
        let t = apply(g, pattern);
        let degrees: Vec<i64> = t.graph.degrees().iter().map(|&d| d as i64).collect();
        let predicted = predicted_degrees(g, pattern);
        for k in 0..total {
            rows.push(CrosscheckRow {
                graph6: graph6.clone(),
                pattern,
                index: k,
                provenance: t.provenance[k],
                check: CheckKind::Degree,
                actual: degrees[k],
                expected: predicted[k],
                matched: degrees[k] == predicted[k],
            });
        }
        if t.graph.is_connected() {
            let caps = ecc_caps(g, pattern);
            let eccs = t.graph.eccentricities();
            for k in 0..total {
                let (Some(cap), Some(e)) = (caps[k], eccs[k].finite()) else {
                    continue;
                };
                rows.push(CrosscheckRow {
                    graph6: graph6.clone(),
                    pattern,
                    index: k,
                    provenance: t.provenance[k],
                    check: CheckKind::EccCap,
                    actual: e as i64,
                    expected: cap as i64,
                    matched: e <= cap,
                });
            }
        }
        let partner = pattern.partner();
        let owns_pair = !patterns.contains(&partner) || pos(pattern) < pos(partner);
        if owns_pair {
            let tp = apply(g, partner);
            let partner_degrees = tp.graph.degrees();
            for k in 0..total {
                let sum = degrees[k] + partner_degrees[k] as i64;
                rows.push(CrosscheckRow {
                    graph6: graph6.clone(),
                    pattern,
                    index: k,
                    provenance: t.provenance[k],
                    check: CheckKind::ComplementDegreeSum,
                    actual: sum,
                    expected: pair_sum,
                    matched: sum == pair_sum,
                });
            }
        }
    }
    rows
}

/// Streams the corpus in order, processes graphs chunk-by-chunk (on a rayon
/// pool when `jobs > 1`), and hands each graph's rows to `sink` in corpus
/// order.
fn for_each_graph_rows<T, F, S>(
    spec: &CorpusSpec,
    jobs: usize,
    f: F,
    mut sink: S,
) -> Result<(), CorpusError>
where
    T: Send,
    F: Fn(&Graph) -> Vec<T> + Sync,
    S: FnMut(Vec<T>),
{
    let mut stream = spec.stream()?;
    let pool = if jobs > 1 {
        Some(
            rayon::ThreadPoolBuilder::new()
                .num_threads(jobs)
                .build()
                .expect("thread pool"),
        )
    } else {
        None
    };
    loop {
        let chunk: Vec<Graph> = stream.by_ref().take(CHUNK).collect::<Result<_, _>>()?;
        if chunk.is_empty() {
            return Ok(());
        }
        let per_graph: Vec<Vec<T>> = match &pool {
            Some(pool) => pool.install(|| chunk.par_iter().map(&f).collect()),
            None => chunk.iter().map(&f).collect(),
        };
        per_graph.into_iter().for_each(&mut sink);
    }
}

/// Runs the audit and collects every row in report order.
pub fn run_audit(spec: &CorpusSpec, opts: &AuditOptions) -> Result<Vec<AuditRow>, CorpusError> {
    let mut rows = Vec::new();
    for_each_graph_rows(
        spec,
        opts.jobs,
        |g| process_graph(g, opts),
        |graph_rows| rows.extend(graph_rows),
    )?;
    Ok(rows)
}

/// Runs the structural crosschecks (degree claims, eccentricity caps,
/// complement degree identity) and collects every row in report order.
pub fn degree_crosscheck(
    spec: &CorpusSpec,
    patterns: &[SignPattern],
    jobs: usize,
) -> Result<Vec<CrosscheckRow>, CorpusError> {
    let opts = AuditOptions::new(patterns, &[], &[], jobs);
    let mut rows = Vec::new();
    for_each_graph_rows(
        spec,
        opts.jobs,
        |g| process_graph_crosscheck(g, opts.patterns()),
        |graph_rows| rows.extend(graph_rows),
    )?;
    Ok(rows)
}

// ---------------------------------------------------------------------------
// Report writing
// ---------------------------------------------------------------------------

/// Output format of a report.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportFormat {
    Csv,
    Json,
}

/// Rejected format name.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("unknown report format {0:?}; expected csv or json")]
pub struct FormatError(pub String);

impl std::str::FromStr for ReportFormat {
    type Err = FormatError;

    fn from_str(s: &str) -> Result<ReportFormat, FormatError> {
        match s {
            "csv" => Ok(ReportFormat::Csv),
            "json" => Ok(ReportFormat::Json),
            _ => Err(FormatError(s.to_string())),
        }
    }
}

/// Reproducibility header carried by every report. No timestamps — reruns
/// must be byte-identical.
#[derive(Debug, Clone, Serialize)]
pub struct ReportHeader {
    pub tool: String,
    pub corpus: String,
    pub edge_ecc_convention: &'static str,
    pub generator: &'static str,
}

impl ReportHeader {
    /// Standard header for a corpus.
    pub fn new(spec: &CorpusSpec) -> ReportHeader {
        ReportHeader {
            tool: concat!("eccaudit ", env!("CARGO_PKG_VERSION")).to_string(),
            corpus: spec.to_string(),
            edge_ecc_convention: "min-endpoint",
            generator: GENERATOR,
        }
    }
}

/// A row type the report writer knows how to lay out.
pub trait ReportRow: Serialize {
    /// The exact CSV header line.
    const CSV_COLUMNS: &'static str;

    /// One CSV record, no trailing newline. Every field is comma-free by
    /// construction (graph6 bytes exclude commas; the rest is controlled
    /// vocabulary), so no quoting is needed.
    fn csv_record(&self) -> String;
}

impl ReportRow for AuditRow {
    const CSV_COLUMNS: &'static str =
        "graph6,n,m,pattern,kind,variant,transform_connected,exact,bound,slack,verdict";

    fn csv_record(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{},{},{},{}",
            self.graph6,
            self.n,
            self.m,
            self.pattern,
            self.kind,
            self.variant,
            self.transform_connected,
            opt_rat_text(&self.exact),
            bound_text(&self.bound),
            opt_rat_text(&self.slack),
            self.verdict
        )
    }
}

impl ReportRow for CrosscheckRow {
    const CSV_COLUMNS: &'static str =
        "graph6,pattern,index,provenance,check,actual,expected,match";

    fn csv_record(&self) -> String {
        format!(
            "{},{},{},{},{},{},{},{}",
            self.graph6,
            self.pattern,
            self.index,
            self.provenance,
            self.check,
            self.actual,
            self.expected,
            self.matched
        )
    }
}

/// Incremental report writer; emits rows as they arrive so multi-million-row
/// audits never sit in memory.
pub struct ReportWriter<W: Write, R: ReportRow> {
    out: W,
    format: ReportFormat,
    wrote_row: bool,
    _row: std::marker::PhantomData<fn(&R)>,
}

impl<W: Write, R: ReportRow> ReportWriter<W, R> {
    /// Writes the header and returns the writer.
    pub fn begin(
        mut out: W,
        format: ReportFormat,
        header: &ReportHeader,
    ) -> Result<Self, std::io::Error> {
        match format {
            ReportFormat::Csv => {
                writeln!(out, "# tool: {}", header.tool)?;
                writeln!(out, "# corpus: {}", header.corpus)?;
                writeln!(out, "# edge-ecc-convention: {}", header.edge_ecc_convention)?;
                writeln!(out, "# generator: {}", header.generator)?;
                writeln!(out, "{}", R::CSV_COLUMNS)?;
            }
            ReportFormat::Json => {
                write!(
                    out,
                    "{{\"header\":{},\"rows\":[",
                    serde_json::to_string(header)?
                )?;
            }
        }
        Ok(ReportWriter {
            out,
            format,
            wrote_row: false,
            _row: std::marker::PhantomData,
        })
    }

    /// Appends one row.
    pub fn row(&mut self, row: &R) -> Result<(), std::io::Error> {
        match self.format {
            ReportFormat::Csv => writeln!(self.out, "{}", row.csv_record())?,
            ReportFormat::Json => {
                if self.wrote_row {
                    write!(self.out, ",")?;
                }
                write!(self.out, "{}", serde_json::to_string(row)?)?;
            }
        }
        self.wrote_row = true;
        Ok(())
    }

    /// Closes the document and flushes.
    pub fn finish(mut self) -> Result<(), std::io::Error> {
        if self.format == ReportFormat::Json {
            writeln!(self.out, "]}}")?;
        }
        self.out.flush()
    }
}

/// Writes a complete report for already-collected rows.
pub fn write_report<W: Write, R: ReportRow>(
    out: W,
    format: ReportFormat,
    header: &ReportHeader,
    rows: &[R],
) -> Result<(), std::io::Error> {
    let mut writer = ReportWriter::begin(out, format, header)?;
    for row in rows {
        writer.row(row)?;
    }
    writer.finish()
}

/// Verdict tallies of a streamed audit (for exit codes and summaries).
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct AuditSummary {
    pub rows: u64,
    pub holds: u64,
    pub violated: u64,
    pub undefined: u64,
    pub inapplicable: u64,
}

/// Streams a full audit into `out`. Returns the verdict tallies.
pub fn audit_to_writer<W: Write>(
    spec: &CorpusSpec,
    opts: &AuditOptions,
    format: ReportFormat,
    out: W,
) -> Result<AuditSummary, AuditError> {
    let mut writer = ReportWriter::begin(out, format, &ReportHeader::new(spec))?;
    let mut summary = AuditSummary::default();
    let mut write_error = None;
    for_each_graph_rows(
        spec,
        opts.jobs,
        |g| process_graph(g, opts),
        |rows| {
            if write_error.is_some() {
                return;
            }
            for row in rows {
                summary.rows += 1;
                match row.verdict {
                    Verdict::Holds => summary.holds += 1,
                    Verdict::Violated => summary.violated += 1,
                    Verdict::Undefined => summary.undefined += 1,
                    Verdict::Inapplicable => summary.inapplicable += 1,
                }
                if let Err(e) = writer.row(&row) {
                    write_error = Some(e);
                    return;
                }
            }
        },
    )?;
    if let Some(e) = write_error {
        return Err(AuditError::Io(e));
    }
    writer.finish()?;
    Ok(summary)
}

/// Mismatch tallies of a streamed crosscheck.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CrosscheckSummary {
    pub rows: u64,
    pub mismatches: u64,
}

/// Streams a full crosscheck report into `out`. Returns the tallies.
pub fn crosscheck_to_writer<W: Write>(
    spec: &CorpusSpec,
    patterns: &[SignPattern],
    jobs: usize,
    format: ReportFormat,
    out: W,
) -> Result<CrosscheckSummary, AuditError> {
    let opts = AuditOptions::new(patterns, &[], &[], jobs);
    let mut writer = ReportWriter::begin(out, format, &ReportHeader::new(spec))?;
    let mut summary = CrosscheckSummary::default();
    let mut write_error = None;
    for_each_graph_rows(
        spec,
        opts.jobs,
        |g| process_graph_crosscheck(g, opts.patterns()),
        |rows| {
            if write_error.is_some() {
                return;
            }
            for row in rows {
                summary.rows += 1;
                if !row.matched {
                    summary.mismatches += 1;
                }
                if let Err(e) = writer.row(&row) {
                    write_error = Some(e);
                    return;
                }
            }
        },
    )?;
    if let Some(e) = write_error {
        return Err(AuditError::Io(e));
    }
    writer.finish()?;
    Ok(summary)
}
