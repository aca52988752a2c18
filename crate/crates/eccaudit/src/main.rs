//! `eccaudit` — exact audits of eccentric-connectivity bounds on total
//! transformation graphs.
//!
//! Exit codes: `0` success, `1` only when `--fail-on-violation` is set and a
//! violated row was produced, `2` on usage or input errors.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use eccaudit::audit::{
    audit_to_writer, crosscheck_to_writer, AuditOptions, FormatError, ReportFormat,
};
use eccaudit::bounds::{list_bounds, BoundKind, KindError, Variant, VariantError};
use eccaudit::corpus::{enumerate_labeled, CorpusSpec};
use eccaudit::graph::{ExtendedEcc, Graph};
use eccaudit::graph6::{encode_graph6, parse_graph6};
use eccaudit::invariants::{degree_invariants, ecc_invariants, edge_ecc_invariants};
use eccaudit::ratio::fmt_rat;
use eccaudit::transform::{apply, ecc_caps, predicted_degrees, PatternError, SignPattern};

#[derive(Parser)]
#[command(
    name = "eccaudit",
    version,
    about = "Exact eccentric-connectivity indices, total transformation graphs, and bound audits"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the exact invariants of one graph6 graph.
    Indices {
        /// The graph, graph6-encoded (optionally with the >>graph6<< header).
        graph6: String,
    },
    /// Construct a total transformation graph G^xyz and describe it.
    Transform {
        /// Sign pattern, e.g. +++ or -+- .
        #[arg(long, allow_hyphen_values = true, value_parser = parse_pattern)]
        pattern: SignPattern,
        /// The input graph, graph6-encoded.
        graph6: String,
    },
    /// Enumerate all labeled graphs on n vertices as graph6 lines.
    Enumerate {
        /// Number of vertices (1..=8; with --dedup 1..=7).
        #[arg(long)]
        n: usize,
        /// Keep connected graphs only.
        #[arg(long)]
        connected_only: bool,
        /// Keep one representative per isomorphism class.
        #[arg(long)]
        dedup: bool,
    },
    /// Audit the bounds over a corpus and write a verdict report.
    Audit(AuditCmd),
    /// Check claimed transform degrees, eccentricity caps, and the
    /// complement pairing over a corpus.
    Crosscheck(CrosscheckCmd),
    /// List every implemented bound formula.
    Bounds,
}

/// Where the graphs come from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Source {
    /// Exhaustive enumeration over a range of n.
    Enumerate,
    /// Erdős–Rényi G(n, p) samples with an exact rational p.
    Gnp,
    /// Uniform random labeled trees.
    Tree,
    /// graph6 lines from a file.
    File,
}

#[derive(Args)]
struct CorpusArgs {
    /// Corpus source.
    #[arg(long, value_enum, default_value_t = Source::Enumerate)]
    source: Source,
    /// Smallest n (enumerate).
    #[arg(long, default_value_t = 1)]
    n_min: usize,
    /// Largest n (enumerate).
    #[arg(long)]
    n_max: Option<usize>,
    /// Enumerate connected graphs only.
    #[arg(long)]
    connected_only: bool,
    /// Enumerate one representative per isomorphism class.
    #[arg(long)]
    dedup: bool,
    /// Number of vertices (gnp, tree).
    #[arg(long)]
    n: Option<usize>,
    /// Edge probability as an exact rational a/b (gnp).
    #[arg(long)]
    p: Option<String>,
    /// Number of random graphs (gnp, tree).
    #[arg(long)]
    count: Option<u64>,
    /// Base seed; graph i uses seed + i (gnp, tree).
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// graph6 input file (file).
    #[arg(long = "in", value_name = "PATH")]
    input: Option<PathBuf>,
}

impl CorpusArgs {
    fn to_spec(&self) -> Result<CorpusSpec, String> {
        match self.source {
            Source::Enumerate => {
                let n_max = self
                    .n_max
                    .ok_or("--n-max is required with --source enumerate")?;
                Ok(CorpusSpec::Enumerate {
                    n_min: self.n_min,
                    n_max,
                    connected_only: self.connected_only,
                    dedup: self.dedup,
                })
            }
            Source::Gnp => {
                let n = self.n.ok_or("--n is required with --source gnp")?;
                let count = self.count.ok_or("--count is required with --source gnp")?;
                let (p_num, p_den) =
                    parse_probability(self.p.as_deref().ok_or("--p is required with --source gnp")?)?;
                Ok(CorpusSpec::Gnp {
                    n,
                    p_num,
                    p_den,
                    count,
                    seed: self.seed,
                })
            }
            Source::Tree => {
                let n = self.n.ok_or("--n is required with --source tree")?;
                let count = self.count.ok_or("--count is required with --source tree")?;
                Ok(CorpusSpec::Tree {
                    n,
                    count,
                    seed: self.seed,
                })
            }
            Source::File => {
                let path = self
                    .input
                    .clone()
                    .ok_or("--in is required with --source file")?;
                Ok(CorpusSpec::File { path })
            }
        }
    }
}

#[derive(Args)]
struct AuditCmd {
    #[command(flatten)]
    corpus: CorpusArgs,
    /// Sign patterns to audit, comma-separated (default: all eight).
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, value_parser = parse_pattern)]
    patterns: Vec<SignPattern>,
    /// Index kinds to audit, comma-separated (default: all four).
    #[arg(long, value_delimiter = ',', value_parser = parse_kind)]
    kinds: Vec<BoundKind>,
    /// Formula variants, comma-separated (default: statement and proof).
    #[arg(long, value_delimiter = ',', value_parser = parse_variant)]
    variants: Vec<Variant>,
    /// Report format.
    #[arg(long, default_value = "csv", value_parser = parse_format)]
    format: ReportFormat,
    /// Write the report here instead of stdout.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Worker threads; output is byte-identical for every value.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
    /// Exit with status 1 if any verdict is violated.
    #[arg(long)]
    fail_on_violation: bool,
}

#[derive(Args)]
struct CrosscheckCmd {
    #[command(flatten)]
    corpus: CorpusArgs,
    /// Sign patterns to check, comma-separated (default: all eight).
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true, value_parser = parse_pattern)]
    patterns: Vec<SignPattern>,
    /// Report format.
    #[arg(long, default_value = "csv", value_parser = parse_format)]
    format: ReportFormat,
    /// Write the report here instead of stdout.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Worker threads; output is byte-identical for every value.
    #[arg(long, default_value_t = 1)]
    jobs: usize,
}

fn parse_pattern(s: &str) -> Result<SignPattern, PatternError> {
    s.parse()
}

fn parse_kind(s: &str) -> Result<BoundKind, KindError> {
    s.parse()
}

fn parse_variant(s: &str) -> Result<Variant, VariantError> {
    s.parse()
}

fn parse_format(s: &str) -> Result<ReportFormat, FormatError> {
    s.parse()
}

/// Parses an exact probability: `a/b`, or an integer (`0`, `1`).
fn parse_probability(s: &str) -> Result<(u64, u64), String> {
    let bad = || format!("invalid probability {s:?}; expected a/b with 0 <= a/b <= 1");
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (
            a.parse::<u64>().map_err(|_| bad())?,
            b.parse::<u64>().map_err(|_| bad())?,
        ),
        None => (s.parse::<u64>().map_err(|_| bad())?, 1),
    };
    if den == 0 || num > den {
        return Err(bad());
    }
    Ok((num, den))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Result<ExitCode, String> {
    match command {
        Command::Indices { graph6 } => {
            let g = parse_graph6(&graph6).map_err(|e| e.to_string())?;
            print_indices(&g).map_err(|e| e.to_string())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Transform { pattern, graph6 } => {
            let g = parse_graph6(&graph6).map_err(|e| e.to_string())?;
            print_transform(&g, pattern).map_err(|e| e.to_string())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Enumerate {
            n,
            connected_only,
            dedup,
        } => {
            if n == 0 || n > 8 || (dedup && n > 7) {
                return Err(format!(
                    "enumeration supports n in 1..=8 (1..=7 with --dedup), got {n}"
                ));
            }
            let stdout = io::stdout();
            let mut out = BufWriter::new(stdout.lock());
            for g in enumerate_labeled(n, connected_only, dedup) {
                writeln!(out, "{}", encode_graph6(&g)).map_err(|e| e.to_string())?;
            }
            out.flush().map_err(|e| e.to_string())?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Audit(cmd) => {
            let spec = cmd.corpus.to_spec()?;
            let opts = AuditOptions::new(&cmd.patterns, &cmd.kinds, &cmd.variants, cmd.jobs);
            let summary = match &cmd.out {
                Some(path) => {
                    let file = File::create(path)
                        .map_err(|e| format!("cannot create {}: {e}", path.display()))?;
                    audit_to_writer(&spec, &opts, cmd.format, BufWriter::new(file))
                }
                None => {
                    let stdout = io::stdout();
                    audit_to_writer(&spec, &opts, cmd.format, BufWriter::new(stdout.lock()))
                }
            }
            .map_err(|e| e.to_string())?;
            eprintln!(
                "audit: {} rows (holds {}, violated {}, undefined {}, inapplicable {})",
                summary.rows,
                summary.holds,
                summary.violated,
                summary.undefined,
                summary.inapplicable
            );
            if cmd.fail_on_violation && summary.violated > 0 {
                return Ok(ExitCode::from(1));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Crosscheck(cmd) => {
            let spec = cmd.corpus.to_spec()?;
            let summary = match &cmd.out {
                Some(path) => {
                    let file = File::create(path)
                        .map_err(|e| format!("cannot create {}: {e}", path.display()))?;
                    crosscheck_to_writer(&spec, &cmd.patterns, cmd.jobs, cmd.format, BufWriter::new(file))
                }
                None => {
                    let stdout = io::stdout();
                    crosscheck_to_writer(
                        &spec,
                        &cmd.patterns,
                        cmd.jobs,
                        cmd.format,
                        BufWriter::new(stdout.lock()),
                    )
                }
            }
            .map_err(|e| e.to_string())?;
            eprintln!(
                "crosscheck: {} rows, {} mismatches",
                summary.rows, summary.mismatches
            );
            Ok(ExitCode::SUCCESS)
        }
        Command::Bounds => {
            let stdout = io::stdout();
            let mut out = BufWriter::new(stdout.lock());
            for info in list_bounds() {
                writeln!(out, "{:<22} {}   {}", info.id, info.pattern, info.formula)
                    .map_err(|e| e.to_string())?;
            }
            out.flush().map_err(|e| e.to_string())?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn ecc_text(e: ExtendedEcc) -> String {
    match e.finite() {
        Some(k) => k.to_string(),
        None => "inf".to_string(),
    }
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn print_indices(g: &Graph) -> io::Result<()> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    writeln!(out, "graph6: {}", encode_graph6(g))?;
    writeln!(out, "n: {}", g.n())?;
    writeln!(out, "m: {}", g.m())?;
    writeln!(out, "connected: {}", g.is_connected())?;
    writeln!(out, "degrees: {}", join(g.degrees()))?;
    writeln!(
        out,
        "eccentricities: {}",
        join(g.eccentricities().into_iter().map(ecc_text))
    )?;
    writeln!(out, "diameter: {}", ecc_text(g.diameter()))?;
    let d = degree_invariants(g);
    writeln!(out, "M1: {}", d.m1)?;
    writeln!(out, "M2: {}", d.m2)?;
    writeln!(out, "F: {}", d.f)?;
    let undef = || "undef".to_string();
    writeln!(out, "ID: {}", d.id.as_ref().map(fmt_rat).unwrap_or_else(undef))?;
    writeln!(out, "M1_inv: {}", fmt_rat(&d.m1_inv))?;
    match ecc_invariants(g) {
        Some(e) => {
            writeln!(out, "ECI: {}", e.eci)?;
            writeln!(
                out,
                "I_ECI: {}",
                e.i_eci.as_ref().map(fmt_rat).unwrap_or_else(undef)
            )?;
            writeln!(out, "M1_ECI: {}", e.m1_eci)?;
            writeln!(out, "ECI1: {}", e.eci1)?;
            writeln!(out, "M1_ECI1: {}", e.m1_eci1)?;
        }
        None => {
            for name in ["ECI", "I_ECI", "M1_ECI", "ECI1", "M1_ECI1"] {
                writeln!(out, "{name}: undef")?;
            }
        }
    }
    match edge_ecc_invariants(g) {
        Some(ee) => {
            writeln!(out, "xi_inv: {}", fmt_rat(&ee.xi_inv))?;
            writeln!(out, "F_ECI: {}", ee.f_eci)?;
            writeln!(out, "M2_ECI: {}", ee.m2_eci)?;
            writeln!(out, "F_ECI1: {}", ee.f_eci1)?;
            writeln!(out, "M2_ECI1: {}", ee.m2_eci1)?;
            writeln!(out, "S1: {}", ee.s1)?;
            writeln!(out, "S2: {}", ee.s2)?;
        }
        None => {
            for name in ["xi_inv", "F_ECI", "M2_ECI", "F_ECI1", "M2_ECI1", "S1", "S2"] {
                writeln!(out, "{name}: undef")?;
            }
        }
    }
    out.flush()
}

fn print_transform(g: &Graph, pattern: SignPattern) -> io::Result<()> {
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let t = apply(g, pattern);
    let claimed = predicted_degrees(g, pattern);
    let caps = ecc_caps(g, pattern);
    let eccs = t.graph.eccentricities();
    let degrees = t.graph.degrees();
    writeln!(out, "pattern: {pattern} (T{})", pattern.family())?;
    writeln!(out, "input: {} (n={}, m={})", encode_graph6(g), g.n(), g.m())?;
    writeln!(out, "graph6: {}", encode_graph6(&t.graph))?;
    writeln!(out, "n: {}", t.graph.n())?;
    writeln!(out, "m: {}", t.graph.m())?;
    writeln!(out, "connected: {}", t.graph.is_connected())?;
    writeln!(out, "index provenance degree claimed ecc cap")?;
    for k in 0..t.graph.n() {
        writeln!(
            out,
            "{k} {} {} {} {} {}",
            t.provenance[k],
            degrees[k],
            claimed[k],
            ecc_text(eccs[k]),
            caps[k].map(|c| c.to_string()).unwrap_or_else(|| "-".to_string())
        )?;
    }
    writeln!(
        out,
        "edges: {}",
        join(t.graph.edges().iter().map(|&(u, v)| format!("{u}-{v}")))
    )?;
    out.flush()
}
