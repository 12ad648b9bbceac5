//! Command-line front end.
//!
//! Exit statuses: 0 success (or colorable), 1 proven not colorable or a
//! verification counterexample, 2 usage/parse/precondition errors, 3 search
//! budget exhausted.

use std::fmt::Write as _;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::coloring::{is_interval, EdgeColoring};
use crate::enumerator::{self, Check, EnumerationBounds, EnumerationReport, Harness};
use crate::format::{parse_document, serialize_document, serialize_graph, GraphDocument};
use crate::multigraph::Multigraph;
use crate::solver::{parity_precheck, Reason, SolveError, Solver, SolverConfig, Verdict};

pub const BUDGET_ENV: &str = "INTERVAL_EDGE_BUDGET";
pub const DEFAULT_BUDGET: u64 = 50_000_000;

pub const EXIT_OK: u8 = 0;
pub const EXIT_NEGATIVE: u8 = 1;
pub const EXIT_ERROR: u8 = 2;
pub const EXIT_INCONCLUSIVE: u8 = 3;

#[derive(Parser, Debug)]
#[command(
    name = "interval-edge",
    version,
    about = "Exact interval edge-colorings of multigraphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Structural report: degrees, connectivity, Eulerian-ness, parity conclusion
    Check {
        path: PathBuf,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Decide interval colorability (or a single t with --t)
    Solve {
        path: PathBuf,
        #[arg(long)]
        t: Option<u32>,
        #[arg(long)]
        budget: Option<u64>,
        /// Search even when the parity theorem already decides
        #[arg(long)]
        no_precheck: bool,
        /// Write the graph plus witness coloring here
        #[arg(long)]
        witness_out: Option<PathBuf>,
        /// Report elapsed_ms as 0
        #[arg(long)]
        no_timing: bool,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Chromatic index with a proper coloring
    Chi {
        path: PathBuf,
        #[arg(long)]
        budget: Option<u64>,
        #[arg(long)]
        no_timing: bool,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Subdivision, star augmentation or line graph
    Construct {
        #[arg(value_enum)]
        kind: ConstructKind,
        path: PathBuf,
        #[arg(long)]
        edge: Option<usize>,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Check the theorems over all small connected multigraphs
    Verify {
        #[arg(long)]
        max_n: usize,
        #[arg(long)]
        max_m: usize,
        #[arg(long, default_value_t = 1)]
        max_mult: usize,
        #[arg(long, value_enum, default_value_t = CheckArg::All)]
        check: CheckArg,
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        #[arg(long)]
        budget: Option<u64>,
        /// Let the parity theorem decide instead of searching
        #[arg(long)]
        precheck: bool,
        #[arg(long)]
        no_timing: bool,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Graphviz text, with edge colors as labels when a witness is given
    Dot {
        path: PathBuf,
        #[arg(long)]
        witness: Option<PathBuf>,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum ConstructKind {
    Subdivide,
    Star,
    Line,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum CheckArg {
    Theorem1,
    Theorem2,
    Cor1,
    Cor2,
    Cor3,
    Cor4,
    All,
}

/// A failure that ends the command with the given exit status.
#[derive(Debug)]
struct Failure {
    status: u8,
    message: String,
}

fn usage(message: impl Into<String>) -> Failure {
    Failure {
        status: EXIT_ERROR,
        message: message.into(),
    }
}

type CmdResult = Result<u8, Failure>;

/// Runs the CLI on `args` (program name first) and returns the exit status.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let status = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let text = e.render().to_string();
            let _ = if e.use_stderr() {
                write!(err, "{text}")
            } else {
                write!(out, "{text}")
            };
            return status;
        }
    };
    let result = match cli.command {
        Command::Check { path, format } => cmd_check(&path, format, out),
        Command::Solve {
            path,
            t,
            budget,
            no_precheck,
            witness_out,
            no_timing,
            format,
        } => {
            let opts = SolveOptions {
                t,
                budget,
                no_precheck,
                witness_out,
                no_timing,
                format,
            };
            cmd_solve(&path, &opts, out)
        }
        Command::Chi {
            path,
            budget,
            no_timing,
            format,
        } => cmd_chi(&path, budget, no_timing, format, out),
        Command::Construct {
            kind,
            path,
            edge,
            output,
        } => cmd_construct(kind, &path, edge, output.as_deref(), out),
        Command::Verify {
            max_n,
            max_m,
            max_mult,
            check,
            jobs,
            budget,
            precheck,
            no_timing,
            format,
        } => {
            let opts = VerifyOptions {
                max_n,
                max_m,
                max_mult,
                check,
                jobs,
                budget,
                precheck,
                no_timing,
                format,
            };
            cmd_verify(&opts, out, err)
        }
        Command::Dot { path, witness } => cmd_dot(&path, witness.as_deref(), out),
    };
    match result {
        Ok(status) => status,
        Err(f) => {
            let _ = writeln!(err, "error: {}", f.message);
            f.status
        }
    }
}

fn read_document(path: &Path) -> Result<GraphDocument, Failure> {
    let text =
        std::fs::read_to_string(path).map_err(|e| usage(format!("{}: {e}", path.display())))?;
    parse_document(&text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn emit(out: &mut dyn Write, text: &str) -> Result<(), Failure> {
    out.write_all(text.as_bytes())
        .map_err(|e| usage(format!("writing output: {e}")))
}

fn budget(flag: Option<u64>) -> Result<u64, Failure> {
    if let Some(b) = flag {
        return Ok(b);
    }
    match std::env::var(BUDGET_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| usage(format!("{BUDGET_ENV}={v:?} is not a node count"))),
        Err(_) => Ok(DEFAULT_BUDGET),
    }
}

fn elapsed_ms(start: Instant, no_timing: bool) -> u64 {
    if no_timing {
        0
    } else {
        start.elapsed().as_millis() as u64
    }
}

#[derive(Serialize)]
struct GraphSummary {
    n: usize,
    m: usize,
    delta: usize,
    eulerian: bool,
    connected: bool,
}

impl GraphSummary {
    fn of(g: &Multigraph) -> Self {
        GraphSummary {
            n: g.vertex_count(),
            m: g.edge_count(),
            delta: g.max_degree(),
            eulerian: g.is_eulerian(),
            connected: g.is_connected(),
        }
    }
}

#[derive(Serialize)]
struct WitnessEdge {
    edge_id: usize,
    u: usize,
    v: usize,
    color: u32,
}

fn witness_rows(g: &Multigraph, c: &EdgeColoring) -> Vec<WitnessEdge> {
    g.edges()
        .iter()
        .zip(c.colors())
        .enumerate()
        .map(|(edge_id, (&(u, v), &color))| WitnessEdge {
            edge_id,
            u: u + 1,
            v: v + 1,
            color,
        })
        .collect()
}

#[derive(Serialize)]
struct ResultDocument {
    command: &'static str,
    input: String,
    graph: GraphSummary,
    #[serde(skip_serializing_if = "Option::is_none")]
    degrees: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    edge_parity: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    chromatic_index: Option<usize>,
    verdict: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    t: Option<u32>,
    witness: Vec<WitnessEdge>,
    nodes_explored: u64,
    elapsed_ms: u64,
}

impl ResultDocument {
    fn new(command: &'static str, path: &Path, g: &Multigraph) -> Self {
        ResultDocument {
            command,
            input: path.display().to_string(),
            graph: GraphSummary::of(g),
            degrees: None,
            edge_parity: None,
            chromatic_index: None,
            verdict: None,
            t: None,
            witness: Vec::new(),
            nodes_explored: 0,
            elapsed_ms: 0,
        }
    }

    fn render(&self, format: OutputFormat) -> String {
        match format {
            OutputFormat::Json => {
                let mut s = serde_json::to_string_pretty(self).expect("document serializes");
                s.push('\n');
                s
            }
            OutputFormat::Text => self.render_text(),
        }
    }

    fn render_text(&self) -> String {
        let mut s = String::new();
        let g = &self.graph;
        let _ = writeln!(s, "command: {}", self.command);
        let _ = writeln!(s, "input: {}", self.input);
        let _ = writeln!(s, "n: {}\nm: {}\ndelta: {}", g.n, g.m, g.delta);
        let _ = writeln!(s, "connected: {}\neulerian: {}", g.connected, g.eulerian);
        if let Some(d) = &self.degrees {
            let d: Vec<String> = d.iter().map(ToString::to_string).collect();
            let _ = writeln!(s, "degrees: {}", d.join(" "));
        }
        if let Some(p) = self.edge_parity {
            let _ = writeln!(s, "edge_parity: {p}");
        }
        if let Some(k) = self.chromatic_index {
            let _ = writeln!(s, "chromatic_index: {k}");
        }
        let _ = writeln!(s, "verdict: {}", self.verdict.unwrap_or("none"));
        if let Some(t) = self.t {
            let _ = writeln!(s, "t: {t}");
        }
        for w in &self.witness {
            let _ = writeln!(s, "edge {} ({} {}) color {}", w.edge_id, w.u, w.v, w.color);
        }
        if self.command != "check" {
            let _ = writeln!(
                s,
                "nodes_explored: {}\nelapsed_ms: {}",
                self.nodes_explored, self.elapsed_ms
            );
        }
        s
    }
}

fn cmd_check(path: &Path, format: OutputFormat, out: &mut dyn Write) -> CmdResult {
    let g = read_document(path)?.graph;
    let mut doc = ResultDocument::new("check", path, &g);
    doc.degrees = Some(g.degrees());
    doc.edge_parity = Some(if g.edge_count() % 2 == 0 {
        "even"
    } else {
        "odd"
    });
    doc.verdict = parity_precheck(&g).map(|_| "not_colorable_parity");
    emit(out, &doc.render(format))?;
    Ok(EXIT_OK)
}

struct SolveOptions {
    t: Option<u32>,
    budget: Option<u64>,
    no_precheck: bool,
    witness_out: Option<PathBuf>,
    no_timing: bool,
    format: OutputFormat,
}

fn cmd_solve(path: &Path, opts: &SolveOptions, out: &mut dyn Write) -> CmdResult {
    let g = read_document(path)?.graph;
    if g.edge_count() == 0 {
        return Err(usage("graph has no edges"));
    }
    let config = SolverConfig {
        node_budget: Some(budget(opts.budget)?),
        parity_precheck: !opts.no_precheck,
    };
    let mut solver = Solver::new(config);
    let start = Instant::now();
    let outcome = match opts.t {
        Some(t) => solver.find_interval_coloring(&g, t).map(|w| match w {
            Some(w) => Verdict::Colorable(w),
            None => Verdict::NotColorable(Reason::ExhaustedSearch),
        }),
        None => solver.is_interval_colorable(&g),
    };
    let mut doc = ResultDocument::new("solve", path, &g);
    doc.nodes_explored = solver.nodes_explored();
    doc.elapsed_ms = elapsed_ms(start, opts.no_timing);
    let status = match outcome {
        Ok(Verdict::Colorable(w)) => {
            doc.verdict = Some("colorable");
            doc.t = Some(w.t());
            doc.witness = witness_rows(&g, &w);
            if let Some(p) = &opts.witness_out {
                std::fs::write(p, serialize_document(&g, &w))
                    .map_err(|e| usage(format!("{}: {e}", p.display())))?;
            }
            EXIT_OK
        }
        Ok(Verdict::NotColorable(Reason::ParityTheorem)) => {
            doc.verdict = Some("not_colorable_parity");
            EXIT_NEGATIVE
        }
        Ok(Verdict::NotColorable(Reason::ExhaustedSearch)) => {
            doc.verdict = Some("not_colorable_exhausted");
            EXIT_NEGATIVE
        }
        Err(SolveError::Inconclusive { nodes }) => {
            doc.verdict = Some("inconclusive");
            doc.nodes_explored = nodes;
            EXIT_INCONCLUSIVE
        }
        Err(e) => return Err(usage(e.to_string())),
    };
    emit(out, &doc.render(opts.format))?;
    Ok(status)
}

fn cmd_chi(
    path: &Path,
    budget_flag: Option<u64>,
    no_timing: bool,
    format: OutputFormat,
    out: &mut dyn Write,
) -> CmdResult {
    let g = read_document(path)?.graph;
    if g.edge_count() == 0 {
        return Err(usage("graph has no edges"));
    }
    let mut solver = Solver::new(SolverConfig {
        node_budget: Some(budget(budget_flag)?),
        parity_precheck: true,
    });
    let start = Instant::now();
    let result = solver.chromatic_index(&g);
    let mut doc = ResultDocument::new("chi", path, &g);
    doc.nodes_explored = solver.nodes_explored();
    doc.elapsed_ms = elapsed_ms(start, no_timing);
    let status = match result {
        Ok((k, w)) => {
            doc.chromatic_index = Some(k);
            doc.t = Some(w.t());
            doc.witness = witness_rows(&g, &w);
            EXIT_OK
        }
        Err(SolveError::Inconclusive { nodes }) => {
            doc.verdict = Some("inconclusive");
            doc.nodes_explored = nodes;
            EXIT_INCONCLUSIVE
        }
        Err(e) => return Err(usage(e.to_string())),
    };
    emit(out, &doc.render(format))?;
    Ok(status)
}

fn cmd_construct(
    kind: ConstructKind,
    path: &Path,
    edge: Option<usize>,
    output: Option<&Path>,
    out: &mut dyn Write,
) -> CmdResult {
    let g = read_document(path)?.graph;
    let built = match kind {
        ConstructKind::Subdivide => {
            let e = edge.ok_or_else(|| usage("subdivide needs --edge <id>"))?;
            g.subdivide(e).map_err(|e| usage(e.to_string()))?
        }
        ConstructKind::Star => g.star_augment(),
        ConstructKind::Line => g.line_graph().map_err(|e| usage(e.to_string()))?,
    };
    let text = serialize_graph(&built);
    match output {
        Some(p) => std::fs::write(p, text).map_err(|e| usage(format!("{}: {e}", p.display())))?,
        None => emit(out, &text)?,
    }
    Ok(EXIT_OK)
}

struct VerifyOptions {
    max_n: usize,
    max_m: usize,
    max_mult: usize,
    check: CheckArg,
    jobs: usize,
    budget: Option<u64>,
    precheck: bool,
    no_timing: bool,
    format: OutputFormat,
}

#[derive(Serialize)]
struct VerifyDocument<'a> {
    command: &'static str,
    bounds: VerifyBounds,
    check: &'static str,
    report: &'a EnumerationReport,
    elapsed_ms: u64,
}

#[derive(Serialize)]
struct VerifyBounds {
    max_n: usize,
    max_m: usize,
    max_mult: usize,
}

fn cmd_verify(opts: &VerifyOptions, out: &mut dyn Write, err: &mut dyn Write) -> CmdResult {
    if opts.jobs == 0 {
        return Err(usage("--jobs must be at least 1"));
    }
    let harness = Harness {
        node_budget: Some(budget(opts.budget)?),
        bypass_precheck: !opts.precheck,
        jobs: opts.jobs,
    };
    let bounds = EnumerationBounds::new(opts.max_n, opts.max_m, opts.max_mult);
    let start = Instant::now();
    let enum_err = |e: enumerator::EnumError| usage(e.to_string());
    let (name, report) = match opts.check {
        CheckArg::Theorem1 => (
            "theorem1",
            harness.verify_theorem1(&bounds).map_err(enum_err)?,
        ),
        CheckArg::Theorem2 => (
            "theorem2",
            harness.verify_theorem2(&bounds).map_err(enum_err)?,
        ),
        CheckArg::Cor1 => (
            "cor1",
            harness.verify_corollary1(&bounds).map_err(enum_err)?,
        ),
        CheckArg::Cor2 => (
            "cor2",
            harness.verify_corollary2(&enumerator::corollary2_builtin_inputs()),
        ),
        CheckArg::Cor3 => (
            "cor3",
            harness.verify_corollary3(&bounds).map_err(enum_err)?,
        ),
        CheckArg::Cor4 => (
            "cor4",
            harness.verify_corollary4(&bounds).map_err(enum_err)?,
        ),
        CheckArg::All => {
            let mut r = harness.verify(&bounds, &Check::ALL).map_err(enum_err)?;
            r.merge(harness.verify_corollary2(&enumerator::corollary2_builtin_inputs()));
            ("all", r)
        }
    };
    let _ = writeln!(err, "examined {} graphs", report.graphs_examined);
    let elapsed = elapsed_ms(start, opts.no_timing);
    let text = match opts.format {
        OutputFormat::Json => {
            let doc = VerifyDocument {
                command: "verify",
                bounds: VerifyBounds {
                    max_n: opts.max_n,
                    max_m: opts.max_m,
                    max_mult: opts.max_mult,
                },
                check: name,
                report: &report,
                elapsed_ms: elapsed,
            };
            let mut s = serde_json::to_string_pretty(&doc).expect("report serializes");
            s.push('\n');
            s
        }
        OutputFormat::Text => render_report_text(name, &report, elapsed),
    };
    emit(out, &text)?;
    Ok(if !report.counterexamples.is_empty() {
        EXIT_NEGATIVE
    } else if report.inconclusive() > 0 {
        EXIT_INCONCLUSIVE
    } else {
        EXIT_OK
    })
}

fn render_report_text(name: &str, report: &EnumerationReport, elapsed: u64) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "check: {name}");
    let _ = writeln!(s, "graphs_examined: {}", report.graphs_examined);
    for (tally, t) in &report.tallies {
        let _ = writeln!(
            s,
            "{tally}: checked {} passed {} inconclusive {} skipped {}",
            t.checked, t.passed, t.inconclusive, t.skipped
        );
    }
    for note in &report.notes {
        let _ = writeln!(s, "note: {note}");
    }
    for c in &report.counterexamples {
        let _ = writeln!(s, "COUNTEREXAMPLE [{}]: {}", c.check, c.details);
        s.push_str(&c.graph);
    }
    let status = if !report.counterexamples.is_empty() {
        "FAIL"
    } else if report.inconclusive() > 0 {
        "INCONCLUSIVE"
    } else {
        "PASS"
    };
    let _ = writeln!(s, "result: {status}\nelapsed_ms: {elapsed}");
    s
}

fn cmd_dot(path: &Path, witness_path: Option<&Path>, out: &mut dyn Write) -> CmdResult {
    let doc = read_document(path)?;
    let g = doc.graph;
    let witness = match witness_path {
        Some(p) => {
            let w = read_document(p)?;
            if w.graph != g {
                return Err(usage(format!(
                    "witness mismatch: {} describes a different graph",
                    p.display()
                )));
            }
            let c = w.witness.ok_or_else(|| {
                usage(format!(
                    "witness mismatch: {} has no `c` lines",
                    p.display()
                ))
            })?;
            Some(c)
        }
        None => doc.witness,
    };
    if let Some(c) = &witness {
        if c.len() != g.edge_count() {
            return Err(usage("witness mismatch: coloring does not cover the graph"));
        }
    }
    emit(out, &render_dot(&g, witness.as_ref()))?;
    Ok(EXIT_OK)
}

fn render_dot(g: &Multigraph, witness: Option<&EdgeColoring>) -> String {
    let mut s = String::from("graph G {\n");
    if let Some(c) = witness {
        let interval = is_interval(g, c) == Ok(true);
        let _ = writeln!(s, "  label=\"t={} interval={interval}\";", c.t());
    }
    for v in 0..g.vertex_count() {
        let _ = writeln!(s, "  {};", v + 1);
    }
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        match witness.and_then(|c| c.color(e)) {
            Some(col) => {
                let _ = writeln!(s, "  {} -- {} [label=\"{col}\"];", u + 1, v + 1);
            }
            None => {
                let _ = writeln!(s, "  {} -- {};", u + 1, v + 1);
            }
        }
    }
    s.push_str("}\n");
    s
}
