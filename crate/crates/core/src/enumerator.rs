//! Exhaustive generation of small multigraphs and the theorem-checking harness.
//!
//! Graphs are generated per vertex count as multiplicity vectors over the
//! vertex pairs `(0,1), (0,2), .., (n-2,n-1)` in lexicographic order; edges
//! are emitted pair by pair in that order. Isomorphism dedup keeps the first
//! graph seen for each canonical code.

use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::coloring::{is_interval, odd_color_edge_count, spectrum, EdgeColoring};
use crate::format::{serialize_document, serialize_graph};
use crate::multigraph::{families, Multigraph};
use crate::solver::{SolveError, Solver, SolverConfig, Verdict};

/// Largest vertex count accepted by [`canonical_code`].
pub const CANONICAL_VERTEX_CAP: usize = 8;

/// Default cap on the number of multiplicity vectors a run may visit.
pub const DEFAULT_LABEL_SPACE_CAP: u64 = 50_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumError {
    #[error("invalid bounds: {0}")]
    InvalidBounds(&'static str),
    #[error("bounds span {projected} labeled candidates, above the cap of {cap}")]
    BoundsTooLarge { projected: u128, cap: u64 },
    #[error("{vertices} vertices is above the canonical-labeling cap of {cap}")]
    TooLargeForCanonical { vertices: usize, cap: usize },
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Filters {
    pub connected: bool,
    pub eulerian: bool,
    pub regular: bool,
    pub simple: bool,
}

impl Filters {
    fn accepts(&self, g: &Multigraph) -> bool {
        (!self.connected || g.is_connected())
            && (!self.eulerian || g.is_eulerian())
            && (!self.regular || g.is_regular())
            && (!self.simple || g.is_simple())
    }

    /// Every accepted graph is connected, so `n ≤ m + 1`.
    fn implies_connected(&self) -> bool {
        self.connected || self.eulerian
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnumerationBounds {
    pub max_vertices: usize,
    pub max_edges: usize,
    pub max_multiplicity: usize,
    pub filters: Filters,
    /// Keep one representative per isomorphism class.
    pub dedup: bool,
    pub label_space_cap: u64,
}

impl EnumerationBounds {
    pub fn new(max_vertices: usize, max_edges: usize, max_multiplicity: usize) -> Self {
        EnumerationBounds {
            max_vertices,
            max_edges,
            max_multiplicity,
            filters: Filters::default(),
            dedup: true,
            label_space_cap: DEFAULT_LABEL_SPACE_CAP,
        }
    }

    pub fn connected(mut self) -> Self {
        self.filters.connected = true;
        self
    }

    pub fn eulerian(mut self) -> Self {
        self.filters.eulerian = true;
        self
    }

    pub fn regular(mut self) -> Self {
        self.filters.regular = true;
        self
    }

    pub fn simple(mut self) -> Self {
        self.filters.simple = true;
        self
    }

    pub fn labeled(mut self) -> Self {
        self.dedup = false;
        self
    }

    fn validate(&self) -> Result<(), EnumError> {
        if self.max_vertices == 0 {
            return Err(EnumError::InvalidBounds("max_vertices must be at least 1"));
        }
        if self.max_edges == 0 {
            return Err(EnumError::InvalidBounds("max_edges must be at least 1"));
        }
        if self.max_multiplicity == 0 {
            return Err(EnumError::InvalidBounds(
                "max_multiplicity must be at least 1",
            ));
        }
        if self.max_multiplicity > u8::MAX as usize {
            return Err(EnumError::InvalidBounds(
                "max_multiplicity must fit in a byte",
            ));
        }
        if self.dedup && self.vertex_range().end > CANONICAL_VERTEX_CAP + 1 {
            return Err(EnumError::TooLargeForCanonical {
                vertices: self.vertex_range().end - 1,
                cap: CANONICAL_VERTEX_CAP,
            });
        }
        let projected = self.projected_label_space();
        if projected > self.label_space_cap as u128 {
            return Err(EnumError::BoundsTooLarge {
                projected,
                cap: self.label_space_cap,
            });
        }
        Ok(())
    }

    fn multiplicity_cap(&self) -> usize {
        if self.filters.simple {
            1
        } else {
            self.max_multiplicity
        }
    }

    fn vertex_range(&self) -> std::ops::Range<usize> {
        let top = if self.filters.implies_connected() {
            self.max_vertices.min(self.max_edges + 1)
        } else {
            self.max_vertices
        };
        1..top + 1
    }

    /// Number of multiplicity vectors with total in `0..=max_edges`, summed over vertex counts.
    pub fn projected_label_space(&self) -> u128 {
        let mult = self.multiplicity_cap();
        self.vertex_range()
            .map(|n| {
                let pairs = n * (n - 1) / 2;
                // ways[s] = vectors over the pairs seen so far with total s
                let mut ways = vec![0u128; self.max_edges + 1];
                ways[0] = 1;
                for _ in 0..pairs {
                    let mut next = vec![0u128; self.max_edges + 1];
                    for (s, &w) in ways.iter().enumerate() {
                        for k in 0..=mult.min(self.max_edges - s) {
                            next[s + k] = next[s + k].saturating_add(w);
                        }
                    }
                    ways = next;
                }
                ways.iter().fold(0u128, |a, &b| a.saturating_add(b))
            })
            .fold(0u128, |a, b| a.saturating_add(b))
    }
}

/// Lazily yields the graphs admitted by `bounds`.
pub fn enumerate(bounds: &EnumerationBounds) -> Result<Enumeration, EnumError> {
    bounds.validate()?;
    Ok(Enumeration::new(bounds.clone()))
}

pub struct Enumeration {
    bounds: EnumerationBounds,
    vertices: usize,
    pairs: Vec<(usize, usize)>,
    counts: Vec<u8>,
    total: usize,
    seen: HashSet<Vec<u8>>,
    done: bool,
}

impl Enumeration {
    fn new(bounds: EnumerationBounds) -> Self {
        let vertices = bounds.vertex_range().start;
        let mut it = Enumeration {
            bounds,
            vertices,
            pairs: Vec::new(),
            counts: Vec::new(),
            total: 0,
            seen: HashSet::new(),
            done: false,
        };
        it.reset_vertices();
        it
    }

    fn reset_vertices(&mut self) {
        let n = self.vertices;
        self.pairs = (0..n)
            .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
            .collect();
        self.counts = vec![0; self.pairs.len()];
        self.total = 0;
    }

    /// Next multiplicity vector in lexicographic order with total ≤ max_edges.
    fn advance(&mut self) -> bool {
        let cap = self.bounds.multiplicity_cap() as u8;
        let mut suffix = 0;
        for i in (0..self.counts.len()).rev() {
            let without_suffix = self.total - suffix;
            if self.counts[i] < cap && without_suffix < self.bounds.max_edges {
                self.counts[i] += 1;
                for c in &mut self.counts[i + 1..] {
                    *c = 0;
                }
                self.total = without_suffix + 1;
                return true;
            }
            suffix += self.counts[i] as usize;
        }
        false
    }

    fn current_graph(&self) -> Multigraph {
        let pairs = self
            .pairs
            .iter()
            .zip(&self.counts)
            .flat_map(|(&p, &k)| std::iter::repeat_n(p, k as usize));
        Multigraph::build(self.vertices, pairs).expect("generated pairs are loop-free")
    }
}

impl Iterator for Enumeration {
    type Item = Multigraph;

    fn next(&mut self) -> Option<Multigraph> {
        while !self.done {
            if !self.advance() {
                if self.vertices + 1 >= self.bounds.vertex_range().end {
                    self.done = true;
                    return None;
                }
                self.vertices += 1;
                self.reset_vertices();
                continue;
            }
            let g = self.current_graph();
            if !self.bounds.filters.accepts(&g) {
                continue;
            }
            if self.bounds.dedup {
                let code = canonical_code(&g).expect("vertex count checked against the cap");
                if !self.seen.insert(code) {
                    continue;
                }
            }
            return Some(g);
        }
        None
    }
}

/// Isomorphism-invariant byte code: the vertex count followed by the
/// column-major upper triangle of the multiplicity matrix, minimized over all
/// vertex orderings that list vertices by non-increasing degree.
pub fn canonical_code(g: &Multigraph) -> Result<Vec<u8>, EnumError> {
    let n = g.vertex_count();
    if n > CANONICAL_VERTEX_CAP {
        return Err(EnumError::TooLargeForCanonical {
            vertices: n,
            cap: CANONICAL_VERTEX_CAP,
        });
    }
    let mut matrix = vec![vec![0u8; n]; n];
    for &(u, v) in g.edges() {
        matrix[u][v] = matrix[u][v].saturating_add(1);
        matrix[v][u] = matrix[v][u].saturating_add(1);
    }
    let degrees = g.degrees();
    let mut slots = degrees.clone();
    slots.sort_unstable_by(|a, b| b.cmp(a));

    let mut search = CanonicalSearch {
        matrix: &matrix,
        degrees: &degrees,
        slots: &slots,
        placed: Vec::with_capacity(n),
        free: vec![true; n],
        code: vec![n as u8],
        best: None,
    };
    search.extend();
    Ok(search.best.expect("at least one ordering exists"))
}

struct CanonicalSearch<'a> {
    matrix: &'a [Vec<u8>],
    degrees: &'a [usize],
    slots: &'a [usize],
    placed: Vec<usize>,
    free: Vec<bool>,
    code: Vec<u8>,
    best: Option<Vec<u8>>,
}

impl CanonicalSearch<'_> {
    fn extend(&mut self) {
        let pos = self.placed.len();
        if pos == self.slots.len() {
            if self.best.as_ref().is_none_or(|b| self.code < *b) {
                self.best = Some(self.code.clone());
            }
            return;
        }
        for v in 0..self.slots.len() {
            if !self.free[v] || self.degrees[v] != self.slots[pos] {
                continue;
            }
            let mark = self.code.len();
            self.code
                .extend(self.placed.iter().map(|&u| self.matrix[u][v]));
            let prefix_ok = match &self.best {
                Some(b) => self.code[..] <= b[..self.code.len()],
                None => true,
            };
            if prefix_ok {
                self.free[v] = false;
                self.placed.push(v);
                self.extend();
                self.placed.pop();
                self.free[v] = true;
            }
            self.code.truncate(mark);
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Check {
    /// χ′ = Δ for colorable graphs; the regular iff.
    Theorem1,
    /// Eulerian with odd |E| is not interval colorable.
    Theorem2,
    /// Eulerian and colorable implies even |E|.
    Corollary1,
    /// Subdividing any edge of an Eulerian colorable graph breaks colorability.
    Corollary3,
    /// G* of a connected colorable graph with odd |E| is not colorable.
    Corollary4,
}

impl Check {
    pub const ALL: [Check; 5] = [
        Check::Theorem1,
        Check::Theorem2,
        Check::Corollary1,
        Check::Corollary3,
        Check::Corollary4,
    ];
}

/// Tally names used in [`EnumerationReport::tallies`].
pub mod tally {
    pub const THEOREM1_NECESSARY: &str = "theorem1-necessary";
    pub const THEOREM1_REGULAR_IFF: &str = "theorem1-regular-iff";
    pub const THEOREM2: &str = "theorem2";
    pub const COROLLARY1: &str = "corollary1";
    pub const COROLLARY2: &str = "corollary2";
    pub const COROLLARY3: &str = "corollary3";
    pub const COROLLARY4: &str = "corollary4";
    pub const THEOREM3: &str = "theorem3-line-graph-index";
    pub const PARITY_INTERNALS: &str = "parity-internals";
    pub const WITNESS_SOUNDNESS: &str = "witness-soundness";
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Tally {
    pub checked: u64,
    pub passed: u64,
    /// Solver budget ran out; counted neither as checked nor as passed.
    pub inconclusive: u64,
    /// Hypotheses of the statement did not hold for the input.
    pub skipped: u64,
}

impl Tally {
    fn merge(&mut self, other: &Tally) {
        self.checked += other.checked;
        self.passed += other.passed;
        self.inconclusive += other.inconclusive;
        self.skipped += other.skipped;
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    /// Graph file text, with the offending coloring as `c` lines when there is one.
    pub graph: String,
    pub check: String,
    pub details: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct EnumerationReport {
    pub graphs_examined: u64,
    pub tallies: BTreeMap<String, Tally>,
    pub counterexamples: Vec<Counterexample>,
    pub notes: Vec<String>,
}

impl EnumerationReport {
    pub fn merge(&mut self, other: EnumerationReport) {
        self.graphs_examined += other.graphs_examined;
        for (name, t) in &other.tallies {
            self.tallies.entry(name.clone()).or_default().merge(t);
        }
        self.counterexamples.extend(other.counterexamples);
        self.notes.extend(other.notes);
    }

    pub fn tally(&self, name: &str) -> Tally {
        self.tallies.get(name).copied().unwrap_or_default()
    }

    pub fn inconclusive(&self) -> u64 {
        self.tallies.values().map(|t| t.inconclusive).sum()
    }

    /// No counterexamples and nothing left undecided.
    pub fn is_clean(&self) -> bool {
        self.counterexamples.is_empty() && self.inconclusive() == 0
    }

    fn pass(&mut self, name: &str) {
        let t = self.tallies.entry(name.to_string()).or_default();
        t.checked += 1;
        t.passed += 1;
    }

    fn fail(&mut self, name: &str, graph: String, details: String) {
        self.tallies.entry(name.to_string()).or_default().checked += 1;
        self.counterexamples.push(Counterexample {
            graph,
            check: name.to_string(),
            details,
        });
    }

    fn record(
        &mut self,
        name: &str,
        ok: bool,
        graph: impl FnOnce() -> String,
        details: impl FnOnce() -> String,
    ) {
        if ok {
            self.pass(name);
        } else {
            self.fail(name, graph(), details());
        }
    }

    fn undecided(&mut self, name: &str) {
        self.tallies
            .entry(name.to_string())
            .or_default()
            .inconclusive += 1;
    }

    fn skip(&mut self, name: &str) {
        self.tallies.entry(name.to_string()).or_default().skipped += 1;
    }
}

/// Runs the theorem checks over enumerated graphs.
#[derive(Debug, Clone, Copy)]
pub struct Harness {
    pub node_budget: Option<u64>,
    /// Decide "not colorable" claims by search even when the parity theorem applies.
    pub bypass_precheck: bool,
    pub jobs: usize,
}

impl Default for Harness {
    fn default() -> Self {
        Harness {
            node_budget: None,
            bypass_precheck: true,
            jobs: 1,
        }
    }
}

impl Harness {
    fn solver(&self) -> Solver {
        Solver::new(SolverConfig {
            node_budget: self.node_budget,
            parity_precheck: !self.bypass_precheck,
        })
    }

    /// Runs `checks` on every connected graph within `bounds`.
    pub fn verify(
        &self,
        bounds: &EnumerationBounds,
        checks: &[Check],
    ) -> Result<EnumerationReport, EnumError> {
        let bounds = bounds.clone().connected();
        let graphs: Vec<Multigraph> = enumerate(&bounds)?.collect();
        let run = |g: &Multigraph| self.check_graph(g, checks);
        let parts: Vec<EnumerationReport> = if self.jobs > 1 {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(self.jobs)
                .build()
                .expect("thread pool");
            pool.install(|| graphs.par_iter().map(run).collect())
        } else {
            graphs.iter().map(run).collect()
        };
        let mut report = EnumerationReport::default();
        for part in parts {
            report.merge(part);
        }
        Ok(report)
    }

    pub fn verify_theorem2(
        &self,
        bounds: &EnumerationBounds,
    ) -> Result<EnumerationReport, EnumError> {
        self.verify(&bounds.clone().eulerian(), &[Check::Theorem2])
    }

    pub fn verify_corollary1(
        &self,
        bounds: &EnumerationBounds,
    ) -> Result<EnumerationReport, EnumError> {
        self.verify(&bounds.clone().eulerian(), &[Check::Corollary1])
    }

    pub fn verify_corollary3(
        &self,
        bounds: &EnumerationBounds,
    ) -> Result<EnumerationReport, EnumError> {
        self.verify(&bounds.clone().eulerian(), &[Check::Corollary3])
    }

    pub fn verify_corollary4(
        &self,
        bounds: &EnumerationBounds,
    ) -> Result<EnumerationReport, EnumError> {
        self.verify(bounds, &[Check::Corollary4])
    }

    pub fn verify_theorem1(
        &self,
        bounds: &EnumerationBounds,
    ) -> Result<EnumerationReport, EnumError> {
        self.verify(bounds, &[Check::Theorem1])
    }

    /// Runs `checks` on a single graph, whatever its shape.
    pub fn check_graph(&self, g: &Multigraph, checks: &[Check]) -> EnumerationReport {
        let mut run = GraphRun {
            solver: self.solver(),
            report: EnumerationReport::default(),
        };
        run.report.graphs_examined = 1;
        let verdict = run.solve(g);
        for check in checks {
            match check {
                Check::Theorem1 => run.theorem1(g, &verdict),
                Check::Theorem2 => run.theorem2(g, &verdict),
                Check::Corollary1 => run.corollary1(g, &verdict),
                Check::Corollary3 => run.corollary3(g, &verdict),
                Check::Corollary4 => run.corollary4(g, &verdict),
            }
        }
        run.report
    }

    /// Line-graph checks on connected simple r-regular inputs (r ≥ 2) with even
    /// |E| that are interval colorable; other inputs are tallied as skipped.
    pub fn verify_corollary2(&self, inputs: &[Multigraph]) -> EnumerationReport {
        let mut run = GraphRun {
            solver: self.solver(),
            report: EnumerationReport::default(),
        };
        for g in inputs {
            run.report.graphs_examined += 1;
            let r = g.max_degree();
            let shaped = g.edge_count() > 0
                && g.is_connected()
                && g.is_simple()
                && g.is_regular()
                && r >= 2
                && g.edge_count() % 2 == 0;
            if !shaped {
                run.report.skip(tally::COROLLARY2);
                run.report.skip(tally::THEOREM3);
                continue;
            }
            match run.solve(g) {
                Ok(Verdict::Colorable(_)) => {}
                Ok(Verdict::NotColorable(_)) => {
                    run.report.skip(tally::COROLLARY2);
                    run.report.skip(tally::THEOREM3);
                    continue;
                }
                Err(_) => {
                    run.report.undecided(tally::COROLLARY2);
                    run.report.undecided(tally::THEOREM3);
                    continue;
                }
            }
            let line = g.line_graph().expect("input checked simple and nonempty");
            match run.solver.chromatic_index(&line) {
                Ok((k, _)) => {
                    run.report.notes.push(format!(
                        "L(G) for {}-regular G on {} vertices: chromatic index {k}",
                        r,
                        g.vertex_count()
                    ));
                    run.report.record(
                        tally::THEOREM3,
                        k == 2 * r - 2,
                        || serialize_graph(g),
                        || {
                            format!(
                                "chromatic index of the line graph is {k}, expected {}",
                                2 * r - 2
                            )
                        },
                    );
                }
                Err(_) => run.report.undecided(tally::THEOREM3),
            }
            let shape_ok = line.is_eulerian() && line.edge_count() % 2 == 0;
            match run.solve(&line) {
                Ok(v) => run.report.record(
                    tally::COROLLARY2,
                    shape_ok && v.is_colorable(),
                    || serialize_graph(g),
                    || {
                        format!(
                            "line graph: eulerian={} edges={} colorable={}",
                            line.is_eulerian(),
                            line.edge_count(),
                            v.is_colorable()
                        )
                    },
                ),
                Err(_) => run.report.undecided(tally::COROLLARY2),
            }
        }
        run.report
    }
}

/// C4, K4 and C6: the default inputs for the line-graph checks.
pub fn corollary2_builtin_inputs() -> Vec<Multigraph> {
    vec![
        families::cycle(4),
        families::complete(4),
        families::cycle(6),
    ]
}

struct GraphRun {
    solver: Solver,
    report: EnumerationReport,
}

impl GraphRun {
    /// Solves `g` and audits any witness it returns.
    fn solve(&mut self, g: &Multigraph) -> Result<Verdict, SolveError> {
        let verdict = self.solver.is_interval_colorable(g)?;
        if let Verdict::Colorable(w) = &verdict {
            self.audit_witness(g, w);
        }
        Ok(verdict)
    }

    fn audit_witness(&mut self, g: &Multigraph, w: &EdgeColoring) {
        let sound = is_interval(g, w) == Ok(true) && w.t() as usize >= g.max_degree();
        self.report.record(
            tally::WITNESS_SOUNDNESS,
            sound,
            || serialize_document(g, w),
            || "solver witness is not an interval coloring".into(),
        );
        if !g.all_degrees_even() {
            return;
        }
        let m = g.edge_count();
        let bad_vertex = (0..g.vertex_count()).find(|&v| {
            let s = spectrum(g, w, v).expect("witness covers the graph");
            s.odd_count() * 2 != g.degrees()[v]
        });
        let odd_edges = odd_color_edge_count(g, w).expect("witness covers the graph");
        self.report.record(
            tally::PARITY_INTERNALS,
            bad_vertex.is_none() && odd_edges * 2 == m,
            || serialize_document(g, w),
            || format!("vertex with unbalanced spectrum: {bad_vertex:?}; odd-colored edges {odd_edges} of {m}"),
        );
    }

    fn theorem1(&mut self, g: &Multigraph, verdict: &Result<Verdict, SolveError>) {
        let colorable = match verdict {
            Ok(v) => v.is_colorable(),
            Err(_) => {
                self.report.undecided(tally::THEOREM1_NECESSARY);
                if g.is_regular() {
                    self.report.undecided(tally::THEOREM1_REGULAR_IFF);
                }
                return;
            }
        };
        if !colorable && !g.is_regular() {
            self.report.skip(tally::THEOREM1_NECESSARY);
            return;
        }
        let Ok((chi, _)) = self.solver.chromatic_index(g) else {
            self.report.undecided(tally::THEOREM1_NECESSARY);
            if g.is_regular() {
                self.report.undecided(tally::THEOREM1_REGULAR_IFF);
            }
            return;
        };
        let delta = g.max_degree();
        if colorable {
            self.report.record(
                tally::THEOREM1_NECESSARY,
                chi == delta,
                || {
                    serialize_document(
                        g,
                        verdict
                            .as_ref()
                            .ok()
                            .and_then(Verdict::witness)
                            .expect("colorable"),
                    )
                },
                || format!("interval colorable but chromatic index {chi} != max degree {delta}"),
            );
        } else {
            self.report.skip(tally::THEOREM1_NECESSARY);
        }
        if g.is_regular() {
            self.report.record(
                tally::THEOREM1_REGULAR_IFF,
                colorable == (chi == delta),
                || serialize_graph(g),
                || format!("regular graph: colorable={colorable}, chromatic index {chi}, max degree {delta}"),
            );
        }
    }

    fn theorem2(&mut self, g: &Multigraph, verdict: &Result<Verdict, SolveError>) {
        if !(g.is_eulerian() && g.edge_count() % 2 == 1) {
            self.report.skip(tally::THEOREM2);
            return;
        }
        self.expect_not_colorable(
            tally::THEOREM2,
            g,
            verdict,
            "Eulerian graph with odd edge count",
        );
    }

    fn corollary1(&mut self, g: &Multigraph, verdict: &Result<Verdict, SolveError>) {
        if !g.is_eulerian() {
            self.report.skip(tally::COROLLARY1);
            return;
        }
        match verdict {
            Ok(Verdict::Colorable(w)) => self.report.record(
                tally::COROLLARY1,
                g.edge_count().is_multiple_of(2),
                || serialize_document(g, w),
                || {
                    format!(
                        "Eulerian interval colorable graph with {} edges",
                        g.edge_count()
                    )
                },
            ),
            Ok(Verdict::NotColorable(_)) => self.report.skip(tally::COROLLARY1),
            Err(_) => self.report.undecided(tally::COROLLARY1),
        }
    }

    fn corollary3(&mut self, g: &Multigraph, verdict: &Result<Verdict, SolveError>) {
        if !g.is_eulerian() {
            self.report.skip(tally::COROLLARY3);
            return;
        }
        match verdict {
            Ok(Verdict::Colorable(_)) => {}
            Ok(Verdict::NotColorable(_)) => return self.report.skip(tally::COROLLARY3),
            Err(_) => return self.report.undecided(tally::COROLLARY3),
        }
        for e in 0..g.edge_count() {
            let sub = g.subdivide(e).expect("edge id in range");
            let v = self.solve(&sub);
            let context = format!("subdivision of edge {e} of an Eulerian colorable graph");
            self.expect_not_colorable(tally::COROLLARY3, &sub, &v, &context);
        }
    }

    fn corollary4(&mut self, g: &Multigraph, verdict: &Result<Verdict, SolveError>) {
        if !(g.is_connected() && g.edge_count() % 2 == 1) {
            self.report.skip(tally::COROLLARY4);
            return;
        }
        match verdict {
            Ok(Verdict::Colorable(_)) => {}
            Ok(Verdict::NotColorable(_)) => return self.report.skip(tally::COROLLARY4),
            Err(_) => return self.report.undecided(tally::COROLLARY4),
        }
        let star = g.star_augment();
        let v = self.solve(&star);
        self.expect_not_colorable(
            tally::COROLLARY4,
            &star,
            &v,
            "star augmentation of a colorable odd-size graph",
        );
    }

    fn expect_not_colorable(
        &mut self,
        name: &str,
        g: &Multigraph,
        verdict: &Result<Verdict, SolveError>,
        context: &str,
    ) {
        match verdict {
            Ok(Verdict::NotColorable(_)) => self.report.pass(name),
            Ok(Verdict::Colorable(w)) => self.report.fail(
                name,
                serialize_document(g, w),
                format!("{context}: interval {}-coloring found", w.t()),
            ),
            Err(_) => self.report.undecided(name),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::multigraph::families::*;

    fn codes(bounds: &EnumerationBounds) -> Vec<Vec<u8>> {
        enumerate(bounds)
            .unwrap()
            .map(|g| canonical_code(&g).unwrap())
            .collect()
    }

    #[test]
    fn connected_simple_up_to_three() {
        let b = EnumerationBounds::new(3, 3, 1).connected().simple();
        let got = codes(&b);
        let mut want = vec![
            canonical_code(&path(2)).unwrap(),
            canonical_code(&path(3)).unwrap(),
            canonical_code(&cycle(3)).unwrap(),
        ];
        let mut got_sorted = got.clone();
        got_sorted.sort();
        want.sort();
        assert_eq!(got_sorted, want);
    }

    #[test]
    fn connected_two_vertices_with_multiplicity() {
        let got: Vec<Multigraph> = enumerate(&EnumerationBounds::new(2, 2, 2).connected())
            .unwrap()
            .collect();
        assert_eq!(got, vec![dipole(1), dipole(2)]);
    }

    #[test]
    fn eulerian_small() {
        let got = codes(&EnumerationBounds::new(3, 4, 2).eulerian());
        assert!(got.contains(&canonical_code(&cycle(3)).unwrap()));
        assert!(got.contains(&canonical_code(&dipole(2)).unwrap()));
        assert!(!got.contains(&canonical_code(&path(3)).unwrap()));
    }

    #[test]
    fn canonical_code_examples() {
        let c4 = cycle(4);
        let relabeled = Multigraph::build(4, [(2, 0), (0, 3), (3, 1), (1, 2)]).unwrap();
        assert_eq!(canonical_code(&c4), canonical_code(&relabeled));
        assert_ne!(canonical_code(&c4), canonical_code(&path(4)));
        assert_ne!(canonical_code(&dipole(2)), canonical_code(&dipole(1)));
        // same degree sequence, not isomorphic
        let two_triangles =
            Multigraph::build(6, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3)]).unwrap();
        assert_ne!(canonical_code(&cycle(6)), canonical_code(&two_triangles));
        assert_eq!(
            canonical_code(&complete(9)),
            Err(EnumError::TooLargeForCanonical {
                vertices: 9,
                cap: CANONICAL_VERTEX_CAP
            })
        );
    }

    #[test]
    fn bounds_validation() {
        assert!(matches!(
            enumerate(&EnumerationBounds::new(0, 1, 1)),
            Err(EnumError::InvalidBounds(_))
        ));
        assert!(matches!(
            enumerate(&EnumerationBounds::new(1, 0, 1)),
            Err(EnumError::InvalidBounds(_))
        ));
        assert!(matches!(
            enumerate(&EnumerationBounds::new(1, 1, 0)),
            Err(EnumError::InvalidBounds(_))
        ));
        let mut b = EnumerationBounds::new(6, 10, 3).labeled();
        b.label_space_cap = 1000;
        assert!(matches!(
            enumerate(&b),
            Err(EnumError::BoundsTooLarge { .. })
        ));
        assert!(matches!(
            enumerate(&EnumerationBounds::new(9, 3, 1)),
            Err(EnumError::TooLargeForCanonical { .. })
        ));
    }

    #[test]
    fn projected_space_counts_bounded_vectors() {
        // n=1: 1 vector; n=2: totals 0..=2 with cap 2: 3 vectors
        assert_eq!(EnumerationBounds::new(2, 2, 2).projected_label_space(), 4);
        // three pairs, cap 1, total ≤ 3: 2^3
        let b = EnumerationBounds::new(3, 3, 1);
        assert_eq!(b.projected_label_space(), 1 + 2 + 8);
    }

    #[test]
    fn labeled_enumeration_counts() {
        // all 8 subsets of K3's edges minus the empty one, plus K2 on two vertices
        let b = EnumerationBounds::new(3, 3, 1).labeled();
        assert_eq!(enumerate(&b).unwrap().count(), 1 + 7);
    }

    #[test]
    fn single_graph_checks() {
        let h = Harness::default();
        let r = h.check_graph(&cycle(3), &[Check::Theorem2]);
        assert_eq!(
            r.tally(tally::THEOREM2),
            Tally {
                checked: 1,
                passed: 1,
                ..Default::default()
            }
        );
        let r = h.check_graph(&cycle(4), &[Check::Corollary1, Check::Corollary3]);
        assert_eq!(r.tally(tally::COROLLARY1).passed, 1);
        assert_eq!(
            r.tally(tally::COROLLARY3),
            Tally {
                checked: 4,
                passed: 4,
                ..Default::default()
            }
        );
        let r = h.check_graph(&path(2), &[Check::Corollary4]);
        assert_eq!(r.tally(tally::COROLLARY4).passed, 1);
        assert!(r.is_clean());
    }

    #[test]
    fn budget_exhaustion_is_inconclusive() {
        let h = Harness {
            node_budget: Some(5),
            ..Default::default()
        };
        let r = h.check_graph(&complete(5), &[Check::Theorem1, Check::Corollary1]);
        assert!(r.counterexamples.is_empty());
        assert_eq!(r.tally(tally::COROLLARY1).inconclusive, 1);
        assert!(!r.is_clean());
    }

    #[test]
    fn report_merge_is_associative() {
        let h = Harness::default();
        let parts: Vec<_> = [cycle(3), cycle(4), path(2)]
            .iter()
            .map(|g| h.check_graph(g, &Check::ALL))
            .collect();
        let mut left = parts[0].clone();
        left.merge(parts[1].clone());
        left.merge(parts[2].clone());
        let mut tail = parts[1].clone();
        tail.merge(parts[2].clone());
        let mut right = parts[0].clone();
        right.merge(tail);
        assert_eq!(left, right);
    }
}
