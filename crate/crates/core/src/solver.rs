//! Exact decision procedures for interval colorability and chromatic index.
//!
//! Both searches color edges in a fixed order that grows a connected region
//! (each next edge touches an already-ordered edge when one exists), so the
//! per-vertex constraints start biting early. Every positive answer carries a
//! witness that the caller can re-check with [`crate::coloring`]; every
//! negative answer is the result of a complete search or of the parity
//! theorem, never of a budget cut-off.

use thiserror::Error;

use crate::coloring::{Color, EdgeColoring};
use crate::multigraph::{EdgeId, Multigraph};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reason {
    /// Eulerian with an odd number of edges.
    ParityTheorem,
    /// Every `t` in `Δ..=|E|` was searched to completion.
    ExhaustedSearch,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    Colorable(EdgeColoring),
    NotColorable(Reason),
}

impl Verdict {
    pub fn is_colorable(&self) -> bool {
        matches!(self, Verdict::Colorable(_))
    }

    pub fn witness(&self) -> Option<&EdgeColoring> {
        match self {
            Verdict::Colorable(c) => Some(c),
            Verdict::NotColorable(_) => None,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("graph has no edges")]
    EmptyGraph,
    #[error("the number of colors must be positive")]
    ZeroColors,
    #[error("graph is not regular")]
    NotRegular,
    #[error("search budget exhausted after {nodes} nodes")]
    Inconclusive { nodes: u64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SolverConfig {
    /// Maximum number of search nodes per top-level call; `None` is unlimited.
    pub node_budget: Option<u64>,
    /// Answer Eulerian odd-size graphs by the parity theorem instead of searching.
    pub parity_precheck: bool,
}

impl Default for SolverConfig {
    fn default() -> Self {
        SolverConfig {
            node_budget: None,
            parity_precheck: true,
        }
    }
}

/// `NotColorable(ParityTheorem)` iff `g` is Eulerian with odd edge count.
pub fn parity_precheck(g: &Multigraph) -> Option<Verdict> {
    (g.is_eulerian() && g.edge_count() % 2 == 1)
        .then_some(Verdict::NotColorable(Reason::ParityTheorem))
}

/// Runs the searches. The node counter is reset by every public call and
/// reports the work done by the most recent one.
#[derive(Debug, Clone, Default)]
pub struct Solver {
    config: SolverConfig,
    nodes: u64,
}

impl Solver {
    pub fn new(config: SolverConfig) -> Self {
        Solver { config, nodes: 0 }
    }

    pub fn config(&self) -> SolverConfig {
        self.config
    }

    pub fn nodes_explored(&self) -> u64 {
        self.nodes
    }

    /// An interval coloring using exactly the colors `1..=t`, if one exists.
    pub fn find_interval_coloring(
        &mut self,
        g: &Multigraph,
        t: Color,
    ) -> Result<Option<EdgeColoring>, SolveError> {
        self.nodes = 0;
        self.interval_search(g, t)
    }

    /// Decides membership in the class of interval colorable multigraphs.
    pub fn is_interval_colorable(&mut self, g: &Multigraph) -> Result<Verdict, SolveError> {
        self.nodes = 0;
        if g.edge_count() == 0 {
            return Err(SolveError::EmptyGraph);
        }
        if self.config.parity_precheck {
            if let Some(v) = parity_precheck(g) {
                return Ok(v);
            }
        }
        for t in g.max_degree()..=g.edge_count() {
            if let Some(c) = self.interval_search(g, t as Color)? {
                return Ok(Verdict::Colorable(c));
            }
        }
        Ok(Verdict::NotColorable(Reason::ExhaustedSearch))
    }

    /// χ′(G) together with a proper coloring using `1..=χ′`.
    pub fn chromatic_index(&mut self, g: &Multigraph) -> Result<(usize, EdgeColoring), SolveError> {
        self.nodes = 0;
        if g.edge_count() == 0 {
            return Err(SolveError::EmptyGraph);
        }
        // Vizing/Shannon put χ′ at most Δ + μ, and every graph has a proper
        // |E|-coloring, so the loop always returns.
        for k in g.max_degree()..=g.edge_count() {
            let mut search = ProperSearch::new(g, k as Color, self.remaining_budget());
            let found = search.run();
            self.nodes += search.nodes;
            if found? {
                let c = EdgeColoring::new(k as Color, search.colors).expect("colors within 1..=k");
                return Ok((k, c));
            }
        }
        unreachable!("a graph with m edges always has a proper m-coloring")
    }

    /// If `g` is interval colorable then χ′(G) = Δ(G).
    pub fn theorem1_necessary_check(&mut self, g: &Multigraph) -> Result<bool, SolveError> {
        let verdict = self.is_interval_colorable(g)?;
        let spent = self.nodes;
        let holds = match verdict {
            Verdict::Colorable(_) => self.chromatic_index(g)?.0 == g.max_degree(),
            Verdict::NotColorable(_) => true,
        };
        self.nodes += spent;
        Ok(holds)
    }

    /// For regular `g`: interval colorable iff χ′(G) = Δ(G).
    pub fn theorem1_regular_iff_check(&mut self, g: &Multigraph) -> Result<bool, SolveError> {
        if g.edge_count() == 0 {
            return Err(SolveError::EmptyGraph);
        }
        if !g.is_regular() {
            return Err(SolveError::NotRegular);
        }
        let colorable = self.is_interval_colorable(g)?.is_colorable();
        let spent = self.nodes;
        let class_one = self.chromatic_index(g)?.0 == g.max_degree();
        self.nodes += spent;
        Ok(colorable == class_one)
    }

    fn interval_search(
        &mut self,
        g: &Multigraph,
        t: Color,
    ) -> Result<Option<EdgeColoring>, SolveError> {
        if g.edge_count() == 0 {
            return Err(SolveError::EmptyGraph);
        }
        if t == 0 {
            return Err(SolveError::ZeroColors);
        }
        // t < Δ leaves some vertex without room; t > |E| cannot use every color.
        if (t as usize) < g.max_degree() || t as usize > g.edge_count() {
            return Ok(None);
        }
        let mut search = IntervalSearch::new(g, t, self.remaining_budget());
        let found = search.run();
        self.nodes += search.nodes;
        Ok(found?.then(|| EdgeColoring::new(t, search.colors).expect("colors within 1..=t")))
    }

    fn remaining_budget(&self) -> Option<u64> {
        self.config
            .node_budget
            .map(|b| b.saturating_sub(self.nodes))
    }
}

/// Edge order for the searches: start from the lowest edge at a
/// maximum-degree vertex, then repeatedly take the edge whose endpoint already
/// has the most ordered edges (ties: larger endpoint sum, then lower id).
pub(crate) fn search_order(g: &Multigraph) -> Vec<EdgeId> {
    let m = g.edge_count();
    let mut ordered_at = vec![0usize; g.vertex_count()];
    let mut taken = vec![false; m];
    let mut order = Vec::with_capacity(m);
    let degrees = g.degrees();
    while order.len() < m {
        let mut best: Option<(usize, usize, usize, EdgeId)> = None;
        for (e, &(u, v)) in g.edges().iter().enumerate() {
            if taken[e] {
                continue;
            }
            let (a, b) = (ordered_at[u], ordered_at[v]);
            let key = if order.is_empty() || a + b == 0 {
                // fresh component: prefer high degree endpoints
                (0, degrees[u].max(degrees[v]), 0, e)
            } else {
                (1, a.max(b), a + b, e)
            };
            let better = match best {
                None => true,
                Some((p, q, r, _)) => (key.0, key.1, key.2) > (p, q, r),
            };
            if better {
                best = Some(key);
            }
        }
        let (_, _, _, e) = best.expect("an untaken edge remains");
        taken[e] = true;
        let (u, v) = g.edges()[e];
        ordered_at[u] += 1;
        ordered_at[v] += 1;
        order.push(e);
    }
    order
}

/// Per-vertex used-color bitsets, `words` u64s per vertex.
struct ColorSets {
    words: usize,
    bits: Vec<u64>,
}

impl ColorSets {
    fn new(vertices: usize, t: Color) -> Self {
        let words = (t as usize + 1).div_ceil(64);
        ColorSets {
            words,
            bits: vec![0; vertices * words],
        }
    }

    #[inline]
    fn contains(&self, v: usize, c: Color) -> bool {
        let c = c as usize;
        self.bits[v * self.words + c / 64] >> (c % 64) & 1 == 1
    }

    #[inline]
    fn toggle(&mut self, v: usize, c: Color) {
        let c = c as usize;
        self.bits[v * self.words + c / 64] ^= 1 << (c % 64);
    }
}

struct IntervalSearch<'g> {
    g: &'g Multigraph,
    t: Color,
    order: Vec<EdgeId>,
    degree: Vec<Color>,
    placed: Vec<u32>,
    lo: Vec<Color>,
    hi: Vec<Color>,
    used: ColorSets,
    usage: Vec<u32>,
    unused_colors: usize,
    colors: Vec<Color>,
    budget: Option<u64>,
    nodes: u64,
}

impl<'g> IntervalSearch<'g> {
    fn new(g: &'g Multigraph, t: Color, budget: Option<u64>) -> Self {
        let n = g.vertex_count();
        IntervalSearch {
            g,
            t,
            order: search_order(g),
            degree: g.degrees().into_iter().map(|d| d as Color).collect(),
            placed: vec![0; n],
            lo: vec![0; n],
            hi: vec![0; n],
            used: ColorSets::new(n, t),
            usage: vec![0; t as usize + 1],
            unused_colors: t as usize,
            colors: vec![0; g.edge_count()],
            budget,
            nodes: 0,
        }
    }

    fn run(&mut self) -> Result<bool, SolveError> {
        self.extend(0)
    }

    /// Colors that keep both endpoints' spectra inside some window of their degree.
    fn window(&self, e: EdgeId) -> (Color, Color) {
        let (u, v) = self.g.edges()[e];
        let mut from = 1;
        let mut to = self.t;
        for w in [u, v] {
            if self.placed[w] > 0 {
                from = from.max((self.hi[w] + 1).saturating_sub(self.degree[w]));
                to = to.min(self.lo[w] + self.degree[w] - 1);
            }
        }
        (from, to)
    }

    fn extend(&mut self, depth: usize) -> Result<bool, SolveError> {
        let m = self.order.len();
        if depth == m {
            return Ok(self.unused_colors == 0);
        }
        let e = self.order[depth];
        let (u, v) = self.g.edges()[e];
        let (from, mut to) = self.window(e);
        if depth == 0 {
            // c -> t+1-c maps interval t-colorings onto each other
            to = to.min(self.t.div_ceil(2));
        }
        let remaining_after = m - depth - 1;
        for c in from..=to {
            if self.used.contains(u, c) || self.used.contains(v, c) {
                continue;
            }
            let fresh = self.usage[c as usize] == 0;
            if self.unused_colors - fresh as usize > remaining_after {
                continue;
            }
            self.nodes += 1;
            if self.budget.is_some_and(|b| self.nodes > b) {
                return Err(SolveError::Inconclusive { nodes: self.nodes });
            }
            let saved = [(self.lo[u], self.hi[u]), (self.lo[v], self.hi[v])];
            self.place(e, c);
            if self.extend(depth + 1)? {
                return Ok(true);
            }
            self.unplace(e, c, saved);
        }
        Ok(false)
    }

    fn place(&mut self, e: EdgeId, c: Color) {
        let (u, v) = self.g.edges()[e];
        for w in [u, v] {
            if self.placed[w] == 0 {
                self.lo[w] = c;
                self.hi[w] = c;
            } else {
                self.lo[w] = self.lo[w].min(c);
                self.hi[w] = self.hi[w].max(c);
            }
            self.placed[w] += 1;
            self.used.toggle(w, c);
        }
        if self.usage[c as usize] == 0 {
            self.unused_colors -= 1;
        }
        self.usage[c as usize] += 1;
        self.colors[e] = c;
    }

    fn unplace(&mut self, e: EdgeId, c: Color, saved: [(Color, Color); 2]) {
        let (u, v) = self.g.edges()[e];
        for (w, (lo, hi)) in [u, v].into_iter().zip(saved) {
            self.placed[w] -= 1;
            self.used.toggle(w, c);
            self.lo[w] = lo;
            self.hi[w] = hi;
        }
        self.usage[c as usize] -= 1;
        if self.usage[c as usize] == 0 {
            self.unused_colors += 1;
        }
        self.colors[e] = 0;
    }
}

struct ProperSearch<'g> {
    g: &'g Multigraph,
    k: Color,
    order: Vec<EdgeId>,
    used: ColorSets,
    colors: Vec<Color>,
    budget: Option<u64>,
    nodes: u64,
}

impl<'g> ProperSearch<'g> {
    fn new(g: &'g Multigraph, k: Color, budget: Option<u64>) -> Self {
        ProperSearch {
            g,
            k,
            order: search_order(g),
            used: ColorSets::new(g.vertex_count(), k),
            colors: vec![0; g.edge_count()],
            budget,
            nodes: 0,
        }
    }

    fn run(&mut self) -> Result<bool, SolveError> {
        self.extend(0, 0)
    }

    // Colors are interchangeable, so a new edge may open at most one fresh color.
    fn extend(&mut self, depth: usize, max_used: Color) -> Result<bool, SolveError> {
        if depth == self.order.len() {
            return Ok(true);
        }
        let e = self.order[depth];
        let (u, v) = self.g.edges()[e];
        for c in 1..=self.k.min(max_used + 1) {
            if self.used.contains(u, c) || self.used.contains(v, c) {
                continue;
            }
            self.nodes += 1;
            if self.budget.is_some_and(|b| self.nodes > b) {
                return Err(SolveError::Inconclusive { nodes: self.nodes });
            }
            self.used.toggle(u, c);
            self.used.toggle(v, c);
            self.colors[e] = c;
            if self.extend(depth + 1, max_used.max(c))? {
                return Ok(true);
            }
            self.used.toggle(u, c);
            self.used.toggle(v, c);
            self.colors[e] = 0;
        }
        Ok(false)
    }
}
