//! Loop-free multigraphs with stable edge identities.
//!
//! Edges are stored in a dense vector indexed by [`EdgeId`]; parallel edges are
//! separate entries. The incidence lists are kept in ascending edge-id order so
//! that every traversal below is deterministic in the input edge order.

use std::collections::BTreeMap;
use std::fmt;

use thiserror::Error;

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("a multigraph needs at least one vertex")]
    NoVertices,
    #[error("edge {edge} is a loop at vertex {vertex}")]
    LoopEdge { edge: EdgeId, vertex: VertexId },
    #[error("vertex {vertex} out of range (vertex count {vertex_count})")]
    VertexOutOfRange {
        vertex: VertexId,
        vertex_count: usize,
    },
    #[error("edge {edge} out of range (edge count {edge_count})")]
    EdgeOutOfRange { edge: EdgeId, edge_count: usize },
    #[error("graph is not Eulerian")]
    NotEulerian,
    #[error("graph has parallel edges between {0} and {1}")]
    NotSimple(VertexId, VertexId),
}

/// A multigraph without loops. Immutable once built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Multigraph {
    vertex_count: usize,
    edges: Vec<(VertexId, VertexId)>,
    incidence: Vec<Vec<EdgeId>>,
}

impl fmt::Debug for Multigraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Multigraph(n={}, edges={:?})",
            self.vertex_count, self.edges
        )
    }
}

impl Multigraph {
    /// Builds a multigraph, assigning edge ids in input order.
    pub fn build<I>(vertex_count: usize, endpoint_pairs: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        if vertex_count == 0 {
            return Err(GraphError::NoVertices);
        }
        let mut edges = Vec::new();
        let mut incidence = vec![Vec::new(); vertex_count];
        for (id, (u, v)) in endpoint_pairs.into_iter().enumerate() {
            for w in [u, v] {
                if w >= vertex_count {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: w,
                        vertex_count,
                    });
                }
            }
            if u == v {
                return Err(GraphError::LoopEdge {
                    edge: id,
                    vertex: u,
                });
            }
            incidence[u].push(id);
            incidence[v].push(id);
            edges.push((u, v));
        }
        Ok(Multigraph {
            vertex_count,
            edges,
            incidence,
        })
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Endpoints of every edge, indexed by edge id.
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn endpoints(&self, e: EdgeId) -> Result<(VertexId, VertexId), GraphError> {
        self.edges
            .get(e)
            .copied()
            .ok_or(GraphError::EdgeOutOfRange {
                edge: e,
                edge_count: self.edges.len(),
            })
    }

    /// Edge ids incident to `v`, ascending.
    pub fn incident_edges(&self, v: VertexId) -> Result<&[EdgeId], GraphError> {
        self.check_vertex(v)?;
        Ok(&self.incidence[v])
    }

    pub(crate) fn incidence(&self) -> &[Vec<EdgeId>] {
        &self.incidence
    }

    pub fn degree(&self, v: VertexId) -> Result<usize, GraphError> {
        self.check_vertex(v)?;
        Ok(self.incidence[v].len())
    }

    pub fn degrees(&self) -> Vec<usize> {
        self.incidence.iter().map(Vec::len).collect()
    }

    /// Δ(G); zero for an edgeless graph.
    pub fn max_degree(&self) -> usize {
        self.incidence.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn is_regular(&self) -> bool {
        let d = self.incidence[0].len();
        self.incidence.iter().all(|inc| inc.len() == d)
    }

    /// Number of edges between `u` and `v`.
    pub fn multiplicity(&self, u: VertexId, v: VertexId) -> Result<usize, GraphError> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        Ok(self.incidence[u]
            .iter()
            .filter(|&&e| {
                let (a, b) = self.edges[e];
                (a == u && b == v) || (a == v && b == u)
            })
            .count())
    }

    /// Largest number of parallel edges joining one vertex pair (0 when edgeless).
    pub fn max_multiplicity(&self) -> usize {
        self.pair_multiplicities().into_values().max().unwrap_or(0)
    }

    pub fn is_simple(&self) -> bool {
        self.max_multiplicity() <= 1
    }

    /// Multiplicity of every adjacent vertex pair, keyed by `(min, max)`.
    pub fn pair_multiplicities(&self) -> BTreeMap<(VertexId, VertexId), usize> {
        let mut pairs = BTreeMap::new();
        for &(u, v) in &self.edges {
            *pairs.entry((u.min(v), u.max(v))).or_insert(0) += 1;
        }
        pairs
    }

    /// True iff every vertex lies in a single component. A lone vertex is connected.
    pub fn is_connected(&self) -> bool {
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for &e in &self.incidence[v] {
                let w = self.other_end(e, v);
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == self.vertex_count
    }

    /// Connected, at least one edge, and every degree even.
    pub fn is_eulerian(&self) -> bool {
        !self.edges.is_empty() && self.all_degrees_even() && self.is_connected()
    }

    pub fn all_degrees_even(&self) -> bool {
        self.incidence.iter().all(|inc| inc.len() % 2 == 0)
    }

    /// Builds a closed trail through every edge by splicing sub-circuits
    /// (Hierholzer). The walk always leaves a vertex through its lowest
    /// unused edge id.
    pub fn euler_circuit(&self) -> Result<EulerCertificate, GraphError> {
        if !self.is_eulerian() {
            return Err(GraphError::NotEulerian);
        }
        let mut used = vec![false; self.edges.len()];
        let mut cursor = vec![0usize; self.vertex_count];
        let start = self.edges[0].0;
        // (vertex, edge used to arrive there)
        let mut stack: Vec<(VertexId, Option<EdgeId>)> = vec![(start, None)];
        let mut circuit = Vec::with_capacity(self.edges.len());
        while let Some(&(v, _)) = stack.last() {
            let inc = &self.incidence[v];
            while cursor[v] < inc.len() && used[inc[cursor[v]]] {
                cursor[v] += 1;
            }
            if cursor[v] == inc.len() {
                let (_, via) = stack.pop().expect("stack is nonempty");
                if let Some(e) = via {
                    circuit.push(e);
                }
            } else {
                let e = inc[cursor[v]];
                used[e] = true;
                stack.push((self.other_end(e, v), Some(e)));
            }
        }
        circuit.reverse();
        Ok(EulerCertificate { start, circuit })
    }

    /// G_e: replaces edge `e = (a, b)` by `(a, w)` keeping id `e` and `(w, b)`
    /// with id `m`, where `w` is the new vertex `n`.
    pub fn subdivide(&self, e: EdgeId) -> Result<Multigraph, GraphError> {
        let (a, b) = self.endpoints(e)?;
        let w = self.vertex_count;
        let mut pairs = self.edges.clone();
        pairs[e] = (a, w);
        pairs.push((w, b));
        Multigraph::build(self.vertex_count + 1, pairs)
    }

    /// G*: adds a vertex `u = n` joined once to every odd-degree vertex, in
    /// ascending vertex order. When there are no odd vertices `u` is isolated.
    pub fn star_augment(&self) -> Multigraph {
        let u = self.vertex_count;
        let mut pairs = self.edges.clone();
        pairs.extend(
            (0..self.vertex_count)
                .filter(|&v| self.incidence[v].len() % 2 == 1)
                .map(|v| (u, v)),
        );
        Multigraph::build(self.vertex_count + 1, pairs).expect("star augmentation is loop-free")
    }

    /// L(G) for a simple graph with at least one edge. Vertex `i` of the result
    /// is edge `i` of `self`; result edges are listed in lexicographic pair order.
    pub fn line_graph(&self) -> Result<Multigraph, GraphError> {
        if let Some((&(u, v), _)) = self.pair_multiplicities().iter().find(|(_, &k)| k > 1) {
            return Err(GraphError::NotSimple(u, v));
        }
        if self.edges.is_empty() {
            return Err(GraphError::NoVertices);
        }
        let m = self.edges.len();
        let mut pairs = Vec::new();
        for i in 0..m {
            let (a, b) = self.edges[i];
            for j in i + 1..m {
                let (c, d) = self.edges[j];
                if a == c || a == d || b == c || b == d {
                    pairs.push((i, j));
                }
            }
        }
        Multigraph::build(m, pairs)
    }

    pub(crate) fn other_end(&self, e: EdgeId, v: VertexId) -> VertexId {
        let (a, b) = self.edges[e];
        if a == v {
            b
        } else {
            a
        }
    }

    fn check_vertex(&self, v: VertexId) -> Result<(), GraphError> {
        if v < self.vertex_count {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                vertex_count: self.vertex_count,
            })
        }
    }
}

/// A closed trail, given as a start vertex and the edge ids in walking order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerCertificate {
    pub start: VertexId,
    pub circuit: Vec<EdgeId>,
}

impl EulerCertificate {
    /// Re-walks the trail against `g`: every edge exactly once, consecutive
    /// edges share the current vertex, and the walk returns to `start`.
    pub fn validate(&self, g: &Multigraph) -> bool {
        if self.circuit.len() != g.edge_count() || self.start >= g.vertex_count() {
            return false;
        }
        let mut seen = vec![false; g.edge_count()];
        let mut at = self.start;
        for &e in &self.circuit {
            let Some(&(a, b)) = g.edges().get(e) else {
                return false;
            };
            if seen[e] {
                return false;
            }
            seen[e] = true;
            at = if a == at {
                b
            } else if b == at {
                a
            } else {
                return false;
            };
        }
        at == self.start
    }
}

/// Named families used by tests, examples and the CLI.
pub mod families {
    use super::Multigraph;

    pub fn path(n: usize) -> Multigraph {
        Multigraph::build(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
    }

    pub fn cycle(n: usize) -> Multigraph {
        assert!(n >= 3, "a simple cycle needs at least 3 vertices");
        Multigraph::build(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
    }

    pub fn complete(n: usize) -> Multigraph {
        let pairs = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j)));
        Multigraph::build(n, pairs).expect("valid complete graph")
    }

    pub fn star(leaves: usize) -> Multigraph {
        Multigraph::build(leaves + 1, (1..=leaves).map(|i| (0, i))).expect("valid star")
    }

    /// Two vertices joined by `k` parallel edges.
    pub fn dipole(k: usize) -> Multigraph {
        Multigraph::build(2, std::iter::repeat_n((0, 1), k)).expect("valid dipole")
    }
}
