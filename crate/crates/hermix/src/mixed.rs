//! Mixed graphs: an underlying graph plus a per-edge state (undirected,
//! forward arc or backward arc), JSON I/O, arc reversal and named fixtures.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{complete_graph, hypercube, Graph};
use crate::hermitian::{entry_pair, GaussianInt};

/// State of one edge, relative to the stored ordered pair `(u, v)` with
/// `u < v`: `Forward` is the arc u -> v, `Backward` is v -> u.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeState {
    Undirected,
    Forward,
    Backward,
}

impl EdgeState {
    pub fn reversed(self) -> Self {
        match self {
            EdgeState::Undirected => EdgeState::Undirected,
            EdgeState::Forward => EdgeState::Backward,
            EdgeState::Backward => EdgeState::Forward,
        }
    }

    pub fn is_arc(self) -> bool {
        self != EdgeState::Undirected
    }

    fn as_str(self) -> &'static str {
        match self {
            EdgeState::Undirected => "undirected",
            EdgeState::Forward => "forward",
            EdgeState::Backward => "backward",
        }
    }

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "undirected" => Ok(EdgeState::Undirected),
            "forward" => Ok(EdgeState::Forward),
            "backward" => Ok(EdgeState::Backward),
            other => Err(Error::UnknownState(other.to_string())),
        }
    }
}

/// A mixed graph: underlying [`Graph`] plus one [`EdgeState`] per edge,
/// aligned with [`Graph::edges`]. Immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MixedGraph {
    graph: Graph,
    states: Vec<EdgeState>,
}

impl MixedGraph {
    /// Pairs `graph` with `states` aligned to `graph.edges()`.
    pub fn new(graph: Graph, states: Vec<EdgeState>) -> Result<Self> {
        if states.len() != graph.edge_count() {
            return Err(Error::MixedJson(format!(
                "{} states for {} edges",
                states.len(),
                graph.edge_count()
            )));
        }
        Ok(Self { graph, states })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn states(&self) -> &[EdgeState] {
        &self.states
    }

    /// State of the edge between `u` and `v`, reported relative to the
    /// stored pair (min, max).
    pub fn state(&self, u: usize, v: usize) -> Option<EdgeState> {
        self.graph.edge_index(u, v).map(|i| self.states[i])
    }

    /// The Hermitian entry h_uv; zero when u, v are not adjacent.
    pub fn hermitian_entry(&self, u: usize, v: usize) -> GaussianInt {
        match self.graph.edge_index(u, v) {
            None => GaussianInt::ZERO,
            Some(i) => {
                let (huv, hvu) = entry_pair(self.states[i]);
                if u < v {
                    huv
                } else {
                    hvu
                }
            }
        }
    }

    /// Number of arcs (the quantity `a`).
    pub fn arc_count(&self) -> usize {
        self.states.iter().filter(|s| s.is_arc()).count()
    }

    /// Number of undirected edges (the quantity `b`); a + b = |E|.
    pub fn undirected_count(&self) -> usize {
        self.states.len() - self.arc_count()
    }

    pub fn is_oriented(&self) -> bool {
        self.states.iter().all(|s| s.is_arc())
    }

    /// Every arc reversed, undirected edges unchanged. Involution.
    pub fn reverse_all_arcs(&self) -> MixedGraph {
        MixedGraph {
            graph: self.graph.clone(),
            states: self.states.iter().map(|s| s.reversed()).collect(),
        }
    }

    /// Arcs incident to `v` reversed, everything else unchanged. Involution.
    pub fn reverse_arcs_at(&self, v: usize) -> Result<MixedGraph> {
        let n = self.graph.vertex_count();
        if v >= n {
            return Err(Error::VertexOutOfRange { vertex: v, n });
        }
        let states = self
            .graph
            .edges()
            .iter()
            .zip(&self.states)
            .map(|(&(a, b), &s)| if a == v || b == v { s.reversed() } else { s })
            .collect();
        Ok(MixedGraph { graph: self.graph.clone(), states })
    }

    /// Image under the vertex permutation `perm`: edge (u, v) becomes
    /// (perm[u], perm[v]) and the arc u -> v becomes perm[u] -> perm[v].
    pub fn relabel(&self, perm: &[usize]) -> Result<MixedGraph> {
        let n = self.graph.vertex_count();
        if perm.len() != n {
            return Err(Error::NotAnAutomorphism);
        }
        let mut mapped: Vec<((usize, usize), EdgeState)> = Vec::with_capacity(self.states.len());
        for (&(u, v), &s) in self.graph.edges().iter().zip(&self.states) {
            let (a, b) = (perm[u], perm[v]);
            if a < b {
                mapped.push(((a, b), s));
            } else {
                mapped.push(((b, a), s.reversed()));
            }
        }
        mapped.sort_unstable_by_key(|&(e, _)| e);
        let graph = Graph::new(n, mapped.iter().map(|&(e, _)| e))?;
        MixedGraph::new(graph, mapped.into_iter().map(|(_, s)| s).collect())
    }
}

/// Orients every edge: the closure receives each stored pair `(u, v)` with
/// `u < v` and returns true for the arc u -> v.
pub fn orient_all<F: Fn(usize, usize) -> bool>(g: &Graph, forward: F) -> MixedGraph {
    let states = g
        .edges()
        .iter()
        .map(|&(u, v)| if forward(u, v) { EdgeState::Forward } else { EdgeState::Backward })
        .collect();
    MixedGraph { graph: g.clone(), states }
}

/// Every edge becomes the arc from its lower to its higher endpoint.
pub fn orient_low_high(g: &Graph) -> MixedGraph {
    orient_all(g, |_, _| true)
}

/// Every edge undirected.
pub fn undirect_all(g: &Graph) -> MixedGraph {
    MixedGraph {
        graph: g.clone(),
        states: vec![EdgeState::Undirected; g.edge_count()],
    }
}

// ---------------------------------------------------------------------------
// Fixtures
// ---------------------------------------------------------------------------

/// Named mixed graphs transcribed from their defining arc lists, shifted
/// from 1-indexed vertices to 0-indexed (v_t maps to t - 1).
///
/// G1 lives on K4; H1 and H3..H6 live on Q3 under the labeling where v_t is
/// the binary word t - 1 (so e.g. v1v5 is the edge (0, 4)). H2 and the two
/// oriented representatives D1, D2 are intentionally not fixtures: they are
/// identified by the census via class signatures instead.
pub fn fixture(name: &str) -> Result<MixedGraph> {
    type Pairs = &'static [(usize, usize)];
    let (graph, undirected, arcs): (Graph, Pairs, Pairs) = match name {
        "G1" => (
            complete_graph(4),
            &[(0, 1), (0, 2), (0, 3)],
            // u2 -> u3, u4 -> u2, u3 -> u4
            &[(1, 2), (3, 1), (2, 3)],
        ),
        "H1" => (
            hypercube(3)?,
            &[(0, 2), (0, 1), (0, 4)],
            // v3->v4, v4->v2, v2->v6, v6->v5, v5->v7, v7->v3, v4->v8, v6->v8, v7->v8
            &[(2, 3), (3, 1), (1, 5), (5, 4), (4, 6), (6, 2), (3, 7), (5, 7), (6, 7)],
        ),
        "H3" => (
            hypercube(3)?,
            &[(0, 2), (0, 1), (4, 6), (4, 5)],
            // v3->v4, v4->v2, v7->v8, v8->v6, v4->v8, v6->v2, v1->v5, v7->v3
            &[(2, 3), (3, 1), (6, 7), (7, 5), (3, 7), (5, 1), (0, 4), (6, 2)],
        ),
        "H4" => (
            hypercube(3)?,
            &[(0, 2), (0, 1), (2, 6), (4, 5), (6, 7)],
            // v3->v4, v4->v2, v4->v8, v7->v5, v5->v1, v2->v6, v6->v8
            &[(2, 3), (3, 1), (3, 7), (6, 4), (4, 0), (1, 5), (5, 7)],
        ),
        "H5" => (
            hypercube(3)?,
            &[(0, 2), (0, 1), (2, 6), (4, 5), (5, 7), (3, 7)],
            // v3->v4, v4->v2, v2->v6, v5->v1, v7->v5, v8->v7
            &[(2, 3), (3, 1), (1, 5), (4, 0), (6, 4), (7, 6)],
        ),
        "H6" => (
            hypercube(3)?,
            &[(0, 2), (0, 1), (0, 4), (5, 7), (3, 7), (6, 7)],
            // v3->v4, v4->v2, v2->v6, v6->v5, v5->v7, v7->v3
            &[(2, 3), (3, 1), (1, 5), (5, 4), (4, 6), (6, 2)],
        ),
        other => return Err(Error::UnknownFixture(other.to_string())),
    };
    let mut states = vec![None; graph.edge_count()];
    for &(u, v) in undirected {
        let i = graph.edge_index(u, v).expect("fixture edge exists");
        states[i] = Some(EdgeState::Undirected);
    }
    for &(from, to) in arcs {
        let i = graph.edge_index(from, to).expect("fixture edge exists");
        let s = if from < to { EdgeState::Forward } else { EdgeState::Backward };
        states[i] = Some(s);
    }
    let states: Vec<EdgeState> =
        states.into_iter().map(|s| s.expect("fixture assigns every edge")).collect();
    MixedGraph::new(graph, states)
}

pub const FIXTURE_NAMES: &[&str] = &["G1", "H1", "H3", "H4", "H5", "H6"];

// ---------------------------------------------------------------------------
// JSON
// ---------------------------------------------------------------------------

/// One edge of the JSON document.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EdgeDoc {
    pub u: usize,
    pub v: usize,
    pub state: String,
}

/// The mixed-graph JSON document: `{"n": int, "edges": [{"u", "v",
/// "state"}]}` with `u < v` required on every edge. Canonical form has the
/// edges sorted ascending.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct MixedDoc {
    pub n: usize,
    pub edges: Vec<EdgeDoc>,
}

impl MixedDoc {
    pub fn into_mixed(self) -> Result<MixedGraph> {
        let mut pairs = Vec::with_capacity(self.edges.len());
        for e in &self.edges {
            if e.u >= e.v {
                return Err(Error::UnorderedEdge { u: e.u, v: e.v });
            }
            pairs.push(((e.u, e.v), EdgeState::from_str(&e.state)?));
        }
        pairs.sort_unstable_by_key(|&(e, _)| e);
        let graph = Graph::new(self.n, pairs.iter().map(|&(e, _)| e))?;
        let states = pairs.into_iter().map(|(_, s)| s).collect();
        MixedGraph::new(graph, states)
    }
}

impl MixedGraph {
    /// Canonical document: edges in the stored (sorted) order.
    pub fn to_doc(&self) -> MixedDoc {
        MixedDoc {
            n: self.graph.vertex_count(),
            edges: self
                .graph
                .edges()
                .iter()
                .zip(&self.states)
                .map(|(&(u, v), &s)| EdgeDoc { u, v, state: s.as_str().to_string() })
                .collect(),
        }
    }
}

/// Parses the mixed-graph JSON document.
pub fn parse_mixed_json(text: &str) -> Result<MixedGraph> {
    let doc: MixedDoc =
        serde_json::from_str(text).map_err(|e| Error::MixedJson(e.to_string()))?;
    doc.into_mixed()
}

/// Canonical JSON for a mixed graph: edges sorted ascending, fixed field
/// order, no whitespace. `parse_mixed_json` round-trips this exactly.
pub fn emit_mixed_json(m: &MixedGraph) -> String {
    serde_json::to_string(&m.to_doc()).expect("mixed-graph document serializes")
}
