//! Immutable simple graphs, canonical presets and degree profiles.
//!
//! Every edge is stored as an ordered pair `(u, v)` with `u < v`. The edge
//! sequence keeps the order in which the edges were supplied, so edge ids are
//! stable for a given construction call. The labeling algorithms rely on that:
//! "the `j`-th edge of a block" always means the `j`-th edge of this sequence.

use std::collections::HashSet;
use std::fmt;

use thiserror::Error;

pub type VertexId = usize;
pub type EdgeId = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({vertex},{vertex}) is a loop")]
    LoopEdge { vertex: VertexId },
    #[error("edge ({u},{v}) appears more than once")]
    DuplicateEdge { u: VertexId, v: VertexId },
    #[error("vertex {vertex} out of range for a graph on {vertex_count} vertices")]
    IndexOutOfRange {
        vertex: VertexId,
        vertex_count: usize,
    },
    #[error("bad parameters for {kind}: {reason}")]
    BadParams { kind: String, reason: String },
    #[error("expected {expected} vertex names, got {got}")]
    NameCountMismatch { expected: usize, got: usize },
}

/// An undirected simple graph with a fixed edge order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    vertex_count: usize,
    edges: Vec<(VertexId, VertexId)>,
    names: Option<Vec<String>>,
    incidence: Vec<Vec<EdgeId>>,
}

impl Graph {
    /// Builds a graph from an edge list. Each pair is canonicalized to
    /// `(min, max)`; the sequence order is kept.
    pub fn new(vertex_count: usize, edges: &[(VertexId, VertexId)]) -> Result<Self, GraphError> {
        let mut seen = HashSet::with_capacity(edges.len());
        let mut canonical = Vec::with_capacity(edges.len());
        let mut incidence = vec![Vec::new(); vertex_count];
        for (id, &(a, b)) in edges.iter().enumerate() {
            for vertex in [a, b] {
                if vertex >= vertex_count {
                    return Err(GraphError::IndexOutOfRange {
                        vertex,
                        vertex_count,
                    });
                }
            }
            if a == b {
                return Err(GraphError::LoopEdge { vertex: a });
            }
            let (u, v) = if a < b { (a, b) } else { (b, a) };
            if !seen.insert((u, v)) {
                return Err(GraphError::DuplicateEdge { u, v });
            }
            canonical.push((u, v));
            incidence[u].push(id);
            incidence[v].push(id);
        }
        Ok(Graph {
            vertex_count,
            edges: canonical,
            names: None,
            incidence,
        })
    }

    /// Attaches display names to the vertices.
    pub fn with_names(mut self, names: Vec<String>) -> Result<Self, GraphError> {
        if names.len() != self.vertex_count {
            return Err(GraphError::NameCountMismatch {
                expected: self.vertex_count,
                got: names.len(),
            });
        }
        self.names = Some(names);
        Ok(self)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn edge(&self, id: EdgeId) -> (VertexId, VertexId) {
        self.edges[id]
    }

    /// Edge ids incident to `v`, in ascending id order.
    pub fn incident_edges(&self, v: VertexId) -> &[EdgeId] {
        &self.incidence[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.incidence[v].len()
    }

    pub fn neighbors(&self, v: VertexId) -> impl Iterator<Item = VertexId> + '_ {
        self.incidence[v].iter().map(move |&e| {
            let (a, b) = self.edges[e];
            if a == v {
                b
            } else {
                a
            }
        })
    }

    pub fn edge_between(&self, u: VertexId, v: VertexId) -> Option<EdgeId> {
        if u >= self.vertex_count || v >= self.vertex_count {
            return None;
        }
        let key = if u < v { (u, v) } else { (v, u) };
        let probe = if self.degree(u) <= self.degree(v) {
            u
        } else {
            v
        };
        self.incidence[probe]
            .iter()
            .copied()
            .find(|&e| self.edges[e] == key)
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    /// Display name of `v`; `v{index}` when the graph carries no names.
    pub fn name(&self, v: VertexId) -> String {
        match &self.names {
            Some(names) => names[v].clone(),
            None => format!("v{v}"),
        }
    }

    /// True for the empty graph and for graphs whose vertices are all reachable
    /// from vertex 0.
    pub fn is_connected(&self) -> bool {
        if self.vertex_count == 0 {
            return true;
        }
        let mut seen = vec![false; self.vertex_count];
        let mut stack = vec![0];
        seen[0] = true;
        let mut reached = 1;
        while let Some(v) = stack.pop() {
            for w in self.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    reached += 1;
                    stack.push(w);
                }
            }
        }
        reached == self.vertex_count
    }

    pub fn degree_profile(&self) -> DegreeProfile {
        DegreeProfile::of(self)
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "graph on {} vertices, {} edges",
            self.vertex_count,
            self.edges.len()
        )
    }
}

/// Per-vertex degrees together with their extremes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeProfile {
    pub degrees: Vec<usize>,
    pub max_degree: usize,
    pub min_degree: usize,
}

impl DegreeProfile {
    pub fn of(graph: &Graph) -> Self {
        let degrees: Vec<usize> = (0..graph.vertex_count()).map(|v| graph.degree(v)).collect();
        let max_degree = degrees.iter().copied().max().unwrap_or(0);
        let min_degree = degrees.iter().copied().min().unwrap_or(0);
        DegreeProfile {
            degrees,
            max_degree,
            min_degree,
        }
    }

    pub fn degree_sum(&self) -> usize {
        self.degrees.iter().sum()
    }
}

/// Families available through [`preset_graph`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum PresetKind {
    Path,
    Cycle,
    Complete,
    Star,
    CompleteBipartite,
    Diamond,
    Pan,
    Spider,
}

impl PresetKind {
    pub fn name(self) -> &'static str {
        match self {
            PresetKind::Path => "path",
            PresetKind::Cycle => "cycle",
            PresetKind::Complete => "complete",
            PresetKind::Star => "star",
            PresetKind::CompleteBipartite => "complete_bipartite",
            PresetKind::Diamond => "diamond",
            PresetKind::Pan => "pan",
            PresetKind::Spider => "spider",
        }
    }

    pub fn from_name(name: &str) -> Option<Self> {
        Some(match name {
            "path" => PresetKind::Path,
            "cycle" => PresetKind::Cycle,
            "complete" => PresetKind::Complete,
            "star" => PresetKind::Star,
            "complete_bipartite" => PresetKind::CompleteBipartite,
            "diamond" => PresetKind::Diamond,
            "pan" => PresetKind::Pan,
            "spider" => PresetKind::Spider,
            _ => return None,
        })
    }
}

impl fmt::Display for PresetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn bad(kind: PresetKind, reason: impl Into<String>) -> GraphError {
    GraphError::BadParams {
        kind: kind.name().to_string(),
        reason: reason.into(),
    }
}

fn single_param(kind: PresetKind, params: &[usize], min: usize) -> Result<usize, GraphError> {
    match params {
        [n] if *n >= min => Ok(*n),
        [n] => Err(bad(kind, format!("need n >= {min}, got {n}"))),
        _ => Err(bad(
            kind,
            format!("expected 1 parameter, got {}", params.len()),
        )),
    }
}

/// Builds one of the named graph families.
///
/// | kind | params | vertices |
/// |---|---|---|
/// | path | `n >= 1` | `n` |
/// | cycle | `n >= 3` | `n` |
/// | complete | `n >= 1` | `n` |
/// | star | `n >= 2` | `n` (hub 0) |
/// | complete_bipartite | `a, b >= 1` | `a + b` |
/// | diamond | none | 4 |
/// | pan | `r >= 3` | `r + 1` |
/// | spider | `p >= 1` | `3p + 1` |
pub fn preset_graph(kind: PresetKind, params: &[usize]) -> Result<Graph, GraphError> {
    match kind {
        PresetKind::Path => path(single_param(kind, params, 1)?),
        PresetKind::Cycle => cycle(single_param(kind, params, 3)?),
        PresetKind::Complete => complete(single_param(kind, params, 1)?),
        PresetKind::Star => star(single_param(kind, params, 2)?),
        PresetKind::CompleteBipartite => match params {
            [a, b] if *a >= 1 && *b >= 1 => complete_bipartite(*a, *b),
            [a, b] => Err(bad(kind, format!("need a, b >= 1, got {a}, {b}"))),
            _ => Err(bad(
                kind,
                format!("expected 2 parameters, got {}", params.len()),
            )),
        },
        PresetKind::Diamond if params.is_empty() => diamond(),
        PresetKind::Diamond => Err(bad(kind, "takes no parameters")),
        PresetKind::Pan => pan(single_param(kind, params, 3)?),
        PresetKind::Spider => spider(single_param(kind, params, 1)?),
    }
}

/// `P_n` with edges in walk order `0-1-2-...`.
pub fn path(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(bad(PresetKind::Path, "need n >= 1"));
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Graph::new(n, &edges)
}

/// `C_n` with edges in walk order along `1, 0, n-1, n-2, ..., 2, 1`.
///
/// For `C_3` this is the lexicographic order `01, 02, 12`.
pub fn cycle(n: usize) -> Result<Graph, GraphError> {
    if n < 3 {
        return Err(bad(PresetKind::Cycle, format!("need n >= 3, got {n}")));
    }
    let mut edges = vec![(0, 1), (0, n - 1)];
    edges.extend((2..n).rev().map(|i| (i - 1, i)));
    Graph::new(n, &edges)
}

/// `K_n` in lexicographic edge order.
pub fn complete(n: usize) -> Result<Graph, GraphError> {
    if n == 0 {
        return Err(bad(PresetKind::Complete, "need n >= 1"));
    }
    let edges: Vec<_> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    Graph::new(n, &edges)
}

/// Star on `n` vertices: hub 0 joined to leaves `1..n`.
pub fn star(n: usize) -> Result<Graph, GraphError> {
    if n < 2 {
        return Err(bad(PresetKind::Star, format!("need n >= 2, got {n}")));
    }
    let edges: Vec<_> = (1..n).map(|leaf| (0, leaf)).collect();
    Graph::new(n, &edges)
}

/// `K_{a,b}` with parts `0..a` and `a..a+b`, lexicographic edge order.
pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph, GraphError> {
    if a == 0 || b == 0 {
        return Err(bad(PresetKind::CompleteBipartite, "need a, b >= 1"));
    }
    let edges: Vec<_> = (0..a)
        .flat_map(|u| (a..a + b).map(move |v| (u, v)))
        .collect();
    Graph::new(a + b, &edges)
}

/// `K_4` minus the edge `23`; vertices 0 and 1 have degree 3.
pub fn diamond() -> Result<Graph, GraphError> {
    Graph::new(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])
}

/// Pan graph on `u_0..u_r`: pendant `u_0` hangs off `u_r`, and the cycle is
/// listed in zig-zag order `u_1u_2, u_1u_3, u_2u_4, ..., u_{r-2}u_r, u_{r-1}u_r`.
pub fn pan(r: usize) -> Result<Graph, GraphError> {
    if r < 3 {
        return Err(bad(PresetKind::Pan, format!("need r >= 3, got {r}")));
    }
    let mut edges = vec![(0, r), (1, 2)];
    edges.extend((1..=r - 2).map(|i| (i, i + 2)));
    edges.push((r - 1, r));
    let names = (0..=r).map(|i| format!("u{i}")).collect();
    Graph::new(r + 1, &edges)?.with_names(names)
}

/// Spider with three legs of `p` vertices each: `v_0`, then `x_1..x_p`,
/// `y_1..y_p`, `z_1..z_p`. Edges go leg by leg, from the centre outwards.
pub fn spider(p: usize) -> Result<Graph, GraphError> {
    if p == 0 {
        return Err(bad(PresetKind::Spider, "need p >= 1"));
    }
    let mut edges = Vec::with_capacity(3 * p);
    let mut names = vec!["v0".to_string()];
    for (leg, letter) in ["x", "y", "z"].into_iter().enumerate() {
        let first = 1 + leg * p;
        edges.push((0, first));
        for k in 1..p {
            edges.push((first + k - 1, first + k));
        }
        names.extend((1..=p).map(|k| format!("{letter}{k}")));
    }
    Graph::new(3 * p + 1, &edges)?.with_names(names)
}
