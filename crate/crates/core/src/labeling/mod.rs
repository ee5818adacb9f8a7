//! Constructive edge labelings.
//!
//! All three constructions share one pattern: hand out consecutive label runs
//! to groups of edges, and before each run that finishes off a group of
//! vertices, sort those vertices by their current partial sums so that the
//! increasing run keeps their final sums increasing too.

mod pan;
mod spider;
mod universal;

pub use pan::label_type1;
pub use spider::label_type2;
pub use universal::universal_vertex_labeling;

use serde::Serialize;
use thiserror::Error;

use crate::conditions::ConditionReport;
use crate::corona::{BaseSpec, CoronaInstance};
use crate::graph::{EdgeId, Graph, VertexId};

/// Edge labels and vertex sums share this type.
pub type Label = i64;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum LabelError {
    #[error("edge {edge} is already labeled")]
    AlreadyLabeled { edge: EdgeId },
    #[error("edge {edge} was never labeled")]
    Unlabeled { edge: EdgeId },
    #[error("instance does not satisfy the sufficient conditions: {}", .0.failed_ids().join(", "))]
    ConditionsNotMet(ConditionReport),
    #[error("expected a {expected} base, got {got}")]
    WrongBaseType {
        expected: &'static str,
        got: BaseSpec,
    },
    #[error("vertex {vertex} is not adjacent to every other vertex")]
    NotUniversal { vertex: VertexId },
    #[error("the universal-vertex construction produced repeated vertex sums")]
    ConstructionFailed,
}

/// A complete assignment of labels to edge ids.
///
/// Nothing is enforced on construction; [`Labeling::is_bijection`] and the
/// verifier decide whether it is a permutation of `1..=|E|`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Labeling {
    labels: Vec<Label>,
}

impl Labeling {
    pub fn new(labels: Vec<Label>) -> Self {
        Labeling { labels }
    }

    pub fn labels(&self) -> &[Label] {
        &self.labels
    }

    pub fn label(&self, edge: EdgeId) -> Label {
        self.labels[edge]
    }

    pub fn total_edges(&self) -> usize {
        self.labels.len()
    }

    pub fn is_bijection(&self) -> bool {
        let n = self.labels.len();
        let mut seen = vec![false; n];
        self.labels.iter().all(|&l| {
            if l < 1 || l as usize > n {
                return false;
            }
            !std::mem::replace(&mut seen[l as usize - 1], true)
        })
    }

    /// Labels of the given edges, in order.
    pub fn labels_of<'a>(&'a self, edges: &'a [EdgeId]) -> impl Iterator<Item = Label> + 'a {
        edges.iter().map(move |&e| self.labels[e])
    }
}

/// A labeling under construction.
#[derive(Debug, Clone)]
pub struct PartialLabeling {
    labels: Vec<Option<Label>>,
}

impl PartialLabeling {
    pub fn new(edge_count: usize) -> Self {
        PartialLabeling {
            labels: vec![None; edge_count],
        }
    }

    pub fn get(&self, edge: EdgeId) -> Option<Label> {
        self.labels[edge]
    }

    /// Gives `edges[j]` the label `start + j + 1` and returns the last label
    /// used (`start` itself when `edges` is empty).
    pub fn label_block(&mut self, edges: &[EdgeId], start: Label) -> Result<Label, LabelError> {
        if let Some(&edge) = edges.iter().find(|&&e| self.labels[e].is_some()) {
            return Err(LabelError::AlreadyLabeled { edge });
        }
        let mut last = start;
        for &e in edges {
            last += 1;
            self.labels[e] = Some(last);
        }
        Ok(last)
    }

    /// Sum of the labels already placed around `v`.
    pub fn partial_sum(&self, graph: &Graph, v: VertexId) -> Label {
        graph
            .incident_edges(v)
            .iter()
            .filter_map(|&e| self.labels[e])
            .sum()
    }

    pub fn finish(self) -> Result<Labeling, LabelError> {
        self.labels
            .into_iter()
            .enumerate()
            .map(|(edge, l)| l.ok_or(LabelError::Unlabeled { edge }))
            .collect::<Result<Vec<_>, _>>()
            .map(Labeling::new)
    }
}

/// Vertices of one group sorted by partial sum, ties by ascending id.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RankedBlock {
    pub name: String,
    pub vertices: Vec<VertexId>,
    pub partial_sums: Vec<Label>,
}

pub fn rank_by_partial_sums(
    name: impl Into<String>,
    vertices: &[VertexId],
    partial_sum: impl Fn(VertexId) -> Label,
) -> RankedBlock {
    let mut keyed: Vec<(Label, VertexId)> = vertices.iter().map(|&v| (partial_sum(v), v)).collect();
    keyed.sort_unstable();
    RankedBlock {
        name: name.into(),
        vertices: keyed.iter().map(|&(_, v)| v).collect(),
        partial_sums: keyed.iter().map(|&(s, _)| s).collect(),
    }
}

/// A named group in the ordering the construction promises for final sums.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainStage {
    pub name: String,
    pub vertices: Vec<VertexId>,
}

impl ChainStage {
    pub fn new(name: impl Into<String>, vertices: Vec<VertexId>) -> Self {
        ChainStage {
            name: name.into(),
            vertices,
        }
    }
}

/// Partial sums recorded at a named point of a construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Checkpoint {
    pub step: String,
    pub partial_sums: Vec<(VertexId, Label)>,
}

/// Bookkeeping a construction leaves behind for inspection and testing.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Trace {
    /// Last label used before each named phase.
    pub offsets: Vec<(String, Label)>,
    pub ranked: Vec<RankedBlock>,
    /// Final sums strictly increase along the concatenation of these stages.
    pub chain: Vec<ChainStage>,
    pub checkpoints: Vec<Checkpoint>,
}

impl Trace {
    pub fn offset(&self, name: &str) -> Option<Label> {
        self.offsets
            .iter()
            .find(|(n, _)| n == name)
            .map(|&(_, l)| l)
    }

    pub fn ranked(&self, name: &str) -> Option<&RankedBlock> {
        self.ranked.iter().find(|r| r.name == name)
    }

    pub fn checkpoint(&self, step: &str) -> Option<&Checkpoint> {
        self.checkpoints.iter().find(|c| c.step == step)
    }

    fn record(&mut self, name: &str, label: Label) {
        self.offsets.push((name.to_string(), label));
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabelingOutcome {
    pub labeling: Labeling,
    pub trace: Trace,
}

/// Runs the construction that matches the instance's base.
pub fn label_instance(inst: &CoronaInstance, force: bool) -> Result<LabelingOutcome, LabelError> {
    match inst.base() {
        BaseSpec::Pan { .. } => label_type1(inst, force),
        BaseSpec::Spider { .. } => label_type2(inst, force),
    }
}

fn require_conditions(inst: &CoronaInstance, force: bool) -> Result<(), LabelError> {
    if force {
        return Ok(());
    }
    let report = crate::conditions::check_conditions(inst);
    if report.overall {
        Ok(())
    } else {
        Err(LabelError::ConditionsNotMet(report))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn consecutive_block() {
        let mut state = PartialLabeling::new(5);
        assert_eq!(state.label_block(&[3, 1, 4], 7), Ok(10));
        assert_eq!(state.get(3), Some(8));
        assert_eq!(state.get(1), Some(9));
        assert_eq!(state.get(4), Some(10));
        assert_eq!(state.label_block(&[], 5), Ok(5));
        assert_eq!(
            state.label_block(&[0, 4], 10),
            Err(LabelError::AlreadyLabeled { edge: 4 })
        );
        // a rejected run leaves nothing behind
        assert_eq!(state.get(0), None);
        assert_eq!(state.finish(), Err(LabelError::Unlabeled { edge: 0 }));
    }

    #[test]
    fn ranking_examples() {
        let sums = |v: VertexId| match v {
            7 => 5,
            8 => 3,
            9 => 4,
            _ => unreachable!(),
        };
        assert_eq!(
            rank_by_partial_sums("t", &[7, 8, 9], sums).vertices,
            vec![8, 9, 7]
        );
        let tied = rank_by_partial_sums("t", &[2, 1], |_| 4);
        assert_eq!(tied.vertices, vec![1, 2]);
        assert_eq!(tied.partial_sums, vec![4, 4]);
    }

    #[test]
    fn bijection_check() {
        assert!(Labeling::new(vec![2, 3, 1]).is_bijection());
        assert!(!Labeling::new(vec![1, 1, 2]).is_bijection());
        assert!(!Labeling::new(vec![0, 1]).is_bijection());
        assert!(!Labeling::new(vec![1, 3]).is_bijection());
        assert!(Labeling::new(vec![]).is_bijection());
    }
}
