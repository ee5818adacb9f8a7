//! Vertex sums and the antimagic check.
//!
//! Nothing here knows how a labeling was produced; it only reads the graph
//! and the labels, so it certifies the constructions independently.

use std::collections::{BTreeMap, HashMap};

use serde::Serialize;
use thiserror::Error;

use crate::graph::{EdgeId, Graph, VertexId};
use crate::labeling::{ChainStage, Label, Labeling};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("labels are not a bijection onto 1..={edges}: {reason}")]
    NotABijection { edges: usize, reason: String },
}

/// One inequality of a construction's promised ordering.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainVerdict {
    pub inequality: String,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SumReport {
    pub sums: Vec<Label>,
    /// Every set of two or more vertices sharing a sum, ordered by that sum.
    pub duplicate_groups: Vec<Vec<VertexId>>,
    pub is_antimagic: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub chain: Option<Vec<ChainVerdict>>,
}

impl SumReport {
    /// Evaluates a chain against these sums and attaches the verdicts.
    pub fn with_chain(mut self, chain: &[ChainStage]) -> Self {
        self.chain = Some(check_chain(&self.sums, chain));
        self
    }

    /// True when no chain is attached or every attached inequality holds.
    pub fn chain_holds(&self) -> bool {
        self.chain
            .as_ref()
            .is_none_or(|verdicts| verdicts.iter().all(|v| v.holds))
    }

    pub fn max_sum(&self) -> Option<Label> {
        self.sums.iter().copied().max()
    }
}

fn not_bijection(graph: &Graph, reason: String) -> VerifyError {
    VerifyError::NotABijection {
        edges: graph.edge_count(),
        reason,
    }
}

/// Computes `w(v)` for every vertex and groups collisions.
pub fn vertex_sums(graph: &Graph, labeling: &Labeling) -> Result<SumReport, VerifyError> {
    let m = graph.edge_count();
    if labeling.total_edges() != m {
        return Err(not_bijection(
            graph,
            format!("{} labels for {m} edges", labeling.total_edges()),
        ));
    }
    let mut seen = vec![false; m];
    for (e, &l) in labeling.labels().iter().enumerate() {
        if l < 1 || l as usize > m {
            return Err(not_bijection(
                graph,
                format!("edge {e} has label {l} out of range"),
            ));
        }
        if std::mem::replace(&mut seen[l as usize - 1], true) {
            return Err(not_bijection(graph, format!("label {l} used twice")));
        }
    }

    let sums: Vec<Label> = (0..graph.vertex_count())
        .map(|v| labeling.labels_of(graph.incident_edges(v)).sum())
        .collect();
    let mut by_sum: BTreeMap<Label, Vec<VertexId>> = BTreeMap::new();
    for (v, &s) in sums.iter().enumerate() {
        by_sum.entry(s).or_default().push(v);
    }
    let duplicate_groups: Vec<_> = by_sum.into_values().filter(|g| g.len() > 1).collect();
    Ok(SumReport {
        is_antimagic: duplicate_groups.is_empty(),
        sums,
        duplicate_groups,
        chain: None,
    })
}

/// `w'(v)`: sum over the incident edges that already carry a label.
pub fn partial_vertex_sum(graph: &Graph, partial: &HashMap<EdgeId, Label>, v: VertexId) -> Label {
    graph
        .incident_edges(v)
        .iter()
        .filter_map(|e| partial.get(e))
        .sum()
}

/// Checks that sums strictly increase inside each stage and from the last
/// vertex of one stage to the first vertex of the next.
pub fn check_chain(sums: &[Label], chain: &[ChainStage]) -> Vec<ChainVerdict> {
    let mut verdicts = Vec::new();
    let mut previous: Option<(&ChainStage, Label)> = None;
    for stage in chain {
        let Some((&first, rest)) = stage.vertices.split_first() else {
            continue;
        };
        if let Some((prev, prev_last)) = previous {
            verdicts.push(ChainVerdict {
                inequality: format!("w({}) < w({})", prev.name, stage.name),
                holds: prev_last < sums[first],
            });
        }
        if !rest.is_empty() {
            verdicts.push(ChainVerdict {
                inequality: format!("w({}) increasing", stage.name),
                holds: stage.vertices.windows(2).all(|w| sums[w[0]] < sums[w[1]]),
            });
        }
        let last = *stage.vertices.last().expect("non-empty stage");
        previous = Some((stage, sums[last]));
    }
    verdicts
}
