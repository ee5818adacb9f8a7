//! Ground-truth search for antimagic labelings of small graphs.
//!
//! [`brute_force_search`] walks label permutations in lexicographic order
//! (edge 0's label varies slowest) and abandons a prefix as soon as two
//! vertices whose edges are all labeled share a sum. Those sums can no longer
//! change, so the pruning never discards a solution. The first label choice is
//! split across worker threads; the reported labeling is always the
//! lexicographically least one, independent of scheduling.
//!
//! [`random_search`] is a seeded hill climber for graphs too large to
//! enumerate. It can find labelings but never proves their absence.

use std::sync::atomic::{AtomicUsize, Ordering};

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::graph::{Graph, VertexId};
use crate::labeling::{Label, Labeling};

pub const DEFAULT_EXHAUSTIVE_LIMIT: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SearchError {
    #[error("{edges} edges exceed the exhaustive limit of {limit}")]
    TooLarge { edges: usize, limit: usize },
    #[error("search budget must be positive")]
    ZeroBudget,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SearchStatus {
    Found,
    ExhaustedNone,
    BudgetExceeded,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchOutcome {
    pub status: SearchStatus,
    pub labeling: Option<Labeling>,
    /// Complete labelings evaluated.
    pub examined: u64,
}

struct Enumerator<'g> {
    graph: &'g Graph,
    /// Vertices whose last incident edge is the edge at this position.
    completes: Vec<Vec<VertexId>>,
}

struct Frame {
    labels: Vec<Label>,
    used: Vec<bool>,
    sums: Vec<Label>,
    taken_sums: Vec<bool>,
    examined: u64,
}

impl Enumerator<'_> {
    fn new(graph: &Graph) -> Enumerator<'_> {
        let mut completes = vec![Vec::new(); graph.edge_count()];
        for v in 0..graph.vertex_count() {
            if let Some(&last) = graph.incident_edges(v).last() {
                completes[last].push(v);
            }
        }
        Enumerator { graph, completes }
    }

    fn frame(&self) -> Option<Frame> {
        let m = self.graph.edge_count();
        let max_sum = m * (m + 1) / 2;
        let mut taken_sums = vec![false; max_sum + 1];
        let isolated = (0..self.graph.vertex_count())
            .filter(|&v| self.graph.degree(v) == 0)
            .count();
        if isolated > 1 {
            return None;
        }
        if isolated == 1 {
            taken_sums[0] = true;
        }
        Some(Frame {
            labels: vec![0; m],
            used: vec![false; m + 1],
            sums: vec![0; self.graph.vertex_count()],
            taken_sums,
            examined: 0,
        })
    }

    /// Places `label` on edge `pos`; returns false (and undoes itself) on a
    /// collision between completed vertices.
    fn place(&self, f: &mut Frame, pos: usize, label: Label) -> bool {
        let (u, v) = self.graph.edge(pos);
        f.labels[pos] = label;
        f.used[label as usize] = true;
        f.sums[u] += label;
        f.sums[v] += label;
        let done = &self.completes[pos];
        for (i, &w) in done.iter().enumerate() {
            let s = f.sums[w] as usize;
            if f.taken_sums[s] {
                for &x in &done[..i] {
                    f.taken_sums[f.sums[x] as usize] = false;
                }
                self.unplace(f, pos, label);
                return false;
            }
            f.taken_sums[s] = true;
        }
        true
    }

    fn unplace(&self, f: &mut Frame, pos: usize, label: Label) {
        let (u, v) = self.graph.edge(pos);
        f.sums[u] -= label;
        f.sums[v] -= label;
        f.used[label as usize] = false;
        f.labels[pos] = 0;
    }

    fn retract(&self, f: &mut Frame, pos: usize, label: Label) {
        for &w in &self.completes[pos] {
            f.taken_sums[f.sums[w] as usize] = false;
        }
        self.unplace(f, pos, label);
    }

    fn dfs(&self, f: &mut Frame, pos: usize, cancel: &dyn Fn() -> bool) -> bool {
        let m = self.graph.edge_count();
        if pos == m {
            f.examined += 1;
            return true;
        }
        if cancel() {
            return false;
        }
        for label in 1..=m as Label {
            if f.used[label as usize] || !self.place(f, pos, label) {
                continue;
            }
            if self.dfs(f, pos + 1, cancel) {
                return true;
            }
            self.retract(f, pos, label);
        }
        false
    }
}

/// Exhaustive search over all labelings of a graph with at most `limit` edges.
pub fn brute_force_search(graph: &Graph, limit: usize) -> Result<SearchOutcome, SearchError> {
    let m = graph.edge_count();
    if m > limit {
        return Err(SearchError::TooLarge { edges: m, limit });
    }
    let enumerator = Enumerator::new(graph);
    if enumerator.frame().is_none() {
        return Ok(SearchOutcome {
            status: SearchStatus::ExhaustedNone,
            labeling: None,
            examined: 0,
        });
    }
    if m == 0 {
        return Ok(SearchOutcome {
            status: SearchStatus::Found,
            labeling: Some(Labeling::new(Vec::new())),
            examined: 1,
        });
    }

    // index of the best subtree known to succeed; later subtrees may stop early
    let best = AtomicUsize::new(usize::MAX);
    let results: Vec<(u64, Option<Vec<Label>>)> = (1..=m as Label)
        .into_par_iter()
        .map(|first| {
            let index = first as usize - 1;
            let mut f = enumerator.frame().expect("checked above");
            if !enumerator.place(&mut f, 0, first) {
                return (0, None);
            }
            let cancel = || best.load(Ordering::Relaxed) < index;
            if enumerator.dfs(&mut f, 1, &cancel) {
                best.fetch_min(index, Ordering::Relaxed);
                (f.examined, Some(f.labels))
            } else {
                (f.examined, None)
            }
        })
        .collect();

    let mut examined = 0;
    for (count, found) in results {
        examined += count;
        if let Some(labels) = found {
            return Ok(SearchOutcome {
                status: SearchStatus::Found,
                labeling: Some(Labeling::new(labels)),
                examined,
            });
        }
    }
    Ok(SearchOutcome {
        status: SearchStatus::ExhaustedNone,
        labeling: None,
        examined,
    })
}

/// Number of vertices that would have to change sum to remove every collision.
fn collisions(graph: &Graph, labels: &[Label], scratch: &mut Vec<Label>) -> usize {
    scratch.clear();
    scratch.extend((0..graph.vertex_count()).map(|v| {
        graph
            .incident_edges(v)
            .iter()
            .map(|&e| labels[e])
            .sum::<Label>()
    }));
    scratch.sort_unstable();
    scratch.windows(2).filter(|w| w[0] == w[1]).count()
}

/// Seeded random restarts with swap hill-climbing. `budget` caps the number of
/// labelings evaluated; the outcome is a pure function of `(graph, budget, seed)`.
pub fn random_search(graph: &Graph, budget: u64, seed: u64) -> Result<SearchOutcome, SearchError> {
    if budget == 0 {
        return Err(SearchError::ZeroBudget);
    }
    let m = graph.edge_count();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let restart_after = 20 * m as u64 + 50;
    let mut scratch = Vec::with_capacity(graph.vertex_count());
    let mut labels: Vec<Label> = (1..=m as Label).collect();
    let mut examined = 0;

    let found = |labels: &Vec<Label>, examined| SearchOutcome {
        status: SearchStatus::Found,
        labeling: Some(Labeling::new(labels.clone())),
        examined,
    };

    while examined < budget {
        labels.shuffle(&mut rng);
        let mut cost = collisions(graph, &labels, &mut scratch);
        examined += 1;
        if cost == 0 {
            return Ok(found(&labels, examined));
        }
        if m < 2 {
            continue;
        }
        for _ in 0..restart_after {
            if examined >= budget {
                break;
            }
            let i = rng.random_range(0..m);
            let j = (i + rng.random_range(1..m)) % m;
            labels.swap(i, j);
            let next = collisions(graph, &labels, &mut scratch);
            examined += 1;
            if next == 0 {
                return Ok(found(&labels, examined));
            }
            if next <= cost {
                cost = next;
            } else {
                labels.swap(i, j);
            }
        }
    }
    Ok(SearchOutcome {
        status: SearchStatus::BudgetExceeded,
        labeling: None,
        examined,
    })
}
