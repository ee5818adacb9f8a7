//! Labeling of spider coronas `G_2 ⋄ (H_1, ..., H_{3p})`.
//!
//! `p = 1` is handed to the universal-vertex construction with hub `v_0`.
//! For `p >= 2` one routine covers both the two-vertex-leg case and longer
//! legs; with `p = 2` the middle phases (leg blocks, leg edges) are empty.
//!
//! 1. Tip blocks `H_1, H_2, H_3`, one leg at a time: internal edges, the tip's
//!    cross star in vertex order, then the star of the next leg vertex in
//!    ranked order over `{tip} ∪ V(H)`. That run also covers the leg edge.
//! 2. Internal edges of the leg blocks `H_4..H_{3p-3}`.
//! 3. Inner-end cross stars of those blocks in vertex order; rank each block
//!    on its own; outer-end stars in ranked order.
//! 4. Remaining leg edges, interleaved x, y, z from the outer end inwards.
//! 5. Internal edges of the three centre blocks, the stars of `x_1, y_1, z_1`
//!    into them in vertex order, then `v_0`'s whole star in ranked order over
//!    `{x_1, y_1, z_1}` and the centre blocks.

use super::{
    rank_by_partial_sums, require_conditions, universal_vertex_labeling, ChainStage, Checkpoint,
    LabelError, LabelingOutcome, PartialLabeling, Trace,
};
use crate::corona::{BaseSpec, CoronaInstance};

const LEGS: [&str; 3] = ["x", "y", "z"];

pub fn label_type2(inst: &CoronaInstance, force: bool) -> Result<LabelingOutcome, LabelError> {
    let p = match inst.base() {
        BaseSpec::Spider { p } => p,
        other => {
            return Err(LabelError::WrongBaseType {
                expected: "spider",
                got: other,
            })
        }
    };
    if p == 1 {
        return universal_vertex_labeling(inst.composite(), 0);
    }
    require_conditions(inst, force)?;

    let g = inst.composite();
    let leg = |l: usize, k: usize| inst.spider_vertex(l, k);
    let blocks = 3 * p;
    let mut state = PartialLabeling::new(g.edge_count());
    let mut trace = Trace::default();
    let mut last = 0;

    // tip blocks
    for (l, name) in ["A", "B", "z"].into_iter().enumerate() {
        let block = inst.block(l + 1);
        let (tip, next) = (leg(l, p), leg(l, p - 1));
        last = state.label_block(&block.internal_edges, last)?;
        last = state.label_block(block.star_of(tip), last)?;

        let mut group = vec![tip];
        group.extend(block.vertices.clone());
        let rank = rank_by_partial_sums(format!("a{}", l + 1), &group, |v| state.partial_sum(g, v));
        let next_star = block.star_of(next);
        let edges: Vec<_> = rank
            .vertices
            .iter()
            .map(|&v| {
                if v == tip {
                    inst.base_edge(tip, next)
                } else {
                    next_star[v - block.vertices.start]
                }
            })
            .collect();
        last = state.label_block(&edges, last)?;
        trace.record(name, last);
        trace.ranked.push(rank);
    }

    // leg blocks H_4..H_{3p-3}
    let leg_blocks = 4..=blocks - 3;
    for i in leg_blocks.clone() {
        last = state.label_block(&inst.block(i).internal_edges, last)?;
    }
    if p > 2 {
        trace.record("L", last);
    }
    for i in leg_blocks.clone() {
        let block = inst.block(i);
        last = state.label_block(&block.cross[1], last)?;
    }
    if p > 2 {
        trace.record("N", last);
    }
    let leg_ranks: Vec<_> = leg_blocks
        .clone()
        .map(|i| {
            let vertices: Vec<_> = inst.block(i).vertices.clone().collect();
            rank_by_partial_sums(format!("a{i}"), &vertices, |v| state.partial_sum(g, v))
        })
        .collect();
    for (i, rank) in leg_blocks.zip(&leg_ranks) {
        let block = inst.block(i);
        let edges: Vec<_> = rank
            .vertices
            .iter()
            .map(|&v| block.cross[0][v - block.vertices.start])
            .collect();
        last = state.label_block(&edges, last)?;
    }
    if p > 2 {
        trace.record("S", last);
        trace.checkpoints.push(Checkpoint {
            step: "before-leg-edges".into(),
            partial_sums: (2..p)
                .flat_map(|k| (0..3).map(move |l| (l, k)))
                .map(|(l, k)| (leg(l, k), state.partial_sum(g, leg(l, k))))
                .collect(),
        });
    }

    // leg edges x_{p-1}x_{p-2}, y_{p-1}y_{p-2}, z_{p-1}z_{p-2}, x_{p-2}x_{p-3}, ...
    let leg_edges: Vec<_> = (1..p - 1)
        .rev()
        .flat_map(|k| (0..3).map(move |l| (l, k)))
        .map(|(l, k)| inst.base_edge(leg(l, k + 1), leg(l, k)))
        .collect();
    last = state.label_block(&leg_edges, last)?;

    // centre blocks
    let centre = blocks - 2..=blocks;
    for i in centre.clone() {
        last = state.label_block(&inst.block(i).internal_edges, last)?;
    }
    trace.record("X", last);
    for i in centre.clone() {
        last = state.label_block(&inst.block(i).cross[0], last)?;
    }
    trace.record("centre-star", last);

    let mut group: Vec<_> = (0..3).map(|l| leg(l, 1)).collect();
    for i in centre.clone() {
        group.extend(inst.block(i).vertices.clone());
    }
    let rank = rank_by_partial_sums("c", &group, |v| state.partial_sum(g, v));
    let edges: Vec<_> = rank
        .vertices
        .iter()
        .map(|&v| match (0..3).find(|&l| leg(l, 1) == v) {
            Some(_) => inst.base_edge(0, v),
            None => {
                let block = centre
                    .clone()
                    .map(|i| inst.block(i))
                    .find(|b| b.vertices.contains(&v))
                    .expect("ranked vertex lies in a centre block");
                block.cross[1][v - block.vertices.start]
            }
        })
        .collect();
    last = state.label_block(&edges, last)?;
    trace.record("end", last);

    for l in 0..3 {
        trace.chain.push(ChainStage::new(
            format!("a{}", l + 1),
            trace.ranked[l].vertices.clone(),
        ));
    }
    trace.chain.extend(
        leg_ranks
            .iter()
            .map(|rb| ChainStage::new(rb.name.clone(), rb.vertices.clone())),
    );
    for k in (2..p).rev() {
        for (l, letter) in LEGS.iter().enumerate() {
            trace
                .chain
                .push(ChainStage::new(format!("{letter}{k}"), vec![leg(l, k)]));
        }
    }
    trace
        .chain
        .push(ChainStage::new("c", rank.vertices.clone()));
    trace.chain.push(ChainStage::new("v0", vec![0]));
    trace.ranked.extend(leg_ranks);
    trace.ranked.push(rank);

    Ok(LabelingOutcome {
        labeling: state.finish()?,
        trace,
    })
}
