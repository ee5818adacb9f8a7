//! Labeling of pan coronas `G_1 ⋄ (H_0, ..., H_r)`.
//!
//! Phase 1 gives the pendant star `E(u_0)` labels `1..=n_0+1` (the base edge
//! `u_0u_r` first) and then every attachment its internal labels, block by
//! block. Phase 2 ranks each block by partial sum and hands out the cross
//! stars in that order, `u_r`'s star on `H_0` first, then for each later block
//! the star of its lower end followed by the star of its higher end. Phase 3
//! labels the remaining base edges `u_1u_2, u_1u_3, u_2u_4, ..., u_{r-1}u_r`.

use super::{
    rank_by_partial_sums, require_conditions, ChainStage, LabelError, LabelingOutcome,
    PartialLabeling, Trace,
};
use crate::corona::{BaseSpec, CoronaInstance};

pub fn label_type1(inst: &CoronaInstance, force: bool) -> Result<LabelingOutcome, LabelError> {
    let r = match inst.base() {
        BaseSpec::Pan { r } => r,
        other => {
            return Err(LabelError::WrongBaseType {
                expected: "pan",
                got: other,
            })
        }
    };
    require_conditions(inst, force)?;

    let g = inst.composite();
    let mut state = PartialLabeling::new(g.edge_count());
    let mut trace = Trace::default();

    // pendant star: u_0u_r gets 1, u_0v^0_j gets 1 + j
    let h0 = inst.block(0);
    let mut last = state.label_block(&[inst.base_edge(0, r)], 0)?;
    last = state.label_block(&h0.cross[0], last)?;
    trace.record("pendant", last);
    for block in inst.blocks() {
        last = state.label_block(&block.internal_edges, last)?;
    }
    trace.record("c", last);

    let ranked: Vec<_> = inst
        .blocks()
        .iter()
        .map(|block| {
            let vertices: Vec<_> = block.vertices.clone().collect();
            rank_by_partial_sums(format!("a{}", block.number), &vertices, |v| {
                state.partial_sum(g, v)
            })
        })
        .collect();

    for (block, rank) in inst.blocks().iter().zip(&ranked) {
        // H_0 only has the u_r star left; u_0's star is already placed
        let stars = if block.number == 0 { 1..2 } else { 0..2 };
        for k in stars {
            let edges: Vec<_> = rank
                .vertices
                .iter()
                .map(|&v| block.cross[k][v - block.vertices.start])
                .collect();
            last = state.label_block(&edges, last)?;
        }
    }
    trace.record("b", last);

    let mut cycle_edges = vec![inst.base_edge(1, 2)];
    cycle_edges.extend((1..=r - 2).map(|i| inst.base_edge(i, i + 2)));
    cycle_edges.push(inst.base_edge(r - 1, r));
    last = state.label_block(&cycle_edges, last)?;
    trace.record("end", last);

    trace.chain.push(ChainStage::new("u0", vec![0]));
    trace.chain.extend(
        ranked
            .iter()
            .map(|rb| ChainStage::new(rb.name.clone(), rb.vertices.clone())),
    );
    trace
        .chain
        .extend((1..=r).map(|j| ChainStage::new(format!("u{j}"), vec![j])));
    trace.ranked = ranked;

    Ok(LabelingOutcome {
        labeling: state.finish()?,
        trace,
    })
}
