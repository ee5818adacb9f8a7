use super::{
    rank_by_partial_sums, ChainStage, LabelError, LabelingOutcome, PartialLabeling, Trace,
};
use crate::graph::{Graph, VertexId};
use crate::verify::vertex_sums;

/// Labels a graph that has a vertex adjacent to every other vertex.
///
/// Edges away from the hub take `1..=k` in edge order. The hub's neighbours
/// are then ranked by partial sum and the hub star takes `k+1..=|E|` in that
/// order, which leaves the neighbours strictly increasing and the hub on top.
/// The result is checked before it is returned.
pub fn universal_vertex_labeling(
    graph: &Graph,
    hub: VertexId,
) -> Result<LabelingOutcome, LabelError> {
    if hub >= graph.vertex_count() || graph.degree(hub) + 1 != graph.vertex_count() {
        return Err(LabelError::NotUniversal { vertex: hub });
    }
    let hub_edges = graph.incident_edges(hub);
    let others: Vec<_> = (0..graph.edge_count())
        .filter(|e| hub_edges.binary_search(e).is_err())
        .collect();

    let mut state = PartialLabeling::new(graph.edge_count());
    let mut trace = Trace::default();
    let mut last = state.label_block(&others, 0)?;
    trace.offsets.push(("k".into(), last));

    let neighbours: Vec<_> = (0..graph.vertex_count()).filter(|&v| v != hub).collect();
    let rank = rank_by_partial_sums("c", &neighbours, |v| state.partial_sum(graph, v));
    let star: Vec<_> = rank
        .vertices
        .iter()
        .map(|&v| graph.edge_between(hub, v).expect("hub is universal"))
        .collect();
    last = state.label_block(&star, last)?;
    trace.offsets.push(("end".into(), last));

    trace
        .chain
        .push(ChainStage::new("c", rank.vertices.clone()));
    trace
        .chain
        .push(ChainStage::new(graph.name(hub), vec![hub]));
    trace.ranked.push(rank);

    let labeling = state.finish()?;
    let report = vertex_sums(graph, &labeling).expect("construction yields a bijection");
    if !report.is_antimagic {
        return Err(LabelError::ConstructionFailed);
    }
    Ok(LabelingOutcome { labeling, trace })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, path, star};

    #[test]
    fn star_hub_centre() {
        let g = star(4).unwrap();
        let out = universal_vertex_labeling(&g, 0).unwrap();
        let sums = vertex_sums(&g, &out.labeling).unwrap().sums;
        assert_eq!(sums, vec![6, 1, 2, 3]);
    }

    #[test]
    fn triangle_any_hub() {
        let g = complete(3).unwrap();
        for hub in 0..3 {
            let out = universal_vertex_labeling(&g, hub).unwrap();
            assert!(vertex_sums(&g, &out.labeling).unwrap().is_antimagic);
        }
    }

    #[test]
    fn rejects_non_universal() {
        let g = path(4).unwrap();
        assert_eq!(
            universal_vertex_labeling(&g, 1),
            Err(LabelError::NotUniversal { vertex: 1 })
        );
    }

    #[test]
    fn k2_cannot_be_labeled() {
        let g = complete(2).unwrap();
        assert_eq!(
            universal_vertex_labeling(&g, 0),
            Err(LabelError::ConstructionFailed)
        );
    }
}
