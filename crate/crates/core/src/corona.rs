//! Generalized edge coronas over pan and spider bases.
//!
//! A corona joins both endpoints of the `i`-th base edge to every vertex of
//! the `i`-th attachment graph. Composite vertices are numbered base first
//! (keeping the base numbering), then each attachment block in order. Composite
//! edges are numbered base first, then per block: internal edges, the cross
//! star of the block's first end, the cross star of its second end.

use std::fmt;
use std::ops::Range;

use thiserror::Error;

use crate::graph::{self, EdgeId, Graph, GraphError, VertexId};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CoronaError {
    #[error("expected {expected} attachment graphs, got {got}")]
    WrongAttachmentCount { expected: usize, got: usize },
    #[error("attachment {index} is disconnected")]
    DisconnectedAttachment { index: usize },
    #[error("attachment {index} has {vertices} vertex(es); at least 2 are required")]
    AttachmentTooSmall { index: usize, vertices: usize },
    #[error("bad base parameter: {0}")]
    BadBaseParam(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// The base graph of a corona.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BaseSpec {
    /// Pan on `u_0..u_r`, `r >= 3`; carries `r + 1` attachments `H_0..H_r`.
    Pan { r: usize },
    /// Spider with three equal legs of `p >= 1` vertices; carries `3p`
    /// attachments `H_1..H_{3p}`.
    Spider { p: usize },
}

impl BaseSpec {
    pub fn attachment_count(self) -> usize {
        match self {
            BaseSpec::Pan { r } => r + 1,
            BaseSpec::Spider { p } => 3 * p,
        }
    }

    /// Number of the first block: 0 for pans, 1 for spiders.
    pub fn first_block(self) -> usize {
        match self {
            BaseSpec::Pan { .. } => 0,
            BaseSpec::Spider { .. } => 1,
        }
    }

    pub fn graph(self) -> Result<Graph, CoronaError> {
        match self {
            BaseSpec::Pan { r } if r < 3 => Err(CoronaError::BadBaseParam(format!(
                "pan needs r >= 3, got {r}"
            ))),
            BaseSpec::Pan { r } => Ok(graph::pan(r)?),
            BaseSpec::Spider { p: 0 } => {
                Err(CoronaError::BadBaseParam("spider needs p >= 1".into()))
            }
            BaseSpec::Spider { p } => Ok(graph::spider(p)?),
        }
    }
}

impl fmt::Display for BaseSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BaseSpec::Pan { r } => write!(f, "pan(r={r})"),
            BaseSpec::Spider { p } => write!(f, "spider(p={p})"),
        }
    }
}

/// What a composite edge is.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EdgeRole {
    Base {
        base_edge: EdgeId,
    },
    Internal {
        block: usize,
        edge: EdgeId,
    },
    /// `attachment_vertex` is the index inside the attachment graph.
    Cross {
        block: usize,
        base_vertex: VertexId,
        attachment_vertex: VertexId,
    },
}

impl EdgeRole {
    pub fn kind(&self) -> &'static str {
        match self {
            EdgeRole::Base { .. } => "base",
            EdgeRole::Internal { .. } => "internal",
            EdgeRole::Cross { .. } => "cross",
        }
    }
}

/// One attachment graph placed on a base edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    /// Block number as used by the algorithms (`H_number`).
    pub number: usize,
    /// Composite ids of the two base endpoints. Pan blocks list them in
    /// ascending order; spider blocks list the end away from `v_0` first.
    pub ends: [VertexId; 2],
    pub base_edge: EdgeId,
    pub vertices: Range<VertexId>,
    pub internal_edges: Vec<EdgeId>,
    /// `cross[k][j]` joins `ends[k]` to the `j`-th block vertex.
    pub cross: [Vec<EdgeId>; 2],
}

impl Block {
    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn size(&self) -> usize {
        self.internal_edges.len()
    }

    /// Cross star of the given base endpoint.
    pub fn star_of(&self, base_vertex: VertexId) -> &[EdgeId] {
        if self.ends[0] == base_vertex {
            &self.cross[0]
        } else if self.ends[1] == base_vertex {
            &self.cross[1]
        } else {
            panic!(
                "vertex {base_vertex} is not an end of block {}",
                self.number
            )
        }
    }
}

/// A built corona together with its block layout.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoronaInstance {
    base: BaseSpec,
    base_graph: Graph,
    attachments: Vec<Graph>,
    composite: Graph,
    roles: Vec<EdgeRole>,
    blocks: Vec<Block>,
}

impl CoronaInstance {
    pub fn base(&self) -> BaseSpec {
        self.base
    }

    pub fn base_graph(&self) -> &Graph {
        &self.base_graph
    }

    pub fn attachments(&self) -> &[Graph] {
        &self.attachments
    }

    /// Attachment graph `H_number`.
    pub fn attachment(&self, number: usize) -> &Graph {
        &self.attachments[number - self.base.first_block()]
    }

    pub fn composite(&self) -> &Graph {
        &self.composite
    }

    pub fn edge_roles(&self) -> &[EdgeRole] {
        &self.roles
    }

    pub fn blocks(&self) -> &[Block] {
        &self.blocks
    }

    /// Block carrying `H_number`.
    pub fn block(&self, number: usize) -> &Block {
        &self.blocks[number - self.base.first_block()]
    }

    /// Vertex order `n_i` (pan) or `m_i` (spider) of attachment `number`.
    pub fn order_of(&self, number: usize) -> usize {
        self.attachment(number).vertex_count()
    }

    /// Edge count `q_i` (pan) or `h_i` (spider) of attachment `number`.
    pub fn size_of(&self, number: usize) -> usize {
        self.attachment(number).edge_count()
    }

    /// Composite id of the spider vertex on leg `leg` (0 = x, 1 = y, 2 = z)
    /// at distance `k` from the centre. `k = 0` is `v_0`.
    pub fn spider_vertex(&self, leg: usize, k: usize) -> VertexId {
        match self.base {
            BaseSpec::Spider { p } => {
                assert!(leg < 3 && k <= p, "no spider vertex ({leg}, {k})");
                if k == 0 {
                    0
                } else {
                    1 + leg * p + (k - 1)
                }
            }
            BaseSpec::Pan { .. } => panic!("spider_vertex on a pan instance"),
        }
    }

    /// The base edge id joining two composite base vertices.
    pub fn base_edge(&self, u: VertexId, v: VertexId) -> EdgeId {
        self.composite
            .edge_between(u, v)
            .unwrap_or_else(|| panic!("no base edge between {u} and {v}"))
    }

    pub fn role_counts(&self) -> RoleCounts {
        let mut counts = RoleCounts::default();
        for role in &self.roles {
            match role {
                EdgeRole::Base { .. } => counts.base += 1,
                EdgeRole::Internal { .. } => counts.internal += 1,
                EdgeRole::Cross { .. } => counts.cross += 1,
            }
        }
        counts
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RoleCounts {
    pub base: usize,
    pub internal: usize,
    pub cross: usize,
}

fn validate_attachments(expected: usize, attachments: &[Graph]) -> Result<(), CoronaError> {
    if attachments.len() != expected {
        return Err(CoronaError::WrongAttachmentCount {
            expected,
            got: attachments.len(),
        });
    }
    for (index, h) in attachments.iter().enumerate() {
        if h.vertex_count() < 2 {
            return Err(CoronaError::AttachmentTooSmall {
                index,
                vertices: h.vertex_count(),
            });
        }
        if !h.is_connected() {
            return Err(CoronaError::DisconnectedAttachment { index });
        }
    }
    Ok(())
}

fn assemble(
    base: BaseSpec,
    attachments: Vec<Graph>,
    ends_of: impl Fn(usize) -> [VertexId; 2],
) -> Result<CoronaInstance, CoronaError> {
    let base_graph = base.graph()?;
    validate_attachments(base.attachment_count(), &attachments)?;

    let total_vertices =
        base_graph.vertex_count() + attachments.iter().map(Graph::vertex_count).sum::<usize>();
    let mut edges: Vec<(VertexId, VertexId)> = base_graph.edges().to_vec();
    let mut roles: Vec<EdgeRole> = (0..base_graph.edge_count())
        .map(|base_edge| EdgeRole::Base { base_edge })
        .collect();
    let mut blocks = Vec::with_capacity(attachments.len());
    let mut next_vertex = base_graph.vertex_count();

    for (offset, h) in attachments.iter().enumerate() {
        let number = offset + base.first_block();
        let ends = ends_of(number);
        let base_edge = base_graph
            .edge_between(ends[0], ends[1])
            .expect("block ends are adjacent in the base");
        let vertices = next_vertex..next_vertex + h.vertex_count();
        next_vertex = vertices.end;

        let mut internal_edges = Vec::with_capacity(h.edge_count());
        for (id, &(a, b)) in h.edges().iter().enumerate() {
            internal_edges.push(edges.len());
            edges.push((vertices.start + a, vertices.start + b));
            roles.push(EdgeRole::Internal {
                block: number,
                edge: id,
            });
        }
        let mut cross: [Vec<EdgeId>; 2] = Default::default();
        for (k, &end) in ends.iter().enumerate() {
            for j in 0..h.vertex_count() {
                cross[k].push(edges.len());
                edges.push((end, vertices.start + j));
                roles.push(EdgeRole::Cross {
                    block: number,
                    base_vertex: end,
                    attachment_vertex: j,
                });
            }
        }
        blocks.push(Block {
            number,
            ends,
            base_edge,
            vertices,
            internal_edges,
            cross,
        });
    }

    let mut names: Vec<String> = (0..base_graph.vertex_count())
        .map(|v| base_graph.name(v))
        .collect();
    for block in &blocks {
        names.extend((1..=block.order()).map(|j| format!("h{}.{j}", block.number)));
    }
    let composite = Graph::new(total_vertices, &edges)?.with_names(names)?;

    Ok(CoronaInstance {
        base,
        base_graph,
        attachments,
        composite,
        roles,
        blocks,
    })
}

/// Builds the pan corona `G_1 ⋄ (H_0, ..., H_r)`.
///
/// `H_0` sits on `u_0u_r`, `H_1` on `u_1u_2`, `H_j` on `u_{j-1}u_{j+1}` for
/// `2 <= j <= r-1`, and `H_r` on `u_{r-1}u_r`.
pub fn build_type1(r: usize, attachments: Vec<Graph>) -> Result<CoronaInstance, CoronaError> {
    assemble(BaseSpec::Pan { r }, attachments, |j| {
        if j == 0 {
            [0, r]
        } else if j == 1 {
            [1, 2]
        } else if j < r {
            [j - 1, j + 1]
        } else {
            [r - 1, r]
        }
    })
}

/// Builds the spider corona `G_2 ⋄ (H_1, ..., H_{3p})`.
///
/// Blocks `1, 4, 7, ...` walk down the x-leg from the tip (`H_1` on
/// `x_px_{p-1}`), blocks `2, 5, ...` the y-leg, blocks `3, 6, ...` the z-leg.
/// The last three blocks sit on `x_1v_0`, `y_1v_0` and `z_1v_0`.
pub fn build_type2(p: usize, attachments: Vec<Graph>) -> Result<CoronaInstance, CoronaError> {
    let leg_vertex = move |leg: usize, k: usize| if k == 0 { 0 } else { 1 + leg * p + (k - 1) };
    assemble(BaseSpec::Spider { p }, attachments, |i| {
        if i + 3 <= 3 * p {
            let leg = (i - 1) % 3;
            let step = (i - 1) / 3;
            [leg_vertex(leg, p - step), leg_vertex(leg, p - step - 1)]
        } else {
            let leg = i - (3 * p - 2);
            [leg_vertex(leg, 1), 0]
        }
    })
}

/// Builds either corona type.
pub fn build(base: BaseSpec, attachments: Vec<Graph>) -> Result<CoronaInstance, CoronaError> {
    match base {
        BaseSpec::Pan { r } => build_type1(r, attachments),
        BaseSpec::Spider { p } => build_type2(p, attachments),
    }
}

/// Stable sort by vertex count, non-decreasing.
pub fn normalize_attachments(mut attachments: Vec<Graph>) -> Vec<Graph> {
    attachments.sort_by_key(Graph::vertex_count);
    attachments
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{complete, cycle, diamond};

    fn k(n: usize) -> Graph {
        complete(n).unwrap()
    }

    #[test]
    fn type1_all_k2() {
        let inst = build_type1(3, vec![k(2), k(2), k(2), k(2)]).unwrap();
        assert_eq!(inst.composite().vertex_count(), 12);
        assert_eq!(inst.composite().edge_count(), 24);
    }

    #[test]
    fn type1_example_shape() {
        let hs = vec![
            k(2),
            cycle(3).unwrap(),
            cycle(3).unwrap(),
            cycle(4).unwrap(),
            diamond().unwrap(),
            k(4),
        ];
        let inst = build_type1(5, hs).unwrap();
        assert_eq!(inst.composite().vertex_count(), 26);
        assert_eq!(inst.composite().edge_count(), 68);
        // u_1 touches u_2, u_3, H_1 and H_2
        assert_eq!(inst.composite().degree(1), 8);
        assert_eq!(inst.block(0).ends, [0, 5]);
        assert_eq!(inst.block(1).ends, [1, 2]);
        assert_eq!(inst.block(3).ends, [2, 4]);
        assert_eq!(inst.block(5).ends, [4, 5]);
    }

    #[test]
    fn type1_wrong_count() {
        assert_eq!(
            build_type1(3, vec![k(2), k(2), k(2)]),
            Err(CoronaError::WrongAttachmentCount {
                expected: 4,
                got: 3
            })
        );
    }

    #[test]
    fn rejects_bad_attachments() {
        let lonely = k(1);
        assert_eq!(
            build_type1(3, vec![k(2), lonely, k(2), k(2)]),
            Err(CoronaError::AttachmentTooSmall {
                index: 1,
                vertices: 1
            })
        );
        let split = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(
            build_type2(1, vec![k(2), k(2), split]),
            Err(CoronaError::DisconnectedAttachment { index: 2 })
        );
        assert!(matches!(
            build_type1(2, vec![k(2), k(2), k(2)]),
            Err(CoronaError::BadBaseParam(_))
        ));
    }

    #[test]
    fn type2_sizes() {
        let inst = build_type2(1, vec![k(2), k(2), k(2)]).unwrap();
        assert_eq!(
            (
                inst.composite().vertex_count(),
                inst.composite().edge_count()
            ),
            (10, 18)
        );

        let c3 = cycle(3).unwrap();
        let inst = build_type2(2, vec![k(2), c3.clone(), c3, k(4), k(4), k(4)]).unwrap();
        assert_eq!(
            (
                inst.composite().vertex_count(),
                inst.composite().edge_count()
            ),
            (27, 71)
        );

        let mut hs = vec![k(2); 9];
        hs.extend(vec![k(5); 3]);
        let inst = build_type2(4, hs).unwrap();
        assert_eq!(
            (
                inst.composite().vertex_count(),
                inst.composite().edge_count()
            ),
            (46, 117)
        );
    }

    #[test]
    fn type2_block_placement() {
        let inst = build_type2(4, vec![k(2); 12]).unwrap();
        let x = |k| inst.spider_vertex(0, k);
        let y = |k| inst.spider_vertex(1, k);
        let z = |k| inst.spider_vertex(2, k);
        assert_eq!(inst.block(1).ends, [x(4), x(3)]);
        assert_eq!(inst.block(2).ends, [y(4), y(3)]);
        assert_eq!(inst.block(3).ends, [z(4), z(3)]);
        assert_eq!(inst.block(4).ends, [x(3), x(2)]);
        assert_eq!(inst.block(7).ends, [x(2), x(1)]);
        assert_eq!(inst.block(9).ends, [z(2), z(1)]);
        assert_eq!(inst.block(10).ends, [x(1), 0]);
        assert_eq!(inst.block(12).ends, [z(1), 0]);
        assert_eq!(inst.composite().name(x(2)), "x2");
        assert_eq!(
            inst.composite().name(inst.block(10).vertices.start),
            "h10.1"
        );
    }

    #[test]
    fn spider_p1_only_centre_blocks() {
        let inst = build_type2(1, vec![k(2), k(3), k(2)]).unwrap();
        assert_eq!(inst.block(1).ends, [1, 0]);
        assert_eq!(inst.block(2).ends, [2, 0]);
        assert_eq!(inst.block(3).ends, [3, 0]);
        // v_0 is universal
        assert_eq!(
            inst.composite().degree(0),
            inst.composite().vertex_count() - 1
        );
    }

    #[test]
    fn normalize_is_stable() {
        let c3 = cycle(3).unwrap();
        let p3 = crate::graph::path(3).unwrap();
        let out = normalize_attachments(vec![k(4), k(2), c3.clone()]);
        assert_eq!(out, vec![k(2), c3.clone(), k(4)]);
        let out = normalize_attachments(vec![c3.clone(), p3.clone()]);
        assert_eq!(out, vec![c3.clone(), p3.clone()]);
        let out = normalize_attachments(vec![p3.clone(), c3.clone()]);
        assert_eq!(out, vec![p3, c3.clone()]);
        let out = normalize_attachments(vec![k(2), c3.clone(), c3.clone()]);
        assert_eq!(out, vec![k(2), c3.clone(), c3]);
    }

    #[test]
    fn roles_partition_edges() {
        let inst = build_type2(3, vec![k(3); 9]).unwrap();
        let counts = inst.role_counts();
        assert_eq!(counts.base, 9);
        assert_eq!(counts.internal, 27);
        assert_eq!(counts.cross, 54);
        for block in inst.blocks() {
            for (k, star) in block.cross.iter().enumerate() {
                for (j, &e) in star.iter().enumerate() {
                    assert_eq!(
                        inst.edge_roles()[e],
                        EdgeRole::Cross {
                            block: block.number,
                            base_vertex: block.ends[k],
                            attachment_vertex: j
                        }
                    );
                }
            }
        }
    }
}
