//! Shared fixtures and independent oracles for the integration tests.
//!
//! Everything here recomputes expected values from the instance parameters or
//! the raw labeling, never from the construction's own trace.
#![allow(dead_code)]

use antimagic_corona::corona::{self, BaseSpec, CoronaInstance, EdgeRole};
use antimagic_corona::graph::{self, Graph, VertexId};
use antimagic_corona::labeling::{Label, Labeling};
use rand::seq::SliceRandom;
use rand::Rng;

pub fn k(n: usize) -> Graph {
    graph::complete(n).unwrap()
}

pub fn c(n: usize) -> Graph {
    graph::cycle(n).unwrap()
}

pub fn p(n: usize) -> Graph {
    graph::path(n).unwrap()
}

pub fn pan_instance(r: usize, atts: Vec<Graph>) -> CoronaInstance {
    corona::build(BaseSpec::Pan { r }, atts).unwrap()
}

pub fn spider_instance(p: usize, atts: Vec<Graph>) -> CoronaInstance {
    corona::build(BaseSpec::Spider { p }, atts).unwrap()
}

pub fn pan_example() -> CoronaInstance {
    pan_instance(
        5,
        vec![k(2), c(3), c(3), c(4), graph::diamond().unwrap(), k(4)],
    )
}

pub fn spider_example() -> CoronaInstance {
    spider_instance(2, vec![k(2), c(3), c(3), k(4), k(4), k(4)])
}

pub fn long_leg_example() -> CoronaInstance {
    let mut atts: Vec<Graph> = (0..9).map(|_| k(2)).collect();
    atts.extend((0..3).map(|_| k(5)));
    spider_instance(4, atts)
}

pub fn sums_of(g: &Graph, labeling: &Labeling) -> Vec<Label> {
    (0..g.vertex_count())
        .map(|v| g.incident_edges(v).iter().map(|&e| labeling.label(e)).sum())
        .collect()
}

pub fn block_vertices(inst: &CoronaInstance, number: usize) -> Vec<VertexId> {
    inst.block(number).vertices.clone().collect()
}

/// Sorted final sums over a block's attachment vertices.
pub fn block_sums(inst: &CoronaInstance, sums: &[Label], number: usize) -> Vec<Label> {
    let mut out: Vec<_> = block_vertices(inst, number)
        .iter()
        .map(|&v| sums[v])
        .collect();
    out.sort_unstable();
    out
}

/// Total of a block's vertex sums computed from edge roles alone: each internal
/// label counts twice, each cross label once.
pub fn block_total_from_roles(inst: &CoronaInstance, labeling: &Labeling, number: usize) -> Label {
    inst.edge_roles()
        .iter()
        .enumerate()
        .map(|(e, role)| match *role {
            EdgeRole::Internal { block, .. } if block == number => 2 * labeling.label(e),
            EdgeRole::Cross { block, .. } if block == number => labeling.label(e),
            _ => 0,
        })
        .sum()
}

pub fn is_permutation(labeling: &Labeling, m: usize) -> bool {
    let mut labels = labeling.labels().to_vec();
    labels.sort_unstable();
    labels == (1..=m as Label).collect::<Vec<_>>()
}

/// Checks that every group has distinct sums and that its largest sum is below
/// the smallest sum of the next group. Returns a description of each failure.
pub fn group_chain_failures(sums: &[Label], groups: &[(String, Vec<VertexId>)]) -> Vec<String> {
    let mut failures = Vec::new();
    for (name, group) in groups {
        let mut s: Vec<_> = group.iter().map(|&v| sums[v]).collect();
        s.sort_unstable();
        if s.windows(2).any(|w| w[0] == w[1]) {
            failures.push(format!("repeated sum inside {name}"));
        }
    }
    for pair in groups.windows(2) {
        let hi = pair[0].1.iter().map(|&v| sums[v]).max().unwrap();
        let lo = pair[1].1.iter().map(|&v| sums[v]).min().unwrap();
        if hi >= lo {
            failures.push(format!(
                "max {} = {hi} not below min {} = {lo}",
                pair[0].0, pair[1].0
            ));
        }
    }
    failures
}

/// Ordered vertex groups a Type I labeling must separate: u0, each block,
/// then u1..ur.
pub fn pan_groups(inst: &CoronaInstance, r: usize) -> Vec<(String, Vec<VertexId>)> {
    let mut groups = vec![("u0".to_string(), vec![0])];
    groups.extend((0..=r).map(|i| (format!("H{i}"), block_vertices(inst, i))));
    groups.extend((1..=r).map(|j| (format!("u{j}"), vec![j])));
    groups
}

/// Ordered groups for Type II with p >= 2.
pub fn spider_groups(inst: &CoronaInstance, p: usize) -> Vec<(String, Vec<VertexId>)> {
    let leg = |l, k| inst.spider_vertex(l, k);
    let mut groups = Vec::new();
    for l in 0..3 {
        let mut g = vec![leg(l, p)];
        g.extend(block_vertices(inst, l + 1));
        groups.push((format!("tip block {}", l + 1), g));
    }
    for i in 4..=3 * p - 3 {
        groups.push((format!("H{i}"), block_vertices(inst, i)));
    }
    for k in (2..p).rev() {
        for (l, letter) in ["x", "y", "z"].iter().enumerate() {
            groups.push((format!("{letter}{k}"), vec![leg(l, k)]));
        }
    }
    let mut centre: Vec<_> = (0..3).map(|l| leg(l, 1)).collect();
    for i in 3 * p - 2..=3 * p {
        centre.extend(block_vertices(inst, i));
    }
    groups.push(("centre".to_string(), centre));
    groups.push(("v0".to_string(), vec![0]));
    groups
}

pub fn groups_for(inst: &CoronaInstance) -> Option<Vec<(String, Vec<VertexId>)>> {
    match inst.base() {
        BaseSpec::Pan { r } => Some(pan_groups(inst, r)),
        BaseSpec::Spider { p } if p >= 2 => Some(spider_groups(inst, p)),
        BaseSpec::Spider { .. } => None,
    }
}

/// `(|V|, |E|)` from the attachment orders and sizes.
pub fn expected_counts(base: BaseSpec, atts: &[Graph]) -> (usize, usize) {
    let (base_v, base_e) = match base {
        BaseSpec::Pan { r } => (r + 1, r + 1),
        BaseSpec::Spider { p } => (3 * p + 1, 3 * p),
    };
    let n: usize = atts.iter().map(Graph::vertex_count).sum();
    let q: usize = atts.iter().map(Graph::edge_count).sum();
    (base_v + n, base_e + q + 2 * n)
}

/// Named offsets of the Type I construction from the attachment parameters.
pub fn pan_offsets(atts: &[Graph]) -> Vec<(&'static str, Label)> {
    let n: Vec<Label> = atts.iter().map(|g| g.vertex_count() as Label).collect();
    let q: Label = atts.iter().map(|g| g.edge_count() as Label).sum();
    let r = atts.len() as Label - 1;
    let c = n[0] + 1 + q;
    let b = c + n[0] + 2 * n[1..].iter().sum::<Label>();
    vec![("pendant", n[0] + 1), ("c", c), ("b", b), ("end", b + r)]
}

/// Named offsets of the Type II construction for p >= 2.
pub fn spider_offsets(p: usize, atts: &[Graph]) -> Vec<(&'static str, Label)> {
    let m = |i: usize| atts[i - 1].vertex_count() as Label;
    let h = |i: usize| atts[i - 1].edge_count() as Label;
    let a = h(1) + 2 * m(1) + 1;
    let b = a + h(2) + 2 * m(2) + 1;
    let z = b + h(3) + 2 * m(3) + 1;
    let legs = 4..=3 * p - 3;
    let l = z + legs.clone().map(h).sum::<Label>();
    let n = l + legs.clone().map(m).sum::<Label>();
    let s = n + legs.map(m).sum::<Label>();
    let centre = 3 * p - 2..=3 * p;
    let x = s + 3 * (p as Label - 2) + centre.clone().map(h).sum::<Label>();
    let star = x + centre.clone().map(m).sum::<Label>();
    let end = star + 3 + centre.map(m).sum::<Label>();
    let mut out = vec![("A", a), ("B", b), ("z", z)];
    if p > 2 {
        out.extend([("L", l), ("N", n), ("S", s)]);
    }
    out.extend([("X", x), ("centre-star", star), ("end", end)]);
    out
}

/// Random connected graph on `n` vertices: a random tree plus extra edges.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, extra: usize) -> Graph {
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut edges = Vec::new();
    for i in 1..n {
        let parent = order[rng.random_range(0..i)];
        edges.push((parent.min(order[i]), parent.max(order[i])));
    }
    for _ in 0..extra {
        let u = rng.random_range(0..n);
        let v = rng.random_range(0..n);
        let e = (u.min(v), u.max(v));
        if u != v && !edges.contains(&e) {
            edges.push(e);
        }
    }
    Graph::new(n, &edges).unwrap()
}

/// Random graph with at most `max_edges` edges, possibly disconnected.
pub fn random_small_graph<R: Rng>(rng: &mut R, max_edges: usize) -> Graph {
    let n = rng.random_range(2..=7);
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    pairs.shuffle(rng);
    let m = rng.random_range(1..=max_edges.min(pairs.len()));
    pairs.truncate(m);
    Graph::new(n, &pairs).unwrap()
}

/// Random graph with at most `max_edges` edges and no isolated vertex.
pub fn random_graph_without_isolated<R: Rng>(rng: &mut R, max_edges: usize) -> Graph {
    loop {
        let g = random_small_graph(rng, max_edges);
        if (0..g.vertex_count()).all(|v| g.degree(v) > 0) {
            return g;
        }
    }
}

/// Complete-graph orders for a Type I instance meeting every hypothesis.
pub fn random_pan_orders<R: Rng>(rng: &mut R, max_r: usize, max_n: usize) -> Vec<usize> {
    loop {
        let r = rng.random_range(3..=max_r);
        let mut sizes: Vec<usize> = (0..=r).map(|_| rng.random_range(2..=max_n)).collect();
        sizes.sort_unstable();
        if sizes[0] < sizes[1] && sizes[r] <= sizes[1] + sizes[2] + 1 {
            return sizes;
        }
    }
}

/// Complete-graph orders for a Type II instance meeting every hypothesis.
pub fn random_spider_orders<R: Rng>(
    rng: &mut R,
    max_p: usize,
    max_n: usize,
) -> (usize, Vec<usize>) {
    loop {
        let p = rng.random_range(1..=max_p);
        let blocks = 3 * p;
        let mut sizes: Vec<usize> = (0..blocks).map(|_| rng.random_range(2..=max_n)).collect();
        sizes.sort_unstable();
        if p > 2 {
            // leg blocks share one order; then the z2 bound on the first centre block
            let shared = sizes[3];
            for s in &mut sizes[3..blocks - 3] {
                *s = shared;
            }
            if 2 + sizes[blocks - 7] + sizes[blocks - 4] > sizes[blocks - 3] + 1 {
                continue;
            }
        }
        return (p, sizes);
    }
}

pub fn completes(orders: &[usize]) -> Vec<Graph> {
    orders.iter().map(|&n| k(n)).collect()
}

/// Instances that each break exactly one named hypothesis.
pub fn violating_instances() -> Vec<(&'static str, CoronaInstance)> {
    let k2x = |n: usize| -> Vec<Graph> { (0..n).map(|_| k(2)).collect() };
    let with = |mut head: Vec<Graph>, tail: Vec<Graph>| {
        head.extend(tail);
        head
    };
    vec![
        (
            "pan.h0-h1-strict",
            pan_instance(3, vec![k(2), k(2), k(2), k(2)]),
        ),
        (
            "pan.degree-chain.1",
            pan_instance(3, vec![k(2), c(3), p(3), c(3)]),
        ),
        (
            "pan.degree-chain.2",
            pan_instance(3, vec![k(2), c(3), c(3), p(3)]),
        ),
        (
            "pan.degree-chain.3",
            pan_instance(4, vec![k(2), c(3), c(3), c(3), p(3)]),
        ),
        (
            "pan.degree-chain.4",
            pan_instance(5, vec![k(2), c(3), c(3), c(3), c(3), p(3)]),
        ),
        (
            "pan.pendant.0",
            pan_instance(3, vec![graph::star(4).unwrap(), k(5), k(5), k(5)]),
        ),
        (
            "pan.last-block-vs-u1",
            pan_instance(3, vec![k(2), c(3), c(3), k(8)]),
        ),
        (
            "pan.size-order.1",
            pan_instance(3, vec![k(2), c(4), c(3), c(3)]),
        ),
        (
            "pan.size-order.2",
            pan_instance(3, vec![k(2), c(3), c(4), c(3)]),
        ),
        (
            "pan.size-order.3",
            pan_instance(4, vec![k(2), c(3), c(3), c(4), c(3)]),
        ),
        (
            "spider.degree-chain.4",
            spider_instance(2, vec![k(2), c(3), c(3), k(4), c(4), k(4)]),
        ),
        (
            "spider.degree-chain.5",
            spider_instance(2, vec![k(2), c(3), c(3), k(4), k(4), c(4)]),
        ),
        (
            "spider.tip-x",
            spider_instance(2, vec![c(4), c(4), k(4), k(4), k(4), k(4)]),
        ),
        (
            "spider.tip-y",
            spider_instance(2, vec![k(2), c(4), c(4), k(4), k(4), k(4)]),
        ),
        (
            "spider.tip-z",
            spider_instance(2, vec![k(2), c(3), c(4), c(4), k(4), k(4)]),
        ),
        (
            "spider.size-order.4",
            spider_instance(2, vec![k(2), c(3), c(3), c(5), c(4), c(4)]),
        ),
        (
            "spider.size-order.5",
            spider_instance(2, vec![k(2), c(3), c(3), c(4), c(5), c(4)]),
        ),
        (
            "spider.last-leg-block",
            spider_instance(3, with(with(k2x(5), vec![p(3)]), vec![k(6), k(6), k(6)])),
        ),
        (
            "spider.z2-vs-centre-block",
            spider_instance(3, with(k2x(6), vec![k(4), k(4), k(4)])),
        ),
        (
            "spider.degree-chain.7",
            spider_instance(3, with(k2x(6), vec![k(5), c(5), k(5)])),
        ),
    ]
}
