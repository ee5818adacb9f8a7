//! Sufficient conditions under which the constructive labelings are
//! guaranteed antimagic.
//!
//! Every hypothesis is evaluated into a [`Condition`] carrying both sides of
//! its inequality, so a failing report says by how much it failed. Attachment
//! degrees inside the composite are the attachment degrees plus two, since each
//! attachment vertex gains exactly two cross edges.

use std::fmt;

use serde::Serialize;

use crate::corona::{BaseSpec, CoronaInstance};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "<")]
    Less,
    #[serde(rename = "<=")]
    LessOrEqual,
}

impl Relation {
    fn holds(self, lhs: i64, rhs: i64) -> bool {
        match self {
            Relation::Less => lhs < rhs,
            Relation::LessOrEqual => lhs <= rhs,
        }
    }
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Less => "<",
            Relation::LessOrEqual => "<=",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Condition {
    pub id: String,
    pub holds: bool,
    pub lhs: i64,
    pub relation: Relation,
    pub rhs: i64,
    pub description: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub conditions: Vec<Condition>,
    pub overall: bool,
}

impl ConditionReport {
    fn from_conditions(conditions: Vec<Condition>) -> Self {
        let overall = conditions.iter().all(|c| c.holds);
        ConditionReport {
            conditions,
            overall,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &Condition> {
        self.conditions.iter().filter(|c| !c.holds)
    }

    pub fn failed_ids(&self) -> Vec<&str> {
        self.failures().map(|c| c.id.as_str()).collect()
    }

    pub fn get(&self, id: &str) -> Option<&Condition> {
        self.conditions.iter().find(|c| c.id == id)
    }
}

impl fmt::Display for ConditionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.conditions {
            writeln!(
                f,
                "[{}] {:<28} {} {} {}  ({})",
                if c.holds { "ok" } else { "FAIL" },
                c.id,
                c.lhs,
                c.relation,
                c.rhs,
                c.description
            )?;
        }
        write!(
            f,
            "overall: {}",
            if self.overall {
                "satisfied"
            } else {
                "not satisfied"
            }
        )
    }
}

fn cond(id: String, lhs: usize, relation: Relation, rhs: usize, description: String) -> Condition {
    let (lhs, rhs) = (lhs as i64, rhs as i64);
    Condition {
        holds: relation.holds(lhs, rhs),
        id,
        lhs,
        relation,
        rhs,
        description,
    }
}

struct Degrees<'a>(&'a CoronaInstance);

impl Degrees<'_> {
    fn max(&self, i: usize) -> usize {
        self.0.attachment(i).degree_profile().max_degree
    }
    fn min(&self, i: usize) -> usize {
        self.0.attachment(i).degree_profile().min_degree
    }
    fn max_in_composite(&self, i: usize) -> usize {
        self.max(i) + 2
    }
    fn min_in_composite(&self, i: usize) -> usize {
        self.min(i) + 2
    }
    fn base(&self, v: usize) -> usize {
        self.0.composite().degree(v)
    }
}

/// Evaluates every hypothesis attached to the instance's base type.
pub fn check_conditions(inst: &CoronaInstance) -> ConditionReport {
    match inst.base() {
        BaseSpec::Pan { r } => pan_conditions(inst, r),
        BaseSpec::Spider { p: 1 } => ConditionReport::from_conditions(Vec::new()),
        BaseSpec::Spider { p } => spider_conditions(inst, p),
    }
}

fn size_order(
    inst: &CoronaInstance,
    prefix: &str,
    numbers: std::ops::Range<usize>,
) -> Vec<Condition> {
    numbers
        .map(|i| {
            cond(
                format!("{prefix}.size-order.{i}"),
                inst.order_of(i),
                Relation::LessOrEqual,
                inst.order_of(i + 1),
                format!("|V(H{i})| <= |V(H{})|", i + 1),
            )
        })
        .collect()
}

fn pan_conditions(inst: &CoronaInstance, r: usize) -> ConditionReport {
    let d = Degrees(inst);
    let mut out = vec![cond(
        "pan.h0-h1-strict".into(),
        d.max(0),
        Relation::Less,
        d.min(1),
        "Δ(H0) < δ(H1)".into(),
    )];
    for i in 1..r {
        out.push(cond(
            format!("pan.degree-chain.{i}"),
            d.max(i),
            Relation::LessOrEqual,
            d.min(i + 1),
            format!("Δ(H{i}) <= δ(H{})", i + 1),
        ));
    }
    let pendant = d.base(0);
    for i in 0..=r {
        out.push(cond(
            format!("pan.pendant.{i}"),
            pendant,
            Relation::LessOrEqual,
            d.min_in_composite(i),
            format!("d'(u0) <= δ'(H{i})"),
        ));
    }
    out.push(cond(
        "pan.last-block-vs-u1".into(),
        d.max_in_composite(r),
        Relation::LessOrEqual,
        d.base(1),
        format!("Δ'(H{r}) <= d'(u1)"),
    ));
    out.extend(size_order(inst, "pan", 0..r));
    ConditionReport::from_conditions(out)
}

fn spider_conditions(inst: &CoronaInstance, p: usize) -> ConditionReport {
    let d = Degrees(inst);
    let blocks = 3 * p;
    let mut out = Vec::new();
    for i in 1..blocks {
        out.push(cond(
            format!("spider.degree-chain.{i}"),
            d.max(i),
            Relation::LessOrEqual,
            d.min(i + 1),
            format!("Δ(H{i}) <= δ(H{})", i + 1),
        ));
    }
    for (leg, letter) in ["x", "y", "z"].into_iter().enumerate() {
        let tip = inst.spider_vertex(leg, p);
        out.push(cond(
            format!("spider.tip-{letter}"),
            d.base(tip),
            Relation::LessOrEqual,
            d.min_in_composite(leg + 2),
            format!("d'({letter}{p}) <= δ'(H{})", leg + 2),
        ));
    }
    if p > 2 {
        out.push(cond(
            "spider.last-leg-block".into(),
            d.max_in_composite(blocks - 3),
            Relation::LessOrEqual,
            inst.order_of(4) + 1,
            format!("Δ'(H{}) <= |V(H4)| + 1", blocks - 3),
        ));
        out.push(cond(
            "spider.z2-vs-centre-block".into(),
            d.base(inst.spider_vertex(2, 2)),
            Relation::LessOrEqual,
            d.min_in_composite(blocks - 2),
            format!("d'(z2) <= δ'(H{})", blocks - 2),
        ));
    }
    out.extend(size_order(inst, "spider", 1..blocks));
    ConditionReport::from_conditions(out)
}
