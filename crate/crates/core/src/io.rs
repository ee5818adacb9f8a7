//! File formats: graph and instance descriptors, labeling exports, reports.
//!
//! All JSON written here is canonical: keys sorted, two-space indentation,
//! trailing newline. Reading a canonical file back and writing it again
//! reproduces the same bytes.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use serde_json::{json, Value};
use thiserror::Error;

use crate::conditions::ConditionReport;
use crate::corona::{self, BaseSpec, CoronaError, CoronaInstance};
use crate::graph::{self, Graph, GraphError, PresetKind};
use crate::labeling::{Label, Labeling};
use crate::search::SearchOutcome;
use crate::verify::SumReport;

#[derive(Debug, Error)]
pub enum IoError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("invalid CSV: {0}")]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Corona(#[from] CoronaError),
    #[error("unknown graph descriptor: {0}")]
    UnknownDescriptor(String),
    #[error("malformed labeling: {0}")]
    MalformedLabeling(String),
}

/// Shorthand parameter: a single number or a list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum ShortParams {
    One(usize),
    Many(Vec<usize>),
}

impl ShortParams {
    fn to_vec(&self) -> Vec<usize> {
        match self {
            ShortParams::One(n) => vec![*n],
            ShortParams::Many(v) => v.clone(),
        }
    }
}

/// A graph given by preset or by explicit edge list.
///
/// Accepted forms:
/// `{"kind": "cycle", "params": [4]}`, `{"vertices": 3, "edges": [[0,1],[1,2]]}`,
/// `{"K": 4}`, `{"Kab": [2, 3]}`, `"diamond"`, `"C4"`, `"K2"`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum GraphDescriptor {
    Named(String),
    Preset {
        kind: String,
        #[serde(default)]
        params: Vec<usize>,
    },
    Explicit {
        vertices: usize,
        edges: Vec<(usize, usize)>,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        names: Option<Vec<String>>,
    },
    Short(BTreeMap<String, ShortParams>),
}

fn short_kind(key: &str) -> Option<PresetKind> {
    Some(match key {
        "K" => PresetKind::Complete,
        "C" => PresetKind::Cycle,
        "P" => PresetKind::Path,
        "S" => PresetKind::Star,
        "Kab" => PresetKind::CompleteBipartite,
        _ => return None,
    })
}

impl GraphDescriptor {
    pub fn to_graph(&self) -> Result<Graph, IoError> {
        match self {
            GraphDescriptor::Named(name) => named_graph(name),
            GraphDescriptor::Preset { kind, params } => {
                let kind = PresetKind::from_name(kind)
                    .ok_or_else(|| IoError::UnknownDescriptor(kind.clone()))?;
                Ok(graph::preset_graph(kind, params)?)
            }
            GraphDescriptor::Explicit {
                vertices,
                edges,
                names,
            } => {
                let g = Graph::new(*vertices, edges)?;
                Ok(match names {
                    Some(names) => g.with_names(names.clone())?,
                    None => g,
                })
            }
            GraphDescriptor::Short(map) => {
                let mut entries = map.iter();
                match (entries.next(), entries.next()) {
                    (Some((key, params)), None) => {
                        let kind = short_kind(key)
                            .ok_or_else(|| IoError::UnknownDescriptor(key.clone()))?;
                        Ok(graph::preset_graph(kind, &params.to_vec())?)
                    }
                    _ => Err(IoError::UnknownDescriptor(format!(
                        "shorthand needs exactly one key, got {:?}",
                        map.keys().collect::<Vec<_>>()
                    ))),
                }
            }
        }
    }

    pub fn from_json(text: &str) -> Result<Self, IoError> {
        Ok(serde_json::from_str(text)?)
    }
}

fn named_graph(name: &str) -> Result<Graph, IoError> {
    if name == "diamond" {
        return Ok(graph::diamond()?);
    }
    let unknown = || IoError::UnknownDescriptor(name.to_string());
    let split = name
        .find(|c: char| c.is_ascii_digit())
        .ok_or_else(unknown)?;
    let (prefix, digits) = name.split_at(split);
    let kind = short_kind(prefix)
        .filter(|k| *k != PresetKind::CompleteBipartite)
        .ok_or_else(unknown)?;
    let n: usize = digits.parse().map_err(|_| unknown())?;
    Ok(graph::preset_graph(kind, &[n])?)
}

/// Reads a graph descriptor; a full instance descriptor yields its composite.
pub fn read_graph(text: &str) -> Result<Graph, IoError> {
    let value: Value = serde_json::from_str(text)?;
    if value.get("base").is_some() {
        let spec: InstanceSpec = serde_json::from_value(value)?;
        return Ok(spec.build()?.composite().clone());
    }
    serde_json::from_value::<GraphDescriptor>(value)?.to_graph()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BaseKind {
    Pan,
    Spider,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct BaseDescriptor {
    #[serde(rename = "type")]
    pub kind: BaseKind,
    pub param: usize,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(default)]
pub struct SpecOptions {
    pub force: bool,
    pub normalize: bool,
}

/// `{"base": {"type": "pan", "param": 5}, "attachments": [...], "options": {...}}`
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InstanceSpec {
    pub base: BaseDescriptor,
    pub attachments: Vec<GraphDescriptor>,
    #[serde(default)]
    pub options: SpecOptions,
}

impl InstanceSpec {
    pub fn from_json(text: &str) -> Result<Self, IoError> {
        Ok(serde_json::from_str(text)?)
    }

    pub fn base_spec(&self) -> BaseSpec {
        match self.base.kind {
            BaseKind::Pan => BaseSpec::Pan { r: self.base.param },
            BaseKind::Spider => BaseSpec::Spider { p: self.base.param },
        }
    }

    /// Builds the instance; attachments are sorted by order only when the
    /// `normalize` option is set.
    pub fn build(&self) -> Result<CoronaInstance, IoError> {
        let mut graphs = self
            .attachments
            .iter()
            .map(GraphDescriptor::to_graph)
            .collect::<Result<Vec<_>, _>>()?;
        if self.options.normalize {
            graphs = corona::normalize_attachments(graphs);
        }
        Ok(corona::build(self.base_spec(), graphs)?)
    }
}

/// Serializes with sorted keys and a trailing newline.
pub fn canonical_json<T: Serialize>(value: &T) -> Result<String, IoError> {
    let value = serde_json::to_value(value)?;
    let mut text = serde_json::to_string_pretty(&value)?;
    text.push('\n');
    Ok(text)
}

pub fn graph_to_json(graph: &Graph) -> Result<String, IoError> {
    let descriptor = GraphDescriptor::Explicit {
        vertices: graph.vertex_count(),
        edges: graph.edges().to_vec(),
        names: graph.names().map(<[String]>::to_vec),
    };
    canonical_json(&descriptor)
}

/// Per-edge view used by every labeling export.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabeledEdge {
    pub u: usize,
    pub v: usize,
    pub label: Label,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub role: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelingFile {
    pub edges: Vec<LabeledEdge>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sums: Option<Vec<Label>>,
}

fn labeled_edges(
    graph: &Graph,
    labeling: &Labeling,
    roles: Option<&CoronaInstance>,
) -> Vec<LabeledEdge> {
    graph
        .edges()
        .iter()
        .enumerate()
        .map(|(e, &(u, v))| LabeledEdge {
            u,
            v,
            label: labeling.label(e),
            role: roles.map(|inst| inst.edge_roles()[e].kind().to_string()),
        })
        .collect()
}

pub fn labeling_to_json(
    graph: &Graph,
    labeling: &Labeling,
    sums: Option<&SumReport>,
    roles: Option<&CoronaInstance>,
) -> Result<String, IoError> {
    canonical_json(&LabelingFile {
        edges: labeled_edges(graph, labeling, roles),
        sums: sums.map(|r| r.sums.clone()),
    })
}

pub fn labeling_to_csv(graph: &Graph, labeling: &Labeling) -> Result<String, IoError> {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer.write_record(["edge_u", "edge_v", "label"])?;
    for (e, &(u, v)) in graph.edges().iter().enumerate() {
        writer.serialize((u, v, labeling.label(e)))?;
    }
    let bytes = writer
        .into_inner()
        .map_err(|e| IoError::MalformedLabeling(e.to_string()))?;
    Ok(String::from_utf8(bytes).expect("csv output is UTF-8"))
}

/// Graphviz rendering: edges carry labels, vertices carry name and sum.
pub fn labeling_to_dot(graph: &Graph, labeling: &Labeling, sums: Option<&SumReport>) -> String {
    let mut out = String::from("graph labeling {\n");
    for v in 0..graph.vertex_count() {
        let name = graph.name(v);
        match sums {
            Some(r) => writeln!(out, "  {v} [label=\"{name}\\nw={}\"];", r.sums[v]),
            None => writeln!(out, "  {v} [label=\"{name}\"];"),
        }
        .expect("writing to a String");
    }
    for (e, &(u, v)) in graph.edges().iter().enumerate() {
        writeln!(out, "  {u} -- {v} [label=\"{}\"];", labeling.label(e))
            .expect("writing to a String");
    }
    out.push_str("}\n");
    out
}

/// Graphviz rendering of an unlabeled graph.
pub fn graph_to_dot(graph: &Graph) -> String {
    let mut out = String::from("graph g {\n");
    for v in 0..graph.vertex_count() {
        writeln!(out, "  {v} [label=\"{}\"];", graph.name(v)).expect("writing to a String");
    }
    for &(u, v) in graph.edges() {
        writeln!(out, "  {u} -- {v};").expect("writing to a String");
    }
    out.push_str("}\n");
    out
}

fn labeling_from_triples(
    graph: &Graph,
    triples: impl IntoIterator<Item = (usize, usize, Label)>,
) -> Result<Labeling, IoError> {
    let mut labels: Vec<Option<Label>> = vec![None; graph.edge_count()];
    for (u, v, label) in triples {
        let e = graph
            .edge_between(u, v)
            .ok_or_else(|| IoError::MalformedLabeling(format!("({u},{v}) is not an edge")))?;
        if labels[e].replace(label).is_some() {
            return Err(IoError::MalformedLabeling(format!(
                "edge ({u},{v}) labeled twice"
            )));
        }
    }
    labels
        .into_iter()
        .enumerate()
        .map(|(e, l)| {
            l.ok_or_else(|| {
                let (u, v) = graph.edge(e);
                IoError::MalformedLabeling(format!("edge ({u},{v}) has no label"))
            })
        })
        .collect::<Result<Vec<_>, _>>()
        .map(Labeling::new)
}

/// Reads a labeling as JSON (`{"edges": [{"u", "v", "label"}, ...]}` or
/// `{"labels": [...]}` in edge order) or as CSV with an `edge_u,edge_v,label`
/// header. Labels are not checked for bijectivity here.
pub fn read_labeling(graph: &Graph, text: &str) -> Result<Labeling, IoError> {
    let trimmed = text.trim_start();
    if !trimmed.starts_with('{') {
        let mut reader = csv::Reader::from_reader(text.as_bytes());
        let rows = reader
            .deserialize::<(usize, usize, Label)>()
            .collect::<Result<Vec<_>, _>>()?;
        return labeling_from_triples(graph, rows);
    }
    let value: Value = serde_json::from_str(text)?;
    if let Some(raw) = value.get("labels") {
        let labels: Vec<Label> = serde_json::from_value(raw.clone())?;
        if labels.len() != graph.edge_count() {
            return Err(IoError::MalformedLabeling(format!(
                "{} labels for {} edges",
                labels.len(),
                graph.edge_count()
            )));
        }
        return Ok(Labeling::new(labels));
    }
    let file: LabelingFile = serde_json::from_value(value)?;
    labeling_from_triples(graph, file.edges.into_iter().map(|e| (e.u, e.v, e.label)))
}

/// Sum report with vertex names, for human and machine consumption.
pub fn sum_report_json(graph: &Graph, report: &SumReport) -> Value {
    let named: BTreeMap<String, Label> = report
        .sums
        .iter()
        .enumerate()
        .map(|(v, &s)| (format!("w({})", graph.name(v)), s))
        .collect();
    let mut value = json!({
        "antimagic": report.is_antimagic,
        "sums": report.sums,
        "named_sums": named,
        "duplicates": report.duplicate_groups,
    });
    if let Some(chain) = &report.chain {
        value["chain"] = serde_json::to_value(chain).expect("plain data");
    }
    value
}

pub fn condition_report_json(report: &ConditionReport) -> Value {
    serde_json::to_value(report).expect("plain data")
}

pub fn search_outcome_json(graph: &Graph, outcome: &SearchOutcome) -> Value {
    let mut value = json!({
        "status": outcome.status,
        "examined": outcome.examined,
    });
    if let Some(labeling) = &outcome.labeling {
        value["labeling"] = serde_json::to_value(LabelingFile {
            edges: labeled_edges(graph, labeling, None),
            sums: None,
        })
        .expect("plain data");
    }
    value
}
