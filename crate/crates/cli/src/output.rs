use hangable::graph::{to_edge_list_text, to_graph6};
use hangable::{Graph, Vertex};
use serde::Serialize;

use crate::{CliError, Format};

#[derive(Serialize)]
pub struct GraphJson {
    pub order: usize,
    pub size: usize,
    pub labels: Option<Vec<String>>,
    pub edges: Vec<(Vertex, Vertex)>,
    pub graph6: String,
}

impl GraphJson {
    pub fn new(g: &Graph) -> Self {
        GraphJson {
            order: g.vertex_count(),
            size: g.edge_count(),
            labels: g.labels().map(<[String]>::to_vec),
            edges: g.edges().collect(),
            graph6: to_graph6(g),
        }
    }
}

/// A graph in text (edge list) or graph6 form, newline terminated.
pub fn graph_text(g: &Graph, format: Format) -> String {
    match format {
        Format::Graph6 => format!("{}\n", to_graph6(g)),
        _ => to_edge_list_text(g),
    }
}

pub fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

pub fn names(g: &Graph, vs: &[Vertex]) -> Vec<String> {
    vs.iter().map(|&v| g.label(v)).collect()
}

/// `{a,b,c}`
pub fn set(g: &Graph, vs: &[Vertex]) -> String {
    format!("{{{}}}", names(g, vs).join(","))
}

pub fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

pub fn no_graph6(command: &str) -> CliError {
    CliError::input(format!("--format graph6 is not available for {command}"))
}
