//! Resolving an input argument to a graph: `-` for stdin, `g6:<code>` for
//! an inline graph6 string, `family:params` for a generator, or a path.

use std::fs;
use std::io::{self, Read};

use hangable::graph::generators::Family;
use hangable::graph::{from_edge_list_text, from_graph6};
use hangable::{Graph, GraphError};

use crate::CliError;

pub enum Source {
    Stdin,
    Inline(String),
    Generator(Family),
    File(String),
}

impl Source {
    pub fn parse(arg: &str) -> Source {
        if arg == "-" {
            return Source::Stdin;
        }
        if let Some(code) = arg.strip_prefix("g6:") {
            return Source::Inline(code.to_string());
        }
        match arg.parse::<Family>() {
            Ok(family) => Source::Generator(family),
            Err(_) => Source::File(arg.to_string()),
        }
    }

    pub fn read_text(&self) -> Result<String, CliError> {
        match self {
            Source::Stdin => {
                let mut text = String::new();
                io::stdin()
                    .read_to_string(&mut text)
                    .map_err(|e| CliError::input(format!("reading stdin: {e}")))?;
                Ok(text)
            }
            Source::File(path) => {
                fs::read_to_string(path).map_err(|e| CliError::input(format!("reading {path}: {e}")))
            }
            Source::Inline(code) => Ok(code.clone()),
            Source::Generator(family) => Ok(family.to_string()),
        }
    }
}

/// Edge-list text when the first content line is two integers, graph6
/// otherwise (exactly one graph).
pub fn parse_graph_text(text: &str) -> Result<Graph, GraphError> {
    let first = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .find(|l| !l.is_empty());
    let looks_like_header = first.is_some_and(|l| {
        let fields: Vec<&str> = l.split_whitespace().collect();
        fields.len() == 2 && fields.iter().all(|f| f.parse::<usize>().is_ok())
    });
    if looks_like_header {
        return from_edge_list_text(text);
    }
    let lines: Vec<&str> = text.lines().filter(|l| !l.trim().is_empty()).collect();
    match lines.as_slice() {
        [] => from_graph6(""),
        [line] => from_graph6(line.trim()),
        _ => Err(GraphError::Graph6 {
            offset: lines[0].len() + 1,
            reason: "more than one graph given; use `classify` for graph6 streams".into(),
        }),
    }
}

pub fn load(arg: &str) -> Result<Graph, CliError> {
    let source = Source::parse(arg);
    let graph = match &source {
        Source::Generator(family) => family.build(),
        Source::Inline(code) => from_graph6(code),
        _ => parse_graph_text(&source.read_text()?),
    };
    graph.map_err(CliError::from)
}
