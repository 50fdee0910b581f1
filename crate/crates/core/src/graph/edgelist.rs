//! Plain edge-list text: a header line `n m`, then `m` lines `u v` with
//! 0-based identifiers. `#` starts a comment. A comment of the form
//! `# labels: a b c ...` attaches one display label per vertex.

use super::Graph;
use crate::error::{GraphError, Result};

const LABEL_DIRECTIVE: &str = "labels:";

fn parse_error(line: usize, reason: impl Into<String>) -> GraphError {
    GraphError::EdgeList {
        line,
        reason: reason.into(),
    }
}

pub fn from_edge_list_text(text: &str) -> Result<Graph> {
    let mut header: Option<(usize, usize)> = None;
    let mut edges = Vec::new();
    let mut seen = std::collections::HashSet::new();
    let mut labels: Option<(usize, Vec<String>)> = None;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let (content, comment) = match raw.find('#') {
            Some(pos) => (&raw[..pos], Some(&raw[pos + 1..])),
            None => (raw, None),
        };
        if let Some(rest) = comment.and_then(|c| c.trim_start().strip_prefix(LABEL_DIRECTIVE)) {
            if labels.is_some() {
                return Err(parse_error(line_no, "labels given twice"));
            }
            labels = Some((line_no, rest.split_whitespace().map(str::to_owned).collect()));
        }

        let mut fields = content.split_whitespace();
        let Some(first) = fields.next() else { continue };
        let second = fields
            .next()
            .ok_or_else(|| parse_error(line_no, "expected two integers"))?;
        if fields.next().is_some() {
            return Err(parse_error(line_no, "expected exactly two integers"));
        }
        let parse = |s: &str| {
            s.parse::<usize>()
                .map_err(|_| parse_error(line_no, format!("{s:?} is not a non-negative integer")))
        };
        let (a, b) = (parse(first)?, parse(second)?);
        match header {
            None => header = Some((a, b)),
            Some((n, _)) => {
                if a >= n || b >= n {
                    return Err(parse_error(line_no, format!("endpoint outside 0..{n}")));
                }
                if a == b {
                    return Err(parse_error(line_no, format!("self-loop on {a}")));
                }
                if !seen.insert((a.min(b), a.max(b))) {
                    return Err(parse_error(line_no, format!("duplicate edge {a} {b}")));
                }
                edges.push((a, b));
            }
        }
    }

    let (n, m) = header.ok_or_else(|| parse_error(1, "missing \"n m\" header"))?;
    if edges.len() != m {
        return Err(parse_error(
            text.lines().count(),
            format!("header promises {m} edges, found {}", edges.len()),
        ));
    }
    let graph = Graph::from_edge_list(n, edges)?;
    match labels {
        Some((line_no, labels)) => graph
            .with_labels(labels)
            .map_err(|e| parse_error(line_no, e.to_string())),
        None => Ok(graph),
    }
}

/// Writes `g` in edge-list form, including a label comment when `g` is
/// labeled.
pub fn to_edge_list_text(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.vertex_count(), g.edge_count());
    if let Some(labels) = g.labels() {
        out.push_str("# ");
        out.push_str(LABEL_DIRECTIVE);
        for label in labels {
            out.push(' ');
            out.push_str(label);
        }
        out.push('\n');
    }
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
