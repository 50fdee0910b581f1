//! Embedding any graph as an induced subgraph of a hangable graph, adding
//! at most one vertex.

use serde::Serialize;

use crate::error::{GraphError, Result};
use crate::graph::{disjoint_union, induced_subgraph, is_connected, Graph, Vertex};
use crate::metrics::check_hangable;
use crate::products::{join, universal_vertices};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EmbeddingBranch {
    /// The input is already connected and hangable.
    Identity,
    /// No universal vertex: add one vertex adjacent to everything.
    Cone,
    /// Universal vertices `U` exist: add one vertex adjacent to `V - U`.
    SplitCone,
}

impl EmbeddingBranch {
    pub fn name(self) -> &'static str {
        match self {
            EmbeddingBranch::Identity => "identity",
            EmbeddingBranch::Cone => "cone",
            EmbeddingBranch::SplitCone => "split-cone",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EmbeddingResult {
    pub supergraph: Graph,
    /// `injection[v]` is the supergraph vertex standing for input vertex `v`.
    pub injection: Vec<Vertex>,
    pub branch: EmbeddingBranch,
}

impl EmbeddingResult {
    /// The supergraph vertex not in the image of the injection, if any.
    pub fn added_vertex(&self) -> Option<Vertex> {
        let mut hit = vec![false; self.supergraph.vertex_count()];
        self.injection.iter().for_each(|&v| hit[v] = true);
        hit.iter().position(|&h| !h)
    }
}

fn fresh_label(labels: &[String]) -> String {
    let mut label = String::from("*");
    while labels.contains(&label) {
        label.push('*');
    }
    label
}

/// Builds a hangable supergraph of `h` in which `h` is induced.
///
/// A connected hangable `h` is returned unchanged. Otherwise, with `U` the
/// universal vertices of `h`: if `U` is empty the result is `K_1 + h`,
/// which has exactly one universal vertex; if not, `h = h[U] + h[V - U]`
/// and the result is `(K_1 ∪ h[U]) + h[V - U]`, which has none. Either way
/// the join is hangable.
pub fn hangable_embedding(h: &Graph) -> EmbeddingResult {
    let n = h.vertex_count();
    if n > 0 && is_connected(h) && check_hangable(h).map(|r| r.hangable).unwrap_or(false) {
        return EmbeddingResult {
            supergraph: h.clone(),
            injection: (0..n).collect(),
            branch: EmbeddingBranch::Identity,
        };
    }

    let universal = universal_vertices(h);
    let new_vertex = match h.labels() {
        Some(labels) => Graph::empty(1).with_labels([fresh_label(labels)]).expect("one label"),
        None => Graph::empty(1),
    };

    let (supergraph, injection, branch) = if universal.is_empty() {
        let (g, _) = join(&new_vertex, h);
        (g, (1..=n).collect(), EmbeddingBranch::Cone)
    } else {
        let rest: Vec<Vertex> = (0..n).filter(|v| universal.binary_search(v).is_err()).collect();
        let left = disjoint_union(&new_vertex, &induced_subgraph(h, &universal).expect("in range"));
        let right = induced_subgraph(h, &rest).expect("in range");
        let (g, _) = join(&left, &right);
        let mut injection = vec![0; n];
        for (i, &v) in universal.iter().enumerate() {
            injection[v] = 1 + i;
        }
        for (i, &v) in rest.iter().enumerate() {
            injection[v] = 1 + universal.len() + i;
        }
        (g, injection, EmbeddingBranch::SplitCone)
    };

    // join labels fall back to side-prefixed names when they collide; keep
    // the input's own labels on the image instead
    let supergraph = match h.labels() {
        Some(labels) => {
            let mut names = vec![String::new(); supergraph.vertex_count()];
            names[0] = new_vertex.label(0);
            for (v, &image) in injection.iter().enumerate() {
                names[image] = labels[v].clone();
            }
            supergraph.without_labels().with_labels(names).expect("labels stay unique")
        }
        None => supergraph.without_labels(),
    };

    EmbeddingResult {
        supergraph,
        injection,
        branch,
    }
}

/// True iff `injection` is injective into `g` and preserves both adjacency
/// and non-adjacency of `h`.
pub fn verify_induced_subgraph(g: &Graph, h: &Graph, injection: &[Vertex]) -> Result<bool> {
    if injection.len() != h.vertex_count() {
        return Err(GraphError::Precondition(format!(
            "injection covers {} of {} vertices",
            injection.len(),
            h.vertex_count()
        )));
    }
    let n = g.vertex_count();
    if let Some(&vertex) = injection.iter().find(|&&v| v >= n) {
        return Err(GraphError::UnknownVertex { vertex, n });
    }
    let mut seen = vec![false; n];
    for &v in injection {
        if std::mem::replace(&mut seen[v], true) {
            return Ok(false);
        }
    }
    for u in h.vertices() {
        for v in u + 1..h.vertex_count() {
            if h.has_edge(u, v) != g.has_edge(injection[u], injection[v]) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}
