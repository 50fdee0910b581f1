//! Finite simple undirected graphs with dense vertex identifiers.
//!
//! A [`Graph`] is immutable once built. Vertices are `0..n`; an optional
//! label layer carries display names (`"a"`, `"(u,x)"`) without affecting
//! any algorithm.

mod edgelist;
pub mod enumerate;
pub mod generators;
mod graph6;
pub(crate) mod ops;
pub mod random;

pub use edgelist::{from_edge_list_text, to_edge_list_text};
pub use graph6::{from_graph6, to_graph6};
pub use ops::{complement, disjoint_union, induced_subgraph, is_connected, power};

use std::collections::HashSet;

use serde::Serialize;

use crate::error::{GraphError, Result};

pub type Vertex = usize;

#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize)]
pub struct Graph {
    adjacency: Vec<Vec<Vertex>>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adjacency: vec![Vec::new(); n],
            labels: None,
        }
    }

    /// Builds a graph from unordered pairs. Duplicate pairs (in either
    /// orientation) collapse to one edge.
    pub fn from_edge_list<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut adjacency = vec![Vec::new(); n];
        for (u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::VertexOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::SelfLoop { v });
            }
            adjacency[u].push(v);
            adjacency[v].push(u);
        }
        Ok(Self::from_raw_adjacency(adjacency))
    }

    /// Sorts and dedups each list. Callers guarantee symmetry, range and
    /// the absence of loops.
    pub(crate) fn from_raw_adjacency(mut adjacency: Vec<Vec<Vertex>>) -> Self {
        for list in &mut adjacency {
            list.sort_unstable();
            list.dedup();
        }
        Graph {
            adjacency,
            labels: None,
        }
    }

    /// Attaches display labels, one per vertex. Labels must be unique.
    pub fn with_labels<S: Into<String>>(mut self, labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.len() != self.vertex_count() {
            return Err(GraphError::Labels(format!(
                "{} labels for {} vertices",
                labels.len(),
                self.vertex_count()
            )));
        }
        let mut seen = HashSet::with_capacity(labels.len());
        for label in &labels {
            if !seen.insert(label.as_str()) {
                return Err(GraphError::Labels(format!("duplicate label {label:?}")));
            }
        }
        self.labels = Some(labels);
        Ok(self)
    }

    pub fn without_labels(mut self) -> Self {
        self.labels = None;
        self
    }

    pub(crate) fn set_labels_unchecked(&mut self, labels: Option<Vec<String>>) {
        debug_assert!(labels.as_ref().is_none_or(|l| l.len() == self.vertex_count()));
        self.labels = labels;
    }

    #[inline]
    pub fn vertex_count(&self) -> usize {
        self.adjacency.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.adjacency.is_empty()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.vertex_count()
    }

    /// Sorted neighbour list of `v`.
    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    #[inline]
    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.vertex_count() && self.adjacency[u].binary_search(&v).is_ok()
    }

    /// Edges as pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().copied().filter(move |&v| u < v).map(move |v| (u, v)))
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    /// Display name of `v`: its label if present, otherwise the identifier.
    pub fn label(&self, v: Vertex) -> String {
        match &self.labels {
            Some(labels) => labels[v].clone(),
            None => v.to_string(),
        }
    }

    /// Looks up a vertex by display name (label, or decimal identifier for
    /// unlabeled graphs).
    pub fn vertex_by_label(&self, name: &str) -> Option<Vertex> {
        match &self.labels {
            Some(labels) => labels.iter().position(|l| l == name),
            None => name.parse().ok().filter(|&v| v < self.vertex_count()),
        }
    }

    /// True when both graphs have identical vertex counts and edge sets,
    /// ignoring labels.
    pub fn same_edges(&self, other: &Graph) -> bool {
        self.adjacency == other.adjacency
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        self.adjacency.iter().all(|list| list.len() + 1 == n)
    }

    /// Re-checks the structural invariants: sorted strictly increasing
    /// lists, no loops, in-range endpoints, symmetry, and label uniqueness.
    pub fn validate(&self) -> Result<()> {
        let n = self.vertex_count();
        for (u, list) in self.adjacency.iter().enumerate() {
            for pair in list.windows(2) {
                if pair[0] >= pair[1] {
                    return Err(GraphError::Precondition(format!(
                        "adjacency of {u} is not strictly increasing"
                    )));
                }
            }
            for &v in list {
                if v >= n {
                    return Err(GraphError::VertexOutOfRange { u, v, n });
                }
                if v == u {
                    return Err(GraphError::SelfLoop { v });
                }
                if self.adjacency[v].binary_search(&u).is_err() {
                    return Err(GraphError::Precondition(format!(
                        "edge ({u}, {v}) is not symmetric"
                    )));
                }
            }
        }
        if let Some(labels) = &self.labels {
            let unique: HashSet<&String> = labels.iter().collect();
            if labels.len() != n || unique.len() != n {
                return Err(GraphError::Labels("label layer is inconsistent".into()));
            }
        }
        Ok(())
    }
}
