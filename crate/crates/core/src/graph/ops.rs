use std::collections::{HashSet, VecDeque};

use super::{Graph, Vertex};
use crate::error::{GraphError, Result};

/// Smallest vertex not reachable from vertex 0, if any.
pub(crate) fn first_unreached(g: &Graph) -> Option<Vertex> {
    let n = g.vertex_count();
    if n <= 1 {
        return None;
    }
    let mut seen = vec![false; n];
    let mut queue = VecDeque::from([0]);
    seen[0] = true;
    while let Some(u) = queue.pop_front() {
        for &v in g.neighbors(u) {
            if !seen[v] {
                seen[v] = true;
                queue.push_back(v);
            }
        }
    }
    seen.iter().position(|&s| !s)
}

/// Vacuously true for graphs with at most one vertex.
pub fn is_connected(g: &Graph) -> bool {
    first_unreached(g).is_none()
}

pub(crate) fn require_connected(g: &Graph) -> Result<()> {
    match first_unreached(g) {
        Some(unreached) => Err(GraphError::Disconnected { unreached }),
        None => Ok(()),
    }
}

pub fn complement(g: &Graph) -> Graph {
    let n = g.vertex_count();
    let adjacency = (0..n)
        .map(|u| (0..n).filter(|&v| v != u && !g.has_edge(u, v)).collect())
        .collect();
    let mut out = Graph::from_raw_adjacency(adjacency);
    out.set_labels_unchecked(g.labels().map(<[String]>::to_vec));
    out
}

/// The `k`-th power: distinct vertices are adjacent iff their distance in
/// `g` is at most `k`. Requires a connected `g` and `k >= 1`.
pub fn power(g: &Graph, k: usize) -> Result<Graph> {
    if k == 0 {
        return Err(GraphError::Precondition("power exponent must be at least 1".into()));
    }
    require_connected(g)?;
    let n = g.vertex_count();
    let mut adjacency = vec![Vec::new(); n];
    let mut depth = vec![usize::MAX; n];
    let mut queue = VecDeque::new();
    for source in 0..n {
        depth.fill(usize::MAX);
        depth[source] = 0;
        queue.clear();
        queue.push_back(source);
        while let Some(u) = queue.pop_front() {
            if depth[u] == k {
                continue;
            }
            for &v in g.neighbors(u) {
                if depth[v] == usize::MAX {
                    depth[v] = depth[u] + 1;
                    adjacency[source].push(v);
                    queue.push_back(v);
                }
            }
        }
    }
    let mut out = Graph::from_raw_adjacency(adjacency);
    out.set_labels_unchecked(g.labels().map(<[String]>::to_vec));
    Ok(out)
}

/// Subgraph induced by `vertices`, renumbered `0..|S|` in increasing order
/// of the original identifiers. Duplicates in `vertices` are ignored.
pub fn induced_subgraph(g: &Graph, vertices: &[Vertex]) -> Result<Graph> {
    let n = g.vertex_count();
    if let Some(&bad) = vertices.iter().find(|&&v| v >= n) {
        return Err(GraphError::UnknownVertex { vertex: bad, n });
    }
    let mut keep = vertices.to_vec();
    keep.sort_unstable();
    keep.dedup();
    let mut index = vec![usize::MAX; n];
    for (new, &old) in keep.iter().enumerate() {
        index[old] = new;
    }
    let adjacency = keep
        .iter()
        .map(|&old| {
            g.neighbors(old)
                .iter()
                .filter_map(|&w| (index[w] != usize::MAX).then_some(index[w]))
                .collect()
        })
        .collect();
    let mut out = Graph::from_raw_adjacency(adjacency);
    out.set_labels_unchecked(g.labels().map(|l| keep.iter().map(|&v| l[v].clone()).collect()));
    Ok(out)
}

/// Disjoint union with `h`'s identifiers shifted by `g.vertex_count()`.
/// Labels survive only when both sides are labeled and stay unique.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Graph {
    let offset = g.vertex_count();
    let adjacency = g
        .vertices()
        .map(|v| g.neighbors(v).to_vec())
        .chain(h.vertices().map(|v| h.neighbors(v).iter().map(|w| w + offset).collect()))
        .collect();
    let mut out = Graph::from_raw_adjacency(adjacency);
    out.set_labels_unchecked(merged_labels(g, h));
    out
}

pub(crate) fn merged_labels(g: &Graph, h: &Graph) -> Option<Vec<String>> {
    let labels: Vec<String> = g.labels()?.iter().chain(h.labels()?).cloned().collect();
    let unique: HashSet<&String> = labels.iter().collect();
    (unique.len() == labels.len()).then_some(labels)
}
