//! Standard graph families.
//!
//! Vertex numbering conventions:
//! - `path(n)`: `0 - 1 - ... - n-1`.
//! - `cycle(n)`: the path plus `n-1 - 0`.
//! - `complete_bipartite(m, n)`: left side `0..m`, right side `m..m+n`.
//! - `hypercube(d)`: vertices are bit strings, adjacent when they differ in one bit.
//! - `grid(m, n)`: cell `(i, j)` is `i * n + j`, matching the row-major
//!   numbering of `cartesian(path(m), path(n))`.

use std::fmt;
use std::str::FromStr;

use super::Graph;
use crate::error::{GraphError, Result};

const MAX_HYPERCUBE_DIMENSION: u32 = 24;

fn invalid(msg: impl Into<String>) -> GraphError {
    GraphError::InvalidSize(msg.into())
}

pub fn path(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("path needs at least 1 vertex"));
    }
    Graph::from_edge_list(n, (1..n).map(|v| (v - 1, v)))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(invalid("cycle needs at least 3 vertices"));
    }
    Graph::from_edge_list(n, (0..n).map(|v| (v, (v + 1) % n)))
}

pub fn complete(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(invalid("complete graph needs at least 1 vertex"));
    }
    let adjacency = (0..n).map(|v| (0..n).filter(|&u| u != v).collect()).collect();
    Ok(Graph::from_raw_adjacency(adjacency))
}

pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph> {
    if m == 0 || n == 0 {
        return Err(invalid("complete bipartite graph needs both sides nonempty"));
    }
    Graph::from_edge_list(m + n, (0..m).flat_map(|u| (m..m + n).map(move |v| (u, v))))
}

pub fn hypercube(dimension: u32) -> Result<Graph> {
    if dimension == 0 || dimension > MAX_HYPERCUBE_DIMENSION {
        return Err(invalid(format!(
            "hypercube dimension must be in 1..={MAX_HYPERCUBE_DIMENSION}"
        )));
    }
    let n = 1usize << dimension;
    let adjacency = (0..n)
        .map(|v| (0..dimension).map(|bit| v ^ (1 << bit)).collect())
        .collect();
    Ok(Graph::from_raw_adjacency(adjacency))
}

pub fn grid(m: usize, n: usize) -> Result<Graph> {
    if m == 0 || n == 0 {
        return Err(invalid("grid needs both dimensions at least 1"));
    }
    let id = |i: usize, j: usize| i * n + j;
    let mut edges = Vec::with_capacity(2 * m * n);
    for i in 0..m {
        for j in 0..n {
            if i + 1 < m {
                edges.push((id(i, j), id(i + 1, j)));
            }
            if j + 1 < n {
                edges.push((id(i, j), id(i, j + 1)));
            }
        }
    }
    Graph::from_edge_list(m * n, edges)
}

/// A family name plus parameters, written `family:params`, e.g.
/// `grid:3x4`, `cycle:7`, `bipartite:2x3`, `hypercube:3`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    CompleteBipartite(usize, usize),
    Hypercube(u32),
    Grid(usize, usize),
}

impl Family {
    pub fn build(self) -> Result<Graph> {
        match self {
            Family::Path(n) => path(n),
            Family::Cycle(n) => cycle(n),
            Family::Complete(n) => complete(n),
            Family::CompleteBipartite(m, n) => complete_bipartite(m, n),
            Family::Hypercube(d) => hypercube(d),
            Family::Grid(m, n) => grid(m, n),
        }
    }

    /// Builds a family from a name and positional parameters.
    pub fn from_parts(name: &str, params: &[usize]) -> Result<Self> {
        let one = || match params {
            [a] => Ok(*a),
            _ => Err(invalid(format!("{name} takes one parameter"))),
        };
        let two = || match params {
            [a, b] => Ok((*a, *b)),
            _ => Err(invalid(format!("{name} takes two parameters"))),
        };
        Ok(match name {
            "path" => Family::Path(one()?),
            "cycle" => Family::Cycle(one()?),
            "complete" => Family::Complete(one()?),
            "bipartite" | "complete-bipartite" => {
                let (a, b) = two()?;
                Family::CompleteBipartite(a, b)
            }
            "hypercube" => Family::Hypercube(
                u32::try_from(one()?).map_err(|_| invalid("hypercube dimension too large"))?,
            ),
            "grid" => {
                let (a, b) = two()?;
                Family::Grid(a, b)
            }
            other => return Err(invalid(format!("unknown family {other:?}"))),
        })
    }
}

impl FromStr for Family {
    type Err = GraphError;

    fn from_str(s: &str) -> Result<Self> {
        let (name, rest) = s
            .split_once(':')
            .ok_or_else(|| invalid(format!("expected family:params, got {s:?}")))?;
        let params = rest
            .split(['x', ','])
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| invalid(format!("bad parameter {p:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Family::from_parts(name, &params)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::CompleteBipartite(m, n) => write!(f, "bipartite:{m}x{n}"),
            Family::Hypercube(d) => write!(f, "hypercube:{d}"),
            Family::Grid(m, n) => write!(f, "grid:{m}x{n}"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes() {
        let p2 = path(2).unwrap();
        assert_eq!((p2.vertex_count(), p2.edge_count()), (2, 1));
        let q3 = hypercube(3).unwrap();
        assert_eq!((q3.vertex_count(), q3.edge_count()), (8, 12));
        let k23 = complete_bipartite(2, 3).unwrap();
        assert_eq!((k23.vertex_count(), k23.edge_count()), (5, 6));
        let k5 = complete(5).unwrap();
        assert_eq!(k5.edge_count(), 10);
        assert!(k5.is_complete());
        let c7 = cycle(7).unwrap();
        assert!(c7.vertices().all(|v| c7.degree(v) == 2));
        let g = grid(3, 4).unwrap();
        assert_eq!((g.vertex_count(), g.edge_count()), (12, 17));
        for d in 1..=6 {
            let q = hypercube(d).unwrap();
            assert_eq!(q.edge_count(), d as usize * (1 << (d - 1)));
            q.validate().unwrap();
        }
    }

    #[test]
    fn rejects_degenerate_sizes() {
        assert!(path(0).is_err());
        assert!(cycle(2).is_err());
        assert!(complete(0).is_err());
        assert!(complete_bipartite(0, 3).is_err());
        assert!(hypercube(0).is_err());
        assert!(grid(3, 0).is_err());
    }

    #[test]
    fn parses_expressions() {
        assert_eq!("grid:3x4".parse::<Family>().unwrap(), Family::Grid(3, 4));
        assert_eq!("cycle:7".parse::<Family>().unwrap(), Family::Cycle(7));
        assert_eq!("bipartite:2,3".parse::<Family>().unwrap(), Family::CompleteBipartite(2, 3));
        assert!("grid:3".parse::<Family>().is_err());
        assert!("blob:3".parse::<Family>().is_err());
        assert!("cycle".parse::<Family>().is_err());
        for f in [Family::Grid(2, 5), Family::Hypercube(3), Family::Path(1)] {
            assert_eq!(f.to_string().parse::<Family>().unwrap(), f);
        }
    }
}
