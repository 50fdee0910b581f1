//! Exact distances, eccentricities and peripheries, plus two independent
//! deciders for hangability.
//!
//! A connected graph is *hangable* when the farthest vertices of every
//! vertex all lie in the periphery of the graph. [`check_hangable`] tests
//! that inclusion directly from a [`MetricProfile`]; [`check_hangable_triples`]
//! walks farthest-of-farthest triples on the raw [`DistanceMatrix`] and
//! never looks at a profile.

use std::collections::VecDeque;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{GraphError, Result};
use crate::graph::{Graph, Vertex};

/// Below this order the all-pairs sweep stays on one thread.
const PARALLEL_APSP_THRESHOLD: usize = 128;

const UNREACHED: u32 = u32::MAX;

fn require_nonempty(g: &Graph) -> Result<()> {
    if g.is_empty() {
        Err(GraphError::EmptyGraph)
    } else {
        Ok(())
    }
}

fn bfs_into(g: &Graph, source: Vertex, row: &mut [u32], queue: &mut VecDeque<Vertex>) -> Result<()> {
    row.fill(UNREACHED);
    row[source] = 0;
    queue.clear();
    queue.push_back(source);
    let mut reached = 1;
    while let Some(u) = queue.pop_front() {
        let next = row[u] + 1;
        for &v in g.neighbors(u) {
            if row[v] == UNREACHED {
                row[v] = next;
                reached += 1;
                queue.push_back(v);
            }
        }
    }
    if reached == row.len() {
        Ok(())
    } else {
        let unreached = row.iter().position(|&d| d == UNREACHED).expect("some vertex unreached");
        Err(GraphError::Disconnected { unreached })
    }
}

/// Hop distances from `source` to every vertex.
pub fn bfs_distances(g: &Graph, source: Vertex) -> Result<Vec<u32>> {
    let n = g.vertex_count();
    if source >= n {
        return Err(GraphError::UnknownVertex { vertex: source, n });
    }
    let mut row = vec![0; n];
    bfs_into(g, source, &mut row, &mut VecDeque::new())?;
    Ok(row)
}

/// All-pairs hop distances of a connected graph, stored row-major.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DistanceMatrix {
    n: usize,
    dist: Vec<u32>,
}

impl DistanceMatrix {
    /// One BFS per source. Rows are computed in parallel for larger graphs;
    /// the result does not depend on scheduling.
    pub fn new(g: &Graph) -> Result<Self> {
        require_nonempty(g)?;
        let n = g.vertex_count();
        let mut dist = vec![0u32; n * n];
        if n < PARALLEL_APSP_THRESHOLD {
            let mut queue = VecDeque::with_capacity(n);
            for (source, row) in dist.chunks_mut(n).enumerate() {
                bfs_into(g, source, row, &mut queue)?;
            }
        } else {
            dist.par_chunks_mut(n)
                .enumerate()
                .try_for_each_init(
                    || VecDeque::with_capacity(n),
                    |queue, (source, row)| bfs_into(g, source, row, queue),
                )
                .map_err(|_| {
                    // report the same vertex a sequential run from 0 would
                    match crate::graph::ops::first_unreached(g) {
                        Some(unreached) => GraphError::Disconnected { unreached },
                        None => unreachable!("BFS failed on a connected graph"),
                    }
                })?;
        }
        Ok(DistanceMatrix { n, dist })
    }

    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn get(&self, u: Vertex, v: Vertex) -> u32 {
        self.dist[u * self.n + v]
    }

    #[inline]
    pub fn row(&self, v: Vertex) -> &[u32] {
        &self.dist[v * self.n..(v + 1) * self.n]
    }

    pub fn max_entry(&self) -> u32 {
        self.dist.iter().copied().max().unwrap_or(0)
    }

    /// Checks zero diagonal, symmetry, positivity off the diagonal, the
    /// triangle inequality, and `dist == 1` exactly on the edges of `g`.
    pub fn check_invariants(&self, g: &Graph) -> std::result::Result<(), String> {
        let n = self.n;
        if g.vertex_count() != n {
            return Err(format!("matrix order {n} differs from graph order {}", g.vertex_count()));
        }
        for u in 0..n {
            if self.get(u, u) != 0 {
                return Err(format!("dist[{u}][{u}] != 0"));
            }
            for v in 0..n {
                let d = self.get(u, v);
                if d != self.get(v, u) {
                    return Err(format!("dist[{u}][{v}] is not symmetric"));
                }
                if u != v && d == 0 {
                    return Err(format!("dist[{u}][{v}] is zero"));
                }
                if (d == 1) != g.has_edge(u, v) {
                    return Err(format!("dist[{u}][{v}] = {d} disagrees with adjacency"));
                }
                for w in 0..n {
                    if self.get(u, w) > d + self.get(v, w) {
                        return Err(format!("triangle inequality fails on ({u}, {v}, {w})"));
                    }
                }
            }
        }
        Ok(())
    }
}

pub fn all_pairs_distances(g: &Graph) -> Result<DistanceMatrix> {
    DistanceMatrix::new(g)
}

/// Eccentricities, diameter, radius and peripheries of a connected graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MetricProfile {
    pub eccentricity: Vec<u32>,
    pub diameter: u32,
    pub radius: u32,
    /// `vertex_periphery[v]`: the vertices farthest from `v`, ascending.
    pub vertex_periphery: Vec<Vec<Vertex>>,
    /// Vertices of maximum eccentricity, ascending.
    pub graph_periphery: Vec<Vertex>,
}

impl MetricProfile {
    pub fn from_distances(dm: &DistanceMatrix) -> Self {
        let n = dm.order();
        let eccentricity: Vec<u32> = (0..n).map(|v| dm.row(v).iter().copied().max().unwrap_or(0)).collect();
        let diameter = eccentricity.iter().copied().max().unwrap_or(0);
        let radius = eccentricity.iter().copied().min().unwrap_or(0);
        let vertex_periphery = (0..n)
            .map(|v| {
                let row = dm.row(v);
                (0..n).filter(|&u| row[u] == eccentricity[v]).collect()
            })
            .collect();
        let graph_periphery = (0..n).filter(|&v| eccentricity[v] == diameter).collect();
        MetricProfile {
            eccentricity,
            diameter,
            radius,
            vertex_periphery,
            graph_periphery,
        }
    }

    pub fn order(&self) -> usize {
        self.eccentricity.len()
    }

    pub fn is_peripheral(&self, v: Vertex) -> bool {
        self.eccentricity[v] == self.diameter
    }

    pub fn is_self_centered(&self) -> bool {
        self.radius == self.diameter
    }
}

pub fn metric_profile(g: &Graph) -> Result<MetricProfile> {
    Ok(MetricProfile::from_distances(&DistanceMatrix::new(g)?))
}

/// Radius equals diameter, i.e. every vertex is peripheral.
pub fn is_self_centered(g: &Graph) -> Result<bool> {
    Ok(metric_profile(g)?.is_self_centered())
}

/// `farthest` is in the periphery of `vertex` but not in the periphery of
/// the graph.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PeripheryWitness {
    pub vertex: Vertex,
    pub farthest: Vertex,
}

/// `u` is farthest from `v`, `w` is farthest from `u`, and `d(u, w)` falls
/// short of the diameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TripleWitness {
    pub v: Vertex,
    pub u: Vertex,
    pub w: Vertex,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HangabilityReport {
    pub hangable: bool,
    pub witness: Option<PeripheryWitness>,
    pub triple_witness: Option<TripleWitness>,
    /// Number of violating triples; only filled by an exhaustive triple scan.
    pub violations: Option<usize>,
}

impl HangabilityReport {
    fn hangable() -> Self {
        HangabilityReport {
            hangable: true,
            witness: None,
            triple_witness: None,
            violations: None,
        }
    }

    /// Re-checks every witness in the report against `dm`. A hangable
    /// verdict is consistent when it carries no witness.
    pub fn revalidate(&self, dm: &DistanceMatrix) -> bool {
        let n = dm.order();
        let ecc = |v: Vertex| dm.row(v).iter().copied().max().unwrap_or(0);
        let diameter = dm.max_entry();
        let pair_ok = self.witness.is_none_or(|PeripheryWitness { vertex, farthest }| {
            vertex < n && farthest < n && dm.get(vertex, farthest) == ecc(vertex) && ecc(farthest) < diameter
        });
        let triple_ok = self.triple_witness.is_none_or(|TripleWitness { v, u, w }| {
            v < n
                && u < n
                && w < n
                && dm.get(v, u) == ecc(v)
                && dm.get(u, w) == ecc(u)
                && dm.get(u, w) < diameter
        });
        if self.hangable {
            self.witness.is_none() && self.triple_witness.is_none()
        } else {
            (self.witness.is_some() || self.triple_witness.is_some()) && pair_ok && triple_ok
        }
    }
}

/// Decides `P(v) ⊆ P(G)` for every `v` from a profile. On failure the
/// witness has the smallest `vertex`, then the smallest `farthest`.
pub fn check_hangable_profile(profile: &MetricProfile) -> HangabilityReport {
    for (vertex, farthest_set) in profile.vertex_periphery.iter().enumerate() {
        if let Some(&farthest) = farthest_set.iter().find(|&&u| !profile.is_peripheral(u)) {
            return HangabilityReport {
                hangable: false,
                witness: Some(PeripheryWitness { vertex, farthest }),
                triple_witness: None,
                violations: None,
            };
        }
    }
    HangabilityReport::hangable()
}

pub fn check_hangable(g: &Graph) -> Result<HangabilityReport> {
    Ok(check_hangable_profile(&metric_profile(g)?))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TripleScan {
    /// Stop at the lexicographically first violating triple.
    #[default]
    FirstViolation,
    /// Visit every triple and count violations.
    Exhaustive,
}

/// Decides hangability through farthest-of-farthest triples: for every
/// `v`, every `u` farthest from `v` and every `w` farthest from `u`,
/// `d(u, w)` must equal the diameter.
pub fn check_hangable_triples_with(dm: &DistanceMatrix, scan: TripleScan) -> HangabilityReport {
    let n = dm.order();
    let diameter = dm.max_entry();
    let ecc: Vec<u32> = (0..n).map(|v| dm.row(v).iter().copied().max().unwrap_or(0)).collect();

    let mut first: Option<TripleWitness> = None;
    let mut count = 0usize;
    for v in 0..n {
        let row_v = dm.row(v);
        for u in (0..n).filter(|&u| row_v[u] == ecc[v]) {
            let row_u = dm.row(u);
            for w in (0..n).filter(|&w| row_u[w] == ecc[u]) {
                if row_u[w] != diameter {
                    count += 1;
                    first.get_or_insert(TripleWitness { v, u, w });
                    if scan == TripleScan::FirstViolation {
                        break;
                    }
                }
            }
            if first.is_some() && scan == TripleScan::FirstViolation {
                break;
            }
        }
        if first.is_some() && scan == TripleScan::FirstViolation {
            break;
        }
    }

    let violations = (scan == TripleScan::Exhaustive).then_some(count);
    match first {
        None => HangabilityReport {
            violations,
            ..HangabilityReport::hangable()
        },
        Some(t) => HangabilityReport {
            hangable: false,
            witness: Some(PeripheryWitness {
                vertex: t.v,
                farthest: t.u,
            }),
            triple_witness: Some(t),
            violations,
        },
    }
}

pub fn check_hangable_triples(g: &Graph, scan: TripleScan) -> Result<HangabilityReport> {
    Ok(check_hangable_triples_with(&DistanceMatrix::new(g)?, scan))
}
