//! Corona, cartesian and join products, with closed-form metric oracles
//! computed from factor metrics alone.
//!
//! Vertex numbering (fixed, so maps and golden output are stable):
//! - corona `G ∘ H`: original `v` of `G` is `v`; the copy vertex `(v, x)`
//!   is `|G| + v·|H| + x`.
//! - cartesian `G □ H`: `(a, b)` is `a·|H| + b` (row-major).
//! - join `G + H`: `G`'s vertices first, then `H`'s shifted by `|G|`.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::error::{GraphError, Result};
use crate::graph::ops::merged_labels;
use crate::graph::{Graph, Vertex};
use crate::metrics::{DistanceMatrix, MetricProfile};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum ProductKind {
    Corona,
    Cartesian,
    Join,
}

impl fmt::Display for ProductKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProductKind::Corona => "corona",
            ProductKind::Cartesian => "cartesian",
            ProductKind::Join => "join",
        })
    }
}

/// Set-theoretic description of one product vertex in terms of factor
/// vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum ProductVertex {
    /// A vertex of `G` kept as is (corona).
    Base(Vertex),
    /// `(v, x)`: the corona copy of `x` attached to `v`, or a cartesian pair.
    Pair(Vertex, Vertex),
    /// A join vertex from `G`.
    Left(Vertex),
    /// A join vertex from `H`.
    Right(Vertex),
}

/// Bijection between product identifiers and [`ProductVertex`] values.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ProductVertexMap {
    kind: ProductKind,
    g_order: usize,
    h_order: usize,
    g_names: Vec<String>,
    h_names: Vec<String>,
}

impl ProductVertexMap {
    fn new(kind: ProductKind, g: &Graph, h: &Graph) -> Self {
        ProductVertexMap {
            kind,
            g_order: g.vertex_count(),
            h_order: h.vertex_count(),
            g_names: g.vertices().map(|v| g.label(v)).collect(),
            h_names: h.vertices().map(|v| h.label(v)).collect(),
        }
    }

    pub fn kind(&self) -> ProductKind {
        self.kind
    }

    pub fn factor_orders(&self) -> (usize, usize) {
        (self.g_order, self.h_order)
    }

    pub fn len(&self) -> usize {
        let (g, h) = (self.g_order, self.h_order);
        match self.kind {
            ProductKind::Corona => g * (1 + h),
            ProductKind::Cartesian => g * h,
            ProductKind::Join => g + h,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    /// Panics if `id` is not a product vertex.
    pub fn vertex(&self, id: Vertex) -> ProductVertex {
        assert!(id < self.len(), "product vertex {id} out of range");
        let (g, h) = (self.g_order, self.h_order);
        match self.kind {
            ProductKind::Corona if id < g => ProductVertex::Base(id),
            ProductKind::Corona => ProductVertex::Pair((id - g) / h, (id - g) % h),
            ProductKind::Cartesian => ProductVertex::Pair(id / h, id % h),
            ProductKind::Join if id < g => ProductVertex::Left(id),
            ProductKind::Join => ProductVertex::Right(id - g),
        }
    }

    pub fn id(&self, vertex: ProductVertex) -> Option<Vertex> {
        let (g, h) = (self.g_order, self.h_order);
        match (self.kind, vertex) {
            (ProductKind::Corona, ProductVertex::Base(v)) if v < g => Some(v),
            (ProductKind::Corona, ProductVertex::Pair(v, x)) if v < g && x < h => Some(g + v * h + x),
            (ProductKind::Cartesian, ProductVertex::Pair(a, b)) if a < g && b < h => Some(a * h + b),
            (ProductKind::Join, ProductVertex::Left(v)) if v < g => Some(v),
            (ProductKind::Join, ProductVertex::Right(x)) if x < h => Some(g + x),
            _ => None,
        }
    }

    /// Human-readable description using factor labels: `v`, `(v,x)`,
    /// `G:v` or `H:x`.
    pub fn describe(&self, id: Vertex) -> String {
        match self.vertex(id) {
            ProductVertex::Base(v) => self.g_names[v].clone(),
            ProductVertex::Pair(v, x) => format!("({},{})", self.g_names[v], self.h_names[x]),
            ProductVertex::Left(v) => format!("G:{}", self.g_names[v]),
            ProductVertex::Right(x) => format!("H:{}", self.h_names[x]),
        }
    }

    /// One `id ↦ description` line per product vertex.
    pub fn render(&self) -> String {
        (0..self.len())
            .map(|id| format!("{id} ↦ {}\n", self.describe(id)))
            .collect()
    }
}

fn unique_or_none(labels: Vec<String>) -> Option<Vec<String>> {
    let distinct: HashSet<&String> = labels.iter().collect();
    (distinct.len() == labels.len()).then_some(labels)
}

fn finish(adjacency: Vec<Vec<Vertex>>, map: &ProductVertexMap, labels: Option<Vec<String>>) -> Graph {
    let mut graph = Graph::from_raw_adjacency(adjacency);
    let labels = labels.or_else(|| unique_or_none((0..map.len()).map(|id| map.describe(id)).collect()));
    graph.set_labels_unchecked(labels);
    graph
}

/// `G ∘ H`: `G`, plus for each `v` a private copy of `H` with every copy
/// vertex joined to `v`.
pub fn corona(g: &Graph, h: &Graph) -> (Graph, ProductVertexMap) {
    let map = ProductVertexMap::new(ProductKind::Corona, g, h);
    let (ng, nh) = (g.vertex_count(), h.vertex_count());
    let copy = |v: Vertex, x: Vertex| ng + v * nh + x;
    let mut adjacency = vec![Vec::new(); map.len()];
    for v in g.vertices() {
        adjacency[v].extend_from_slice(g.neighbors(v));
        for x in h.vertices() {
            let id = copy(v, x);
            adjacency[v].push(id);
            adjacency[id].push(v);
            adjacency[id].extend(h.neighbors(x).iter().map(|&y| copy(v, y)));
        }
    }
    let graph = finish(adjacency, &map, None);
    (graph, map)
}

/// `G □ H`: `(a,b) ~ (c,d)` iff `ac ∈ E(G), b = d` or `a = c, bd ∈ E(H)`.
pub fn cartesian(g: &Graph, h: &Graph) -> (Graph, ProductVertexMap) {
    let map = ProductVertexMap::new(ProductKind::Cartesian, g, h);
    let nh = h.vertex_count();
    let mut adjacency = vec![Vec::new(); map.len()];
    for a in g.vertices() {
        for b in h.vertices() {
            let list = &mut adjacency[a * nh + b];
            list.extend(g.neighbors(a).iter().map(|&c| c * nh + b));
            list.extend(h.neighbors(b).iter().map(|&d| a * nh + d));
        }
    }
    let graph = finish(adjacency, &map, None);
    (graph, map)
}

/// `G + H`: disjoint union plus every edge between the two sides.
pub fn join(g: &Graph, h: &Graph) -> (Graph, ProductVertexMap) {
    let map = ProductVertexMap::new(ProductKind::Join, g, h);
    let (ng, nh) = (g.vertex_count(), h.vertex_count());
    let mut adjacency = Vec::with_capacity(ng + nh);
    for v in g.vertices() {
        let mut list = g.neighbors(v).to_vec();
        list.extend(ng..ng + nh);
        adjacency.push(list);
    }
    for x in h.vertices() {
        let mut list: Vec<Vertex> = (0..ng).collect();
        list.extend(h.neighbors(x).iter().map(|&y| ng + y));
        adjacency.push(list);
    }
    let graph = finish(adjacency, &map, merged_labels(g, h));
    (graph, map)
}

/// Vertices adjacent to every other vertex, ascending.
pub fn universal_vertices(g: &Graph) -> Vec<Vertex> {
    let n = g.vertex_count();
    g.vertices().filter(|&v| g.degree(v) + 1 == n).collect()
}

/// Hangability of `G + H` from the factors alone: the join is hangable iff
/// it is complete or has at most one universal vertex. A join vertex is
/// universal iff it is universal within its own factor.
pub fn join_hangability_predicate(g: &Graph, h: &Graph) -> bool {
    let complete = g.is_complete() && h.is_complete();
    let universal = universal_vertices(g).len() + universal_vertices(h).len();
    complete || universal <= 1
}

fn corona_precondition(order: usize) -> Result<()> {
    if order < 2 {
        return Err(GraphError::Precondition(format!(
            "corona oracles need a connected base graph of order at least two (got order {order})"
        )));
    }
    Ok(())
}

/// Distance between two corona vertices from the base graph's distances:
/// copies of different bases are `d(u,v) + 2` apart, a copy and an
/// original `d(u,v) + 1`, two originals `d(u,v)`. Two copies on the same
/// base are 1 apart when adjacent in `H` and 2 apart (through the base)
/// otherwise.
pub fn corona_distance_oracle(
    dist_g: &DistanceMatrix,
    h: &Graph,
    p: ProductVertex,
    q: ProductVertex,
) -> Result<u32> {
    corona_precondition(dist_g.order())?;
    let (ng, nh) = (dist_g.order(), h.vertex_count());
    let check = |pv: ProductVertex| match pv {
        ProductVertex::Base(v) if v < ng => Ok(()),
        ProductVertex::Pair(v, x) if v < ng && x < nh => Ok(()),
        other => Err(GraphError::Precondition(format!("{other:?} is not a corona vertex"))),
    };
    check(p)?;
    check(q)?;
    Ok(match (p, q) {
        (ProductVertex::Base(u), ProductVertex::Base(v)) => dist_g.get(u, v),
        (ProductVertex::Base(u), ProductVertex::Pair(v, _))
        | (ProductVertex::Pair(v, _), ProductVertex::Base(u)) => dist_g.get(u, v) + 1,
        (ProductVertex::Pair(u, x), ProductVertex::Pair(v, y)) if u == v => match (x == y, h.has_edge(x, y)) {
            (true, _) => 0,
            (false, true) => 1,
            (false, false) => 2,
        },
        (ProductVertex::Pair(u, _), ProductVertex::Pair(v, _)) => dist_g.get(u, v) + 2,
        _ => unreachable!("checked above"),
    })
}

/// Closed-form distances, diameter and peripheries of `G ∘ H`, in product
/// identifiers.
#[derive(Debug, Clone)]
pub struct CoronaOracle {
    dist_g: DistanceMatrix,
    profile_g: MetricProfile,
    h: Graph,
    map: ProductVertexMap,
}

impl CoronaOracle {
    /// `g` supplies display names only; its metrics come from `dist_g` and
    /// `profile_g`. Needs `|G| >= 2` (a distance matrix already implies a
    /// connected `G`) and `|H| >= 1`.
    pub fn from_factor_metrics(
        dist_g: DistanceMatrix,
        profile_g: MetricProfile,
        g: &Graph,
        h: &Graph,
    ) -> Result<Self> {
        corona_precondition(dist_g.order())?;
        if h.is_empty() {
            return Err(GraphError::Precondition("corona oracles need a nonempty second factor".into()));
        }
        let map = ProductVertexMap::new(ProductKind::Corona, g, h);
        Ok(CoronaOracle {
            dist_g,
            profile_g,
            h: h.clone(),
            map,
        })
    }

    pub fn for_factors(g: &Graph, h: &Graph) -> Result<Self> {
        if g.vertex_count() < 2 {
            corona_precondition(g.vertex_count())?;
        }
        let dist_g = DistanceMatrix::new(g)?;
        let profile_g = MetricProfile::from_distances(&dist_g);
        Self::from_factor_metrics(dist_g, profile_g, g, h)
    }

    pub fn map(&self) -> &ProductVertexMap {
        &self.map
    }

    pub fn distance(&self, p: Vertex, q: Vertex) -> u32 {
        corona_distance_oracle(&self.dist_g, &self.h, self.map.vertex(p), self.map.vertex(q))
            .expect("preconditions checked at construction")
    }

    /// `d(G) + 2`.
    pub fn diameter(&self) -> u32 {
        self.profile_g.diameter + 2
    }

    /// `P(u) = P((u,x)) = P_G(u) × V_H`.
    pub fn vertex_periphery(&self, p: Vertex) -> Vec<Vertex> {
        let base = match self.map.vertex(p) {
            ProductVertex::Base(u) | ProductVertex::Pair(u, _) => u,
            _ => unreachable!("corona map yields base or pair vertices"),
        };
        self.copies_of(&self.profile_g.vertex_periphery[base])
    }

    /// `P(G ∘ H) = P(G) × V_H`.
    pub fn graph_periphery(&self) -> Vec<Vertex> {
        self.copies_of(&self.profile_g.graph_periphery)
    }

    fn copies_of(&self, bases: &[Vertex]) -> Vec<Vertex> {
        let nh = self.h.vertex_count();
        bases
            .iter()
            .flat_map(|&v| (0..nh).map(move |x| self.map.id(ProductVertex::Pair(v, x))))
            .map(|id| id.expect("in range"))
            .collect()
    }
}

/// Closed-form distances, eccentricities, diameter and peripheries of
/// `G □ H` from the metrics of two connected factors.
#[derive(Debug, Clone)]
pub struct CartesianOracle {
    dist_g: DistanceMatrix,
    profile_g: MetricProfile,
    dist_h: DistanceMatrix,
    profile_h: MetricProfile,
}

impl CartesianOracle {
    pub fn from_factor_metrics(
        dist_g: DistanceMatrix,
        profile_g: MetricProfile,
        dist_h: DistanceMatrix,
        profile_h: MetricProfile,
    ) -> Self {
        CartesianOracle {
            dist_g,
            profile_g,
            dist_h,
            profile_h,
        }
    }

    /// Fails when either factor is empty or disconnected.
    pub fn for_factors(g: &Graph, h: &Graph) -> Result<Self> {
        let dist_g = DistanceMatrix::new(g)?;
        let dist_h = DistanceMatrix::new(h)?;
        let profile_g = MetricProfile::from_distances(&dist_g);
        let profile_h = MetricProfile::from_distances(&dist_h);
        Ok(Self::from_factor_metrics(dist_g, profile_g, dist_h, profile_h))
    }

    fn split(&self, id: Vertex) -> (Vertex, Vertex) {
        let nh = self.dist_h.order();
        (id / nh, id % nh)
    }

    fn pairs(&self, left: &[Vertex], right: &[Vertex]) -> Vec<Vertex> {
        let nh = self.dist_h.order();
        left.iter().flat_map(|&a| right.iter().map(move |&b| a * nh + b)).collect()
    }

    /// `d((a,b),(c,d)) = d_G(a,c) + d_H(b,d)`.
    pub fn distance(&self, p: Vertex, q: Vertex) -> u32 {
        let ((a, b), (c, d)) = (self.split(p), self.split(q));
        self.dist_g.get(a, c) + self.dist_h.get(b, d)
    }

    /// `e(a,b) = e_G(a) + e_H(b)`.
    pub fn eccentricity(&self, p: Vertex) -> u32 {
        let (a, b) = self.split(p);
        self.profile_g.eccentricity[a] + self.profile_h.eccentricity[b]
    }

    /// `d(G) + d(H)`.
    pub fn diameter(&self) -> u32 {
        self.profile_g.diameter + self.profile_h.diameter
    }

    /// `P((a,b)) = P_G(a) × P_H(b)`.
    pub fn vertex_periphery(&self, p: Vertex) -> Vec<Vertex> {
        let (a, b) = self.split(p);
        self.pairs(&self.profile_g.vertex_periphery[a], &self.profile_h.vertex_periphery[b])
    }

    /// `P(G □ H) = P(G) × P(H)`.
    pub fn graph_periphery(&self) -> Vec<Vertex> {
        self.pairs(&self.profile_g.graph_periphery, &self.profile_h.graph_periphery)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::diamond;
    use crate::graph::generators::{complete, complete_bipartite, cycle, grid, path};
    use crate::graph::{disjoint_union, to_graph6};
    use crate::metrics::{all_pairs_distances, check_hangable, metric_profile};

    fn base_of_corona_example() -> Graph {
        let k1 = complete(1).unwrap();
        join(&k1, &disjoint_union(&k1, &complete(2).unwrap())).0
    }

    #[test]
    fn join_builds_the_corona_base() {
        let g = base_of_corona_example();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1), (0, 2), (0, 3), (2, 3)]);
        assert!(join(&complete(1).unwrap(), &complete(1).unwrap()).0.same_edges(&complete(2).unwrap()));
        assert_eq!(to_graph6(&join(&complete(2).unwrap(), &complete(2).unwrap()).0), "C~");
    }

    #[test]
    fn corona_example_sizes() {
        let g = base_of_corona_example();
        let (c, map) = corona(&g, &complete(2).unwrap());
        assert_eq!(c.vertex_count(), 12);
        assert_eq!(c.edge_count(), 4 + 4 * 2 + 4);
        assert_eq!(map.len(), 12);
        c.validate().unwrap();
        assert_eq!(metric_profile(&c).unwrap().diameter, 4);
        assert_eq!(CoronaOracle::for_factors(&g, &complete(2).unwrap()).unwrap().diameter(), 4);

        let (k2, _) = corona(&complete(1).unwrap(), &complete(1).unwrap());
        assert!(k2.same_edges(&complete(2).unwrap()));
    }

    #[test]
    fn corona_vertex_numbering() {
        let g = path(3).unwrap().with_labels(["u", "v", "w"]).unwrap();
        let h = Graph::empty(2).with_labels(["x", "y"]).unwrap();
        let (c, map) = corona(&g, &h);
        assert_eq!(map.vertex(1), ProductVertex::Base(1));
        assert_eq!(map.vertex(3), ProductVertex::Pair(0, 0));
        assert_eq!(map.vertex(8), ProductVertex::Pair(2, 1));
        assert_eq!(map.id(ProductVertex::Pair(1, 1)), Some(6));
        assert_eq!(map.id(ProductVertex::Left(0)), None);
        assert_eq!(c.label(6), "(v,y)");
        assert!(map.render().starts_with("0 ↦ u\n1 ↦ v\n2 ↦ w\n3 ↦ (u,x)\n"));
        for id in 0..map.len() {
            assert_eq!(map.id(map.vertex(id)), Some(id));
        }
    }

    #[test]
    fn corona_distance_cases() {
        // P_3 with an edgeless H of order 2
        let g = path(3).unwrap();
        let h = Graph::empty(2);
        let dm = all_pairs_distances(&g).unwrap();
        let d = |p, q| corona_distance_oracle(&dm, &h, p, q).unwrap();
        assert_eq!(d(ProductVertex::Base(0), ProductVertex::Base(2)), 2);
        assert_eq!(d(ProductVertex::Pair(0, 0), ProductVertex::Pair(2, 1)), 4);
        assert_eq!(d(ProductVertex::Pair(0, 1), ProductVertex::Base(2)), 3);
        assert_eq!(d(ProductVertex::Pair(1, 0), ProductVertex::Pair(1, 1)), 2);
        assert_eq!(d(ProductVertex::Pair(1, 0), ProductVertex::Pair(1, 0)), 0);

        let (c, map) = corona(&path(2).unwrap(), &h);
        let truth = all_pairs_distances(&c).unwrap();
        let dm2 = all_pairs_distances(&path(2).unwrap()).unwrap();
        for p in 0..map.len() {
            for q in 0..map.len() {
                assert_eq!(corona_distance_oracle(&dm2, &h, map.vertex(p), map.vertex(q)).unwrap(), truth.get(p, q));
            }
        }
    }

    #[test]
    fn corona_preconditions() {
        let k1 = complete(1).unwrap();
        assert!(matches!(CoronaOracle::for_factors(&k1, &complete(2).unwrap()), Err(GraphError::Precondition(_))));
        assert!(matches!(
            CoronaOracle::for_factors(&Graph::empty(2), &k1),
            Err(GraphError::Disconnected { .. })
        ));
        assert!(CoronaOracle::for_factors(&path(2).unwrap(), &Graph::empty(0)).is_err());
        let dm = all_pairs_distances(&path(2).unwrap()).unwrap();
        assert!(corona_distance_oracle(&dm, &k1, ProductVertex::Left(0), ProductVertex::Base(0)).is_err());
        assert!(corona_distance_oracle(&dm, &k1, ProductVertex::Pair(0, 1), ProductVertex::Base(0)).is_err());
    }

    #[test]
    fn corona_of_an_edge_and_a_point_is_p4() {
        let (c, _) = corona(&path(2).unwrap(), &complete(1).unwrap());
        let profile = metric_profile(&c).unwrap();
        assert_eq!(profile.diameter, 3);
        assert_eq!(profile.graph_periphery, vec![2, 3]);
        let oracle = CoronaOracle::for_factors(&path(2).unwrap(), &complete(1).unwrap()).unwrap();
        assert_eq!(oracle.diameter(), 3);
        assert_eq!(oracle.graph_periphery(), vec![2, 3]);
    }

    #[test]
    fn cartesian_examples() {
        let (c4, _) = cartesian(&path(2).unwrap(), &path(2).unwrap());
        assert_eq!(c4.edge_count(), 4);
        assert!(c4.vertices().all(|v| c4.degree(v) == 2));
        for (m, n) in [(1, 1), (2, 3), (3, 4), (5, 2)] {
            let (p, map) = cartesian(&path(m).unwrap(), &path(n).unwrap());
            assert!(p.same_edges(&grid(m, n).unwrap()));
            assert_eq!(map.vertex(m * n - 1), ProductVertex::Pair(m - 1, n - 1));
        }
        let g = diamond();
        let h = cycle(5).unwrap();
        let (prod, _) = cartesian(&g, &h);
        assert_eq!(prod.edge_count(), 4 * 5 + 5 * 5);
        prod.validate().unwrap();
    }

    #[test]
    fn cartesian_oracle_examples() {
        let p3 = path(3).unwrap();
        let oracle = CartesianOracle::for_factors(&p3, &p3).unwrap();
        assert_eq!(oracle.eccentricity(4), 2);
        assert_eq!(CartesianOracle::for_factors(&p3, &path(4).unwrap()).unwrap().diameter(), 5);
        let c4p3 = CartesianOracle::for_factors(&cycle(4).unwrap(), &p3).unwrap();
        let periphery = c4p3.graph_periphery();
        assert_eq!(periphery.len(), 8);
        assert_eq!(periphery, vec![0, 2, 3, 5, 6, 8, 9, 11]);
        assert!(CartesianOracle::for_factors(&Graph::empty(2), &p3).is_err());
    }

    #[test]
    fn universal_vertices_examples() {
        assert_eq!(universal_vertices(&complete(4).unwrap()), vec![0, 1, 2, 3]);
        assert!(universal_vertices(&cycle(5).unwrap()).is_empty());
        assert_eq!(universal_vertices(&complete_bipartite(1, 4).unwrap()), vec![0]);
        assert_eq!(universal_vertices(&diamond()), vec![1, 3]);
    }

    #[test]
    fn join_predicate_examples() {
        let k1 = complete(1).unwrap();
        let k2 = complete(2).unwrap();
        assert!(join_hangability_predicate(&k2, &k2));
        assert!(!join_hangability_predicate(&k1, &path(3).unwrap()));
        assert!(!check_hangable(&join(&k1, &path(3).unwrap()).0).unwrap().hangable);
        let star = join(&k1, &Graph::empty(2)).0;
        assert!(join_hangability_predicate(&k1, &Graph::empty(2)));
        assert!(check_hangable(&star).unwrap().hangable);
    }

    #[test]
    fn join_labels() {
        let a = Graph::empty(1).with_labels(["a"]).unwrap();
        let b = Graph::empty(1).with_labels(["b"]).unwrap();
        assert_eq!(join(&a, &b).0.labels().unwrap(), ["a", "b"]);
        let (j, map) = join(&Graph::empty(1), &Graph::empty(1));
        assert_eq!(j.labels().unwrap(), ["G:0", "H:0"]);
        assert_eq!(map.render(), "0 ↦ G:0\n1 ↦ H:0\n");
    }
}
