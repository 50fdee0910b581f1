//! Random graph sampling for property tests and sweeps.

use rand::seq::SliceRandom;
use rand::Rng;

use super::{Graph, Vertex};

/// Relabels vertices by a uniformly random permutation.
pub fn shuffle_vertices<R: Rng + ?Sized>(g: &Graph, rng: &mut R) -> Graph {
    let mut perm: Vec<Vertex> = g.vertices().collect();
    perm.shuffle(rng);
    let edges: Vec<_> = g.edges().map(|(u, v)| (perm[u], perm[v])).collect();
    Graph::from_edge_list(g.vertex_count(), edges).expect("permutation keeps edges valid")
}

/// A random tree on `n >= 1` vertices: each new vertex attaches to a
/// uniformly chosen earlier one, then identifiers are shuffled.
pub fn random_tree<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Graph {
    assert!(n >= 1, "a tree needs at least one vertex");
    let edges: Vec<_> = (1..n).map(|v| (rng.gen_range(0..v), v)).collect();
    let tree = Graph::from_edge_list(n, edges).expect("parent edges are valid");
    shuffle_vertices(&tree, rng)
}

/// A random connected graph: a random tree plus each remaining pair with
/// probability `extra_edge_probability`.
pub fn random_connected_graph<R: Rng + ?Sized>(n: usize, extra_edge_probability: f64, rng: &mut R) -> Graph {
    let tree = random_tree(n, rng);
    let mut edges: Vec<_> = tree.edges().collect();
    for v in 1..n {
        for u in 0..v {
            if !tree.has_edge(u, v) && rng.gen_bool(extra_edge_probability) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edge_list(n, edges).expect("pairs are in range")
}

/// A random block graph with at most `max_vertices` vertices: cliques of
/// 1 to 5 vertices arranged in a tree shape, consecutive cliques glued at
/// a shared cut vertex.
pub fn random_block_graph<R: Rng + ?Sized>(max_vertices: usize, rng: &mut R) -> Graph {
    assert!(max_vertices >= 1);
    let first = rng.gen_range(1..=5.min(max_vertices));
    let mut n = first;
    let mut edges: Vec<(Vertex, Vertex)> = clique_edges(&(0..first).collect::<Vec<_>>());
    // a clique of size s glued on an existing vertex adds s - 1 vertices
    let target = rng.gen_range(n..=max_vertices);
    while n < target {
        let size = rng.gen_range(2..=5.min(target - n + 1));
        let anchor = rng.gen_range(0..n);
        let members: Vec<Vertex> = std::iter::once(anchor).chain(n..n + size - 1).collect();
        edges.extend(clique_edges(&members));
        n += size - 1;
    }
    let g = Graph::from_edge_list(n, edges).expect("clique edges are valid");
    shuffle_vertices(&g, rng)
}

fn clique_edges(members: &[Vertex]) -> Vec<(Vertex, Vertex)> {
    let mut edges = Vec::new();
    for (i, &u) in members.iter().enumerate() {
        for &v in &members[i + 1..] {
            edges.push((u, v));
        }
    }
    edges
}
