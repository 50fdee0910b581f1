//! Biconnected components (blocks), cut vertices, and recognition of
//! block graphs and trees.

use serde::Serialize;

use crate::error::Result;
use crate::graph::ops::require_connected;
use crate::graph::{Graph, Vertex};

/// Blocks of a connected graph. A bridge forms a two-vertex block; a lone
/// vertex forms a one-vertex block.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BlockDecomposition {
    /// Vertex sets, each ascending; the list is sorted lexicographically.
    pub blocks: Vec<Vec<Vertex>>,
    /// Ascending.
    pub cut_vertices: Vec<Vertex>,
}

impl BlockDecomposition {
    /// One line per block, then the cut-vertex line, using `g`'s labels.
    pub fn render(&self, g: &Graph) -> String {
        let join = |vs: &[Vertex]| vs.iter().map(|&v| g.label(v)).collect::<Vec<_>>().join(" ");
        let mut out = String::new();
        for block in &self.blocks {
            out.push_str("block: ");
            out.push_str(&join(block));
            out.push('\n');
        }
        out.push_str("cut vertices:");
        if !self.cut_vertices.is_empty() {
            out.push(' ');
            out.push_str(&join(&self.cut_vertices));
        }
        out.push('\n');
        out
    }
}

struct Frame {
    vertex: Vertex,
    next: usize,
}

/// Lowpoint decomposition with an explicit stack, so deep graphs (long
/// paths) do not exhaust the call stack.
pub fn biconnected_components(g: &Graph) -> Result<BlockDecomposition> {
    require_connected(g)?;
    let n = g.vertex_count();
    if n <= 1 {
        return Ok(BlockDecomposition {
            blocks: (0..n).map(|v| vec![v]).collect(),
            cut_vertices: Vec::new(),
        });
    }

    const UNSEEN: usize = usize::MAX;
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut parent = vec![UNSEEN; n];
    let mut is_cut = vec![false; n];
    let mut edge_stack: Vec<(Vertex, Vertex)> = Vec::new();
    let mut blocks = Vec::new();
    let mut mark = vec![false; n];

    let root = 0;
    let mut clock = 0;
    let mut root_children = 0;
    disc[root] = clock;
    low[root] = clock;
    clock += 1;
    let mut stack = vec![Frame { vertex: root, next: 0 }];

    while let Some(frame) = stack.last_mut() {
        let u = frame.vertex;
        if let Some(&w) = g.neighbors(u).get(frame.next) {
            frame.next += 1;
            if disc[w] == UNSEEN {
                parent[w] = u;
                disc[w] = clock;
                low[w] = clock;
                clock += 1;
                edge_stack.push((u, w));
                if u == root {
                    root_children += 1;
                }
                stack.push(Frame { vertex: w, next: 0 });
            } else if w != parent[u] && disc[w] < disc[u] {
                edge_stack.push((u, w));
                low[u] = low[u].min(disc[w]);
            }
            continue;
        }

        stack.pop();
        let p = parent[u];
        if p == UNSEEN {
            continue;
        }
        low[p] = low[p].min(low[u]);
        if low[u] >= disc[p] {
            if p != root {
                is_cut[p] = true;
            }
            let mut block = Vec::new();
            while let Some((a, b)) = edge_stack.pop() {
                for x in [a, b] {
                    if !mark[x] {
                        mark[x] = true;
                        block.push(x);
                    }
                }
                if (a, b) == (p, u) {
                    break;
                }
            }
            for &x in &block {
                mark[x] = false;
            }
            block.sort_unstable();
            blocks.push(block);
        }
    }
    if root_children > 1 {
        is_cut[root] = true;
    }
    blocks.sort();
    Ok(BlockDecomposition {
        blocks,
        cut_vertices: (0..n).filter(|&v| is_cut[v]).collect(),
    })
}

/// Connected, and every block induces a complete graph.
pub fn is_block_graph(g: &Graph) -> Result<bool> {
    let decomposition = biconnected_components(g)?;
    let mut inside = vec![false; g.vertex_count()];
    for block in &decomposition.blocks {
        for &v in block {
            inside[v] = true;
        }
        let k = block.len();
        let complete = block
            .iter()
            .all(|&v| g.neighbors(v).iter().filter(|&&w| inside[w]).count() == k - 1);
        for &v in block {
            inside[v] = false;
        }
        if !complete {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Connected with exactly `n - 1` edges.
pub fn is_tree(g: &Graph) -> Result<bool> {
    require_connected(g)?;
    Ok(g.edge_count() + 1 == g.vertex_count().max(1))
}
