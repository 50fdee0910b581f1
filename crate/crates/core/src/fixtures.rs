//! Small hand-built graphs shared by unit tests.

use crate::graph::Graph;

/// Diamond `abcd` (missing only `ac`) with a pendant `e` on `c`.
pub(crate) fn diamond_with_tail() -> Graph {
    Graph::from_edge_list(5, [(0, 1), (0, 3), (1, 3), (1, 2), (2, 3), (2, 4)])
        .unwrap()
        .with_labels(["a", "b", "c", "d", "e"])
        .unwrap()
}

/// The diamond on its own: `diamond_with_tail` minus `e`.
pub(crate) fn diamond() -> Graph {
    Graph::from_edge_list(4, [(0, 1), (0, 3), (1, 3), (1, 2), (2, 3)])
        .unwrap()
        .with_labels(["a", "b", "c", "d"])
        .unwrap()
}
