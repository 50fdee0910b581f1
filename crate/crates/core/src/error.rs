use thiserror::Error;

/// Errors produced by graph construction, parsing and metric operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },

    #[error("edge ({v}, {v}) is a self-loop")]
    SelfLoop { v: usize },

    #[error("vertex {vertex} is outside 0..{n}")]
    UnknownVertex { vertex: usize, n: usize },

    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },

    #[error("edge list parse error on line {line}: {reason}")]
    EdgeList { line: usize, reason: String },

    #[error("labels must be unique and cover every vertex: {0}")]
    Labels(String),

    /// The graph is not connected; `unreached` is the smallest vertex that a
    /// search from vertex 0 cannot reach.
    #[error("graph is disconnected: vertex {unreached} is unreachable from vertex 0")]
    Disconnected { unreached: usize },

    #[error("operation requires at least one vertex")]
    EmptyGraph,

    #[error("invalid generator size: {0}")]
    InvalidSize(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("enumeration of {required} subsets exceeds the budget of {budget}")]
    BudgetExceeded { required: u128, budget: u128 },
}

impl GraphError {
    /// True for errors caused by malformed input text, as opposed to a
    /// well-formed graph that fails a structural precondition.
    pub fn is_parse_error(&self) -> bool {
        matches!(
            self,
            GraphError::Graph6 { .. }
                | GraphError::EdgeList { .. }
                | GraphError::Labels(_)
                | GraphError::VertexOutOfRange { .. }
                | GraphError::SelfLoop { .. }
        )
    }
}

pub type Result<T> = std::result::Result<T, GraphError>;
