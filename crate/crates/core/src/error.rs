use thiserror::Error;

/// Why an edge list or edge set failed to describe a tree.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum NotATreeReason {
    Cycle,
    Disconnected,
    DuplicateEdge(usize, usize),
    EdgeCount { vertices: usize, edges: usize },
}

impl std::fmt::Display for NotATreeReason {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            NotATreeReason::Cycle => write!(f, "cycle"),
            NotATreeReason::Disconnected => write!(f, "disconnected"),
            NotATreeReason::DuplicateEdge(u, v) => write!(f, "duplicate edge {u} {v}"),
            NotATreeReason::EdgeCount { vertices, edges } => {
                write!(f, "{edges} edges on {vertices} vertices")
            }
        }
    }
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("not a tree: {0}")]
    NotATree(NotATreeReason),

    #[error("line {line}: {msg}")]
    BadFormat { line: usize, msg: String },

    #[error("vertex ids are not contiguous from 0 (missing {missing})")]
    NonContiguousIds { missing: usize },

    #[error("vertex {vertex} out of range for tree on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("infeasible parameters: {0}")]
    InfeasibleParams(String),

    #[error("bad parameters: {0}")]
    BadParams(String),

    #[error("coloring has uncolored vertex {0}")]
    PartialColoring(usize),

    #[error("coloring covers {got} vertices, tree has {expected}")]
    ColoringSize { expected: usize, got: usize },

    #[error("automorphism limit {0} exceeded")]
    LimitExceeded(u64),

    #[error("search budget exceeded: {0}")]
    SearchBudgetExceeded(String),

    #[error("no distinguishing coloring with at most {0} colors")]
    NotFoundWithinMax(u32),

    #[error("line index {index} does not fit in {len} base-{base} digits")]
    IndexOverflow { index: usize, len: usize, base: u32 },

    #[error("valence profile is not {{1, k}}: vertex {vertex} has valence {valence}")]
    NotRegularProfile { vertex: usize, valence: usize },

    #[error("bad ray: {0}")]
    BadRay(String),

    #[error("oracle budget exceeded: {0}")]
    OracleBudgetExceeded(String),

    #[error("json: {0}")]
    Json(String),
}

pub type Result<T> = std::result::Result<T, Error>;
