use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Which metered resource ran out.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Resource {
    /// Search-node expansions.
    Nodes,
    /// Covers examined by an enumeration.
    Covers,
    /// Vertex-count cap for exact search.
    SizeCap,
}

impl std::fmt::Display for Resource {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Resource::Nodes => write!(f, "search nodes"),
            Resource::Covers => write!(f, "cover enumeration"),
            Resource::SizeCap => write!(f, "graph size cap"),
        }
    }
}

/// First cover axiom found violated, with the offending edge where one exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverViolation {
    pub axiom: u8,
    pub edge: Option<(usize, usize)>,
    pub detail: String,
}

impl std::fmt::Display for CoverViolation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "axiom {} violated", self.axiom)?;
        if let Some((u, v)) = self.edge {
            write!(f, " at edge ({u}, {v})")?;
        }
        write!(f, ": {}", self.detail)
    }
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("budget exceeded: {resource} (limit {limit})")]
    Budget { resource: Resource, limit: u64 },
    #[error("invalid graph: {0}")]
    InvalidGraph(String),
    #[error("invalid cover: {0}")]
    InvalidCover(CoverViolation),
    #[error("invalid argument: {0}")]
    InvalidArg(String),
    #[error("unsupported operation: {0}")]
    Unsupported(String),
    #[error("vertex sequence is not a cycle: {0}")]
    NotACycle(String),
    #[error("unknown graph spec: {0}")]
    UnknownSpec(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}
