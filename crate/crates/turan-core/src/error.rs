use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("vertex count {n} exceeds capacity {cap}")]
    Capacity { n: usize, cap: usize },
    #[error("invalid edge ({u},{v}) in graph on {n} vertices")]
    InvalidEdge { u: usize, v: usize, n: usize },
    #[error("graph6 parse error at byte {offset}: {reason}")]
    Graph6 { offset: usize, reason: String },
    #[error("construction parameters invalid: {0}")]
    Spec(String),
    #[error("out of domain: {0}")]
    Domain(String),
    #[error("unknown claim id `{0}`")]
    UnknownClaim(String),
    #[error("node limit exceeded after {nodes} nodes (best so far {best})")]
    NodeLimit { nodes: u64, best: usize },
    #[error("pattern embeds in the edgeless host; no pattern-free graph exists")]
    DegeneratePattern,
}

pub type Result<T> = std::result::Result<T, Error>;
