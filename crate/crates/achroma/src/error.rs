use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("duplicate vertex label {0}")]
    DuplicateLabel(String),
    #[error("edge endpoint {0} is not a vertex of the graph")]
    UnknownEndpoint(String),
    #[error("loop edge at {0}")]
    LoopEdge(String),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(String, String),
    #[error("coloring domain does not match the vertex set ({got} entries for {want} vertices)")]
    DomainMismatch { got: usize, want: usize },
    #[error("coloring is not surjective onto 0..{k}: color {missing} unused")]
    NotSurjective { k: u32, missing: u32 },
    #[error("invalid rotation system: {0}")]
    InvalidRotation(String),
    #[error("operation requires a connected graph")]
    DisconnectedGraph,
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("cannot shrink a construction from {from} to {to} vertices")]
    ShrinkNotAllowed { from: usize, to: usize },
    #[error("Euler genus {genus} too large for t = {t}: each handle needs its own part")]
    GenusTooLarge { genus: u32, t: u32 },
    #[error("search budget exhausted after {explored} nodes: value in {lower}..={upper}")]
    BudgetExceeded { lower: u32, upper: u32, explored: u64 },
}

pub type Result<T> = std::result::Result<T, Error>;
