use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("edge id {edge} out of range (graph has {edge_count} edges)")]
    InvalidEdgeId { edge: usize, edge_count: usize },

    #[error("vertex {vertex} out of range (graph has {vertex_count} vertices)")]
    InvalidVertex { vertex: usize, vertex_count: usize },

    #[error("cannot contract loop edge {0}")]
    LoopContraction(usize),

    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("edge subsets hold at most 64 edges, graph has {0}")]
    TooManyEdges(usize),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("enumeration over 2^{items} states exceeds the cap of 2^{cap}")]
    EnumerationCapExceeded { items: usize, cap: u32 },

    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid orientation: {0}")]
    InvalidOrientation(String),

    #[error("no directed path from vertex {from} to vertex {to}")]
    NoDirectedPath { from: usize, to: usize },

    #[error("source and target are the same vertex {0}")]
    SameVertex(usize),

    #[error("tail has length {found}, expected {expected}")]
    BadTailLength { expected: usize, found: usize },

    #[error("bad bipartition: {0}")]
    BadBipartition(String),

    #[error("graph is not bipartite")]
    NotBipartite,

    #[error(
        "forest count routes disagree: recursion gave {recursion}, enumeration gave {enumeration}"
    )]
    ForestRoutesDisagree {
        recursion: String,
        enumeration: String,
    },

    #[error("equivalence chain broken: {0}")]
    ChainBroken(String),
}
