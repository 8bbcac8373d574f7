use thiserror::Error;

use crate::graph6::Graph6Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("graph order {0} is outside 1..={max}", max = crate::graph::MAX_ORDER)]
    OrderOutOfRange(usize),
    #[error("vertex {vertex} is out of range for a graph of order {order}")]
    VertexOutOfRange { vertex: usize, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("circulant offset {offset} is outside 1..{order}")]
    OffsetOutOfRange { offset: usize, order: usize },
    #[error("circulant needs at least one offset")]
    EmptyOffsets,
    #[error("circulant order must be at least 3, got {0}")]
    CirculantTooSmall(usize),
    #[error("cannot delete every vertex of the graph")]
    DeleteAll,
    #[error("{what} supports graphs of order at most {max}, got {order}")]
    AboveEnvelope {
        what: &'static str,
        order: usize,
        max: usize,
    },
    #[error("{what} only supports order {supported}, got {order}")]
    UnsupportedOrder {
        what: &'static str,
        order: usize,
        supported: usize,
    },
    #[error("precondition violated: {0}")]
    Precondition(Violation),
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
}

/// Why a graph falls outside the class an operation is defined on.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("graph contains the triangle {0:?}")]
    Triangle([usize; 3]),
    #[error("vertex {vertex} has degree {degree} > {max}")]
    DegreeTooLarge {
        vertex: usize,
        degree: usize,
        max: usize,
    },
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is not factor-critical")]
    NotFactorCritical,
    #[error("induced 3K1 on vertices {0:?}")]
    Induced3K1([usize; 3]),
    #[error("induced K1+K5: vertex {isolated} with clique {clique:?}")]
    InducedK1K5 { isolated: usize, clique: [usize; 5] },
}
