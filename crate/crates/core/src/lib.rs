//! Exact invariants of small graphs and instance checks of the linear
//! independence/matching bounds for triangle-free graphs of maximum degree 4.
//!
//! * [`graph`] and [`graph6`]: the bitset graph type and its text encoding.
//! * [`solvers`]: exact matching, independence, clique and chromatic numbers.
//! * [`decomposition`]: Gallai-Edmonds decompositions and their bookkeeping.
//! * [`canon`] and [`enumerate`]: canonical labels and isomorph-free generation.
//! * [`verify`]: bound reports, equality classification, proof ledgers.
//! * [`extremal`]: the order-13 sweep and the low-degree spot check.

pub mod canon;
pub mod decomposition;
pub mod enumerate;
pub mod error;
pub mod extremal;
pub mod graph;
pub mod graph6;
pub mod solvers;
pub mod verify;

pub use error::{Error, Result, Violation};
pub use graph::{DegreeStats, EdgeList, Graph, Subgraph, VertexSet, MAX_ORDER};
pub use graph6::{from_graph6, to_graph6, Graph6Error};
pub use solvers::{Certificate, SolveWitness};
pub use canon::{canonical_form, CanonicalLabel};
pub use decomposition::{gallai_edmonds, verify_ge, GallaiEdmonds, GeVerdict, LedgerCounts};
pub use enumerate::{enumerate, enumerate_parallel, ingest_graph6, ClassConstraints};
pub use extremal::{extremal_sweep, low_degree_spot_check, ExtremalReport, LowDegreeReport};
pub use verify::{
    check_bound, classify_equality, proof_ledger, BoundReport, BoundSpec, LedgerReport, Ratio,
    Theorem,
};
