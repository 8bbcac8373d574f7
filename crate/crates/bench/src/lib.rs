//! Benchmark fixtures shared by the criterion benches.

use tribound_core::enumerate::{enumerate, ClassConstraints};
use tribound_core::Graph;

/// Connected triangle-free graphs with maximum degree at most 4 of order `n`.
pub fn class_graphs(n: usize) -> Vec<Graph> {
    enumerate(&ClassConstraints::triangle_free_deg4(n).exact_order(n))
        .expect("valid constraints")
        .collect()
}

/// A few structured graphs of increasing size.
pub fn named_graphs() -> Vec<(&'static str, Graph)> {
    vec![
        ("c5", Graph::cycle(5).unwrap()),
        ("petersen", Graph::petersen()),
        ("g13", Graph::g13()),
        ("g13_complement", Graph::g13().complement()),
        ("circulant_16", Graph::circulant(16, &[1, 4]).unwrap()),
        ("circulant_40", Graph::circulant(40, &[1, 7]).unwrap()),
    ]
}
