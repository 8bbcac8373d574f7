//! The order-13 extremal sweep.
//!
//! Extremal components for the first bound have order 13, `alpha = 4` and
//! `beta = 6`. A triangle-free graph on 13 vertices with a vertex of degree
//! at most 3 has `alpha >= 5`, so such components are 4-regular and the sweep
//! only enumerates connected 4-regular triangle-free graphs. The degree
//! implication itself is spot-checked on random graphs.

use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use serde::Serialize;

use crate::canon::{canonical_form, CanonicalLabel};
use crate::enumerate::{enumerate_parallel, ClassConstraints};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::solvers::{independence_number, matching_number};
use crate::verify::{Theorem, DEGREE_CAP};

pub const EXTREMAL_ORDER: usize = 13;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremalEntry {
    pub label: CanonicalLabel,
    pub alpha: usize,
    pub beta: usize,
    pub first_scaled: (i64, i64),
    pub second_scaled: (i64, i64),
    pub first_equality: bool,
    pub second_equality: bool,
    pub is_g13: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremalReport {
    pub order: usize,
    /// Connected 4-regular triangle-free graphs examined.
    pub examined: usize,
    /// Those with `alpha = 4`.
    pub extremal: Vec<ExtremalEntry>,
    pub g13_label: CanonicalLabel,
    pub g13_found: bool,
    /// Every graph with `alpha = 4` has `beta = 6` and equality in both bounds.
    pub all_tight: bool,
}

/// Enumerates the connected 4-regular triangle-free graphs of order `order`
/// (only 13 is supported) and reports those with independence number 4.
pub fn extremal_sweep(order: usize, workers: usize) -> Result<ExtremalReport> {
    if order != EXTREMAL_ORDER {
        return Err(Error::UnsupportedOrder {
            what: "extremal sweep",
            order,
            supported: EXTREMAL_ORDER,
        });
    }
    let mut constraints = ClassConstraints::triangle_free_deg4(order).exact_order(order);
    constraints.regular_degree = Some(DEGREE_CAP);
    let graphs = enumerate_parallel(&constraints, workers)?;
    let g13_label = canonical_form(&Graph::g13())?;
    let mut extremal = Vec::new();
    for g in &graphs {
        let alpha = independence_number(g).value;
        if alpha != 4 {
            continue;
        }
        let beta = matching_number(g);
        let first = Theorem::One.spec().evaluate(alpha, beta, order);
        let second = Theorem::Two.spec().evaluate(alpha, beta, order);
        let label = canonical_form(g)?;
        extremal.push(ExtremalEntry {
            is_g13: label == g13_label,
            label,
            alpha,
            beta,
            first_scaled: first,
            second_scaled: second,
            first_equality: first.0 == first.1,
            second_equality: second.0 == second.1,
        });
    }
    let all_tight = extremal
        .iter()
        .all(|e| e.beta == 6 && e.first_equality && e.second_equality);
    Ok(ExtremalReport {
        order,
        examined: graphs.len(),
        g13_found: extremal.iter().any(|e| e.is_g13),
        extremal,
        g13_label,
        all_tight,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LowDegreeReport {
    pub samples: usize,
    pub min_alpha: Option<usize>,
    /// Sampled graphs with `alpha < 5`.
    pub counterexamples: Vec<String>,
}

/// A random triangle-free graph on 13 vertices with maximum degree at most 4
/// and at least one vertex of degree at most 3.
pub fn random_low_degree_graph(rng: &mut impl Rng) -> Graph {
    let n = EXTREMAL_ORDER;
    let mut pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    loop {
        pairs.shuffle(rng);
        let mut g = Graph::empty(n).expect("n = 13");
        for &(u, v) in &pairs {
            if g.degree(u) < DEGREE_CAP
                && g.degree(v) < DEGREE_CAP
                && (g.neighbors(u).bits() & g.neighbors(v).bits()) == 0
            {
                g = g.with_edge(u, v).expect("valid edge");
            }
        }
        // half of the samples are maximal, the rest lose a few edges
        if rng.gen_bool(0.5) {
            let mut edges = g.edges();
            edges.shuffle(rng);
            for &(u, v) in edges.iter().take(rng.gen_range(1..=3)) {
                g = g.without_edge(u, v);
            }
        }
        if g.min_degree() <= 3 {
            return g;
        }
    }
}

/// Checks `alpha >= 5` on `samples` random graphs from [`random_low_degree_graph`].
pub fn low_degree_spot_check(samples: usize, seed: u64) -> LowDegreeReport {
    let mut rng = StdRng::seed_from_u64(seed);
    let mut min_alpha: Option<usize> = None;
    let mut counterexamples = Vec::new();
    for _ in 0..samples {
        let g = random_low_degree_graph(&mut rng);
        let alpha = independence_number(&g).value;
        min_alpha = Some(min_alpha.map_or(alpha, |m| m.min(alpha)));
        if alpha < 5 {
            counterexamples.push(g.to_string());
        }
    }
    LowDegreeReport {
        samples,
        min_alpha,
        counterexamples,
    }
}
