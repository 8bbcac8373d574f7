//! Isomorph-free generation by canonical augmentation.
//!
//! Graphs grow one vertex at a time. A child is kept only if the new vertex
//! is, up to automorphism, its canonical deletion vertex; children of the
//! same parent are deduplicated by canonical key. Every graph in the class
//! therefore appears exactly once, with no global memory of earlier output.
//!
//! The canonical deletion vertex is chosen among the eligible vertices
//! (non-cut vertices when generating connected graphs, so parents stay
//! connected) in the last cell of the equitable refinement of the unit
//! partition; ties inside that cell are broken by the canonical key of the
//! graph with the vertex individualized.
//!
//! Triangle-freeness, the degree cap and the degree floor implied by a
//! minimum or regular degree are hereditary enough to prune during
//! growth: an induced subgraph on `k` vertices of a graph of order at most
//! `N` with minimum degree `d` has minimum degree at least `d - (N - k)`.

use std::collections::BTreeMap;
use std::io::BufRead;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{individualize, refine, Labeling};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::graph6::{from_graph6, Graph6Error};

/// Largest order the generator accepts.
pub const ENUMERATION_MAX_ORDER: usize = 16;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassConstraints {
    /// Smallest order emitted.
    pub min_order: usize,
    pub max_order: usize,
    pub triangle_free: bool,
    pub max_degree: Option<usize>,
    pub connected: bool,
    pub regular_degree: Option<usize>,
    pub min_degree: Option<usize>,
}

impl ClassConstraints {
    /// All graphs of order `1..=max_order`.
    pub fn up_to(max_order: usize) -> Self {
        ClassConstraints {
            min_order: 1,
            max_order,
            triangle_free: false,
            max_degree: None,
            connected: false,
            regular_degree: None,
            min_degree: None,
        }
    }

    /// Connected triangle-free graphs with maximum degree at most 4.
    pub fn triangle_free_deg4(max_order: usize) -> Self {
        ClassConstraints {
            triangle_free: true,
            max_degree: Some(4),
            connected: true,
            ..ClassConstraints::up_to(max_order)
        }
    }

    pub fn exact_order(mut self, n: usize) -> Self {
        self.min_order = n;
        self.max_order = n;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.max_order == 0 || self.max_order > ENUMERATION_MAX_ORDER {
            return Err(Error::AboveEnvelope {
                what: "enumerate",
                order: self.max_order,
                max: ENUMERATION_MAX_ORDER,
            });
        }
        Ok(())
    }

    fn degree_cap(&self) -> usize {
        let cap = self.max_degree.unwrap_or(usize::MAX);
        self.regular_degree.map_or(cap, |r| cap.min(r))
    }

    fn degree_floor(&self) -> usize {
        self.min_degree.unwrap_or(0).max(self.regular_degree.unwrap_or(0))
    }

    /// Minimum degree every vertex of a tree node of order `k` must have.
    fn floor_at(&self, k: usize) -> usize {
        self.degree_floor().saturating_sub(self.max_order - k)
    }

    /// Whether `g` belongs to the class. Used on emitted graphs and for
    /// post hoc checks.
    pub fn admits(&self, g: &Graph) -> bool {
        let n = g.order();
        let stats = g.degree_stats();
        (self.min_order..=self.max_order).contains(&n)
            && (!self.triangle_free || g.is_triangle_free())
            && self.max_degree.map_or(true, |d| stats.max <= d)
            && self.min_degree.map_or(true, |d| stats.min >= d)
            && self
                .regular_degree
                .map_or(true, |r| stats.min == r && stats.max == r)
            && (!self.connected || g.is_connected())
    }
}

/// Generates the class described by `constraints`, one graph per
/// isomorphism class, in a deterministic pre-order. Each graph is returned
/// in its canonical labeling.
pub fn enumerate(constraints: &ClassConstraints) -> Result<Enumeration> {
    constraints.validate()?;
    let generator = Generator::new(constraints.clone());
    let stack = if generator.node_ok(&root()) {
        vec![root()]
    } else {
        Vec::new()
    };
    Ok(Enumeration { generator, stack })
}

/// Same graphs in the same order as [`enumerate`], computed on `workers`
/// threads (0 means the available parallelism).
pub fn enumerate_parallel(constraints: &ClassConstraints, workers: usize) -> Result<Vec<Graph>> {
    constraints.validate()?;
    let generator = Generator::new(constraints.clone());
    if !generator.node_ok(&root()) {
        return Ok(Vec::new());
    }
    let split_order = constraints.max_order.min(7);

    enum Item {
        Emit(Graph),
        Unit(Graph),
    }
    let mut items = Vec::new();
    let mut stack = vec![root()];
    while let Some(g) = stack.pop() {
        if g.order() == split_order {
            items.push(Item::Unit(g));
            continue;
        }
        let mut children = generator.children(&g);
        children.reverse();
        stack.extend(children);
        if generator.emits(&g) {
            items.push(Item::Emit(g));
        }
    }

    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .expect("thread pool");
    let chunks: Vec<Vec<Graph>> = pool.install(|| {
        items
            .into_par_iter()
            .map(|item| match item {
                Item::Emit(g) => vec![g],
                Item::Unit(g) => Enumeration {
                    generator: generator.clone(),
                    stack: vec![g],
                }
                .collect(),
            })
            .collect()
    });
    Ok(chunks.into_iter().flatten().collect())
}

fn root() -> Graph {
    Graph::empty(1).expect("K1")
}

/// Lazy depth-first stream of generated graphs.
pub struct Enumeration {
    generator: Generator,
    stack: Vec<Graph>,
}

impl Iterator for Enumeration {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        while let Some(g) = self.stack.pop() {
            let mut children = self.generator.children(&g);
            children.reverse();
            self.stack.extend(children);
            if self.generator.emits(&g) {
                return Some(g);
            }
        }
        None
    }
}

#[derive(Clone)]
struct Generator {
    c: ClassConstraints,
    cap: usize,
}

impl Generator {
    fn new(c: ClassConstraints) -> Self {
        let cap = c.degree_cap();
        Generator { c, cap }
    }

    fn emits(&self, g: &Graph) -> bool {
        g.order() >= self.c.min_order && self.c.admits(g)
    }

    /// Whether a tree node may have descendants (or itself) in the class.
    fn node_ok(&self, g: &Graph) -> bool {
        g.order() <= self.c.max_order && g.min_degree() >= self.c.floor_at(g.order())
    }

    /// Accepted children of `parent`, canonically labeled, sorted by key.
    fn children(&self, parent: &Graph) -> Vec<Graph> {
        let k = parent.order();
        if k >= self.c.max_order {
            return Vec::new();
        }
        let floor = self.c.floor_at(k + 1);
        let adj = parent.rows();
        let mut available = 0u64;
        let mut forced = 0u64;
        for v in 0..k {
            let d = adj[v].count_ones() as usize;
            if d < self.cap {
                available |= 1 << v;
            }
            if d + 1 < floor {
                return Vec::new();
            }
            if d < floor {
                forced |= 1 << v;
            }
        }
        if forced & !available != 0 {
            return Vec::new();
        }
        let mut accepted = BTreeMap::new();
        let mut visit = |s: u64| {
            let size = s.count_ones() as usize;
            if size < floor || (self.c.connected && s == 0) {
                return;
            }
            let mut rows = adj.to_vec();
            for u in VertexSet::from_bits(s) {
                rows[u] |= 1 << k;
            }
            rows.push(s);
            if let Some((key, g)) = self.accept(rows) {
                accepted.entry(key).or_insert(g);
            }
        };
        let max_size = self.cap.min(k);
        subsets(
            adj,
            available & !forced,
            forced,
            max_size,
            self.c.triangle_free,
            &mut visit,
        );
        accepted.into_values().collect()
    }

    /// Canonical-deletion test for the last vertex of `rows`.
    fn accept(&self, rows: Vec<u64>) -> Option<(u128, Graph)> {
        let n = rows.len();
        let new = n - 1;
        let g = Graph::from_rows(rows);
        let eligible = if self.c.connected {
            g.vertices().difference(g.cut_vertices())
        } else {
            g.vertices()
        };
        let new_degree = g.degree(new);
        if eligible.iter().any(|v| g.degree(v) > new_degree) {
            return None;
        }
        let adj = g.rows();
        let mut cells = vec![g.vertices().bits()];
        let splitters = cells.clone();
        refine(adj, &mut cells, splitters);
        let last = cells
            .iter()
            .rev()
            .map(|&c| c & eligible.bits())
            .find(|&c| c != 0)
            .expect("some vertex is eligible");
        if last >> new & 1 == 0 {
            return None;
        }
        if last != 1 << new {
            let key_of = |v: usize| Labeling::compute(adj, &individualize(adj, &cells, v)).key;
            let own = key_of(new);
            let rivals = VertexSet::from_bits(last & !(1 << new));
            if rivals.iter().any(|v| key_of(v) < own) {
                return None;
            }
        }
        let labeling = Labeling::compute(adj, &[g.vertices().bits()]);
        Some((labeling.key, g.permuted(&labeling.position)))
    }
}

/// Calls `visit` with every set `forced | T`, `T` a subset of `free`, of
/// size at most `max_size`, that is independent when `independent` is set.
fn subsets(
    adj: &[u64],
    free: u64,
    forced: u64,
    max_size: usize,
    independent: bool,
    visit: &mut impl FnMut(u64),
) {
    if forced.count_ones() as usize > max_size {
        return;
    }
    if independent && VertexSet::from_bits(forced).iter().any(|v| adj[v] & forced != 0) {
        return;
    }
    let blocked = if independent {
        VertexSet::from_bits(forced).iter().fold(0, |acc, v| acc | adj[v])
    } else {
        0
    };
    fn rec(
        adj: &[u64],
        free: u64,
        chosen: u64,
        room: usize,
        independent: bool,
        visit: &mut impl FnMut(u64),
    ) {
        visit(chosen);
        if room == 0 {
            return;
        }
        let mut rest = free;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let next_free = if independent { rest & !adj[v] } else { rest };
            rec(adj, next_free, chosen | 1 << v, room - 1, independent, visit);
        }
    }
    rec(
        adj,
        free & !blocked,
        forced,
        max_size - forced.count_ones() as usize,
        independent,
        visit,
    );
}

/// One decoded line of a graph6 stream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IngestItem {
    /// One-based line number.
    pub line: usize,
    pub text: String,
    pub graph: Result<Graph, Graph6Error>,
}

/// Decodes newline-delimited graph6. Blank lines are skipped; a line that
/// fails to decode yields an error item and the stream continues.
pub fn ingest_graph6<R: BufRead>(reader: R) -> impl Iterator<Item = std::io::Result<IngestItem>> {
    reader
        .lines()
        .enumerate()
        .filter_map(|(i, line)| match line {
            Err(e) => Some(Err(e)),
            Ok(text) => {
                let text = text.trim_end_matches('\r').to_string();
                if text.trim().is_empty() {
                    return None;
                }
                let graph = from_graph6(text.as_bytes());
                Some(Ok(IngestItem {
                    line: i + 1,
                    text,
                    graph,
                }))
            }
        })
}
