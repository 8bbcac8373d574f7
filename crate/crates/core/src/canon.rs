//! Canonical labeling by equitable partition refinement and backtracking.
//!
//! The search tree individualizes one vertex of the first smallest
//! non-singleton cell at every node and refines to an equitable partition.
//! Each leaf is a vertex ordering; the canonical form is the leaf whose
//! relabeled upper triangle, read in graph6 bit order, is smallest. Subtrees
//! are pruned with automorphisms found along the way: leaves equivalent to
//! the first leaf jump back to the common ancestor, and children in the same
//! orbit of the pointwise stabilizer of the current path are skipped.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::graph6::{from_graph6, to_graph6};

/// Largest order accepted by [`canonical_form`].
pub const CANON_MAX_ORDER: usize = 16;

/// graph6 encoding of the canonical relabeling of a graph. Two graphs have
/// equal labels iff they are isomorphic.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct CanonicalLabel(String);

impl CanonicalLabel {
    pub fn as_str(&self) -> &str {
        &self.0
    }

    pub fn to_graph(&self) -> Graph {
        from_graph6(self.0.as_bytes()).expect("canonical labels are valid graph6")
    }
}

impl fmt::Display for CanonicalLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for CanonicalLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalLabel({})", self.0)
    }
}

pub fn canonical_form(g: &Graph) -> Result<CanonicalLabel> {
    check_order(g)?;
    Ok(CanonicalLabel(to_graph6(&canonical_graph(g))))
}

/// The canonical relabeling of `g` itself.
pub fn canonical_graph(g: &Graph) -> Graph {
    let labeling = Labeling::compute(g.rows(), &[g.vertices().bits()]);
    g.permuted(&labeling.position)
}

fn check_order(g: &Graph) -> Result<()> {
    if g.order() > CANON_MAX_ORDER {
        return Err(Error::AboveEnvelope {
            what: "canonical_form",
            order: g.order(),
            max: CANON_MAX_ORDER,
        });
    }
    Ok(())
}

/// A canonical vertex ordering of a (colored) graph.
#[derive(Clone, Debug)]
pub(crate) struct Labeling {
    /// `position[v]` is the canonical index of vertex `v`.
    pub position: Vec<usize>,
    /// Upper triangle of the relabeled graph in graph6 bit order.
    pub key: u128,
}

impl Labeling {
    /// Canonical labeling of the graph `adj` (at most 16 vertices) with the
    /// ordered coloring `cells`. Colorings with the same cell sizes get
    /// comparable keys; equal keys mean an isomorphism that maps cells to
    /// corresponding cells.
    pub fn compute(adj: &[u64], cells: &[u64]) -> Labeling {
        debug_assert!(adj.len() <= CANON_MAX_ORDER);
        let mut cells = cells.to_vec();
        let splitters = cells.clone();
        refine(adj, &mut cells, splitters);
        let mut search = Search {
            adj,
            first: None,
            first_path: Vec::new(),
            best: None,
            generators: Vec::new(),
        };
        let mut path = Vec::new();
        search.descend(cells, &mut path);
        let (lab, key) = search.best.expect("search reaches at least one leaf");
        let mut position = vec![0; adj.len()];
        for (i, &v) in lab.iter().enumerate() {
            position[v] = i;
        }
        Labeling { position, key }
    }
}

/// Equitable refinement of `cells` (in place), starting from `splitters`.
///
/// A cell is split by the number of neighbors its vertices have in the
/// splitter; the parts keep the cell's position, ordered by that count.
pub(crate) fn refine(adj: &[u64], cells: &mut Vec<u64>, splitters: Vec<u64>) {
    let mut queue = std::collections::VecDeque::from(splitters);
    let mut counts = [0u32; 64];
    while let Some(w) = queue.pop_front() {
        let mut i = 0;
        while i < cells.len() {
            let cell = cells[i];
            if cell & (cell - 1) == 0 {
                i += 1;
                continue;
            }
            let mut lo = u32::MAX;
            let mut hi = 0;
            for v in VertexSet::from_bits(cell) {
                let c = (adj[v] & w).count_ones();
                counts[v] = c;
                lo = lo.min(c);
                hi = hi.max(c);
            }
            if lo == hi {
                i += 1;
                continue;
            }
            let mut parts = Vec::new();
            for c in lo..=hi {
                let part = VertexSet::from_bits(cell)
                    .iter()
                    .filter(|&v| counts[v] == c)
                    .fold(0u64, |acc, v| acc | 1 << v);
                if part != 0 {
                    parts.push(part);
                }
            }
            let k = parts.len();
            queue.extend(parts.iter().copied());
            cells.splice(i..=i, parts);
            i += k;
        }
    }
}

/// Splits `v` out in front of its cell and refines.
pub(crate) fn individualize(adj: &[u64], cells: &[u64], v: usize) -> Vec<u64> {
    let mut out = Vec::with_capacity(cells.len() + 1);
    for &c in cells {
        if c >> v & 1 == 1 && c != 1 << v {
            out.push(1 << v);
            out.push(c & !(1 << v));
        } else {
            out.push(c);
        }
    }
    refine(adj, &mut out, vec![1 << v]);
    out
}

/// Upper triangle of `adj` relabeled by `lab` (`lab[i]` = vertex at index i).
fn leaf_key(adj: &[u64], lab: &[usize]) -> u128 {
    let mut key = 0u128;
    for j in 1..lab.len() {
        let row = adj[lab[j]];
        for &u in &lab[..j] {
            key = key << 1 | (row >> u & 1) as u128;
        }
    }
    key
}

struct Search<'a> {
    adj: &'a [u64],
    first: Option<(Vec<usize>, u128)>,
    first_path: Vec<usize>,
    best: Option<(Vec<usize>, u128)>,
    generators: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Explores the subtree below the node reached by `path`. Returns
    /// `Some(level)` when the search should resume at the ancestor with
    /// `level` individualized vertices.
    fn descend(&mut self, cells: Vec<u64>, path: &mut Vec<usize>) -> Option<usize> {
        let level = path.len();
        let target = cells
            .iter()
            .copied()
            .filter(|c| c & (c - 1) != 0)
            .min_by_key(|c| c.count_ones());
        let Some(target) = target else {
            return self.leaf(&cells, path);
        };
        let mut explored = 0u64;
        for v in VertexSet::from_bits(target) {
            if explored != 0 && self.in_explored_orbit(v, explored, path) {
                continue;
            }
            let child = individualize(self.adj, &cells, v);
            path.push(v);
            let jump = self.descend(child, path);
            path.pop();
            explored |= 1 << v;
            if let Some(to) = jump {
                if to < level {
                    return Some(to);
                }
            }
        }
        None
    }

    fn leaf(&mut self, cells: &[u64], path: &[usize]) -> Option<usize> {
        let lab: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let key = leaf_key(self.adj, &lab);
        let Some((first_lab, first_key)) = &self.first else {
            self.first = Some((lab.clone(), key));
            self.best = Some((lab, key));
            self.first_path = path.to_vec();
            return None;
        };
        if key == *first_key {
            let aut = mapping(first_lab, &lab);
            self.generators.push(aut);
            let common = self
                .first_path
                .iter()
                .zip(path)
                .take_while(|(a, b)| a == b)
                .count();
            return Some(common);
        }
        let (best_lab, best_key) = self.best.as_ref().expect("set with first");
        if key == *best_key {
            let aut = mapping(best_lab, &lab);
            self.generators.push(aut);
        } else if key < *best_key {
            self.best = Some((lab, key));
        }
        None
    }

    /// Whether `v` lies in the orbit of a vertex of `explored` under the
    /// group generated by the known automorphisms that fix `path` pointwise.
    fn in_explored_orbit(&self, v: usize, explored: u64, path: &[usize]) -> bool {
        let n = self.adj.len();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for g in &self.generators {
            if path.iter().all(|&u| g[u] == u) {
                any = true;
                for x in 0..n {
                    let (a, b) = (find(&mut parent, x), find(&mut parent, g[x]));
                    if a != b {
                        parent[a] = b;
                    }
                }
            }
        }
        if !any {
            return false;
        }
        let root = find(&mut parent, v);
        VertexSet::from_bits(explored)
            .iter()
            .any(|u| find(&mut parent, u) == root)
    }
}

/// The permutation sending `from[i]` to `to[i]`.
fn mapping(from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut g = vec![0; from.len()];
    for (&a, &b) in from.iter().zip(to) {
        g[a] = b;
    }
    g
}
