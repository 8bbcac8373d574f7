//! Simple undirected graphs on at most 64 vertices.
//!
//! Every adjacency row is a single `u64`, so neighborhoods, induced subgraphs
//! and set algebra all reduce to word operations. Vertices are numbered from
//! zero; a graph always has at least one vertex.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest supported order.
pub const MAX_ORDER: usize = 64;

/// A set of vertices of a graph, stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    /// The set `{0, 1, ..., n-1}`.
    pub const fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub const fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub const fn bits(self) -> u64 {
        self.0
    }

    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub const fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u64 << v);
    }

    pub const fn union(self, other: VertexSet) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub const fn intersection(self, other: VertexSet) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub const fn difference(self, other: VertexSet) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;

    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let vs = Vec::<usize>::deserialize(d)?;
        if let Some(&v) = vs.iter().find(|&&v| v >= MAX_ORDER) {
            return Err(serde::de::Error::custom(format!("vertex {v} out of range")));
        }
        Ok(vs.into_iter().collect())
    }
}

/// Iterator over the members of a [`VertexSet`] in increasing order.
#[derive(Clone)]
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexIter {}

/// Edges as pairs `(u, v)` with `u < v`, sorted lexicographically.
pub type EdgeList = Vec<(usize, usize)>;

/// An immutable simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Graph {
    adj: Vec<u64>,
}

/// An induced subgraph together with the original label of each of its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: Graph,
    /// `vertices[i]` is the label in the parent graph of vertex `i` of `graph`.
    pub vertices: Vec<usize>,
}

impl Subgraph {
    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().copied().collect()
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeStats {
    pub min: usize,
    pub max: usize,
    pub sequence: Vec<usize>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph> {
        check_order(n)?;
        Ok(Graph { adj: vec![0; n] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        check_order(n)?;
        let mut adj = vec![0u64; n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w >= n {
                    return Err(Error::VertexOutOfRange { vertex: w, order: n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        Ok(Graph { adj })
    }

    /// Builds a graph from adjacency rows that are already symmetric and loop-free.
    pub(crate) fn from_rows(adj: Vec<u64>) -> Graph {
        debug_assert!(!adj.is_empty() && adj.len() <= MAX_ORDER);
        debug_assert!(adj.iter().enumerate().all(|(v, &row)| {
            let full = VertexSet::full(adj.len()).bits();
            row >> v & 1 == 0
                && row & !full == 0
                && VertexSet(row).iter().all(|u| adj[u] >> v & 1 == 1)
        }));
        Graph { adj }
    }

    pub(crate) fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn complete(n: usize) -> Result<Graph> {
        check_order(n)?;
        let full = VertexSet::full(n).bits();
        Ok(Graph::from_rows((0..n).map(|v| full & !(1 << v)).collect()))
    }

    pub fn path(n: usize) -> Result<Graph> {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges)
    }

    /// The cycle `C_n`, `n >= 3`.
    pub fn cycle(n: usize) -> Result<Graph> {
        Graph::circulant(n, &[1])
    }

    /// The star `K_{1,k}` with center 0.
    pub fn star(k: usize) -> Result<Graph> {
        let edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
        Graph::from_edges(k + 1, &edges)
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Result<Graph> {
        let mut edges = Vec::with_capacity(a * b);
        for u in 0..a {
            for v in a..a + b {
                edges.push((u, v));
            }
        }
        Graph::from_edges(a + b, &edges)
    }

    pub fn petersen() -> Graph {
        let mut edges = Vec::with_capacity(15);
        for i in 0..5 {
            edges.push((i, (i + 1) % 5));
            edges.push((i, i + 5));
            edges.push((i + 5, (i + 2) % 5 + 5));
        }
        Graph::from_edges(10, &edges).expect("valid")
    }

    /// The circulant graph on `0..n` where `i ~ j` iff `(j - i) mod n` or
    /// `(i - j) mod n` is one of `offsets`.
    pub fn circulant(n: usize, offsets: &[usize]) -> Result<Graph> {
        if n < 3 {
            return Err(Error::CirculantTooSmall(n));
        }
        check_order(n)?;
        if offsets.is_empty() {
            return Err(Error::EmptyOffsets);
        }
        if let Some(&offset) = offsets.iter().find(|&&k| k == 0 || k >= n) {
            return Err(Error::OffsetOutOfRange { offset, order: n });
        }
        let mut adj = vec![0u64; n];
        for (i, row) in adj.iter_mut().enumerate() {
            for &k in offsets {
                *row |= 1 << ((i + k) % n);
                *row |= 1 << ((i + n - k) % n);
            }
        }
        Ok(Graph::from_rows(adj))
    }

    /// The graph `G13` on `v1..v13` (here `0..13`) with `v_i ~ v_j` iff
    /// `j - i` is in `{1, 5, 8, 12}`.
    pub fn g13() -> Graph {
        Graph::circulant(13, &[1, 5, 8, 12]).expect("valid")
    }

    pub fn order(&self) -> usize {
        self.adj.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v] | 1 << v)
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn is_adjacent(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn edges(&self) -> EdgeList {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.order() {
            for v in VertexSet(self.adj[u] & !((2u64 << u).wrapping_sub(1))) {
                out.push((u, v));
            }
        }
        out
    }

    pub fn degree_stats(&self) -> DegreeStats {
        let sequence: Vec<usize> = (0..self.order()).map(|v| self.degree(v)).collect();
        DegreeStats {
            min: sequence.iter().copied().min().unwrap_or(0),
            max: sequence.iter().copied().max().unwrap_or(0),
            sequence,
        }
    }

    pub fn min_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn complement(&self) -> Graph {
        let full = self.vertices().bits();
        Graph::from_rows(
            self.adj
                .iter()
                .enumerate()
                .map(|(v, &row)| full & !row & !(1 << v))
                .collect(),
        )
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn reachable(&self, start: usize, within: VertexSet) -> VertexSet {
        let within = within.bits();
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in VertexSet(frontier) {
                next |= self.adj[v];
            }
            frontier = next & within & !seen;
            seen |= frontier;
        }
        VertexSet(seen)
    }

    /// Vertex sets of the connected components of `G[within]`, ordered by
    /// smallest member.
    pub fn component_sets(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut rest = within;
        let mut out = Vec::new();
        while let Some(v) = rest.first() {
            let comp = self.reachable(v, rest);
            rest = rest.difference(comp);
            out.push(comp);
        }
        out
    }

    pub fn components(&self) -> Vec<Subgraph> {
        self.component_sets(self.vertices())
            .into_iter()
            .map(|s| self.induced(s).expect("components are nonempty"))
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.reachable(0, self.vertices()) == self.vertices()
    }

    /// Some triangle, as a sorted vertex triple.
    pub fn find_triangle(&self) -> Option<[usize; 3]> {
        for u in 0..self.order() {
            let later = self.adj[u] & !((2u64 << u).wrapping_sub(1));
            for v in VertexSet(later) {
                let common = self.adj[u] & self.adj[v] & !((2u64 << v).wrapping_sub(1));
                if common != 0 {
                    return Some([u, v, common.trailing_zeros() as usize]);
                }
            }
        }
        None
    }

    pub fn is_triangle_free(&self) -> bool {
        self.find_triangle().is_none()
    }

    /// Edges whose removal increases the number of components.
    pub fn bridges(&self) -> EdgeList {
        let n = self.order();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0usize; n];
        let mut out = Vec::new();
        let mut time = 0;
        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            // (vertex, parent, neighbors left to scan)
            let mut stack = vec![(root, usize::MAX, self.adj[root])];
            disc[root] = time;
            low[root] = time;
            time += 1;
            while let Some(&mut (v, parent, ref mut pending)) = stack.last_mut() {
                if *pending != 0 {
                    let w = pending.trailing_zeros() as usize;
                    *pending &= *pending - 1;
                    if w == parent {
                        continue;
                    }
                    if disc[w] == usize::MAX {
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        stack.push((w, v, self.adj[w]));
                    } else {
                        low[v] = low[v].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[v]);
                        if low[v] > disc[parent] {
                            out.push((parent.min(v), parent.max(v)));
                        }
                    }
                }
            }
        }
        out.sort_unstable();
        out
    }

    /// Vertices whose deletion disconnects their component.
    pub fn cut_vertices(&self) -> VertexSet {
        let mut out = VertexSet::EMPTY;
        for comp in self.component_sets(self.vertices()) {
            if comp.len() < 3 {
                continue;
            }
            for v in comp {
                let rest = comp.difference(VertexSet::singleton(v));
                let start = rest.first().expect("component has more than one vertex");
                if self.reachable(start, rest) != rest {
                    out.insert(v);
                }
            }
        }
        out
    }

    /// `G[keep]`, relabeled `0..|keep|` in increasing order of original label.
    pub fn induced(&self, keep: VertexSet) -> Result<Subgraph> {
        let keep = keep.intersection(self.vertices());
        if keep.is_empty() {
            return Err(Error::DeleteAll);
        }
        let vertices = keep.to_vec();
        let adj = vertices
            .iter()
            .map(|&v| compress(self.adj[v] & keep.bits(), &vertices))
            .collect();
        Ok(Subgraph {
            graph: Graph::from_rows(adj),
            vertices,
        })
    }

    /// `G \ remove`; errors if that would leave no vertex.
    pub fn delete_vertices(&self, remove: VertexSet) -> Result<Subgraph> {
        self.induced(self.vertices().difference(remove))
    }

    pub fn delete_vertex(&self, v: usize) -> Result<Subgraph> {
        self.delete_vertices(VertexSet::singleton(v))
    }

    pub fn without_edge(&self, u: usize, v: usize) -> Graph {
        let mut adj = self.adj.clone();
        adj[u] &= !(1 << v);
        adj[v] &= !(1 << u);
        Graph { adj }
    }

    pub fn with_edge(&self, u: usize, v: usize) -> Result<Graph> {
        let n = self.order();
        for w in [u, v] {
            if w >= n {
                return Err(Error::VertexOutOfRange { vertex: w, order: n });
            }
        }
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        let mut adj = self.adj.clone();
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
        Ok(Graph { adj })
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let shift = self.order();
        check_order(shift + other.order())?;
        let mut adj = self.adj.clone();
        adj.extend(other.adj.iter().map(|&r| r << shift));
        Ok(Graph { adj })
    }

    /// The graph with vertex `v` renamed to `perm[v]`. `perm` must be a
    /// permutation of `0..n`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.order(), "permutation length");
        let mut adj = vec![0u64; self.order()];
        for (v, &row) in self.adj.iter().enumerate() {
            let mut r = 0;
            for u in VertexSet(row) {
                r |= 1 << perm[u];
            }
            adj[perm[v]] = r;
        }
        Graph { adj }
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph({})", crate::graph6::to_graph6(self))
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::graph6::to_graph6(self))
    }
}

fn check_order(n: usize) -> Result<()> {
    if n == 0 || n > MAX_ORDER {
        Err(Error::OrderOutOfRange(n))
    } else {
        Ok(())
    }
}

/// Re-indexes the bits of `row` so that `vertices[i]` lands on bit `i`.
fn compress(row: u64, vertices: &[usize]) -> u64 {
    vertices
        .iter()
        .enumerate()
        .filter(|&(_, &v)| row >> v & 1 == 1)
        .fold(0, |acc, (i, _)| acc | 1 << i)
}
