//! Exact solvers for the matching, independence, clique and chromatic numbers.
//!
//! Every solver returns a [`SolveWitness`]: the value together with a
//! certificate that [`SolveWitness::validate`] can check against the graph
//! without trusting the solver.

use serde::Serialize;
use thiserror::Error;

use crate::error::{Error, Result};
use crate::graph::{EdgeList, Graph, VertexSet};

/// Largest order accepted by [`chromatic_number`].
pub const CHROMATIC_MAX_ORDER: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "certificate", rename_all = "kebab-case")]
pub enum Certificate {
    Matching(EdgeList),
    IndependentSet(VertexSet),
    Clique(VertexSet),
    /// `colors[v]` is the color of vertex `v`, in `0..value`.
    Coloring(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolveWitness {
    pub value: usize,
    #[serde(flatten)]
    pub certificate: Certificate,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WitnessError {
    #[error("certificate has {found} elements but value is {value}")]
    Count { value: usize, found: usize },
    #[error("({0}, {1}) is not an edge")]
    NotAnEdge(usize, usize),
    #[error("vertex {0} is covered twice")]
    SharedVertex(usize),
    #[error("vertices {0} and {1} are adjacent")]
    Adjacent(usize, usize),
    #[error("vertices {0} and {1} are not adjacent")]
    NotAdjacent(usize, usize),
    #[error("vertex {0} is not in the graph")]
    OutOfRange(usize),
    #[error("coloring has length {found}, graph has order {order}")]
    ColoringLength { order: usize, found: usize },
}

impl SolveWitness {
    pub fn validate(&self, g: &Graph) -> Result<(), WitnessError> {
        let n = g.order();
        match &self.certificate {
            Certificate::Matching(edges) => {
                if edges.len() != self.value {
                    return Err(WitnessError::Count {
                        value: self.value,
                        found: edges.len(),
                    });
                }
                let mut covered = VertexSet::EMPTY;
                for &(u, v) in edges {
                    if u >= n || v >= n || !g.is_adjacent(u, v) {
                        return Err(WitnessError::NotAnEdge(u, v));
                    }
                    for w in [u, v] {
                        if covered.contains(w) {
                            return Err(WitnessError::SharedVertex(w));
                        }
                        covered.insert(w);
                    }
                }
            }
            Certificate::IndependentSet(set) | Certificate::Clique(set) => {
                if set.len() != self.value {
                    return Err(WitnessError::Count {
                        value: self.value,
                        found: set.len(),
                    });
                }
                if let Some(v) = set.difference(g.vertices()).first() {
                    return Err(WitnessError::OutOfRange(v));
                }
                let clique = matches!(self.certificate, Certificate::Clique(_));
                for u in *set {
                    for v in set.iter().filter(|&v| v > u) {
                        match (clique, g.is_adjacent(u, v)) {
                            (true, false) => return Err(WitnessError::NotAdjacent(u, v)),
                            (false, true) => return Err(WitnessError::Adjacent(u, v)),
                            _ => {}
                        }
                    }
                }
            }
            Certificate::Coloring(colors) => {
                if colors.len() != n {
                    return Err(WitnessError::ColoringLength {
                        order: n,
                        found: colors.len(),
                    });
                }
                let used: std::collections::BTreeSet<_> = colors.iter().copied().collect();
                let in_range = colors.iter().all(|&c| c < self.value);
                if used.len() != self.value || !in_range {
                    return Err(WitnessError::Count {
                        value: self.value,
                        found: used.len(),
                    });
                }
                for (u, v) in g.edges() {
                    if colors[u] == colors[v] {
                        return Err(WitnessError::Adjacent(u, v));
                    }
                }
            }
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Maximum matching
// ---------------------------------------------------------------------------

const NONE: usize = usize::MAX;

/// Edmonds' blossom algorithm, one augmenting-path search per exposed vertex.
struct Blossom<'a> {
    adj: &'a [u64],
    mate: Vec<usize>,
    parent: Vec<usize>,
    base: Vec<usize>,
    in_queue: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: Vec<usize>,
}

impl<'a> Blossom<'a> {
    fn new(adj: &'a [u64]) -> Self {
        let n = adj.len();
        Blossom {
            adj,
            mate: vec![NONE; n],
            parent: vec![NONE; n],
            base: (0..n).collect(),
            in_queue: vec![false; n],
            in_blossom: vec![false; n],
            queue: Vec::with_capacity(n),
        }
    }

    fn greedy_start(&mut self) {
        for v in 0..self.adj.len() {
            if self.mate[v] != NONE {
                continue;
            }
            if let Some(u) = VertexSet::from_bits(self.adj[v])
                .iter()
                .find(|&u| self.mate[u] == NONE)
            {
                self.mate[v] = u;
                self.mate[u] = v;
            }
        }
    }

    fn lowest_common_ancestor(&self, mut a: usize, mut b: usize) -> usize {
        let mut seen = vec![false; self.adj.len()];
        loop {
            a = self.base[a];
            seen[a] = true;
            if self.mate[a] == NONE {
                break;
            }
            a = self.parent[self.mate[a]];
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b]];
        }
    }

    fn mark_path(&mut self, mut v: usize, b: usize, mut child: usize) {
        while self.base[v] != b {
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[self.mate[v]]] = true;
            self.parent[v] = child;
            child = self.mate[v];
            v = self.parent[self.mate[v]];
        }
    }

    /// Searches for an augmenting path from `root`; returns its other end.
    fn find_path(&mut self, root: usize) -> Option<usize> {
        let n = self.adj.len();
        self.parent.fill(NONE);
        self.in_queue.fill(false);
        for (i, b) in self.base.iter_mut().enumerate() {
            *b = i;
        }
        self.queue.clear();
        self.in_queue[root] = true;
        self.queue.push(root);
        let mut head = 0;
        while head < self.queue.len() {
            let v = self.queue[head];
            head += 1;
            for to in VertexSet::from_bits(self.adj[v]) {
                if self.base[v] == self.base[to] || self.mate[v] == to {
                    continue;
                }
                if to == root || (self.mate[to] != NONE && self.parent[self.mate[to]] != NONE) {
                    let cur = self.lowest_common_ancestor(v, to);
                    self.in_blossom.fill(false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..n {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.in_queue[i] {
                                self.in_queue[i] = true;
                                self.queue.push(i);
                            }
                        }
                    }
                } else if self.parent[to] == NONE {
                    self.parent[to] = v;
                    if self.mate[to] == NONE {
                        return Some(to);
                    }
                    let next = self.mate[to];
                    self.in_queue[next] = true;
                    self.queue.push(next);
                }
            }
        }
        None
    }

    fn augment(&mut self, mut v: usize) {
        while v != NONE {
            let pv = self.parent[v];
            let next = self.mate[pv];
            self.mate[v] = pv;
            self.mate[pv] = v;
            v = next;
        }
    }

    fn run(mut self) -> Vec<usize> {
        self.greedy_start();
        for v in 0..self.adj.len() {
            if self.mate[v] == NONE {
                if let Some(end) = self.find_path(v) {
                    self.augment(end);
                }
            }
        }
        self.mate
    }
}

/// Maximum matching of `g` as `mate[v]`, `None` for exposed vertices.
pub fn maximum_matching_mates(g: &Graph) -> Vec<Option<usize>> {
    Blossom::new(g.rows())
        .run()
        .into_iter()
        .map(|m| (m != NONE).then_some(m))
        .collect()
}

/// The matching number with a maximum matching as certificate.
pub fn max_matching(g: &Graph) -> SolveWitness {
    let mates = maximum_matching_mates(g);
    let edges: EdgeList = mates
        .iter()
        .enumerate()
        .filter_map(|(v, m)| m.filter(|&u| v < u).map(|u| (v, u)))
        .collect();
    SolveWitness {
        value: edges.len(),
        certificate: Certificate::Matching(edges),
    }
}

pub fn matching_number(g: &Graph) -> usize {
    maximum_matching_mates(g).iter().filter(|m| m.is_some()).count() / 2
}

pub fn has_perfect_matching(g: &Graph) -> bool {
    g.order() % 2 == 0 && 2 * matching_number(g) == g.order()
}

/// Connected, odd order, and `G - v` has a perfect matching for every `v`.
pub fn is_factor_critical(g: &Graph) -> bool {
    let n = g.order();
    if n % 2 == 0 || !g.is_connected() {
        return false;
    }
    if n == 1 {
        return true;
    }
    (0..n).all(|v| {
        let rest = g.delete_vertex(v).expect("n > 1");
        has_perfect_matching(&rest.graph)
    })
}

// ---------------------------------------------------------------------------
// Independence and clique number
// ---------------------------------------------------------------------------

struct MaxIndependentSet<'a> {
    adj: &'a [u64],
    best: u64,
}

impl MaxIndependentSet<'_> {
    fn search(&mut self, mut cand: u64, mut chosen: u64) {
        // vertices of degree at most one in the candidate graph belong to some
        // maximum independent set of it
        loop {
            let mut forced = None;
            let mut c = cand;
            while c != 0 {
                let v = c.trailing_zeros() as usize;
                c &= c - 1;
                if (self.adj[v] & cand).count_ones() <= 1 {
                    forced = Some(v);
                    break;
                }
            }
            match forced {
                Some(v) => {
                    chosen |= 1 << v;
                    cand &= !(self.adj[v] | 1 << v);
                }
                None => break,
            }
        }
        if chosen.count_ones() + cand.count_ones() <= self.best.count_ones() {
            return;
        }
        if cand == 0 {
            self.best = chosen;
            return;
        }
        if chosen.count_ones() + self.upper_bound(cand) <= self.best.count_ones() {
            return;
        }
        let mut pivot = 0;
        let mut pivot_degree = 0;
        let mut c = cand;
        while c != 0 {
            let v = c.trailing_zeros() as usize;
            c &= c - 1;
            let d = (self.adj[v] & cand).count_ones();
            if d > pivot_degree {
                pivot = v;
                pivot_degree = d;
            }
        }
        self.search(cand & !(self.adj[pivot] | 1 << pivot), chosen | 1 << pivot);
        self.search(cand & !(1 << pivot), chosen);
    }

    /// Number of cliques in a greedy clique cover of `cand`.
    fn upper_bound(&self, mut cand: u64) -> u32 {
        let mut cliques = 0;
        while cand != 0 {
            let v = cand.trailing_zeros() as usize;
            let mut clique_cand = cand & self.adj[v];
            cand &= !(1 << v);
            while clique_cand != 0 {
                let u = clique_cand.trailing_zeros() as usize;
                cand &= !(1 << u);
                clique_cand &= self.adj[u];
            }
            cliques += 1;
        }
        cliques
    }
}

fn max_independent_set_connected(g: &Graph) -> u64 {
    let mut solver = MaxIndependentSet {
        adj: g.rows(),
        best: 0,
    };
    solver.search(g.vertices().bits(), 0);
    solver.best
}

/// The independence number with a maximum independent set as certificate.
pub fn independence_number(g: &Graph) -> SolveWitness {
    let mut set = VertexSet::EMPTY;
    for comp in g.components() {
        let local = max_independent_set_connected(&comp.graph);
        for i in VertexSet::from_bits(local) {
            set.insert(comp.vertices[i]);
        }
    }
    SolveWitness {
        value: set.len(),
        certificate: Certificate::IndependentSet(set),
    }
}

/// The clique number, computed as the independence number of the complement.
pub fn clique_number(g: &Graph) -> SolveWitness {
    let w = independence_number(&g.complement());
    let Certificate::IndependentSet(set) = w.certificate else {
        unreachable!()
    };
    SolveWitness {
        value: w.value,
        certificate: Certificate::Clique(set),
    }
}

fn clique_set(g: &Graph) -> VertexSet {
    match clique_number(g).certificate {
        Certificate::Clique(s) => s,
        _ => unreachable!(),
    }
}

// ---------------------------------------------------------------------------
// Chromatic number
// ---------------------------------------------------------------------------

/// Backtracking k-colorability test with saturation ordering.
struct Colorer<'a> {
    adj: &'a [u64],
    k: usize,
    colors: Vec<usize>,
}

impl Colorer<'_> {
    fn search(&mut self, uncolored: u64, forbidden: &[u32], used: usize) -> bool {
        if uncolored == 0 {
            return true;
        }
        let mut pick = NONE;
        let mut key = (0, 0);
        let mut rest = uncolored;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let sat = forbidden[v].count_ones();
            let deg = (self.adj[v] & uncolored).count_ones();
            if pick == NONE || (sat, deg) > key {
                pick = v;
                key = (sat, deg);
            }
        }
        let v = pick;
        // a color beyond the ones already in use is interchangeable with any other
        let limit = self.k.min(used + 1);
        for c in 0..limit {
            if forbidden[v] >> c & 1 == 1 {
                continue;
            }
            let mut next = forbidden.to_vec();
            for u in VertexSet::from_bits(self.adj[v] & uncolored) {
                next[u] |= 1 << c;
            }
            self.colors[v] = c;
            if self.search(uncolored & !(1 << v), &next, used.max(c + 1)) {
                return true;
            }
        }
        self.colors[v] = NONE;
        false
    }
}

/// Proper coloring of a connected graph with a clique seeded on colors `0..|seed|`.
fn color_with(g: &Graph, k: usize, seed: VertexSet) -> Option<Vec<usize>> {
    let n = g.order();
    let adj = g.rows();
    let mut colors = vec![NONE; n];
    let mut forbidden = vec![0u32; n];
    for (c, v) in seed.iter().enumerate() {
        colors[v] = c;
        for u in VertexSet::from_bits(adj[v]) {
            forbidden[u] |= 1 << c;
        }
    }
    let uncolored = g.vertices().difference(seed).bits();
    let mut colorer = Colorer { adj, k, colors };
    colorer
        .search(uncolored, &forbidden, seed.len())
        .then_some(colorer.colors)
}

fn dsatur_greedy(g: &Graph, seed: VertexSet) -> Vec<usize> {
    color_with(g, g.order(), seed).expect("n colors always suffice")
}

fn chromatic_connected(g: &Graph) -> Vec<usize> {
    let seed = clique_set(g);
    let greedy = dsatur_greedy(g, seed);
    let upper = greedy.iter().max().map_or(0, |&c| c + 1);
    for k in seed.len()..upper {
        if let Some(colors) = color_with(g, k, seed) {
            return colors;
        }
    }
    greedy
}

/// The chromatic number with an optimal coloring. Orders above
/// [`CHROMATIC_MAX_ORDER`] are rejected.
pub fn chromatic_number(g: &Graph) -> Result<SolveWitness> {
    if g.order() > CHROMATIC_MAX_ORDER {
        return Err(Error::AboveEnvelope {
            what: "chromatic_number",
            order: g.order(),
            max: CHROMATIC_MAX_ORDER,
        });
    }
    let mut colors = vec![0; g.order()];
    for comp in g.components() {
        for (i, c) in chromatic_connected(&comp.graph).into_iter().enumerate() {
            colors[comp.vertices[i]] = c;
        }
    }
    let value = colors.iter().max().map_or(0, |&c| c + 1);
    Ok(SolveWitness {
        value,
        certificate: Certificate::Coloring(colors),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k1() -> Graph {
        Graph::empty(1).unwrap()
    }

    fn checked(g: &Graph, w: SolveWitness) -> usize {
        w.validate(g).unwrap();
        w.value
    }

    #[test]
    fn matching_examples() {
        let g13 = Graph::g13();
        assert_eq!(checked(&g13, max_matching(&g13)), 6);
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(checked(&c5, max_matching(&c5)), 2);
        let p = Graph::petersen();
        assert_eq!(checked(&p, max_matching(&p)), 5);
        assert_eq!(checked(&k1(), max_matching(&k1())), 0);
    }

    #[test]
    fn matching_needs_blossom() {
        // a triangle with a pendant path: greedy start can block the optimum
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (0, 5)]).unwrap();
        assert_eq!(matching_number(&g), 3);
    }

    #[test]
    fn independence_examples() {
        let g13 = Graph::g13();
        assert_eq!(checked(&g13, independence_number(&g13)), 4);
        let c13 = Graph::cycle(13).unwrap();
        assert_eq!(checked(&c13, independence_number(&c13)), 6);
        let rest = g13.delete_vertices(g13.closed_neighborhood(0)).unwrap().graph;
        assert_eq!(checked(&rest, independence_number(&rest)), 3);
        assert_eq!(checked(&k1(), independence_number(&k1())), 1);
    }

    #[test]
    fn clique_examples() {
        let gc = Graph::g13().complement();
        assert_eq!(checked(&gc, clique_number(&gc)), 4);
        assert_eq!(checked(&k1(), clique_number(&k1())), 1);
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(checked(&c5, clique_number(&c5)), 2);
    }

    #[test]
    fn chromatic_examples() {
        let gc = Graph::g13().complement();
        assert_eq!(checked(&gc, chromatic_number(&gc).unwrap()), 7);
        let c5 = Graph::cycle(5).unwrap();
        assert_eq!(checked(&c5, chromatic_number(&c5).unwrap()), 3);
        assert_eq!(checked(&k1(), chromatic_number(&k1()).unwrap()), 1);
        let p = Graph::petersen();
        assert_eq!(checked(&p, chromatic_number(&p).unwrap()), 3);
        let e = Graph::empty(4).unwrap();
        assert_eq!(checked(&e, chromatic_number(&e).unwrap()), 1);
    }

    #[test]
    fn chromatic_envelope() {
        let g = Graph::empty(21).unwrap();
        assert!(matches!(
            chromatic_number(&g),
            Err(Error::AboveEnvelope { order: 21, max: 20, .. })
        ));
    }

    #[test]
    fn perfect_matching_and_factor_critical() {
        assert!(has_perfect_matching(&Graph::complete(2).unwrap()));
        assert!(!has_perfect_matching(&Graph::cycle(5).unwrap()));
        assert!(!has_perfect_matching(&Graph::g13()));
        assert!(is_factor_critical(&Graph::cycle(5).unwrap()));
        assert!(is_factor_critical(&Graph::g13()));
        assert!(is_factor_critical(&k1()));
        assert!(is_factor_critical(&Graph::complete(3).unwrap()));
        assert!(!is_factor_critical(&Graph::path(3).unwrap()));
        assert!(!is_factor_critical(&Graph::empty(3).unwrap()));
        let two_c5 = Graph::cycle(5).unwrap().disjoint_union(&Graph::cycle(5).unwrap()).unwrap();
        assert!(!is_factor_critical(&two_c5));
    }

    #[test]
    fn validation_catches_bad_certificates() {
        let c5 = Graph::cycle(5).unwrap();
        let bad = SolveWitness {
            value: 2,
            certificate: Certificate::Matching(vec![(0, 1), (1, 2)]),
        };
        assert_eq!(bad.validate(&c5), Err(WitnessError::SharedVertex(1)));
        let bad = SolveWitness {
            value: 2,
            certificate: Certificate::IndependentSet([0, 1].into_iter().collect()),
        };
        assert_eq!(bad.validate(&c5), Err(WitnessError::Adjacent(0, 1)));
        let bad = SolveWitness {
            value: 2,
            certificate: Certificate::Coloring(vec![0, 1, 0, 1, 0]),
        };
        assert_eq!(bad.validate(&c5), Err(WitnessError::Adjacent(0, 4)));
    }
}
