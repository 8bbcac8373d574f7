//! Brute-force reference implementations. Each works from the adjacency
//! matrix alone and shares no code with the library algorithms.

#![allow(dead_code)]

use rand::Rng;
use tribound_core::Graph;

pub fn matrix(g: &Graph) -> Vec<Vec<bool>> {
    let n = g.order();
    (0..n)
        .map(|u| (0..n).map(|v| g.is_adjacent(u, v)).collect())
        .collect()
}

/// Maximum matching size: the lowest free vertex is either left unmatched or
/// matched to each of its free neighbors in turn.
pub fn brute_matching(g: &Graph) -> usize {
    fn go(adj: &[Vec<bool>], used: &mut Vec<bool>) -> usize {
        let Some(u) = used.iter().position(|&x| !x) else {
            return 0;
        };
        used[u] = true;
        let mut best = go(adj, used);
        for v in 0..adj.len() {
            if !used[v] && adj[u][v] {
                used[v] = true;
                best = best.max(1 + go(adj, used));
                used[v] = false;
            }
        }
        used[u] = false;
        best
    }
    go(&matrix(g), &mut vec![false; g.order()])
}

fn is_independent(adj: &[Vec<bool>], mask: u32) -> bool {
    let n = adj.len();
    (0..n).all(|u| mask >> u & 1 == 0 || (u + 1..n).all(|v| mask >> v & 1 == 0 || !adj[u][v]))
}

/// Largest independent subset, by checking every subset.
pub fn brute_alpha(g: &Graph) -> usize {
    let adj = matrix(g);
    (0u32..1 << g.order())
        .filter(|&m| is_independent(&adj, m))
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

/// Fewest independent sets covering all vertices, by dynamic programming
/// over vertex subsets.
pub fn brute_chromatic(g: &Graph) -> usize {
    let n = g.order();
    let adj = matrix(g);
    let full = (1u32 << n) - 1;
    let independent: Vec<bool> = (0..=full).map(|m| is_independent(&adj, m)).collect();
    let mut best = vec![usize::MAX; full as usize + 1];
    best[0] = 0;
    for mask in 1..=full {
        let low = mask & mask.wrapping_neg();
        let rest = mask ^ low;
        // every class containing the lowest vertex
        let mut sub = rest;
        loop {
            let class = sub | low;
            if independent[class as usize] {
                let prev = best[(mask ^ class) as usize];
                if prev != usize::MAX {
                    best[mask as usize] = best[mask as usize].min(prev + 1);
                }
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    best[full as usize]
}

/// Component sizes of the graph restricted to `keep`.
pub fn component_sizes(adj: &[Vec<bool>], keep: u32) -> Vec<usize> {
    let n = adj.len();
    let mut seen = 0u32;
    let mut sizes = Vec::new();
    for s in 0..n {
        if keep >> s & 1 == 0 || seen >> s & 1 == 1 {
            continue;
        }
        let mut stack = vec![s];
        seen |= 1 << s;
        let mut size = 0;
        while let Some(u) = stack.pop() {
            size += 1;
            for v in 0..n {
                if adj[u][v] && keep >> v & 1 == 1 && seen >> v & 1 == 0 {
                    seen |= 1 << v;
                    stack.push(v);
                }
            }
        }
        sizes.push(size);
    }
    sizes
}

/// `max over X of o(G - X) - |X|`, over every vertex subset `X`.
pub fn brute_deficiency(g: &Graph) -> i64 {
    let n = g.order();
    let adj = matrix(g);
    let full = (1u32 << n) - 1;
    (0..=full)
        .map(|x| {
            let odd = component_sizes(&adj, full & !x)
                .into_iter()
                .filter(|s| s % 2 == 1)
                .count() as i64;
            odd - x.count_ones() as i64
        })
        .max()
        .unwrap()
}

pub fn brute_triangle_free(g: &Graph) -> bool {
    let adj = matrix(g);
    let n = g.order();
    for a in 0..n {
        for b in a + 1..n {
            for c in b + 1..n {
                if adj[a][b] && adj[b][c] && adj[a][c] {
                    return false;
                }
            }
        }
    }
    true
}

/// Edges whose deletion increases the number of components.
pub fn brute_bridges(g: &Graph) -> Vec<(usize, usize)> {
    let n = g.order();
    let mut adj = matrix(g);
    let full = if n == 0 { 0 } else { (1u32 << n) - 1 };
    let base = component_sizes(&adj, full).len();
    let mut out = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if adj[u][v] {
                adj[u][v] = false;
                adj[v][u] = false;
                if component_sizes(&adj, full).len() > base {
                    out.push((u, v));
                }
                adj[u][v] = true;
                adj[v][u] = true;
            }
        }
    }
    out
}

/// Smallest upper-triangle bit string over all `n!` relabelings.
pub fn brute_canonical(g: &Graph) -> Vec<bool> {
    let n = g.order();
    let adj = matrix(g);
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best: Option<Vec<bool>> = None;
    loop {
        let key: Vec<bool> = (1..n)
            .flat_map(|j| (0..j).map(move |i| (i, j)))
            .map(|(i, j)| adj[perm[i]][perm[j]])
            .collect();
        if best.as_ref().map_or(true, |b| key < *b) {
            best = Some(key);
        }
        if !next_permutation(&mut perm) {
            break;
        }
    }
    best.unwrap()
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).unwrap();
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

/// Every labeled graph on `n` vertices.
pub fn all_labeled(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        Graph::from_edges(n, &edges).unwrap()
    })
}

/// `G(n, p)`.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// A random triangle-free graph with maximum degree at most 4: candidate
/// edges in random order, each added if it keeps the graph in the class.
pub fn random_class_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut g = Graph::empty(n).unwrap();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p)
                && g.degree(u) < 4
                && g.degree(v) < 4
                && g.neighbors(u).intersection(g.neighbors(v)).is_empty()
            {
                g = g.with_edge(u, v).unwrap();
            }
        }
    }
    g
}
