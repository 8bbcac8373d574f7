//! Gallai-Edmonds decomposition.
//!
//! For the canonical decomposition, `D` is the set of vertices missed by at
//! least one maximum matching, `X = N(D) \ D`, the odd components of `G \ X`
//! are the components of `G[D]`, and the remaining vertices form the even
//! part `R`. Then `2 beta(G) = n + |X| - o(G \ X)` and every odd component is
//! factor-critical.

use serde::{Serialize, Serializer};

use crate::error::{Error, Result, Violation};
use crate::graph::{Graph, Subgraph, VertexSet};
use crate::solvers::{is_factor_critical, matching_number};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GallaiEdmonds {
    /// The separator `X`.
    pub separator: VertexSet,
    #[serde(serialize_with = "component_vertex_sets")]
    pub odd_components: Vec<Subgraph>,
    /// Vertices in neither `X` nor an odd component (`R`).
    pub even_part: VertexSet,
    /// `o(G \ X) - |X|`.
    pub deficiency: i64,
}

fn component_vertex_sets<S: Serializer>(comps: &[Subgraph], s: S) -> Result<S::Ok, S::Error> {
    s.collect_seq(comps.iter().map(|c| &c.vertices))
}

impl GallaiEdmonds {
    /// The decomposition induced by an arbitrary separator `x`: odd
    /// components of `G \ x` and the union of its even components.
    pub fn from_separator(g: &Graph, x: VertexSet) -> GallaiEdmonds {
        let x = x.intersection(g.vertices());
        let mut odd_components = Vec::new();
        let mut even_part = VertexSet::EMPTY;
        for comp in g.component_sets(g.vertices().difference(x)) {
            if comp.len() % 2 == 1 {
                odd_components.push(g.induced(comp).expect("nonempty"));
            } else {
                even_part = even_part.union(comp);
            }
        }
        let deficiency = odd_components.len() as i64 - x.len() as i64;
        GallaiEdmonds {
            separator: x,
            odd_components,
            even_part,
            deficiency,
        }
    }

    pub fn odd_count(&self) -> usize {
        self.odd_components.len()
    }

    /// The matching number implied by the decomposition, if `n + |X| - o` is even.
    pub fn implied_matching_number(&self, n: usize) -> Option<usize> {
        let twice = n as i64 - self.deficiency;
        (twice >= 0 && twice % 2 == 0).then_some(twice as usize / 2)
    }
}

/// Vertices missed by some maximum matching.
pub fn deficient_vertices(g: &Graph) -> VertexSet {
    if g.order() == 1 {
        return g.vertices();
    }
    let beta = matching_number(g);
    (0..g.order())
        .filter(|&v| matching_number(&g.delete_vertex(v).expect("n > 1").graph) == beta)
        .collect()
}

/// The canonical Gallai-Edmonds decomposition with `X = N(D) \ D`.
pub fn gallai_edmonds(g: &Graph) -> GallaiEdmonds {
    let d = deficient_vertices(g);
    let mut x = VertexSet::EMPTY;
    for v in d {
        x = x.union(g.neighbors(v));
    }
    GallaiEdmonds::from_separator(g, x.difference(d))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Check {
    pub name: &'static str,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeVerdict {
    pub checks: Vec<Check>,
}

impl GeVerdict {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn check(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }
}

fn check(name: &'static str, failure: Option<String>) -> Check {
    Check {
        name,
        passed: failure.is_none(),
        detail: failure,
    }
}

/// Re-checks a claimed decomposition of `g` from scratch. Any separator that
/// satisfies the matching identity with factor-critical odd components passes.
pub fn verify_ge(g: &Graph, d: &GallaiEdmonds) -> GeVerdict {
    let n = g.order();
    let mut checks = Vec::new();

    let mut seen = d.separator;
    let mut overlap = !d.separator.difference(g.vertices()).is_empty();
    for part in d
        .odd_components
        .iter()
        .map(Subgraph::vertex_set)
        .chain([d.even_part])
    {
        overlap |= !seen.intersection(part).is_empty();
        seen = seen.union(part);
    }
    checks.push(check(
        "partition",
        (overlap || seen != g.vertices())
            .then(|| "X, the odd components and R do not partition V(G)".to_string()),
    ));

    let expected = GallaiEdmonds::from_separator(g, d.separator);
    let same_structure = expected.odd_components.len() == d.odd_components.len()
        && expected
            .odd_components
            .iter()
            .zip(&d.odd_components)
            .all(|(a, b)| a.vertices == b.vertices && a.graph == b.graph)
        && expected.even_part == d.even_part
        && expected.deficiency == d.deficiency;
    checks.push(check(
        "components",
        (!same_structure).then(|| {
            format!(
                "G\\X has {} odd components, decomposition lists {}",
                expected.odd_count(),
                d.odd_count()
            )
        }),
    ));

    let beta = matching_number(g);
    let twice = n as i64 + d.separator.len() as i64 - expected.odd_count() as i64;
    checks.push(check(
        "beta_identity",
        (twice != 2 * beta as i64).then(|| {
            format!(
                "2*beta = {} but n + |X| - o(G\\X) = {}",
                2 * beta,
                twice
            )
        }),
    ));

    let bad: Vec<_> = expected
        .odd_components
        .iter()
        .filter(|c| !is_factor_critical(&c.graph))
        .map(|c| c.vertices.clone())
        .collect();
    checks.push(check(
        "factor_critical",
        (!bad.is_empty()).then(|| format!("not factor-critical: {bad:?}")),
    ));

    GeVerdict { checks }
}

/// Orders of the odd components and size of the even part, bucketed as the
/// counting argument needs them.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct LedgerCounts {
    pub c1: usize,
    pub c5: usize,
    pub c7: usize,
    pub c9: usize,
    /// Odd components of order at least 11.
    pub c_ge11: usize,
    /// Vertices in odd components of order at least 11.
    pub n_ge11: usize,
    pub r_size: usize,
    pub x_size: usize,
}

impl LedgerCounts {
    pub fn odd_count(&self) -> usize {
        self.c1 + self.c5 + self.c7 + self.c9 + self.c_ge11
    }

    /// `c1 + 5 c5 + 7 c7 + 9 c9 + n(c>=11) + |R| + |X|`, which equals `n(G)`.
    pub fn accounted_order(&self) -> usize {
        self.c1
            + 5 * self.c5
            + 7 * self.c7
            + 9 * self.c9
            + self.n_ge11
            + self.r_size
            + self.x_size
    }
}

/// Buckets the decomposition of a triangle-free graph. Factor-critical
/// components of order 3 are triangles, so they cannot occur.
pub fn ledger_counts(g: &Graph, d: &GallaiEdmonds) -> Result<LedgerCounts> {
    if let Some(t) = g.find_triangle() {
        return Err(Error::Precondition(Violation::Triangle(t)));
    }
    let mut counts = LedgerCounts {
        r_size: d.even_part.len(),
        x_size: d.separator.len(),
        ..LedgerCounts::default()
    };
    for comp in &d.odd_components {
        match comp.graph.order() {
            1 => counts.c1 += 1,
            5 => counts.c5 += 1,
            7 => counts.c7 += 1,
            9 => counts.c9 += 1,
            k if k >= 11 => {
                counts.c_ge11 += 1;
                counts.n_ge11 += k;
            }
            // order 3 is a triangle; anything else here is even or not factor-critical
            _ => return Err(Error::Precondition(Violation::NotFactorCritical)),
        }
    }
    Ok(counts)
}
