//! Known closed-form values for graph families, exhaustive enumeration of
//! small connected graphs, and the scan for the smallest graph whose direct
//! vertex and edge spans differ.

use std::collections::BTreeMap;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{FamilySpec, Graph};
use crate::minlen::min_length;
use crate::span::{span, MovementRule, Target};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FamilyError {
    #[error("no closed form for the {kind} of {family} ({rule}, {target})")]
    NoClosedForm {
        kind: &'static str,
        family: FamilySpec,
        rule: MovementRule,
        target: Target,
    },
    #[error("enumeration is limited to order {max}, requested {requested}")]
    TooLarge { requested: usize, max: usize },
}

/// Largest order [`enumerate_connected`] accepts.
pub const MAX_ENUMERATION_ORDER: usize = 7;

/// A tabulated value with a short description of where it comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedForm {
    pub family: FamilySpec,
    pub rule: MovementRule,
    pub target: Target,
    pub value: usize,
    pub source: &'static str,
}

fn parity(n: usize, odd: usize, even: usize) -> usize {
    if n % 2 == 1 {
        odd
    } else {
        even
    }
}

fn span_entry(spec: FamilySpec, rule: MovementRule, target: Target) -> Option<(usize, &'static str)> {
    use MovementRule::*;
    let v = match spec {
        FamilySpec::Path(1) | FamilySpec::Complete(1) => (0, "single vertex: every span is 0"),
        FamilySpec::Path(_) => match rule {
            Traditional | Active => (1, "paths: strong and direct spans are 1"),
            Lazy => (0, "paths: Cartesian spans are 0"),
        },
        FamilySpec::Cycle(n) => match rule {
            Traditional | Active => (n / 2, "cycles: strong and direct spans are floor(n/2)"),
            Lazy => (
                parity(n, (n - 1) / 2, n / 2 - 1),
                "cycles: Cartesian span is (n-1)/2 for odd n, n/2-1 for even n",
            ),
        },
        FamilySpec::Complete(2) => match rule {
            Traditional | Active => (1, "K_2 is the path P_2"),
            Lazy => (0, "K_2 is the path P_2"),
        },
        FamilySpec::Complete(_) => (1, "complete graphs: radius 1 and two players fit on distinct vertices"),
        FamilySpec::KnPlus(_) => match (rule, target) {
            (Traditional, _) => (2, "K_n^+: strong vertex and edge spans are 2"),
            (Active, Target::Vertices) => (2, "K_n^+: direct vertex span is 2"),
            (Active, Target::Edges) => (1, "K_n^+: direct edge span is 1"),
            (Lazy, _) => (1, "K_n^+: Cartesian vertex and edge spans are 1"),
        },
        FamilySpec::Star(_) | FamilySpec::CompleteBipartite(..) => return None,
    };
    Some(v)
}

fn minlen_entry(spec: FamilySpec, rule: MovementRule, target: Target) -> Option<(usize, &'static str)> {
    use MovementRule::*;
    let v = match spec {
        FamilySpec::Path(1) | FamilySpec::Complete(1) => (1, "single vertex: constant walks of length 1"),
        FamilySpec::Path(n) => match rule {
            Traditional | Active => (parity(n, n + 1, n), "paths: n for even n, n+1 for odd n"),
            Lazy => (2 * n - 1, "paths: Cartesian minimal length 2n-1"),
        },
        FamilySpec::Cycle(n) => match (rule, target) {
            (Lazy, Target::Vertices) => (2 * n - 1, "cycles: Cartesian vertex minimal length 2n-1"),
            (Lazy, Target::Edges) => (2 * n + 1, "cycles: Cartesian edge minimal length 2n+1"),
            (_, Target::Vertices) => (n, "cycles: vertex minimal length n"),
            (_, Target::Edges) => (n + 1, "cycles: edge minimal length n+1"),
        },
        FamilySpec::Complete(n) => match (rule, target) {
            (Lazy, Target::Vertices) => (2 * n - 1, "complete graphs: Cartesian vertex minimal length 2n-1"),
            (Lazy, Target::Edges) => (
                parity(n, n * n - n + 1, n * n - 1),
                "complete graphs: n^2-n+1 for odd n, n^2-1 for even n",
            ),
            (_, Target::Vertices) => (n, "complete graphs: vertex minimal length n"),
            (_, Target::Edges) => (
                parity(n, (n * n - n + 2) / 2, n * n / 2),
                "complete graphs: (n^2-n+2)/2 for odd n, n^2/2 for even n",
            ),
        },
        FamilySpec::KnPlus(_) | FamilySpec::Star(_) | FamilySpec::CompleteBipartite(..) => return None,
    };
    Some(v)
}

/// Tabulated span of a family member.
pub fn closed_span(spec: FamilySpec, rule: MovementRule, target: Target) -> Result<u32, FamilyError> {
    span_entry(spec, rule, target)
        .map(|(v, _)| v as u32)
        .ok_or(FamilyError::NoClosedForm {
            kind: "span",
            family: spec,
            rule,
            target,
        })
}

/// Tabulated minimal walk length of a family member.
pub fn closed_minlen(spec: FamilySpec, rule: MovementRule, target: Target) -> Result<usize, FamilyError> {
    minlen_entry(spec, rule, target)
        .map(|(v, _)| v)
        .ok_or(FamilyError::NoClosedForm {
            kind: "minimal length",
            family: spec,
            rule,
            target,
        })
}

/// Every tabulated value for `spec`, spans first.
pub fn closed_forms(spec: FamilySpec) -> (Vec<ClosedForm>, Vec<ClosedForm>) {
    let collect = |entry: fn(FamilySpec, MovementRule, Target) -> Option<(usize, &'static str)>| {
        let mut out = Vec::new();
        for target in Target::ALL {
            for rule in MovementRule::ALL {
                if let Some((value, source)) = entry(spec, rule, target) {
                    out.push(ClosedForm {
                        family: spec,
                        rule,
                        target,
                        value,
                        source,
                    });
                }
            }
        }
        out
    };
    (collect(span_entry), collect(minlen_entry))
}

/// All connected graphs of order at most `max_n` and size at most `max_m`,
/// one per isomorphism class, ordered by order, then size, then canonical
/// code.
///
/// Built vertex by vertex: every connected graph has a vertex whose removal
/// keeps it connected, so attaching a new vertex to every non-empty subset of
/// each smaller connected graph reaches every class.
pub fn enumerate_connected(max_n: usize, max_m: usize) -> Result<Vec<Graph>, FamilyError> {
    if max_n > MAX_ENUMERATION_ORDER {
        return Err(FamilyError::TooLarge {
            requested: max_n,
            max: MAX_ENUMERATION_ORDER,
        });
    }
    let mut out = Vec::new();
    if max_n == 0 {
        return Ok(out);
    }
    let mut level = vec![Graph::new(1, &[]).expect("K_1")];
    out.extend(level.iter().cloned());
    for n in 2..=max_n {
        let mut next: BTreeMap<(usize, u64), Graph> = BTreeMap::new();
        for h in &level {
            let new = n - 1;
            for subset in 1u64..(1 << new) {
                let size = h.size() + subset.count_ones() as usize;
                if size > max_m {
                    continue;
                }
                let mut edges = h.edges().to_vec();
                edges.extend((0..new).filter(|&v| subset >> v & 1 == 1).map(|v| (v, new)));
                let g = Graph::new(n, &edges).expect("extension of a connected graph");
                let code = g.canonical_code().expect("small order").bits;
                next.entry((size, code)).or_insert(g);
            }
        }
        level = next.into_values().collect();
        out.extend(level.iter().cloned());
    }
    Ok(out)
}

/// First graph, in order of (order, size), whose direct vertex and edge
/// spans differ.
#[derive(Debug, Clone)]
pub struct GapResult {
    pub graph: Graph,
    pub vertex_span: u32,
    pub edge_span: u32,
    /// Graphs examined, including the result.
    pub scanned: usize,
}

/// Scans all connected graphs up to the enumeration limit.
pub fn find_minimal_direct_gap() -> Option<GapResult> {
    let graphs = enumerate_connected(MAX_ENUMERATION_ORDER, usize::MAX).expect("within limit");
    for (i, g) in graphs.into_iter().enumerate() {
        let vertex_span = span(&g, MovementRule::Active, Target::Vertices).value;
        let edge_span = span(&g, MovementRule::Active, Target::Edges).value;
        if vertex_span != edge_span {
            return Some(GapResult {
                graph: g,
                vertex_span,
                edge_span,
                scanned: i + 1,
            });
        }
    }
    None
}

/// The six connected graphs of order 5 with size 5 or 6, radius above 1 and
/// other than `C_5`, with their reference direct span (equal for vertices
/// and edges). Vertices are 0-based.
pub fn order_five_reference() -> Vec<(Graph, u32)> {
    let table: [(&[(usize, usize)], u32); 6] = [
        (&[(0, 3), (3, 4), (4, 2), (2, 1), (3, 2)], 1),
        (&[(1, 0), (0, 3), (3, 4), (4, 2), (2, 3)], 1),
        (&[(4, 3), (3, 0), (0, 1), (1, 2), (2, 3)], 2),
        (&[(3, 0), (0, 1), (1, 2), (2, 3), (3, 4), (4, 2)], 2),
        (&[(4, 3), (3, 2), (2, 1), (1, 0), (0, 3), (0, 2)], 1),
        (&[(0, 1), (1, 2), (2, 3), (3, 0), (0, 4), (4, 2)], 2),
    ];
    table
        .iter()
        .map(|&(edges, value)| (Graph::new(5, edges).expect("reference graph"), value))
        .collect()
}

/// One cross-check of a tabulated value against the engines.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FamilyCheck {
    pub family: String,
    pub kind: &'static str,
    pub rule: MovementRule,
    pub target: Target,
    pub expected: usize,
    pub actual: Option<usize>,
    pub capped: bool,
    pub pass: bool,
}

/// Family instances checked by [`verify_closed_forms`].
pub fn default_family_instances() -> Vec<FamilySpec> {
    let mut specs = Vec::new();
    specs.extend((1..=8).map(FamilySpec::Path));
    specs.extend((3..=7).map(FamilySpec::Cycle));
    specs.extend((1..=5).map(FamilySpec::Complete));
    specs.extend((4..=7).map(FamilySpec::KnPlus));
    specs
}

/// Compares every tabulated span and minimal length of `specs` against the
/// span and minimal-length engines.
pub fn verify_closed_forms(specs: &[FamilySpec], budget: u64) -> Vec<FamilyCheck> {
    let mut checks = Vec::new();
    for &spec in specs {
        let g = Graph::generate(&spec).expect("valid family");
        let (spans, minlens) = closed_forms(spec);
        for cf in spans {
            let actual = span(&g, cf.rule, cf.target).value as usize;
            checks.push(FamilyCheck {
                family: cf.family.to_string(),
                kind: "span",
                rule: cf.rule,
                target: cf.target,
                expected: cf.value,
                actual: Some(actual),
                capped: false,
                pass: actual == cf.value,
            });
        }
        for cf in minlens {
            let report = min_length(&g, cf.rule, cf.target, budget);
            let actual = (!report.capped).then_some(report.length);
            checks.push(FamilyCheck {
                family: cf.family.to_string(),
                kind: "minlen",
                rule: cf.rule,
                target: cf.target,
                expected: cf.value,
                actual,
                capped: report.capped,
                pass: actual == Some(cf.value),
            });
        }
    }
    checks
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn closed_span_examples() {
        assert_eq!(closed_span(FamilySpec::Path(7), MovementRule::Traditional, Target::Edges), Ok(1));
        assert_eq!(closed_span(FamilySpec::KnPlus(6), MovementRule::Active, Target::Edges), Ok(1));
        assert_eq!(closed_span(FamilySpec::Cycle(7), MovementRule::Lazy, Target::Vertices), Ok(3));
        assert!(matches!(
            closed_span(FamilySpec::Star(4), MovementRule::Lazy, Target::Vertices),
            Err(FamilyError::NoClosedForm { .. })
        ));
    }

    #[test]
    fn closed_minlen_examples() {
        assert_eq!(closed_minlen(FamilySpec::Path(6), MovementRule::Lazy, Target::Edges), Ok(11));
        assert_eq!(closed_minlen(FamilySpec::Cycle(4), MovementRule::Active, Target::Vertices), Ok(4));
        assert_eq!(closed_minlen(FamilySpec::Complete(5), MovementRule::Lazy, Target::Edges), Ok(21));
        assert!(closed_minlen(FamilySpec::KnPlus(5), MovementRule::Lazy, Target::Edges).is_err());
    }

    #[test]
    fn enumeration_limits() {
        assert!(matches!(enumerate_connected(8, 10), Err(FamilyError::TooLarge { .. })));
        assert!(enumerate_connected(0, 10).unwrap().is_empty());
    }

    #[test]
    fn small_enumerations() {
        let g = enumerate_connected(3, 3).unwrap();
        let shape: Vec<_> = g.iter().map(|g| (g.order(), g.size())).collect();
        assert_eq!(shape, vec![(1, 0), (2, 1), (3, 2), (3, 3)]);
        assert_eq!(enumerate_connected(3, 2).unwrap().len(), 3);
    }

    #[test]
    fn reference_graphs_shape() {
        let c5 = Graph::generate(&FamilySpec::Cycle(5)).unwrap();
        for (g, _) in order_five_reference() {
            assert!(g.size() == 5 || g.size() == 6);
            assert_eq!(g.max_degree(), 3);
            assert!(g.radius() > 1);
            assert_eq!(g.is_isomorphic(&c5), Some(false));
        }
    }
}
