//! Reference walk pairs shipped with the crate.
//!
//! A fixture file holds a `# family: NAME:PARAMS` header, optional further
//! `#` comment lines, and two walk lines in the `v1,v2,...` serialization.

use serde::Serialize;
use thiserror::Error;

use crate::graph::{FamilySpec, Graph, GraphError};
use crate::span::MovementRule;
use crate::walk::{classify, is_opposite_lazy, pair_distance, Walk, WalkClass, WalkError};

#[derive(Debug, Error)]
pub enum FixtureError {
    #[error("fixture {0}: missing '# family:' header")]
    MissingFamily(String),
    #[error("fixture {name}: expected two walk lines, found {found}")]
    WalkCount { name: String, found: usize },
    #[error("fixture {name}: {source}")]
    Graph { name: String, source: GraphError },
    #[error("fixture {name}: {source}")]
    Walk { name: String, source: WalkError },
}

/// What a fixture pair must satisfy.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Expectation {
    /// Both walks are sweeps (every edge traversed).
    pub sweeps: bool,
    /// Both walks are lazy sweeps (stays allowed).
    pub lazy_sweeps: bool,
    pub opposite_lazy: bool,
    pub length: usize,
    pub distance: u32,
}

#[derive(Debug, Clone, Copy)]
pub struct Fixture {
    pub name: &'static str,
    pub text: &'static str,
    pub expected: Expectation,
}

/// The three reference pairs: lazy 21-sweeps on `K_5^+`, 11-sweeps on `K_5`
/// and opposite lazy 21-sweeps on `K_5`.
pub const FIXTURES: [Fixture; 3] = [
    Fixture {
        name: "k5plus_lazy_21_sweeps",
        text: include_str!("../fixtures/k5plus_lazy_21_sweeps.txt"),
        expected: Expectation {
            sweeps: false,
            lazy_sweeps: true,
            opposite_lazy: false,
            length: 21,
            distance: 2,
        },
    },
    Fixture {
        name: "k5_11_sweeps",
        text: include_str!("../fixtures/k5_11_sweeps.txt"),
        expected: Expectation {
            sweeps: true,
            lazy_sweeps: true,
            opposite_lazy: false,
            length: 11,
            distance: 1,
        },
    },
    Fixture {
        name: "k5_opposite_lazy_21_sweeps",
        text: include_str!("../fixtures/k5_opposite_lazy_21_sweeps.txt"),
        expected: Expectation {
            sweeps: false,
            lazy_sweeps: true,
            opposite_lazy: true,
            length: 21,
            distance: 1,
        },
    },
];

#[derive(Debug, Clone)]
pub struct LoadedPair {
    pub family: FamilySpec,
    pub graph: Graph,
    pub f: Walk,
    pub g: Walk,
}

pub fn parse_fixture(name: &str, text: &str) -> Result<LoadedPair, FixtureError> {
    let mut family = None;
    let mut walks = Vec::new();
    for line in text.lines().map(str::trim).filter(|l| !l.is_empty()) {
        if let Some(comment) = line.strip_prefix('#') {
            if let Some(spec) = comment.trim().strip_prefix("family:") {
                let spec: FamilySpec = spec.trim().parse().map_err(|source| FixtureError::Graph {
                    name: name.to_string(),
                    source,
                })?;
                family = Some(spec);
            }
            continue;
        }
        let walk: Walk = line.parse().map_err(|source| FixtureError::Walk {
            name: name.to_string(),
            source,
        })?;
        walks.push(walk);
    }
    let family = family.ok_or_else(|| FixtureError::MissingFamily(name.to_string()))?;
    if walks.len() != 2 {
        return Err(FixtureError::WalkCount {
            name: name.to_string(),
            found: walks.len(),
        });
    }
    let graph = Graph::generate(&family).map_err(|source| FixtureError::Graph {
        name: name.to_string(),
        source,
    })?;
    let g = walks.pop().expect("two walks");
    let f = walks.pop().expect("two walks");
    Ok(LoadedPair { family, graph, f, g })
}

/// Measured properties of a fixture pair.
#[derive(Debug, Clone, Serialize)]
pub struct FixtureReport {
    pub name: &'static str,
    pub family: String,
    pub length: usize,
    pub distance: u32,
    pub sweeps: bool,
    pub lazy_sweeps: bool,
    pub opposite_lazy: bool,
    /// Movement rules every step of the pair obeys.
    pub rules: Vec<MovementRule>,
    pub pass: bool,
}

pub fn verify_fixture(fixture: &Fixture) -> Result<FixtureReport, FixtureError> {
    let pair = parse_fixture(fixture.name, fixture.text)?;
    let walk_err = |source| FixtureError::Walk {
        name: fixture.name.to_string(),
        source,
    };
    let g = &pair.graph;
    let cf: WalkClass = classify(g, &pair.f).map_err(walk_err)?;
    let cg: WalkClass = classify(g, &pair.g).map_err(walk_err)?;
    let distance = pair_distance(g, &pair.f, &pair.g).map_err(walk_err)?;
    let opposite_lazy = is_opposite_lazy(g, &pair.f, &pair.g).map_err(walk_err)?;
    let steps: Vec<_> = pair.f.steps().zip(pair.g.steps()).collect();
    let rules = MovementRule::ALL
        .into_iter()
        .filter(|rule| {
            steps
                .iter()
                .all(|&((a, b), (c, d))| rule.allows(g, (a, c), (b, d)))
        })
        .collect();

    let report = FixtureReport {
        name: fixture.name,
        family: pair.family.to_string(),
        length: pair.f.len(),
        distance,
        sweeps: cf.is_sweep && cg.is_sweep,
        lazy_sweeps: cf.is_lazy_sweep && cg.is_lazy_sweep,
        opposite_lazy,
        rules,
        pass: false,
    };
    let e = fixture.expected;
    let pass = report.length == e.length
        && report.distance == e.distance
        && (!e.sweeps || report.sweeps)
        && (!e.lazy_sweeps || report.lazy_sweeps)
        && (!e.opposite_lazy || report.opposite_lazy);
    Ok(FixtureReport { pass, ..report })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shipped_fixtures_pass() {
        for fx in &FIXTURES {
            let r = verify_fixture(fx).unwrap();
            assert!(r.pass, "{r:?}");
        }
    }

    #[test]
    fn malformed() {
        assert!(matches!(
            parse_fixture("x", "v1,v2\nv2,v1\n"),
            Err(FixtureError::MissingFamily(_))
        ));
        assert!(matches!(
            parse_fixture("x", "# family: path:2\nv1,v2\n"),
            Err(FixtureError::WalkCount { found: 1, .. })
        ));
        assert!(matches!(
            parse_fixture("x", "# family: path:2\nv1,x2\nv2,v1\n"),
            Err(FixtureError::Walk { .. })
        ));
    }
}
