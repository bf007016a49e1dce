use graph_spans::family::{
    closed_minlen, closed_span, default_family_instances, verify_closed_forms, FamilyError,
};
use graph_spans::postman::{complete_graph_cover_length, shortest_covering_walk, CoverMode};
use graph_spans::{FamilySpec, Graph, MovementRule, Target, DEFAULT_BUDGET};

#[test]
fn tabulated_values_match_engines() {
    let checks = verify_closed_forms(&default_family_instances(), DEFAULT_BUDGET);
    let failed: Vec<_> = checks.iter().filter(|c| !c.pass).collect();
    assert!(failed.is_empty(), "{failed:#?}");
    assert!(checks.len() >= 200);
}

#[test]
fn kn_plus_strict_strong_edge_gap() {
    for n in 4..=7 {
        let s = |rule| closed_span(FamilySpec::KnPlus(n), rule, Target::Edges).unwrap();
        assert!(s(MovementRule::Traditional) > s(MovementRule::Active).max(s(MovementRule::Lazy)));
    }
}

#[test]
fn untabulated_families() {
    for spec in [FamilySpec::Star(3), FamilySpec::CompleteBipartite(2, 3)] {
        assert!(matches!(
            closed_span(spec, MovementRule::Active, Target::Edges),
            Err(FamilyError::NoClosedForm { .. })
        ));
    }
    assert!(closed_minlen(FamilySpec::KnPlus(4), MovementRule::Active, Target::Vertices).is_err());
}

#[test]
fn complete_graph_covering_walks() {
    for n in 2..=8 {
        let g = Graph::generate(&FamilySpec::Complete(n)).unwrap();
        let r = shortest_covering_walk(&g, CoverMode::FreeEndpoints).unwrap();
        let expected = if n % 2 == 1 { (n * n - n) / 2 } else { (n * n - 2) / 2 };
        assert_eq!(r.length_edges, expected, "K_{n}");
        assert_eq!(complete_graph_cover_length(n), expected);
    }
}
