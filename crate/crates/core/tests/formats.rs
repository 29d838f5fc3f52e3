mod common;

use binsys::format::{dot, gpd};
use binsys::graph::{from_graph, to_digraph, to_graph, Digraph, SimpleGraph};
use binsys::{Error, Groupoid};
use common::{fixture, fixture_names, fixture_path};

#[test]
fn every_fixture_round_trips_bit_exactly() {
    let names = fixture_names();
    assert_eq!(names.len(), 14);
    for name in names {
        let g = fixture(&name);
        let text = gpd::serialize(&g);
        let back = gpd::parse(&text).unwrap();
        assert_eq!(back, g, "{name}");
        assert_eq!(back.labels(), g.labels(), "{name}");
        assert_eq!(back.zero(), g.zero(), "{name}");
        assert_eq!(gpd::serialize(&back), text, "{name}");
    }
}

#[test]
fn fixtures_without_comments_are_already_canonical() {
    for name in fixture_names() {
        let raw = std::fs::read_to_string(fixture_path(&name)).unwrap();
        let body: String = raw
            .lines()
            .filter(|l| !l.trim_start().starts_with('#') && !l.trim().is_empty())
            .map(|l| format!("{l}\n"))
            .collect();
        assert_eq!(gpd::serialize(&fixture(&name)), body, "{name}");
    }
}

#[test]
fn star_graph_through_dot() {
    let star = fixture("star-abcd.gpd");
    let graph = to_graph(&star);
    let text = dot::graph_to_dot(&graph);
    assert_eq!(
        text,
        "graph {\n  a;\n  b;\n  c;\n  d;\n  a -- b;\n  b -- c;\n  b -- d;\n}\n"
    );
    let back = dot::parse_graph(&text).unwrap();
    assert_eq!(back, graph);
    let table = from_graph(&back);
    assert_eq!(table, star);
    assert_eq!(table.labels(), star.labels());
}

#[test]
fn isolated_vertices_survive_dot() {
    let g = SimpleGraph::new(3, [(0, 2)]).unwrap();
    let back = dot::parse_graph(&dot::graph_to_dot(&g)).unwrap();
    assert_eq!(back, g);
    assert!(back.labels().is_none());
}

#[test]
fn quoted_labels_are_escaped() {
    let g = SimpleGraph::new(2, [(0, 1)])
        .unwrap()
        .with_labels(Some(vec!["x-1".into(), "q\"".into()]))
        .unwrap();
    let text = dot::graph_to_dot(&g);
    assert!(text.contains("\"x-1\" -- \"q\\\"\""), "{text}");
    assert_eq!(dot::parse_graph(&text).unwrap().labels(), g.labels());
}

#[test]
fn digraph_of_orientation_table() {
    let g = fixture("twisted-op-abc.gpd");
    let d = to_digraph(&g).unwrap();
    let text = dot::digraph_to_dot(&d);
    let back = dot::parse_digraph(&text).unwrap();
    assert_eq!(back, d);
    for x in 0..3 {
        for y in 0..3 {
            assert_eq!(d.has_arc(x, y), x != y && g.get(x, y) == x);
        }
    }
    assert!(matches!(
        to_digraph(&Groupoid::constant(3, 0).unwrap()),
        Err(Error::NotOrientation)
    ));
}

#[test]
fn digraph_rejects_loops_and_strays() {
    assert!(Digraph::new(2, [(0, 0)]).is_err());
    assert!(Digraph::new(2, [(0, 2)]).is_err());
    assert!(SimpleGraph::new(2, [(1, 1)]).is_err());
}

#[test]
fn parse_errors_name_the_line() {
    let err = gpd::parse("elements: a b\ntable:\na b\nb z\n").unwrap_err();
    assert!(matches!(err, Error::Parse { line: 4, .. }));
    assert!(err.to_string().contains('4'));
    let err = dot::parse_graph("graph {\n a -- b\n c -> d\n}").unwrap_err();
    assert!(matches!(err, Error::Parse { line: 3, .. }));
}

#[test]
fn bad_labels_are_parse_errors() {
    assert!(matches!(
        gpd::parse("elements: a b a\ntable:\na b a\na b a\na b a\n"),
        Err(Error::Parse { line: 1, .. })
    ));
    assert!(matches!(
        gpd::parse("elements: a b\nzero: a b\ntable:\na b\na b\n"),
        Err(Error::Parse { line: 2, .. })
    ));
}
