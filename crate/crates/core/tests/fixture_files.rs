use std::fs;
use std::path::PathBuf;

use relgraph::format::{graph_to_json, parse_graph, parse_relative, relative_to_json};
use relgraph::pushout::compute_pushout;
use relgraph::{fixtures, PushoutDiagram, RelativeGraph};

fn dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../fixtures")
}

fn load(name: &str) -> RelativeGraph {
    parse_relative(&fs::read_to_string(dir().join(name)).unwrap()).unwrap()
}

fn load_span(prefix: &str) -> PushoutDiagram {
    PushoutDiagram::new(
        load(&format!("{prefix}_apex.json")),
        load(&format!("{prefix}_left.json")),
        load(&format!("{prefix}_right.json")),
    )
    .unwrap()
}

#[test]
fn every_fixture_round_trips() {
    let mut seen = 0;
    for entry in fs::read_dir(dir()).unwrap() {
        let text = fs::read_to_string(entry.unwrap().path()).unwrap();
        if text.contains("\"A\"") {
            let rg = parse_relative(&text).unwrap();
            assert_eq!(parse_relative(&relative_to_json(&rg)).unwrap(), rg);
        } else {
            let g = parse_graph(&text).unwrap();
            assert_eq!(parse_graph(&graph_to_json(&g)).unwrap(), g);
        }
        seen += 1;
    }
    assert!(seen >= 10);
}

#[test]
fn files_match_builtin_fixtures() {
    let graph = |n: &str| parse_graph(&fs::read_to_string(dir().join(n)).unwrap()).unwrap();
    assert_eq!(graph("loop.json"), fixtures::loop_graph());
    assert_eq!(graph("chain.json"), fixtures::chain_graph());
    assert_eq!(graph("double_bundle.json"), fixtures::double_bundle_graph());
    assert_eq!(graph("single_bundle.json"), fixtures::single_bundle_graph());
    assert_eq!(load_span("double_bundle"), fixtures::double_bundle_span());
    assert_eq!(load_span("single_bundle"), fixtures::single_bundle_span());
    assert_eq!(load_span("fed_star"), fixtures::fed_star_span(&["u"]));
}

#[test]
fn bundle_pushouts_rebuild_their_graphs() {
    assert_eq!(
        compute_pushout(&load_span("double_bundle"))
            .unwrap()
            .colimit
            .graph,
        fixtures::double_bundle_graph()
    );
    assert_eq!(
        compute_pushout(&load_span("single_bundle"))
            .unwrap()
            .colimit
            .graph,
        fixtures::single_bundle_graph()
    );
}
