//! Small named graphs and spans used throughout the tests, docs and benches.

use crate::graph::{vset, EdgeDecl, Graph};
use crate::pushout::PushoutDiagram;
use crate::relative::RelativeGraph;

/// One vertex `v` with a loop `d`.
pub fn loop_graph() -> Graph {
    Graph::build(&["v"], vec![EdgeDecl::one("d", "v", "v")])
}

/// A single edge `e` from `v` to `u`.
pub fn chain_graph() -> Graph {
    Graph::build(&["u", "v"], vec![EdgeDecl::one("e", "v", "u")])
}

/// `n` vertices and no edges.
pub fn edgeless(n: usize) -> Graph {
    let names: Vec<String> = (0..n).map(|i| format!("x{i}")).collect();
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    Graph::build(&refs, vec![])
}

/// Loop `d` at `u`, infinitely many edges `e_i: v → u` and `f_i: w → u`.
pub fn double_bundle_graph() -> Graph {
    Graph::build(
        &["u", "v", "w"],
        vec![
            EdgeDecl::one("d", "u", "u"),
            EdgeDecl::bundle("e", "v", "u"),
            EdgeDecl::bundle("f", "w", "u"),
        ],
    )
}

pub fn double_bundle_f0() -> Graph {
    Graph::build(&["u"], vec![EdgeDecl::one("d", "u", "u")])
}

pub fn double_bundle_f1() -> Graph {
    Graph::build(
        &["u", "v"],
        vec![
            EdgeDecl::one("d", "u", "u"),
            EdgeDecl::bundle("e", "v", "u"),
        ],
    )
}

pub fn double_bundle_f2() -> Graph {
    Graph::build(
        &["u", "w"],
        vec![
            EdgeDecl::one("d", "u", "u"),
            EdgeDecl::bundle("f", "w", "u"),
        ],
    )
}

/// Like [`double_bundle_graph`] but with a single edge `e: v → u`.
pub fn single_bundle_graph() -> Graph {
    Graph::build(
        &["u", "v", "w"],
        vec![
            EdgeDecl::one("d", "u", "u"),
            EdgeDecl::one("e", "v", "u"),
            EdgeDecl::bundle("f", "w", "u"),
        ],
    )
}

pub fn single_bundle_f0() -> Graph {
    double_bundle_f0()
}

pub fn single_bundle_f1() -> Graph {
    Graph::build(
        &["u", "v"],
        vec![EdgeDecl::one("d", "u", "u"), EdgeDecl::one("e", "v", "u")],
    )
}

pub fn single_bundle_f2() -> Graph {
    double_bundle_f2()
}

/// The double-bundle span with every relative set equal to the regular vertices.
pub fn double_bundle_span() -> PushoutDiagram {
    PushoutDiagram::new(
        RelativeGraph::cuntz_krieger(double_bundle_f0()),
        RelativeGraph::cuntz_krieger(double_bundle_f1()),
        RelativeGraph::cuntz_krieger(double_bundle_f2()),
    )
    .expect("double-bundle span is valid")
}

/// The single-bundle span with every relative set equal to the regular vertices.
pub fn single_bundle_span() -> PushoutDiagram {
    PushoutDiagram::new(
        RelativeGraph::cuntz_krieger(single_bundle_f0()),
        RelativeGraph::cuntz_krieger(single_bundle_f1()),
        RelativeGraph::cuntz_krieger(single_bundle_f2()),
    )
    .expect("single-bundle span is valid")
}

/// `F₀ = {u}` with no edges, `F₁` adds `e: v → u`, `F₂` adds `f: w → u`,
/// all relative sets empty.
pub fn star_span() -> PushoutDiagram {
    PushoutDiagram::new(
        RelativeGraph::toeplitz(Graph::build(&["u"], vec![])),
        RelativeGraph::toeplitz(Graph::build(
            &["u", "v"],
            vec![EdgeDecl::one("e", "v", "u")],
        )),
        RelativeGraph::toeplitz(Graph::build(
            &["u", "w"],
            vec![EdgeDecl::one("f", "w", "u")],
        )),
    )
    .expect("star span is valid")
}

/// Acyclic span where `u` is regular in all three graphs: `F₀` has `g: x → u`,
/// `F₁` adds `e: v → u`, `F₂` adds `f: w → u`. `A₀ = a0`, `A₁ = A₂ = ∅`.
pub fn fed_star_span(a0: &[&str]) -> PushoutDiagram {
    let g = EdgeDecl::one("g", "x", "u");
    PushoutDiagram::new(
        RelativeGraph {
            graph: Graph::build(&["u", "x"], vec![g.clone()]),
            a: vset(a0.iter().copied()),
        },
        RelativeGraph::toeplitz(Graph::build(
            &["u", "v", "x"],
            vec![g.clone(), EdgeDecl::one("e", "v", "u")],
        )),
        RelativeGraph::toeplitz(Graph::build(
            &["u", "w", "x"],
            vec![g, EdgeDecl::one("f", "w", "u")],
        )),
    )
    .expect("fed star span is valid")
}

/// `F₀ = F₁ = F₂ = obj`.
pub fn degenerate_span(obj: RelativeGraph) -> PushoutDiagram {
    PushoutDiagram::new(obj.clone(), obj.clone(), obj).expect("degenerate span is valid")
}
