//! JSON file formats for graphs and relative graphs.
//!
//! ```json
//! {"vertices": ["u", "v"], "edges": [{"name": "e", "src": "v", "rng": "u", "card": "1"}], "A": ["u"]}
//! ```
//!
//! The `"A"` key is only accepted in relative-graph files. Unknown keys are
//! rejected.

use serde::{Deserialize, Serialize};

use crate::error::Error;
use crate::graph::{Cardinality, EdgeDecl, Graph, VertexId};
use crate::relative::RelativeGraph;

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeFile {
    name: String,
    src: String,
    rng: String,
    card: Cardinality,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct GraphFile {
    vertices: Vec<String>,
    edges: Vec<EdgeFile>,
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct RelativeFile {
    vertices: Vec<String>,
    edges: Vec<EdgeFile>,
    #[serde(rename = "A")]
    a: Vec<String>,
}

fn to_graph(vertices: Vec<String>, edges: Vec<EdgeFile>) -> Result<Graph, Error> {
    let vs = vertices.into_iter().map(VertexId::new).collect();
    let es = edges
        .into_iter()
        .map(|e| EdgeDecl {
            name: e.name,
            src: VertexId::new(e.src),
            rng: VertexId::new(e.rng),
            card: e.card,
        })
        .collect();
    Graph::new(vs, es)
}

fn edge_files(g: &Graph) -> Vec<EdgeFile> {
    g.edges()
        .iter()
        .map(|d| EdgeFile {
            name: d.name.clone(),
            src: d.src.to_string(),
            rng: d.rng.to_string(),
            card: d.card,
        })
        .collect()
}

fn names(vs: impl IntoIterator<Item = VertexId>) -> Vec<String> {
    vs.into_iter().map(|v| v.to_string()).collect()
}

pub fn parse_graph(text: &str) -> Result<Graph, Error> {
    let f: GraphFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    to_graph(f.vertices, f.edges)
}

pub fn parse_relative(text: &str) -> Result<RelativeGraph, Error> {
    let f: RelativeFile = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let g = to_graph(f.vertices, f.edges)?;
    RelativeGraph::new(g, f.a.into_iter().map(VertexId::new).collect())
}

/// A relative graph file, or a plain graph file read as `(E, ∅)`.
pub fn parse_relative_or_graph(text: &str) -> Result<RelativeGraph, Error> {
    match parse_graph(text) {
        Ok(g) => Ok(RelativeGraph::toeplitz(g)),
        Err(Error::Parse(_)) => parse_relative(text),
        Err(e) => Err(e),
    }
}

pub fn graph_to_json(g: &Graph) -> String {
    let f = GraphFile {
        vertices: names(g.vertices().iter().cloned()),
        edges: edge_files(g),
    };
    serde_json::to_string_pretty(&f).expect("graph serializes")
}

pub fn relative_to_json(rg: &RelativeGraph) -> String {
    let f = RelativeFile {
        vertices: names(rg.graph.vertices().iter().cloned()),
        edges: edge_files(&rg.graph),
        a: names(rg.a.iter().cloned()),
    };
    serde_json::to_string_pretty(&f).expect("relative graph serializes")
}
