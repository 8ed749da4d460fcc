use std::fmt;

use thiserror::Error;

use crate::graph::VertexId;

/// A structural defect found while validating a graph, relative graph or morphism.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Violation {
    EmptyName,
    DuplicateVertex(VertexId),
    DuplicateEdge(String),
    UnresolvedVertex {
        edge: String,
        vertex: VertexId,
    },
    /// A vertex of the relative set is not a vertex of the graph.
    UnknownRelativeVertex(VertexId),
    /// A vertex of the relative set is singular.
    NotRegular(VertexId),
    /// The subgraph has a vertex the ambient graph lacks.
    MissingVertex(VertexId),
    /// The subgraph has an edge the ambient graph lacks.
    MissingEdge(String),
    /// An edge is declared differently in the subgraph and the ambient graph.
    EdgeMismatch(String),
    /// `E⁰ \ F⁰` is not hereditary: `edge` has range outside `F` and source in `F`.
    NotHereditary {
        edge: String,
    },
    /// `F¹ ≠ F⁰E¹F⁰`: `edge` joins two vertices of `F` but is not in `F`.
    NotInduced {
        edge: String,
    },
    /// `A ∩ F⁰ ⊄ B`.
    RelativeSetNotContained(VertexId),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::EmptyName => write!(f, "empty name"),
            Violation::DuplicateVertex(v) => write!(f, "duplicate vertex {v}"),
            Violation::DuplicateEdge(e) => write!(f, "duplicate edge {e}"),
            Violation::UnresolvedVertex { edge, vertex } => {
                write!(f, "unresolved vertex {vertex} in edge {edge}")
            }
            Violation::UnknownRelativeVertex(v) => {
                write!(f, "relative set names unknown vertex {v}")
            }
            Violation::NotRegular(v) => write!(f, "relative set contains singular vertex {v}"),
            Violation::MissingVertex(v) => write!(f, "vertex {v} missing from ambient graph"),
            Violation::MissingEdge(e) => write!(f, "edge {e} missing from ambient graph"),
            Violation::EdgeMismatch(e) => {
                write!(f, "edge {e} declared differently in ambient graph")
            }
            Violation::NotHereditary { edge } => {
                write!(f, "complement not hereditary, witness edge {edge}")
            }
            Violation::NotInduced { edge } => {
                write!(f, "subgraph not induced, missing edge {edge}")
            }
            Violation::RelativeSetNotContained(v) => {
                write!(f, "{v} lies in A ∩ F⁰ but not in B")
            }
        }
    }
}

fn list(vs: &[Violation]) -> String {
    vs.iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid graph: {}", list(.0))]
    InvalidGraph(Vec<Violation>),
    #[error("invalid relative graph: {}", list(.0))]
    InvalidRelative(Vec<Violation>),
    #[error("invalid morphism: {}", list(.0))]
    InvalidMorphism(Vec<Violation>),
    #[error("vertex set is not hereditary (witness edge {edge})")]
    NotHereditary { edge: String },
    #[error("invalid ideal code: {0}")]
    InvalidCode(String),
    #[error("invalid path: {0}")]
    InvalidPath(String),
    #[error("morphisms do not compose: middle objects differ")]
    MismatchedMiddle,
    #[error("pushout overlap condition violated: {0}")]
    Overlap(String),
    #[error("cocone does not match the diagram: {0}")]
    Cocone(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
    /// A proven identity failed to hold; always a bug in this crate.
    #[error("internal consistency failure: {0}")]
    Consistency(String),
}

impl Error {
    pub fn is_consistency(&self) -> bool {
        matches!(self, Error::Consistency(_))
    }
}
