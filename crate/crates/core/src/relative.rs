//! Relative graphs `(F, B)` and the inclusion morphisms between them.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Violation};
use crate::graph::{fmt_set, Graph, VertexSet};

/// A graph together with a set of regular vertices at which the
/// summation relation is imposed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelativeGraph {
    pub graph: Graph,
    pub a: VertexSet,
}

impl RelativeGraph {
    pub fn new(graph: Graph, a: VertexSet) -> Result<Self, Error> {
        let rg = RelativeGraph { graph, a };
        let graph_violations = rg.graph.validate();
        if !graph_violations.is_empty() {
            return Err(Error::InvalidGraph(graph_violations));
        }
        let violations = rg.validate();
        if violations.is_empty() {
            Ok(rg)
        } else {
            Err(Error::InvalidRelative(violations))
        }
    }

    /// The relative graph `(graph, ∅)`, the Toeplitz case.
    pub fn toeplitz(graph: Graph) -> Self {
        RelativeGraph {
            graph,
            a: VertexSet::new(),
        }
    }

    /// The relative graph `(graph, reg graph)`, the Cuntz-Krieger case.
    pub fn cuntz_krieger(graph: Graph) -> Self {
        let a = graph.regular_vertices();
        RelativeGraph { graph, a }
    }

    /// Reports every vertex of `A` that is unknown or singular.
    pub fn validate(&self) -> Vec<Violation> {
        self.a
            .iter()
            .filter_map(|v| {
                if !self.graph.has_vertex(v) {
                    Some(Violation::UnknownRelativeVertex(v.clone()))
                } else if !self.graph.is_regular(v) {
                    Some(Violation::NotRegular(v.clone()))
                } else {
                    None
                }
            })
            .collect()
    }
}

impl fmt::Display for RelativeGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<&str> = self.graph.edges().iter().map(|d| d.name.as_str()).collect();
        write!(
            f,
            "({}, {{{}}}; A={})",
            fmt_set(&self.graph.vertex_set()),
            edges.join(","),
            fmt_set(&self.a)
        )
    }
}

/// Checks the morphism conditions for the name-level inclusion `sub ↪ amb`.
///
/// Each failed condition is reported once, with its least witness.
pub fn check_morphism(sub: &RelativeGraph, amb: &RelativeGraph) -> Vec<Violation> {
    let (f, e) = (&sub.graph, &amb.graph);
    let mut out = Vec::new();

    if let Some(v) = f.vertices().iter().find(|v| !e.has_vertex(v)) {
        out.push(Violation::MissingVertex(v.clone()));
    }
    if let Some(d) = f.edges().iter().find(|d| e.edge(&d.name).is_none()) {
        out.push(Violation::MissingEdge(d.name.clone()));
    }
    if let Some(d) = f
        .edges()
        .iter()
        .find(|d| e.edge(&d.name).is_some_and(|ed| ed != *d))
    {
        out.push(Violation::EdgeMismatch(d.name.clone()));
    }

    let h = complement_in(f, e);
    if let Some(d) = e.heredity_witness(&h) {
        out.push(Violation::NotHereditary {
            edge: d.name.clone(),
        });
    }
    if let Some(d) = e
        .edges()
        .iter()
        .find(|d| f.has_vertex(&d.src) && f.has_vertex(&d.rng) && f.edge(&d.name).is_none())
    {
        out.push(Violation::NotInduced {
            edge: d.name.clone(),
        });
    }
    if let Some(v) = amb
        .a
        .iter()
        .find(|v| f.has_vertex(v) && !sub.a.contains(*v))
    {
        out.push(Violation::RelativeSetNotContained(v.clone()));
    }
    out
}

/// `H_{F,E} = E⁰ \ F⁰`.
pub fn complement_in(sub: &Graph, amb: &Graph) -> VertexSet {
    amb.vertices()
        .iter()
        .filter(|v| !sub.has_vertex(v))
        .cloned()
        .collect()
}

/// A verified inclusion `(F, B) ↪ (E, A)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InclusionMorphism {
    sub: RelativeGraph,
    amb: RelativeGraph,
}

impl InclusionMorphism {
    pub fn new(sub: RelativeGraph, amb: RelativeGraph) -> Result<Self, Error> {
        let violations = check_morphism(&sub, &amb);
        if violations.is_empty() {
            Ok(InclusionMorphism { sub, amb })
        } else {
            Err(Error::InvalidMorphism(violations))
        }
    }

    pub fn identity(obj: RelativeGraph) -> Self {
        InclusionMorphism {
            sub: obj.clone(),
            amb: obj,
        }
    }

    pub fn sub(&self) -> &RelativeGraph {
        &self.sub
    }

    pub fn amb(&self) -> &RelativeGraph {
        &self.amb
    }

    /// `H_{F,E}`, the vertices of the target that the source lacks.
    pub fn complement(&self) -> VertexSet {
        complement_in(&self.sub.graph, &self.amb.graph)
    }

    /// `outer ∘ self`. The composite is re-checked rather than trusted.
    pub fn then(&self, outer: &InclusionMorphism) -> Result<InclusionMorphism, Error> {
        compose(self, outer)
    }
}

pub fn compose(
    inner: &InclusionMorphism,
    outer: &InclusionMorphism,
) -> Result<InclusionMorphism, Error> {
    if inner.amb != outer.sub {
        return Err(Error::MismatchedMiddle);
    }
    InclusionMorphism::new(inner.sub.clone(), outer.amb.clone()).map_err(|e| {
        Error::Consistency(format!("composite of two morphisms is not a morphism: {e}"))
    })
}

/// Generators of the kernel of `𝒯C*(E,A) → 𝒯C*(F,B)`: the vertex projections
/// `p_v` for `v ∈ H_{F,E}` and the gap projections `p_v − p_{v,H}` for `v ∈ B \ A`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdealGenerators {
    pub vertex_projections: VertexSet,
    pub gap_projections: VertexSet,
}

pub fn quotient_generators(mor: &InclusionMorphism) -> IdealGenerators {
    IdealGenerators {
        vertex_projections: mor.complement(),
        gap_projections: mor.sub.a.difference(&mor.amb.a).cloned().collect(),
    }
}
