//! Pushouts of spans of relative-graph inclusions.
//!
//! Given `(F₀,A₀) ↪ (F₁,A₁)` and `(F₀,A₀) ↪ (F₂,A₂)` with `F₁ ∩ F₂ = F₀` at
//! the level of names, the pushout is the union graph `E = F₁ ∪ F₂` with
//! `A = (A₁ \ F₀⁰) ∪ (A₂ \ F₀⁰) ∪ (A₁ ∩ A₂)`.

use crate::error::{Error, Violation};
use crate::graph::{EdgeDecl, Graph, VertexSet};
use crate::relative::{check_morphism, complement_in, compose, InclusionMorphism, RelativeGraph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PushoutDiagram {
    left: InclusionMorphism,
    right: InclusionMorphism,
}

impl PushoutDiagram {
    /// Builds the span `apex ↪ left`, `apex ↪ right`, checking both legs and
    /// the name-level overlap condition.
    pub fn new(
        apex: RelativeGraph,
        left: RelativeGraph,
        right: RelativeGraph,
    ) -> Result<Self, Error> {
        for rg in [&apex, &left, &right] {
            let gv = rg.graph.validate();
            if !gv.is_empty() {
                return Err(Error::InvalidGraph(gv));
            }
            let rv = rg.validate();
            if !rv.is_empty() {
                return Err(Error::InvalidRelative(rv));
            }
        }
        check_overlap(&apex.graph, &left.graph, &right.graph)?;
        let left = InclusionMorphism::new(apex.clone(), left)?;
        let right = InclusionMorphism::new(apex, right)?;
        Ok(PushoutDiagram { left, right })
    }

    pub fn apex(&self) -> &RelativeGraph {
        self.left.sub()
    }

    pub fn left(&self) -> &RelativeGraph {
        self.left.amb()
    }

    pub fn right(&self) -> &RelativeGraph {
        self.right.amb()
    }

    pub fn left_leg(&self) -> &InclusionMorphism {
        &self.left
    }

    pub fn right_leg(&self) -> &InclusionMorphism {
        &self.right
    }

    /// The same legs with `A₀` replaced.
    pub fn with_apex_set(&self, a0: VertexSet) -> Result<Self, Error> {
        let apex = RelativeGraph {
            graph: self.apex().graph.clone(),
            a: a0,
        };
        PushoutDiagram::new(apex, self.left().clone(), self.right().clone())
    }
}

/// Rejects any vertex or edge name shared by `F₁` and `F₂` but absent from
/// `F₀`, and any shared edge declared differently in the two graphs.
fn check_overlap(f0: &Graph, f1: &Graph, f2: &Graph) -> Result<(), Error> {
    for v in f1.vertices() {
        if f2.has_vertex(v) && !f0.has_vertex(v) {
            return Err(Error::Overlap(format!(
                "vertex {v} is shared but not in the apex"
            )));
        }
    }
    for d in f1.edges() {
        if let Some(d2) = f2.edge(&d.name) {
            if d2 != d {
                return Err(Error::Overlap(format!(
                    "edge {} is declared differently",
                    d.name
                )));
            }
            if f0.edge(&d.name).is_none() {
                return Err(Error::Overlap(format!(
                    "edge {} is shared but not in the apex",
                    d.name
                )));
            }
        }
    }
    Ok(())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PushoutResult {
    pub colimit: RelativeGraph,
    pub leg1: InclusionMorphism,
    pub leg2: InclusionMorphism,
}

impl PushoutResult {
    /// `H_{F₁,E}`.
    pub fn h1(&self) -> VertexSet {
        self.leg1.complement()
    }

    /// `H_{F₂,E}`.
    pub fn h2(&self) -> VertexSet {
        self.leg2.complement()
    }
}

pub fn compute_pushout(d: &PushoutDiagram) -> Result<PushoutResult, Error> {
    let (f0, f1, f2) = (d.apex(), d.left(), d.right());

    let mut vertices: Vec<_> = f1.graph.vertices().to_vec();
    vertices.extend(
        f2.graph
            .vertices()
            .iter()
            .filter(|v| !f1.graph.has_vertex(v))
            .cloned(),
    );
    let mut edges: Vec<EdgeDecl> = f1.graph.edges().to_vec();
    edges.extend(
        f2.graph
            .edges()
            .iter()
            .filter(|e| f1.graph.edge(&e.name).is_none())
            .cloned(),
    );
    let graph = Graph::new(vertices, edges)
        .map_err(|e| Error::Consistency(format!("union graph invalid: {e}")))?;

    let a: VertexSet =
        f1.a.iter()
            .chain(f2.a.iter())
            .filter(|v| !f0.graph.has_vertex(v) || (f1.a.contains(*v) && f2.a.contains(*v)))
            .cloned()
            .collect();
    let colimit = RelativeGraph { graph, a };
    if let Some(v) = colimit.validate().first() {
        return Err(Error::Consistency(format!(
            "pushout relative set not regular: {v}"
        )));
    }

    let leg = |f: &RelativeGraph| {
        InclusionMorphism::new(f.clone(), colimit.clone())
            .map_err(|e| Error::Consistency(format!("pushout leg is not a morphism: {e}")))
    };
    let res = PushoutResult {
        leg1: leg(f1)?,
        leg2: leg(f2)?,
        colimit: colimit.clone(),
    };

    let (h1, h2) = (res.h1(), res.h2());
    if !h1.is_disjoint(&h2) {
        return Err(Error::Consistency("H_{F1,E} and H_{F2,E} intersect".into()));
    }
    if h2 != complement_in(&f0.graph, &f1.graph) || h1 != complement_in(&f0.graph, &f2.graph) {
        return Err(Error::Consistency(
            "complement identities of the pushout fail".into(),
        ));
    }
    Ok(res)
}

/// `A₁₂ = (A₁ ∪ A₂) ∩ F₀⁰`. Contained in `A₀` for every valid span.
pub fn a12(d: &PushoutDiagram) -> VertexSet {
    let f0 = &d.apex().graph;
    d.left()
        .a
        .union(&d.right().a)
        .filter(|v| f0.has_vertex(v))
        .cloned()
        .collect()
}

/// A cocone `γ₁: (F₁,A₁) → (G,B)`, `γ₂: (F₂,A₂) → (G,B)` over a span.
#[derive(Clone, Debug)]
pub struct Cocone {
    pub left: InclusionMorphism,
    pub right: InclusionMorphism,
}

impl Cocone {
    /// Inclusions of both legs of `d` into `target`.
    pub fn into_target(d: &PushoutDiagram, target: RelativeGraph) -> Result<Self, Error> {
        Ok(Cocone {
            left: InclusionMorphism::new(d.left().clone(), target.clone())?,
            right: InclusionMorphism::new(d.right().clone(), target)?,
        })
    }
}

/// The unique inclusion `φ: (E,A) → (G,B)` with `φ∘βᵢ = γᵢ`.
pub fn mediating(
    d: &PushoutDiagram,
    res: &PushoutResult,
    cocone: &Cocone,
) -> Result<InclusionMorphism, Error> {
    if cocone.left.sub() != d.left() || cocone.right.sub() != d.right() {
        return Err(Error::Cocone(
            "cocone legs do not start at the span's legs".into(),
        ));
    }
    if cocone.left.amb() != cocone.right.amb() {
        return Err(Error::Cocone("cocone legs disagree on the target".into()));
    }
    let target = cocone.left.amb().clone();
    let violations: Vec<Violation> = check_morphism(&res.colimit, &target);
    if !violations.is_empty() {
        return Err(Error::Consistency(format!(
            "mediating inclusion is not a morphism: {}",
            Error::InvalidMorphism(violations)
        )));
    }
    let phi = InclusionMorphism::new(res.colimit.clone(), target)?;
    for (beta, gamma) in [(&res.leg1, &cocone.left), (&res.leg2, &cocone.right)] {
        if &compose(beta, &phi)? != gamma {
            return Err(Error::Consistency(
                "mediating map does not factor the cocone".into(),
            ));
        }
    }
    Ok(phi)
}
