//! Directed graphs in the range/source ("receives") convention.
//!
//! A vertex `v` *receives* the edges in `r⁻¹(v)`. Paths are written
//! `e₁e₂…eₙ` with `s(eᵢ) = r(eᵢ₊₁)`, so extending a path means appending an
//! edge received by its current source. Vertices receiving infinitely many
//! edges are modelled by edge declarations of [`Cardinality::Infinite`]
//! (bundles); individual bundle members are addressed by a 1-based index.

use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Violation};

/// Name of a vertex. Names are the identity of vertices across inclusions.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexId(String);

impl VertexId {
    pub fn new(name: impl Into<String>) -> Self {
        VertexId(name.into())
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Debug for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl From<&str> for VertexId {
    fn from(s: &str) -> Self {
        VertexId(s.to_owned())
    }
}

impl std::borrow::Borrow<str> for VertexId {
    fn borrow(&self) -> &str {
        &self.0
    }
}

pub type VertexSet = BTreeSet<VertexId>;

/// Builds a [`VertexSet`] from string names.
pub fn vset<'a, I: IntoIterator<Item = &'a str>>(names: I) -> VertexSet {
    names.into_iter().map(VertexId::from).collect()
}

/// Renders a vertex set as `{a,b,c}`.
pub fn fmt_set(set: &VertexSet) -> String {
    let names: Vec<&str> = set.iter().map(VertexId::as_str).collect();
    format!("{{{}}}", names.join(","))
}

/// Sort key used wherever vertex sets are listed: by size, then lexicographically.
pub(crate) fn set_key(set: &VertexSet) -> (usize, &VertexSet) {
    (set.len(), set)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Cardinality {
    #[serde(rename = "1")]
    One,
    #[serde(rename = "inf")]
    Infinite,
}

/// A named edge, or a named countably-infinite family of parallel edges.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeDecl {
    pub name: String,
    pub src: VertexId,
    pub rng: VertexId,
    pub card: Cardinality,
}

impl EdgeDecl {
    pub fn one(name: &str, src: &str, rng: &str) -> Self {
        EdgeDecl {
            name: name.to_owned(),
            src: src.into(),
            rng: rng.into(),
            card: Cardinality::One,
        }
    }

    pub fn bundle(name: &str, src: &str, rng: &str) -> Self {
        EdgeDecl {
            name: name.to_owned(),
            src: src.into(),
            rng: rng.into(),
            card: Cardinality::Infinite,
        }
    }

    pub fn is_bundle(&self) -> bool {
        self.card == Cardinality::Infinite
    }
}

/// A finite directed graph with optional infinite edge bundles.
///
/// Vertices and edge declarations are kept sorted by name. The constructor
/// [`Graph::from_parts`] does not validate; use [`Graph::new`] or
/// [`Graph::validate`] before relying on the invariants.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Graph {
    vertices: Vec<VertexId>,
    edges: Vec<EdgeDecl>,
}

impl Graph {
    pub fn new(vertices: Vec<VertexId>, edges: Vec<EdgeDecl>) -> Result<Self, Error> {
        let g = Graph::from_parts(vertices, edges);
        let violations = g.validate();
        if violations.is_empty() {
            Ok(g)
        } else {
            Err(Error::InvalidGraph(violations))
        }
    }

    pub fn from_parts(mut vertices: Vec<VertexId>, mut edges: Vec<EdgeDecl>) -> Self {
        vertices.sort();
        edges.sort_by(|a, b| a.name.cmp(&b.name).then_with(|| a.cmp(b)));
        Graph { vertices, edges }
    }

    /// Convenience constructor from names; panics on invalid input.
    pub fn build(vertices: &[&str], edges: Vec<EdgeDecl>) -> Self {
        Graph::new(vertices.iter().map(|v| VertexId::from(*v)).collect(), edges)
            .expect("invalid graph literal")
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.vertices.iter().cloned().collect()
    }

    pub fn edges(&self) -> &[EdgeDecl] {
        &self.edges
    }

    pub fn num_vertices(&self) -> usize {
        self.vertices.len()
    }

    pub fn has_vertex(&self, v: &VertexId) -> bool {
        self.vertices.binary_search(v).is_ok()
    }

    pub fn edge(&self, name: &str) -> Option<&EdgeDecl> {
        self.edges
            .binary_search_by(|d| d.name.as_str().cmp(name))
            .ok()
            .map(|i| &self.edges[i])
    }

    pub fn has_bundles(&self) -> bool {
        self.edges.iter().any(EdgeDecl::is_bundle)
    }

    /// Checks every structural invariant; an empty result means valid.
    pub fn validate(&self) -> Vec<Violation> {
        let mut out = Vec::new();
        for w in self.vertices.windows(2) {
            if w[0] == w[1] {
                out.push(Violation::DuplicateVertex(w[0].clone()));
            }
        }
        for v in &self.vertices {
            if v.as_str().is_empty() {
                out.push(Violation::EmptyName);
            }
        }
        let mut seen = BTreeSet::new();
        for d in &self.edges {
            if d.name.is_empty() {
                out.push(Violation::EmptyName);
            }
            if !seen.insert(d.name.as_str()) {
                out.push(Violation::DuplicateEdge(d.name.clone()));
            }
            for end in [&d.src, &d.rng] {
                if !self.has_vertex(end) {
                    out.push(Violation::UnresolvedVertex {
                        edge: d.name.clone(),
                        vertex: end.clone(),
                    });
                }
            }
        }
        out.dedup();
        out
    }

    /// Edge declarations received by `v`, i.e. `r⁻¹(v)`.
    pub fn received<'a>(&'a self, v: &'a VertexId) -> impl Iterator<Item = &'a EdgeDecl> + 'a {
        self.edges.iter().filter(move |d| &d.rng == v)
    }

    pub fn is_source(&self, v: &VertexId) -> bool {
        self.received(v).next().is_none()
    }

    pub fn is_infinite_receiver(&self, v: &VertexId) -> bool {
        self.received(v).any(EdgeDecl::is_bundle)
    }

    pub fn is_regular(&self, v: &VertexId) -> bool {
        !self.is_source(v) && !self.is_infinite_receiver(v)
    }

    pub fn regular_vertices(&self) -> VertexSet {
        self.vertices
            .iter()
            .filter(|v| self.is_regular(v))
            .cloned()
            .collect()
    }

    pub fn singular_vertices(&self) -> VertexSet {
        self.vertices
            .iter()
            .filter(|v| !self.is_regular(v))
            .cloned()
            .collect()
    }

    pub fn sources(&self) -> VertexSet {
        self.vertices
            .iter()
            .filter(|v| self.is_source(v))
            .cloned()
            .collect()
    }

    pub fn infinite_receivers(&self) -> VertexSet {
        self.vertices
            .iter()
            .filter(|v| self.is_infinite_receiver(v))
            .cloned()
            .collect()
    }

    /// `s(vE*)`: every vertex that is the source of a path with range `v`,
    /// including `v` itself.
    pub fn backward_reach(&self, v: &VertexId) -> VertexSet {
        self.hereditary_closure(&std::iter::once(v.clone()).collect())
    }

    /// Least hereditary superset of `seed`: closed under passing from the
    /// range of an edge to its source.
    pub fn hereditary_closure(&self, seed: &VertexSet) -> VertexSet {
        let preds = self.predecessor_map();
        let mut out = seed.clone();
        let mut queue: VecDeque<&VertexId> = seed.iter().collect();
        while let Some(v) = queue.pop_front() {
            if let Some(srcs) = preds.get(v) {
                for s in srcs {
                    if out.insert((*s).clone()) {
                        queue.push_back(s);
                    }
                }
            }
        }
        out
    }

    /// Least edge (by name) with range in `h` and source outside `h`, if any.
    pub fn heredity_witness(&self, h: &VertexSet) -> Option<&EdgeDecl> {
        self.edges
            .iter()
            .find(|d| h.contains(&d.rng) && !h.contains(&d.src))
    }

    pub fn is_hereditary(&self, h: &VertexSet) -> bool {
        self.heredity_witness(h).is_none()
    }

    /// Every regular vertex whose received edges all have source in `h` lies in `h`.
    pub fn is_saturated(&self, h: &VertexSet) -> bool {
        self.vertices.iter().all(|v| {
            h.contains(v) || !self.is_regular(v) || !self.received(v).all(|d| h.contains(&d.src))
        })
    }

    /// The subgraph `F_H` on `E⁰ \ H` with the edges between its vertices.
    pub fn complement_subgraph(&self, h: &VertexSet) -> Result<Graph, Error> {
        if let Some(d) = self.heredity_witness(h) {
            return Err(Error::NotHereditary {
                edge: d.name.clone(),
            });
        }
        Ok(self.restrict_unchecked(h))
    }

    pub(crate) fn restrict_unchecked(&self, h: &VertexSet) -> Graph {
        Graph {
            vertices: self
                .vertices
                .iter()
                .filter(|v| !h.contains(*v))
                .cloned()
                .collect(),
            edges: self
                .edges
                .iter()
                .filter(|d| !h.contains(&d.src) && !h.contains(&d.rng))
                .cloned()
                .collect(),
        }
    }

    /// `B_H = reg F_H ∩ sing E`.
    pub fn breaking_vertices(&self, h: &VertexSet) -> Result<VertexSet, Error> {
        let f = self.complement_subgraph(h)?;
        Ok(f.regular_vertices()
            .into_iter()
            .filter(|v| !self.is_regular(v))
            .collect())
    }

    /// True iff an infinite path starting at `start` exists with every visited
    /// vertex in `allowed`; equivalently a cycle is reachable from `start`
    /// along arcs `r(d) → s(d)` inside `allowed`.
    pub fn reaches_cycle(&self, start: &VertexId, allowed: &VertexSet) -> bool {
        if !allowed.contains(start) {
            return false;
        }
        let preds = self.predecessor_map();
        // Vertices reachable from `start` inside `allowed`.
        let mut reach: BTreeSet<&VertexId> = BTreeSet::new();
        let mut queue = VecDeque::from([start]);
        reach.insert(start);
        while let Some(v) = queue.pop_front() {
            for s in preds.get(v).into_iter().flatten() {
                if allowed.contains(*s) && reach.insert(s) {
                    queue.push_back(s);
                }
            }
        }
        // Kahn's algorithm on the reached subgraph: a cycle exists iff some
        // vertex never drops to out-degree zero.
        let mut outdeg: BTreeMap<&VertexId, usize> = reach.iter().map(|v| (*v, 0)).collect();
        let mut succs: BTreeMap<&VertexId, Vec<&VertexId>> = BTreeMap::new();
        for d in &self.edges {
            if reach.contains(&d.rng) && reach.contains(&d.src) {
                *outdeg.get_mut(&d.rng).unwrap() += 1;
                succs.entry(&d.src).or_default().push(&d.rng);
            }
        }
        let mut done: VecDeque<&VertexId> = outdeg
            .iter()
            .filter(|(_, n)| **n == 0)
            .map(|(v, _)| *v)
            .collect();
        let mut removed = 0;
        while let Some(v) = done.pop_front() {
            removed += 1;
            for p in succs.get(v).into_iter().flatten() {
                let n = outdeg.get_mut(p).unwrap();
                *n -= 1;
                if *n == 0 {
                    done.push_back(p);
                }
            }
        }
        removed < reach.len()
    }

    /// True iff the graph has no directed cycle at all.
    pub fn is_acyclic(&self) -> bool {
        let all = self.vertex_set();
        !self.vertices.iter().any(|v| self.reaches_cycle(v, &all))
    }

    /// All paths of length at most `max_len` whose bundle indices lie in
    /// `1..=max_bundle_index`, sorted by (length, edges, range).
    pub fn enumerate_paths(&self, max_len: usize, max_bundle_index: u32) -> Vec<Path> {
        let mut out: Vec<Path> = self
            .vertices
            .iter()
            .map(|v| Path::vertex(v.clone()))
            .collect();
        let mut frontier: Vec<(Path, &VertexId)> = self
            .vertices
            .iter()
            .map(|v| (Path::vertex(v.clone()), v))
            .collect();
        for _ in 0..max_len {
            let mut next = Vec::new();
            for (p, src) in &frontier {
                for d in self.received(src) {
                    for member in self.members(d, max_bundle_index) {
                        let mut q = p.clone();
                        q.steps.push(member);
                        next.push((q, &d.src));
                    }
                }
            }
            out.extend(next.iter().map(|(p, _)| p.clone()));
            frontier = next;
        }
        out.sort();
        out
    }

    fn members(&self, d: &EdgeDecl, max_bundle_index: u32) -> Vec<EdgeRef> {
        match d.card {
            Cardinality::One => vec![EdgeRef::single(&d.name)],
            Cardinality::Infinite => (1..=max_bundle_index)
                .map(|i| EdgeRef::member(&d.name, i))
                .collect(),
        }
    }

    /// Source vertex of a valid path.
    pub fn path_source<'a>(&'a self, p: &'a Path) -> &'a VertexId {
        match p.steps.last() {
            None => &p.root,
            Some(e) => &self.edge(&e.decl).expect("path over unknown edge").src,
        }
    }

    pub fn validate_path(&self, p: &Path) -> Result<(), Error> {
        let bad = |reason: &str| Err(Error::InvalidPath(format!("{p}: {reason}")));
        if !self.has_vertex(&p.root) {
            return bad("unknown root vertex");
        }
        let mut at = &p.root;
        for step in &p.steps {
            let Some(d) = self.edge(&step.decl) else {
                return bad("unknown edge");
            };
            match (d.card, step.index) {
                (Cardinality::One, None) => {}
                (Cardinality::Infinite, Some(i)) if i >= 1 => {}
                _ => return bad("bundle index does not match declaration"),
            }
            if &d.rng != at {
                return bad("consecutive edges do not compose");
            }
            at = &d.src;
        }
        Ok(())
    }

    /// Vertices visited by a valid path, range first.
    pub fn path_vertices(&self, p: &Path) -> Vec<VertexId> {
        let mut out = vec![p.root.clone()];
        for step in &p.steps {
            out.push(self.edge(&step.decl).expect("unknown edge").src.clone());
        }
        out
    }

    pub fn validate_lasso(&self, x: &Lasso) -> Result<(), Error> {
        self.validate_path(&x.prefix)?;
        self.validate_path(&x.cycle)?;
        if x.cycle.is_empty() {
            return Err(Error::InvalidPath("lasso cycle is empty".into()));
        }
        let top = &x.cycle.root;
        if self.path_source(&x.prefix) != top || self.path_source(&x.cycle) != top {
            return Err(Error::InvalidPath(format!(
                "lasso {x} does not close at {top}"
            )));
        }
        Ok(())
    }

    /// Map from a vertex to the sources of the edges it receives.
    fn predecessor_map(&self) -> BTreeMap<&VertexId, Vec<&VertexId>> {
        let mut m: BTreeMap<&VertexId, Vec<&VertexId>> = BTreeMap::new();
        for d in &self.edges {
            m.entry(&d.rng).or_default().push(&d.src);
        }
        m
    }
}

/// A single member of `E¹`: a plain edge, or the `index`-th member of a bundle.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeRef {
    pub decl: String,
    pub index: Option<u32>,
}

impl EdgeRef {
    pub fn single(name: &str) -> Self {
        EdgeRef {
            decl: name.to_owned(),
            index: None,
        }
    }

    pub fn member(name: &str, index: u32) -> Self {
        EdgeRef {
            decl: name.to_owned(),
            index: Some(index),
        }
    }
}

impl fmt::Display for EdgeRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.index {
            None => f.write_str(&self.decl),
            Some(i) => write!(f, "{}[{}]", self.decl, i),
        }
    }
}

impl fmt::Debug for EdgeRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// A finite path `e₁…eₙ` with range `root`; the empty path is the vertex itself.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Path {
    pub root: VertexId,
    pub steps: Vec<EdgeRef>,
}

impl Path {
    pub fn vertex(v: VertexId) -> Self {
        Path {
            root: v,
            steps: Vec::new(),
        }
    }

    pub fn new(root: &str, steps: Vec<EdgeRef>) -> Self {
        Path {
            root: root.into(),
            steps,
        }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// `self` followed by `other`; valid iff `s(self) = r(other)`.
    pub fn concat(&self, other: &Path, g: &Graph) -> Option<Path> {
        if g.path_source(self) != &other.root {
            return None;
        }
        let mut steps = self.steps.clone();
        steps.extend(other.steps.iter().cloned());
        Some(Path {
            root: self.root.clone(),
            steps,
        })
    }
}

impl Ord for Path {
    fn cmp(&self, other: &Self) -> Ordering {
        self.steps
            .len()
            .cmp(&other.steps.len())
            .then_with(|| self.steps.cmp(&other.steps))
            .then_with(|| self.root.cmp(&other.root))
    }
}

impl PartialOrd for Path {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.steps.is_empty() {
            return write!(f, "{}", self.root);
        }
        let parts: Vec<String> = self.steps.iter().map(ToString::to_string).collect();
        f.write_str(&parts.join("."))
    }
}

impl fmt::Debug for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The eventually periodic infinite path `prefix · cycle · cycle · …`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Lasso {
    pub prefix: Path,
    pub cycle: Path,
}

impl Lasso {
    /// Vertices visited by the infinite path.
    pub fn visited(&self, g: &Graph) -> VertexSet {
        g.path_vertices(&self.prefix)
            .into_iter()
            .chain(g.path_vertices(&self.cycle))
            .collect()
    }
}

impl fmt::Display for Lasso {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}({})^inf", self.prefix, self.cycle)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    fn names(ps: &[Path]) -> Vec<String> {
        ps.iter().map(ToString::to_string).collect()
    }

    #[test]
    fn double_bundle_is_valid_with_no_regular_vertices() {
        let g = fixtures::double_bundle_graph();
        assert!(g.validate().is_empty());
        assert!(g.regular_vertices().is_empty());
        assert_eq!(g.infinite_receivers(), vset(["u"]));
        assert_eq!(g.sources(), vset(["v", "w"]));
    }

    #[test]
    fn empty_graph_is_valid() {
        assert!(Graph::default().validate().is_empty());
    }

    #[test]
    fn unresolved_vertex_is_reported() {
        let g = Graph::from_parts(vec!["u".into()], vec![EdgeDecl::one("e", "x", "u")]);
        assert_eq!(
            g.validate(),
            vec![Violation::UnresolvedVertex {
                edge: "e".into(),
                vertex: "x".into()
            }]
        );
    }

    #[test]
    fn duplicate_names_are_reported() {
        let g = Graph::from_parts(
            vec!["u".into(), "u".into()],
            vec![EdgeDecl::one("e", "u", "u"), EdgeDecl::one("e", "u", "u")],
        );
        let v = g.validate();
        assert!(v.contains(&Violation::DuplicateVertex("u".into())));
        assert!(v.contains(&Violation::DuplicateEdge("e".into())));
    }

    #[test]
    fn single_bundle_regularity() {
        let e = fixtures::single_bundle_graph();
        assert!(e.regular_vertices().is_empty());
        let f1 = fixtures::single_bundle_f1();
        assert_eq!(f1.regular_vertices(), vset(["u"]));
    }

    #[test]
    fn loop_vertex_is_regular() {
        assert_eq!(fixtures::loop_graph().regular_vertices(), vset(["v"]));
    }

    #[test]
    fn hereditary_closure_examples() {
        let g = fixtures::double_bundle_graph();
        assert_eq!(g.hereditary_closure(&vset(["v"])), vset(["v"]));
        assert_eq!(g.hereditary_closure(&vset(["u"])), vset(["u", "v", "w"]));
        assert_eq!(g.hereditary_closure(&VertexSet::new()), VertexSet::new());
    }

    #[test]
    fn saturation_examples() {
        let f1 = fixtures::single_bundle_f1();
        assert!(f1.is_saturated(&vset(["v"])));
        let chain = fixtures::chain_graph();
        assert!(!chain.is_saturated(&vset(["v"])));
        for g in [
            fixtures::double_bundle_graph(),
            fixtures::single_bundle_graph(),
            chain,
        ] {
            let all = g.vertex_set();
            assert!(g.is_hereditary(&all) && g.is_saturated(&all));
        }
    }

    #[test]
    fn complement_subgraph_examples() {
        let g = fixtures::double_bundle_graph();
        let f = g.complement_subgraph(&vset(["v", "w"])).unwrap();
        assert_eq!(f, Graph::build(&["u"], vec![EdgeDecl::one("d", "u", "u")]));
        assert_eq!(g.complement_subgraph(&VertexSet::new()).unwrap(), g);
        let e8 = fixtures::single_bundle_graph();
        assert_eq!(
            e8.complement_subgraph(&vset(["w"])).unwrap(),
            fixtures::single_bundle_f1()
        );
        assert!(matches!(
            g.complement_subgraph(&vset(["u"])),
            Err(Error::NotHereditary { .. })
        ));
    }

    #[test]
    fn breaking_vertex_examples() {
        assert_eq!(
            fixtures::double_bundle_f1()
                .breaking_vertices(&vset(["v"]))
                .unwrap(),
            vset(["u"])
        );
        assert!(fixtures::single_bundle_f1()
            .breaking_vertices(&vset(["v"]))
            .unwrap()
            .is_empty());
        for g in [
            fixtures::double_bundle_graph(),
            fixtures::single_bundle_graph(),
            fixtures::loop_graph(),
        ] {
            assert!(g.breaking_vertices(&VertexSet::new()).unwrap().is_empty());
        }
    }

    #[test]
    fn path_enumeration_examples() {
        let chain = fixtures::chain_graph();
        assert_eq!(names(&chain.enumerate_paths(2, 2)), ["u", "v", "e"]);
        let lp = fixtures::loop_graph();
        assert_eq!(names(&lp.enumerate_paths(3, 2)), ["v", "d", "d.d", "d.d.d"]);
        let g7 = fixtures::double_bundle_graph();
        assert!(g7.enumerate_paths(0, 2).iter().all(Path::is_empty));
        // bundle members are enumerated up to the index bound
        let one = g7.enumerate_paths(1, 2);
        assert_eq!(
            names(&one),
            ["u", "v", "w", "d", "e[1]", "e[2]", "f[1]", "f[2]"]
        );
    }

    #[test]
    fn reaches_cycle_examples() {
        let lp = fixtures::loop_graph();
        assert!(lp.reaches_cycle(&"v".into(), &vset(["v"])));
        let chain = fixtures::chain_graph();
        assert!(!chain.reaches_cycle(&"u".into(), &chain.vertex_set()));
        let g7 = fixtures::double_bundle_graph();
        assert!(g7.reaches_cycle(&"u".into(), &vset(["u"])));
        assert!(!g7.reaches_cycle(&"v".into(), &g7.vertex_set()));
    }

    #[test]
    fn path_validation_and_lassos() {
        let g7 = fixtures::double_bundle_graph();
        let p = Path::new("u", vec![EdgeRef::single("d"), EdgeRef::member("e", 3)]);
        assert!(g7.validate_path(&p).is_ok());
        assert_eq!(g7.path_source(&p), &VertexId::from("v"));
        let bad = Path::new("u", vec![EdgeRef::single("e")]);
        assert!(g7.validate_path(&bad).is_err());
        let lasso = Lasso {
            prefix: Path::vertex("u".into()),
            cycle: Path::new("u", vec![EdgeRef::single("d")]),
        };
        assert!(g7.validate_lasso(&lasso).is_ok());
        let open = Lasso {
            prefix: Path::vertex("u".into()),
            cycle: p,
        };
        assert!(g7.validate_lasso(&open).is_err());
    }

    #[test]
    fn concat_requires_matching_endpoints() {
        let g7 = fixtures::double_bundle_graph();
        let d = Path::new("u", vec![EdgeRef::single("d")]);
        let e = Path::new("u", vec![EdgeRef::member("e", 1)]);
        let de = d.concat(&e, &g7).unwrap();
        assert_eq!(de.len(), 2);
        assert!(g7.validate_path(&de).is_ok());
        assert!(e.concat(&d, &g7).is_none());
    }
}
