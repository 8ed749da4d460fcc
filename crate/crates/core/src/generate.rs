//! Seeded random graphs, spans and cocones for property tests and benchmarks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{EdgeDecl, Graph, VertexId, VertexSet};
use crate::pushout::{Cocone, PushoutDiagram, PushoutResult};
use crate::relative::RelativeGraph;

pub fn seeded(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn vertex_names(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("v{i}")).collect()
}

/// `n` vertices `v0..`, `m` edges `e0..` with uniform endpoints, of which at
/// most `max_bundles` are infinite bundles.
pub fn random_graph<R: Rng>(rng: &mut R, n: usize, m: usize, max_bundles: usize) -> Graph {
    let names = vertex_names(n);
    let mut edges = Vec::new();
    if n > 0 {
        let bundles = rng.gen_range(0..=max_bundles.min(m));
        for i in 0..m {
            let src = &names[rng.gen_range(0..n)];
            let rng_v = &names[rng.gen_range(0..n)];
            let name = format!("e{i}");
            edges.push(if i < bundles {
                EdgeDecl::bundle(&name, src, rng_v)
            } else {
                EdgeDecl::one(&name, src, rng_v)
            });
        }
    }
    Graph::new(names.into_iter().map(VertexId::new).collect(), edges)
        .expect("generated graph is valid")
}

/// Acyclic and bundle-free: every edge runs from a higher index to a lower one.
pub fn random_acyclic<R: Rng>(rng: &mut R, n: usize, m: usize) -> Graph {
    let names = vertex_names(n);
    let mut edges = Vec::new();
    if n > 1 {
        for i in 0..m {
            let a = rng.gen_range(1..n);
            let b = rng.gen_range(0..a);
            edges.push(EdgeDecl::one(&format!("e{i}"), &names[a], &names[b]));
        }
    }
    Graph::new(names.into_iter().map(VertexId::new).collect(), edges)
        .expect("generated graph is valid")
}

fn random_subset<R: Rng>(rng: &mut R, s: &VertexSet) -> VertexSet {
    s.iter().filter(|_| rng.gen_bool(0.5)).cloned().collect()
}

pub fn random_relative<R: Rng>(rng: &mut R, g: Graph) -> RelativeGraph {
    let a = random_subset(rng, &g.regular_vertices());
    RelativeGraph { graph: g, a }
}

/// Hereditary closure of a random seed avoiding `forbidden` reachers.
fn random_hereditary<R: Rng>(rng: &mut R, g: &Graph, avoid: &VertexSet) -> VertexSet {
    let candidates: Vec<&VertexId> = g
        .vertices()
        .iter()
        .filter(|v| g.backward_reach(v).is_disjoint(avoid))
        .collect();
    let seed: VertexSet = candidates
        .into_iter()
        .filter(|_| rng.gen_bool(0.3))
        .cloned()
        .collect();
    g.hereditary_closure(&seed)
}

/// A random span over `e` whose pushout graph is `e`.
///
/// Picks disjoint hereditary `H₁`, `H₂` and sets `Fᵢ = F_{Hᵢ}`,
/// `F₀ = F_{H₁ ∪ H₂}`. With `ck` every relative set is the regular set and
/// `None` is returned if that choice does not give a valid span.
pub fn random_span<R: Rng>(rng: &mut R, e: &Graph, ck: bool) -> Option<PushoutDiagram> {
    let h1 = random_hereditary(rng, e, &VertexSet::new());
    let h2 = random_hereditary(rng, e, &h1);
    let h12: VertexSet = h1.union(&h2).cloned().collect();
    let f1 = e.complement_subgraph(&h1).ok()?;
    let f2 = e.complement_subgraph(&h2).ok()?;
    let f0 = e.complement_subgraph(&h12).ok()?;
    if ck {
        return PushoutDiagram::new(
            RelativeGraph::cuntz_krieger(f0),
            RelativeGraph::cuntz_krieger(f1),
            RelativeGraph::cuntz_krieger(f2),
        )
        .ok();
    }
    let reg0 = f0.regular_vertices();
    let mut pick = |f: &Graph| -> VertexSet {
        let allowed: VertexSet = f
            .regular_vertices()
            .into_iter()
            .filter(|v| !f0.has_vertex(v) || reg0.contains(v))
            .collect();
        random_subset(rng, &allowed)
    };
    let a1 = pick(&f1);
    let a2 = pick(&f2);
    let mut a0: VertexSet = a1
        .union(&a2)
        .filter(|v| f0.has_vertex(v))
        .cloned()
        .collect();
    a0.extend(random_subset(rng, &reg0));
    PushoutDiagram::new(
        RelativeGraph { graph: f0, a: a0 },
        RelativeGraph { graph: f1, a: a1 },
        RelativeGraph { graph: f2, a: a2 },
    )
    .ok()
}

/// A random cocone over `d` through an enlargement of the pushout.
///
/// New vertices `n0..` and new edges `x0..` with source among the new
/// vertices keep the old vertices' complement hereditary and the old part
/// induced.
pub fn random_cocone<R: Rng>(rng: &mut R, d: &PushoutDiagram, res: &PushoutResult) -> Cocone {
    let e = &res.colimit;
    let k = rng.gen_range(0..=2);
    let new: Vec<String> = (0..k).map(|i| format!("n{i}")).collect();
    let mut vertices: Vec<VertexId> = e.graph.vertices().to_vec();
    vertices.extend(new.iter().map(|s| VertexId::new(s.as_str())));
    let mut edges = e.graph.edges().to_vec();
    if k > 0 {
        for i in 0..rng.gen_range(0..=3) {
            let src = new.choose(rng).unwrap();
            let rng_v = vertices.choose(rng).unwrap().clone();
            edges.push(EdgeDecl::one(&format!("x{i}"), src, rng_v.as_str()));
        }
    }
    let g = Graph::new(vertices, edges).expect("enlarged graph is valid");
    let reg = g.regular_vertices();
    let old: VertexSet = e.a.intersection(&reg).cloned().collect();
    let fresh: VertexSet = reg
        .iter()
        .filter(|v| !e.graph.has_vertex(v))
        .cloned()
        .collect();
    let mut b = random_subset(rng, &old);
    b.extend(random_subset(rng, &fresh));
    Cocone::into_target(d, RelativeGraph { graph: g, a: b }).expect("cocone legs are morphisms")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pushout::compute_pushout;

    #[test]
    fn spans_rebuild_their_graph() {
        let mut rng = seeded(7);
        let mut built = 0;
        for _ in 0..50 {
            let g = random_graph(&mut rng, 5, 6, 2);
            if let Some(d) = random_span(&mut rng, &g, false) {
                assert_eq!(compute_pushout(&d).unwrap().colimit.graph, g);
                built += 1;
            }
        }
        assert_eq!(built, 50);
    }

    #[test]
    fn acyclic_generator() {
        let mut rng = seeded(1);
        for _ in 0..20 {
            let g = random_acyclic(&mut rng, 5, 7);
            assert!(g.is_acyclic() && !g.has_bundles());
        }
    }

    #[test]
    fn cocones_are_valid() {
        let mut rng = seeded(3);
        for _ in 0..20 {
            let g = random_graph(&mut rng, 4, 5, 1);
            let d = random_span(&mut rng, &g, false).unwrap();
            let res = compute_pushout(&d).unwrap();
            let c = random_cocone(&mut rng, &d, &res);
            assert_eq!(c.left.amb(), c.right.amb());
        }
    }

    #[test]
    fn determinism() {
        let a = random_graph(&mut seeded(11), 6, 8, 2);
        let b = random_graph(&mut seeded(11), 6, 8, 2);
        assert_eq!(a, b);
    }
}
