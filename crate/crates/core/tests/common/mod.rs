//! Shared corpus generation and the brute-force path-space oracle.

#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::Rng;
use relgraph::generate::{random_graph, random_span, seeded};
use relgraph::ideal::IdealCode;
use relgraph::{Graph, PushoutDiagram, RelativeGraph, VertexSet};

/// Random valid spans over graphs with at most 8 vertices, 12 edge
/// declarations and 2 bundles.
pub fn corpus(seed: u64, count: usize) -> Vec<PushoutDiagram> {
    let mut rng = seeded(seed);
    let mut out = Vec::new();
    while out.len() < count {
        let n = rng.gen_range(1..=8);
        let m = rng.gen_range(0..=12);
        let g = random_graph(&mut rng, n, m, 2);
        if let Some(d) = random_span(&mut rng, &g, false) {
            out.push(d);
        }
    }
    out
}

/// Every code `(H, B)` with `H` hereditary and `B ⊆ reg F_H`, ignoring any
/// relative set.
pub fn all_codes(g: &Graph) -> Vec<IdealCode> {
    relgraph::ideal::enumerate_ideal_codes(&RelativeGraph::toeplitz(g.clone()))
}

/// Signatures of the truncated path space of a graph.
///
/// A finite path is recorded as `(source, visited)` and an infinite
/// eventually periodic path `prefix·cycle^∞` as `visited`, over all paths and
/// lassos of total length at most `|V| + 2` using bundle members `1` and `2`.
/// Membership in a coded set depends on nothing else, and by pigeonhole the
/// truncation already realises every achievable signature.
pub struct PathSpace {
    pub finite: BTreeSet<(usize, u64)>,
    pub infinite: BTreeSet<u64>,
    names: Vec<String>,
}

struct Step {
    src: usize,
    copies: usize,
}

impl PathSpace {
    pub fn new(g: &Graph) -> Self {
        let names: Vec<String> = g.vertices().iter().map(|v| v.to_string()).collect();
        let idx = |v: &relgraph::VertexId| names.iter().position(|n| n == v.as_str()).unwrap();
        let n = names.len();
        let limit = n + 2;
        // edges received by each vertex, bundles expanded to two members
        let mut recv: Vec<Vec<Step>> = (0..n).map(|_| Vec::new()).collect();
        for d in g.edges() {
            let copies = if d.is_bundle() { 2 } else { 1 };
            recv[idx(&d.rng)].push(Step {
                src: idx(&d.src),
                copies,
            });
        }

        // Walk every path from every root one edge member at a time. Paths
        // with equal (length, source, visited set) have identical futures,
        // so each such state is expanded once.
        let mut finite = BTreeSet::new();
        // (root, len, end, mask)
        let mut states: BTreeSet<(usize, usize, usize, u64)> = BTreeSet::new();
        for root in 0..n {
            let mut stack = vec![(root, 0usize, root, 1u64 << root)];
            while let Some(st) = stack.pop() {
                if !states.insert(st) {
                    continue;
                }
                let (root, len, end, mask) = st;
                finite.insert((end, mask));
                if len == limit {
                    continue;
                }
                for step in &recv[end] {
                    for _ in 0..step.copies {
                        stack.push((root, len + 1, step.src, mask | (1 << step.src)));
                    }
                }
            }
        }
        let mut prefixes: BTreeSet<(usize, usize, u64)> = BTreeSet::new();
        let mut cycles: BTreeSet<(usize, usize, u64)> = BTreeSet::new();
        for &(root, len, end, mask) in &states {
            prefixes.insert((end, len, mask));
            if root == end && len >= 1 {
                cycles.insert((end, len, mask));
            }
        }
        let mut infinite = BTreeSet::new();
        for &(w, l1, m1) in &prefixes {
            for &(_, l2, m2) in cycles.range((w, 0, 0)..=(w, usize::MAX, u64::MAX)) {
                if l1 + l2 <= limit {
                    infinite.insert(m1 | m2);
                }
            }
        }
        PathSpace {
            finite,
            infinite,
            names,
        }
    }

    fn mask(&self, s: &VertexSet) -> u64 {
        self.names
            .iter()
            .enumerate()
            .filter(|(_, n)| s.iter().any(|v| v.as_str() == n.as_str()))
            .fold(0, |m, (i, _)| m | (1 << i))
    }

    /// Membership in `U(H,B) ∩ (E^∞ ⊔ (E* \ E*A))` from the definition
    /// `U(H,B) = E*HE^{≤∞} ∪ E*(H ∪ B)`.
    fn members(&self, c: &IdealCode, a: &VertexSet) -> (BTreeSet<(usize, u64)>, BTreeSet<u64>) {
        let h = self.mask(&c.h);
        let hb = self.mask(&c.h) | self.mask(&c.b);
        let am = self.mask(a);
        let fin = self
            .finite
            .iter()
            .filter(|(s, _)| am & (1 << s) == 0)
            .filter(|(s, m)| m & h != 0 || hb & (1 << s) != 0)
            .copied()
            .collect();
        let inf = self
            .infinite
            .iter()
            .filter(|m| *m & h != 0)
            .copied()
            .collect();
        (fin, inf)
    }

    pub fn subset(&self, c1: &IdealCode, c2: &IdealCode, a: &VertexSet) -> bool {
        let (f1, i1) = self.members(c1, a);
        let (f2, i2) = self.members(c2, a);
        f1.is_subset(&f2) && i1.is_subset(&i2)
    }

    pub fn disjoint(&self, c1: &IdealCode, c2: &IdealCode, a: &VertexSet) -> bool {
        let (f1, i1) = self.members(c1, a);
        let (f2, i2) = self.members(c2, a);
        f1.is_disjoint(&f2) && i1.is_disjoint(&i2)
    }
}
