//! Deterministic inputs for the criterion benchmarks.

use relgraph::generate::{random_acyclic, random_graph, random_relative, random_span, seeded};
use relgraph::{PushoutDiagram, RelativeGraph};

/// `count` relative graphs with `n` vertices and `m` edge declarations.
pub fn relative_graphs(seed: u64, count: usize, n: usize, m: usize) -> Vec<RelativeGraph> {
    let mut rng = seeded(seed);
    (0..count)
        .map(|_| {
            let g = random_graph(&mut rng, n, m, 2);
            random_relative(&mut rng, g)
        })
        .collect()
}

pub fn acyclic_graphs(seed: u64, count: usize, n: usize, m: usize) -> Vec<RelativeGraph> {
    let mut rng = seeded(seed);
    (0..count)
        .map(|_| {
            let g = random_acyclic(&mut rng, n, m);
            random_relative(&mut rng, g)
        })
        .collect()
}

pub fn spans(seed: u64, count: usize, n: usize, m: usize) -> Vec<PushoutDiagram> {
    let mut rng = seeded(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let g = random_graph(&mut rng, n, m, 2);
        if let Some(d) = random_span(&mut rng, &g, false) {
            out.push(d);
        }
    }
    out
}
