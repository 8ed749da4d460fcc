//! Gauge-invariant ideals of relative Toeplitz graph algebras, coded by
//! vertex-set pairs.
//!
//! An [`IdealCode`] `(H, B)` names the open invariant set
//! `U(H,B) = E*HE^∞ ∪ E*(H ∪ B)` of the path space. Inside a relative graph
//! `(E, A)` only the part meeting `E^∞ ⊔ (E* \ E*A)` matters; two codes are
//! equivalent there when they agree on that part. Every operation here
//! reduces to vertex-level reachability, so codes are never expanded into
//! path sets.
//!
//! The canonical code of an open set in context `(E, A)` is the code of its
//! preimage in the unrelativised path space, which always satisfies
//! `A ⊆ H ∪ B`.

use std::fmt;

use serde::Serialize;

use crate::error::Error;
use crate::graph::{fmt_set, set_key, Graph, Lasso, Path, VertexId, VertexSet};
use crate::relative::RelativeGraph;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct IdealCode {
    pub h: VertexSet,
    pub b: VertexSet,
}

impl IdealCode {
    pub fn new(h: VertexSet, b: VertexSet) -> Self {
        IdealCode { h, b }
    }

    pub fn zero() -> Self {
        IdealCode {
            h: VertexSet::new(),
            b: VertexSet::new(),
        }
    }

    /// Checks `H` hereditary and `B ⊆ reg F_H`.
    pub fn validate(&self, g: &Graph) -> Result<(), Error> {
        if let Some(v) = self.h.iter().chain(&self.b).find(|v| !g.has_vertex(v)) {
            return Err(Error::InvalidCode(format!("unknown vertex {v}")));
        }
        let f = g
            .complement_subgraph(&self.h)
            .map_err(|e| Error::InvalidCode(e.to_string()))?;
        if let Some(v) = self.b.iter().find(|v| !f.is_regular(v)) {
            return Err(Error::InvalidCode(format!("{v} is not regular in F_H")));
        }
        Ok(())
    }

    /// `H ∪ B`, the sources of the finite paths in `U(H,B)`.
    fn support(&self) -> VertexSet {
        self.h.union(&self.b).cloned().collect()
    }

    fn sort_key(&self) -> ((usize, &VertexSet), (usize, &VertexSet)) {
        (set_key(&self.h), set_key(&self.b))
    }
}

impl fmt::Display for IdealCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H={} B={}", fmt_set(&self.h), fmt_set(&self.b))
    }
}

/// Whether the finite path `alpha` lies in `U(H,B)` intersected with the
/// relative unit space of `ctx`.
pub fn contains_finite_path(
    c: &IdealCode,
    ctx: &RelativeGraph,
    alpha: &Path,
) -> Result<bool, Error> {
    ctx.graph.validate_path(alpha)?;
    let s = ctx.graph.path_source(alpha);
    Ok((c.h.contains(s) || c.b.contains(s)) && !ctx.a.contains(s))
}

/// Whether the infinite path presented by `x` lies in `U(H,B)`: it must visit `H`.
pub fn contains_lasso(c: &IdealCode, ctx: &RelativeGraph, x: &Lasso) -> Result<bool, Error> {
    ctx.graph.validate_lasso(x)?;
    Ok(!x.visited(&ctx.graph).is_disjoint(&c.h))
}

fn unions(codes: &[IdealCode]) -> (VertexSet, VertexSet) {
    let mut h = VertexSet::new();
    let mut hb = VertexSet::new();
    for c in codes {
        h.extend(c.h.iter().cloned());
        hb.extend(c.support());
    }
    (h, hb)
}

fn complement(g: &Graph, s: &VertexSet) -> VertexSet {
    g.vertices()
        .iter()
        .filter(|v| !s.contains(*v))
        .cloned()
        .collect()
}

/// Decides `Z(v) ∩ G(E,A)⁽⁰⁾ ⊆ ⋃ U(Hᵢ,Bᵢ)`.
///
/// Finite part: every source `w ∉ A` of a path ending at `v` lies in some
/// `Hᵢ ∪ Bᵢ`. Infinite part: no infinite path from `v` avoids `⋃ Hᵢ`.
pub fn cylinder_covered(codes: &[IdealCode], ctx: &RelativeGraph, v: &VertexId) -> bool {
    let (h, hb) = unions(codes);
    covered_with(&ctx.graph, &ctx.a, &h, &hb, v)
}

fn covered_with(g: &Graph, a: &VertexSet, h: &VertexSet, hb: &VertexSet, v: &VertexId) -> bool {
    if h.contains(v) {
        return true;
    }
    let finite_ok = g
        .backward_reach(v)
        .iter()
        .all(|w| a.contains(w) || hb.contains(w));
    finite_ok && !g.reaches_cycle(v, &complement(g, h))
}

/// The canonical code of `⋃ U(Hᵢ,Bᵢ)` in context `ctx`:
/// `H = {v : Z(v) ⊆ U}` and `B = (U ∪ A) ∩ (E⁰ \ H)` on vertices.
pub fn canonicalize_union(codes: &[IdealCode], ctx: &RelativeGraph) -> Result<IdealCode, Error> {
    let g = &ctx.graph;
    let (h_all, hb_all) = unions(codes);
    let h: VertexSet = g
        .vertices()
        .iter()
        .filter(|v| covered_with(g, &ctx.a, &h_all, &hb_all, v))
        .cloned()
        .collect();
    let b: VertexSet = hb_all
        .iter()
        .chain(&ctx.a)
        .filter(|v| !h.contains(*v))
        .cloned()
        .collect();
    let code = IdealCode { h, b };
    code.validate(g)
        .map_err(|e| Error::Consistency(format!("canonical code {code} is invalid: {e}")))?;
    Ok(code)
}

/// Decides `U(c₁) ⊆ U(c₂)` inside the relative unit space of `ctx`.
pub fn code_subset(c1: &IdealCode, c2: &IdealCode, ctx: &RelativeGraph) -> bool {
    let g = &ctx.graph;
    let s2 = c2.support();
    let finite_ok = c1
        .support()
        .iter()
        .all(|v| ctx.a.contains(v) || s2.contains(v));
    if !finite_ok {
        return false;
    }
    // An infinite path in U(c₁) \ U(c₂) has a tail starting in H₁ \ H₂ that
    // never enters H₂.
    let outside_h2 = complement(g, &c2.h);
    !c1.h
        .difference(&c2.h)
        .any(|w| g.reaches_cycle(w, &outside_h2))
}

/// Decides `U(c₁) ∩ U(c₂) = ∅` inside the relative unit space of `ctx`.
pub fn code_disjoint(c1: &IdealCode, c2: &IdealCode, ctx: &RelativeGraph) -> bool {
    let g = &ctx.graph;
    let s2 = c2.support();
    let finite_ok = c1
        .support()
        .iter()
        .all(|v| ctx.a.contains(v) || !s2.contains(v));
    if !finite_ok {
        return false;
    }
    let both: VertexSet = c1.h.intersection(&c2.h).cloned().collect();
    !both.iter().any(|w| g.reaches_cycle(w, &both))
}

/// Set equality of the coded open sets in context.
pub fn code_equivalent(c1: &IdealCode, c2: &IdealCode, ctx: &RelativeGraph) -> bool {
    code_subset(c1, c2, ctx) && code_subset(c2, c1, ctx)
}

/// Above this many vertices hereditary sets are enumerated by backtracking
/// instead of filtering all subsets.
const FILTER_LIMIT: usize = 20;

/// All hereditary vertex sets, ordered by size and then lexicographically.
pub fn enumerate_hereditary(g: &Graph) -> Vec<VertexSet> {
    let mut out = if g.num_vertices() <= FILTER_LIMIT {
        hereditary_by_filtering(g)
    } else {
        hereditary_by_backtracking(g)
    };
    out.sort_by(|x, y| set_key(x).cmp(&set_key(y)));
    out
}

pub fn hereditary_by_filtering(g: &Graph) -> Vec<VertexSet> {
    let n = g.num_vertices();
    assert!(n <= FILTER_LIMIT);
    let idx = |v: &VertexId| g.vertices().binary_search(v).unwrap();
    let arcs: Vec<(u32, u32)> = g
        .edges()
        .iter()
        .map(|d| (1u32 << idx(&d.rng), 1u32 << idx(&d.src)))
        .collect();
    (0u32..(1u32 << n))
        .filter(|mask| arcs.iter().all(|&(r, s)| mask & r == 0 || mask & s != 0))
        .map(|mask| {
            (0..n)
                .filter(|i| mask & (1 << i) != 0)
                .map(|i| g.vertices()[i].clone())
                .collect()
        })
        .collect()
}

/// Hereditary sets are the down-sets of the reachability preorder; decide
/// each vertex in turn, propagating an inclusion to its closure and an
/// exclusion to every vertex that reaches it.
pub fn hereditary_by_backtracking(g: &Graph) -> Vec<VertexSet> {
    let closures: Vec<VertexSet> = g.vertices().iter().map(|v| g.backward_reach(v)).collect();
    let reachers: Vec<VertexSet> = g
        .vertices()
        .iter()
        .map(|v| {
            g.vertices()
                .iter()
                .zip(&closures)
                .filter(|(_, c)| c.contains(v))
                .map(|(w, _)| w.clone())
                .collect()
        })
        .collect();

    fn go(
        g: &Graph,
        i: usize,
        inc: &VertexSet,
        exc: &VertexSet,
        closures: &[VertexSet],
        reachers: &[VertexSet],
        out: &mut Vec<VertexSet>,
    ) {
        let n = g.num_vertices();
        let mut i = i;
        while i < n && (inc.contains(&g.vertices()[i]) || exc.contains(&g.vertices()[i])) {
            i += 1;
        }
        if i == n {
            out.push(inc.clone());
            return;
        }
        if closures[i].is_disjoint(exc) {
            let inc2: VertexSet = inc.union(&closures[i]).cloned().collect();
            go(g, i + 1, &inc2, exc, closures, reachers, out);
        }
        if reachers[i].is_disjoint(inc) {
            let exc2: VertexSet = exc.union(&reachers[i]).cloned().collect();
            go(g, i + 1, inc, &exc2, closures, reachers, out);
        }
    }

    let mut out = Vec::new();
    go(
        g,
        0,
        &VertexSet::new(),
        &VertexSet::new(),
        &closures,
        &reachers,
        &mut out,
    );
    out
}

fn subsets(items: &[VertexId]) -> impl Iterator<Item = VertexSet> + '_ {
    assert!(
        items.len() < 64,
        "too many regular vertices to enumerate subsets"
    );
    (0u64..(1u64 << items.len())).map(move |mask| {
        items
            .iter()
            .enumerate()
            .filter(|(i, _)| mask & (1 << i) != 0)
            .map(|(_, v)| v.clone())
            .collect()
    })
}

/// Every code `(H, B ⊆ reg F_H)` with `A ⊆ H ∪ B`: one per gauge-invariant
/// ideal of `𝒯C*(E, A)`.
pub fn enumerate_ideal_codes(ctx: &RelativeGraph) -> Vec<IdealCode> {
    let g = &ctx.graph;
    let mut out = Vec::new();
    for h in enumerate_hereditary(g) {
        let reg: Vec<VertexId> = g
            .restrict_unchecked(&h)
            .regular_vertices()
            .into_iter()
            .collect();
        // A ∩ F_H⁰ must lie in B, and so must be regular in F_H
        let need: VertexSet = ctx.a.difference(&h).cloned().collect();
        if !need.iter().all(|v| reg.contains(v)) {
            continue;
        }
        let free: Vec<VertexId> = reg.iter().filter(|v| !need.contains(*v)).cloned().collect();
        for extra in subsets(&free) {
            let b = need.union(&extra).cloned().collect();
            out.push(IdealCode { h: h.clone(), b });
        }
    }
    out.sort_by(|x, y| x.sort_key().cmp(&y.sort_key()));
    out
}

/// The gauge-invariant ideal lattice as a Hasse diagram.
#[derive(Clone, Debug, Serialize)]
pub struct IdealLattice {
    pub codes: Vec<IdealCode>,
    /// `(i, j)`: `codes[j]` covers `codes[i]`.
    pub covers: Vec<(usize, usize)>,
    pub bottom: usize,
    pub top: usize,
}

pub fn ideal_lattice(ctx: &RelativeGraph) -> Result<IdealLattice, Error> {
    let codes = enumerate_ideal_codes(ctx);
    let n = codes.len();
    let le: Vec<Vec<bool>> = codes
        .iter()
        .map(|x| codes.iter().map(|y| code_subset(x, y, ctx)).collect())
        .collect();
    for i in 0..n {
        for j in 0..n {
            if i != j && le[i][j] && le[j][i] {
                return Err(Error::Consistency(format!(
                    "distinct codes {} and {} name the same open set",
                    codes[i], codes[j]
                )));
            }
        }
    }
    let lt = |i: usize, j: usize| i != j && le[i][j];
    let mut covers = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if lt(i, j) && !(0..n).any(|k| lt(i, k) && lt(k, j)) {
                covers.push((i, j));
            }
        }
    }
    let bottom = (0..n).find(|&i| (0..n).all(|j| le[i][j]));
    let top = (0..n).find(|&i| (0..n).all(|j| le[j][i]));
    match (bottom, top) {
        (Some(bottom), Some(top)) => Ok(IdealLattice {
            codes,
            covers,
            bottom,
            top,
        }),
        _ => Err(Error::Consistency(
            "ideal lattice lacks a bottom or top".into(),
        )),
    }
}

impl IdealLattice {
    /// True iff the order is total.
    pub fn is_chain(&self) -> bool {
        self.covers.len() + 1 == self.codes.len()
            && (0..self.codes.len()).all(|i| self.covers.iter().filter(|c| c.0 == i).count() <= 1)
    }

    pub fn to_dot(&self) -> String {
        let mut s = String::from("digraph ideals {\n  rankdir=BT;\n");
        for (i, c) in self.codes.iter().enumerate() {
            s.push_str(&format!("  n{i} [label=\"{c}\"];\n"));
        }
        for (i, j) in &self.covers {
            s.push_str(&format!("  n{i} -> n{j};\n"));
        }
        s.push_str("}\n");
        s
    }
}

/// Ideal codes of the graph algebra `C*(E) = 𝒯C*(E, reg E)`, checked against
/// the classical description: `H` saturated and `B = (reg E ∩ F_H⁰) ∪ S`
/// with `S ⊆ B_H`.
pub fn ck_ideal_codes(g: &Graph) -> Result<Vec<IdealCode>, Error> {
    let ctx = RelativeGraph::cuntz_krieger(g.clone());
    let codes = enumerate_ideal_codes(&ctx);
    for c in &codes {
        if !g.is_saturated(&c.h) {
            return Err(Error::Consistency(format!("{c}: H is not saturated")));
        }
        let breaking = g.breaking_vertices(&c.h)?;
        let required: VertexSet = ctx.a.difference(&c.h).cloned().collect();
        if !required.is_subset(&c.b) || !c.b.difference(&required).all(|v| breaking.contains(v)) {
            return Err(Error::Consistency(format!(
                "{c}: B is not regular-plus-breaking"
            )));
        }
    }
    Ok(codes)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graph::{vset, EdgeRef};

    fn code(h: &[&str], b: &[&str]) -> IdealCode {
        IdealCode::new(vset(h.iter().copied()), vset(b.iter().copied()))
    }

    fn loop_ctx(a: &[&str]) -> RelativeGraph {
        RelativeGraph {
            graph: fixtures::loop_graph(),
            a: vset(a.iter().copied()),
        }
    }

    fn d_path() -> Path {
        Path::new("v", vec![EdgeRef::single("d")])
    }

    fn d_lasso() -> Lasso {
        Lasso {
            prefix: Path::vertex("v".into()),
            cycle: d_path(),
        }
    }

    #[test]
    fn finite_path_membership() {
        assert!(contains_finite_path(&code(&["v"], &[]), &loop_ctx(&[]), &d_path()).unwrap());
        let v = Path::vertex("v".into());
        assert!(!contains_finite_path(&code(&[], &["v"]), &loop_ctx(&["v"]), &v).unwrap());
        assert!(!contains_finite_path(&IdealCode::zero(), &loop_ctx(&[]), &v).unwrap());
        let bad = Path::new("v", vec![EdgeRef::single("zz")]);
        assert!(contains_finite_path(&IdealCode::zero(), &loop_ctx(&[]), &bad).is_err());
    }

    #[test]
    fn lasso_membership() {
        assert!(contains_lasso(&code(&["v"], &[]), &loop_ctx(&[]), &d_lasso()).unwrap());
        assert!(!contains_lasso(&code(&[], &["v"]), &loop_ctx(&[]), &d_lasso()).unwrap());
        let g7 = RelativeGraph::toeplitz(fixtures::double_bundle_graph());
        let all = code(&["u", "v", "w"], &[]);
        let x = Lasso {
            prefix: Path::vertex("u".into()),
            cycle: Path::new("u", vec![EdgeRef::single("d")]),
        };
        assert!(contains_lasso(&all, &g7, &x).unwrap());
    }

    #[test]
    fn cylinder_cover_examples() {
        let v: VertexId = "v".into();
        assert!(cylinder_covered(&[code(&["v"], &[])], &loop_ctx(&[]), &v));
        assert!(!cylinder_covered(&[code(&[], &["v"])], &loop_ctx(&[]), &v));
        let g7 = RelativeGraph::toeplitz(fixtures::double_bundle_graph());
        assert!(!cylinder_covered(
            &[code(&["v", "w"], &[])],
            &g7,
            &"u".into()
        ));
    }

    #[test]
    fn canonicalization_examples() {
        let ctx = loop_ctx(&[]);
        let c = code(&[], &["v"]);
        assert_eq!(
            canonicalize_union(std::slice::from_ref(&c), &ctx).unwrap(),
            c
        );
        assert_eq!(
            canonicalize_union(&[code(&[], &["v"]), code(&["v"], &[])], &ctx).unwrap(),
            code(&["v"], &[])
        );
        assert_eq!(canonicalize_union(&[], &ctx).unwrap(), IdealCode::zero());
        // in context A = {v} the zero ideal is coded by (∅, {v})
        assert_eq!(
            canonicalize_union(&[], &loop_ctx(&["v"])).unwrap(),
            code(&[], &["v"])
        );
    }

    #[test]
    fn relative_context_absorbs_hidden_vertices() {
        // chain v → u with A = {u}: ({v}, ∅) already covers everything visible from u
        let ctx = RelativeGraph {
            graph: fixtures::chain_graph(),
            a: vset(["u"]),
        };
        assert_eq!(
            canonicalize_union(&[code(&["v"], &[])], &ctx).unwrap(),
            code(&["u", "v"], &[])
        );
    }

    #[test]
    fn subset_and_disjoint_examples() {
        let ctx = loop_ctx(&[]);
        let (small, big) = (code(&[], &["v"]), code(&["v"], &[]));
        assert!(code_subset(&small, &big, &ctx));
        assert!(!code_subset(&big, &small, &ctx));
        assert!(code_subset(&big, &big, &ctx));
        let g7 = RelativeGraph::toeplitz(fixtures::double_bundle_graph());
        assert!(code_disjoint(&code(&["v"], &[]), &code(&["w"], &[]), &g7));
        assert!(!code_disjoint(
            &code(&["v"], &[]),
            &code(&["v", "w"], &[]),
            &g7
        ));
    }

    #[test]
    fn hereditary_enumeration_examples() {
        assert_eq!(
            enumerate_hereditary(&fixtures::loop_graph()),
            vec![VertexSet::new(), vset(["v"])]
        );
        assert_eq!(
            enumerate_hereditary(&fixtures::double_bundle_graph()),
            vec![
                VertexSet::new(),
                vset(["v"]),
                vset(["w"]),
                vset(["v", "w"]),
                vset(["u", "v", "w"])
            ]
        );
        assert_eq!(enumerate_hereditary(&fixtures::edgeless(4)).len(), 16);
    }

    #[test]
    fn backtracking_matches_filtering() {
        for g in [
            fixtures::double_bundle_graph(),
            fixtures::single_bundle_graph(),
            fixtures::chain_graph(),
            fixtures::edgeless(5),
            Graph::default(),
        ] {
            let mut a = hereditary_by_filtering(&g);
            let mut b = hereditary_by_backtracking(&g);
            a.sort();
            b.sort();
            assert_eq!(a, b);
        }
    }

    #[test]
    fn toeplitz_loop_codes() {
        assert_eq!(
            enumerate_ideal_codes(&loop_ctx(&[])),
            vec![IdealCode::zero(), code(&[], &["v"]), code(&["v"], &[])]
        );
        assert_eq!(
            enumerate_ideal_codes(&loop_ctx(&["v"])),
            vec![code(&[], &["v"]), code(&["v"], &[])]
        );
        assert_eq!(
            enumerate_ideal_codes(&RelativeGraph::toeplitz(Graph::default())),
            vec![IdealCode::zero()]
        );
    }

    #[test]
    fn lattice_shapes() {
        let l = ideal_lattice(&loop_ctx(&[])).unwrap();
        assert_eq!(l.codes.len(), 3);
        assert!(l.is_chain());
        assert_eq!(l.covers, vec![(0, 1), (1, 2)]);
        assert_eq!((l.bottom, l.top), (0, 2));

        let l = ideal_lattice(&loop_ctx(&["v"])).unwrap();
        assert_eq!(l.codes.len(), 2);
        assert!(l.is_chain());

        let one = RelativeGraph::toeplitz(fixtures::edgeless(1));
        let l = ideal_lattice(&one).unwrap();
        assert_eq!(l.codes, vec![IdealCode::zero(), code(&["x0"], &[])]);
        assert!(l.is_chain());

        let sq = ideal_lattice(&RelativeGraph::toeplitz(fixtures::edgeless(2))).unwrap();
        assert!(!sq.is_chain());
        assert_eq!(sq.covers.len(), 4);
    }

    #[test]
    fn dot_export() {
        let dot = ideal_lattice(&loop_ctx(&[])).unwrap().to_dot();
        assert!(dot.starts_with("digraph ideals {"));
        assert!(dot.contains("n0 [label=\"H={} B={}\"];"));
        assert!(dot.contains("n2 [label=\"H={v} B={}\"];"));
        assert!(dot.contains("n1 -> n2;"));
    }

    #[test]
    fn ck_codes_examples() {
        assert_eq!(
            ck_ideal_codes(&fixtures::loop_graph()).unwrap(),
            vec![code(&[], &["v"]), code(&["v"], &[])]
        );
        assert_eq!(
            ck_ideal_codes(&fixtures::chain_graph()).unwrap(),
            vec![code(&[], &["u"]), code(&["u", "v"], &[])]
        );
        let edgeless = fixtures::edgeless(3);
        let codes = ck_ideal_codes(&edgeless).unwrap();
        assert_eq!(codes.len(), 8);
        assert!(codes.iter().all(|c| c.b.is_empty()));
    }

    #[test]
    fn code_validation() {
        let g = fixtures::chain_graph();
        assert!(code(&["v"], &[]).validate(&g).is_ok());
        assert!(code(&["u"], &[]).validate(&g).is_err());
        // with H = {v}, u receives nothing in F_H
        assert!(code(&["v"], &["u"]).validate(&g).is_err());
        assert!(code(&[], &["u"]).validate(&g).is_ok());
    }
}
