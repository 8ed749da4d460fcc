//! Concrete matrix model for finite acyclic graphs without bundles.
//!
//! `𝒯C*(E, A)` acts on `ℓ²(E* \ E*A)` by `S_e δ_β = δ_{eβ}` and
//! `P_v δ_β = [r(β) = v] δ_β`. The space splits by path source, the
//! algebra acts as a full matrix algebra on each summand, and so
//! `𝒯C*(E, A) ≅ ⊕_{w ∉ A} M_{|E*w|}`.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::Error;
use crate::graph::{Graph, Path, VertexId, VertexSet};
use crate::ideal::IdealCode;
use crate::pullback::u_codes;
use crate::pushout::{a12, compute_pushout, PushoutDiagram};
use crate::relative::RelativeGraph;

/// A square integer matrix stored by rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseMatrix {
    rows: Vec<BTreeMap<usize, i64>>,
}

impl SparseMatrix {
    pub fn zeros(n: usize) -> Self {
        SparseMatrix {
            rows: vec![BTreeMap::new(); n],
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn get(&self, r: usize, c: usize) -> i64 {
        self.rows[r].get(&c).copied().unwrap_or(0)
    }

    pub fn set(&mut self, r: usize, c: usize, x: i64) {
        if x == 0 {
            self.rows[r].remove(&c);
        } else {
            self.rows[r].insert(c, x);
        }
    }

    fn add_to(&mut self, r: usize, c: usize, x: i64) {
        let y = self.get(r, c) + x;
        self.set(r, c, y);
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BTreeMap::is_empty)
    }

    /// Non-zero entries as `(row, col, value)`, row-major.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(&c, &x)| (r, c, x)))
    }

    pub fn transpose(&self) -> Self {
        let mut t = SparseMatrix::zeros(self.dim());
        for (r, c, x) in self.entries() {
            t.set(c, r, x);
        }
        t
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.dim(), other.dim());
        let mut out = SparseMatrix::zeros(self.dim());
        for (r, k, x) in self.entries() {
            for (&c, &y) in &other.rows[k] {
                out.add_to(r, c, x * y);
            }
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (r, c, x) in other.entries() {
            out.add_to(r, c, x);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (r, c, x) in other.entries() {
            out.add_to(r, c, -x);
        }
        out
    }

    /// Coordinate list, one `row col value` line per non-zero entry.
    pub fn to_coo(&self) -> String {
        self.entries()
            .map(|(r, c, x)| format!("{r} {c} {x}\n"))
            .collect()
    }
}

/// The orthonormal basis `{δ_β : s(β) ∉ A}`, sorted by source, then length,
/// then edge names.
#[derive(Clone, Debug)]
pub struct PathBasis {
    paths: Vec<Path>,
    sources: Vec<VertexId>,
    index: BTreeMap<Path, usize>,
}

impl PathBasis {
    pub fn len(&self) -> usize {
        self.paths.len()
    }

    pub fn is_empty(&self) -> bool {
        self.paths.is_empty()
    }

    pub fn paths(&self) -> &[Path] {
        &self.paths
    }

    pub fn source(&self, i: usize) -> &VertexId {
        &self.sources[i]
    }

    pub fn position(&self, p: &Path) -> Option<usize> {
        self.index.get(p).copied()
    }
}

#[derive(Clone, Debug)]
pub struct MatrixRep {
    pub ctx: RelativeGraph,
    pub basis: PathBasis,
    pub s: BTreeMap<String, SparseMatrix>,
    pub p: BTreeMap<VertexId, SparseMatrix>,
    /// Every path of the graph, including those with source in `A`.
    all_paths: Vec<Path>,
}

fn check_supported(g: &Graph) -> Result<(), Error> {
    if g.has_bundles() {
        return Err(Error::Unsupported(
            "the matrix model needs a graph without bundles".into(),
        ));
    }
    if !g.is_acyclic() {
        return Err(Error::Unsupported(
            "the matrix model needs an acyclic graph".into(),
        ));
    }
    Ok(())
}

pub fn build_rep(ctx: &RelativeGraph) -> Result<MatrixRep, Error> {
    let g = &ctx.graph;
    check_supported(g)?;
    let all_paths = g.enumerate_paths(g.num_vertices(), 1);
    let mut keyed: Vec<(VertexId, Path)> = all_paths
        .iter()
        .map(|p| (g.path_source(p).clone(), p.clone()))
        .filter(|(s, _)| !ctx.a.contains(s))
        .collect();
    keyed.sort();
    let index = keyed
        .iter()
        .enumerate()
        .map(|(i, (_, p))| (p.clone(), i))
        .collect();
    let (sources, paths) = keyed.into_iter().unzip();
    let basis = PathBasis {
        paths,
        sources,
        index,
    };

    let n = basis.len();
    let mut s = BTreeMap::new();
    for d in g.edges() {
        let mut m = SparseMatrix::zeros(n);
        let e = Path::new(d.rng.as_str(), vec![crate::graph::EdgeRef::single(&d.name)]);
        for (j, beta) in basis.paths().iter().enumerate() {
            if let Some(eb) = e.concat(beta, g) {
                let i = basis
                    .position(&eb)
                    .expect("basis is closed under extension");
                m.set(i, j, 1);
            }
        }
        s.insert(d.name.clone(), m);
    }
    let mut p = BTreeMap::new();
    for v in g.vertices() {
        let mut m = SparseMatrix::zeros(n);
        for (i, beta) in basis.paths().iter().enumerate() {
            if &beta.root == v {
                m.set(i, i, 1);
            }
        }
        p.insert(v.clone(), m);
    }
    Ok(MatrixRep {
        ctx: ctx.clone(),
        basis,
        s,
        p,
        all_paths,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RelationViolation {
    pub relation: String,
    pub detail: String,
}

impl MatrixRep {
    fn viol(rel: &str, detail: String) -> RelationViolation {
        RelationViolation {
            relation: rel.into(),
            detail,
        }
    }

    /// `Σ_{e ∈ vE¹, s(e) ∉ avoid} S_e S_e*`.
    fn range_sum(&self, v: &VertexId, avoid: &VertexSet) -> SparseMatrix {
        let mut acc = SparseMatrix::zeros(self.basis.len());
        for d in self.ctx.graph.received(v) {
            if !avoid.contains(&d.src) {
                let se = &self.s[&d.name];
                acc = acc.add(&se.mul(&se.transpose()));
            }
        }
        acc
    }

    /// `P_v − Σ_{e ∈ vE¹} S_e S_e*`.
    pub fn gap(&self, v: &VertexId) -> SparseMatrix {
        self.p[v].sub(&self.range_sum(v, &VertexSet::new()))
    }

    /// Checks the Toeplitz-Cuntz-Krieger relations, the relation at each
    /// vertex of `A`, and that the relation fails at regular vertices outside `A`.
    pub fn verify_ck(&self) -> Vec<RelationViolation> {
        let g = &self.ctx.graph;
        let mut out = Vec::new();
        for (v, pv) in &self.p {
            if pv.mul(pv) != *pv || pv.transpose() != *pv {
                out.push(Self::viol(
                    "projection",
                    format!("P_{v} is not a projection"),
                ));
            }
            for (w, pw) in &self.p {
                if v < w && !pv.mul(pw).is_zero() {
                    out.push(Self::viol("orthogonality", format!("P_{v} P_{w} != 0")));
                }
            }
        }
        for d in g.edges() {
            let se = &self.s[&d.name];
            if se.transpose().mul(se) != self.p[&d.src] {
                out.push(Self::viol(
                    "CK1",
                    format!("S_{0}* S_{0} != P_{1}", d.name, d.src),
                ));
            }
            let range = se.mul(&se.transpose());
            if self.p[&d.rng].mul(&range) != range {
                out.push(Self::viol(
                    "CK3",
                    format!("S_{0} S_{0}* not below P_{1}", d.name, d.rng),
                ));
            }
            for d2 in g.edges() {
                if d.name < d2.name && !se.transpose().mul(&self.s[&d2.name]).is_zero() {
                    out.push(Self::viol(
                        "CK2",
                        format!("S_{}* S_{} != 0", d.name, d2.name),
                    ));
                }
            }
        }
        for v in g.vertices() {
            let gap_zero = self.gap(v).is_zero();
            if self.ctx.a.contains(v) && !gap_zero {
                out.push(Self::viol("TCK4", format!("relation fails at {v} in A")));
            }
            if g.is_regular(v) && !self.ctx.a.contains(v) && gap_zero {
                out.push(Self::viol(
                    "gap",
                    format!("gap projection vanishes at {v} outside A"),
                ));
            }
        }
        out
    }

    /// `S_α`, with `S_v = P_v` for a vertex path.
    pub fn path_operator(&self, alpha: &Path) -> SparseMatrix {
        let mut m = self.p[&alpha.root].clone();
        for step in &alpha.steps {
            m = m.mul(&self.s[&step.decl]);
        }
        m
    }

    /// Block sizes `|E*w|` for each `w ∉ A`.
    pub fn blocks(&self) -> BlockDecomposition {
        let mut sizes: BTreeMap<VertexId, usize> = BTreeMap::new();
        for w in self
            .ctx
            .graph
            .vertices()
            .iter()
            .filter(|w| !self.ctx.a.contains(*w))
        {
            sizes.insert(w.clone(), 0);
        }
        for i in 0..self.basis.len() {
            *sizes.get_mut(self.basis.source(i)).unwrap() += 1;
        }
        BlockDecomposition { sizes }
    }

    /// Dimension of the span of all words `S_α S_β*` with `s(α) = s(β)`,
    /// computed as a rank over `𝔽_p`.
    ///
    /// `rank_p ≤ rank_ℚ ≤ Σ |E*w|²`, so equality with the block formula
    /// certifies the algebra dimension exactly.
    pub fn generated_dimension(&self) -> usize {
        let g = &self.ctx.graph;
        let n = self.basis.len();
        let mut by_source: BTreeMap<&VertexId, Vec<SparseMatrix>> = BTreeMap::new();
        for alpha in &self.all_paths {
            by_source
                .entry(g.path_source(alpha))
                .or_default()
                .push(self.path_operator(alpha));
        }
        let mut rank = RankModP::default();
        for ops in by_source.values() {
            for sa in ops {
                for sb in ops {
                    let w = sa.mul(&sb.transpose());
                    rank.insert(w.entries().map(|(r, c, x)| (r * n + c, x)).collect());
                }
            }
        }
        rank.rank()
    }

    /// Blocks on which the ideal generated by the code's projections is
    /// non-zero, read off the generator matrices.
    pub fn generator_support(&self, code: &IdealCode) -> VertexSet {
        let mut gens: Vec<SparseMatrix> = code.h.iter().map(|v| self.p[v].clone()).collect();
        for v in code.b.difference(&self.ctx.a) {
            gens.push(self.p[v].sub(&self.range_sum(v, &code.h)));
        }
        gens.iter()
            .flat_map(|m| m.entries().map(|(r, _, _)| self.basis.source(r).clone()))
            .collect()
    }
}

/// `(H ∪ B) \ A`: the summands an ideal code occupies.
pub fn ideal_blocks(code: &IdealCode, ctx: &RelativeGraph) -> VertexSet {
    code.h
        .union(&code.b)
        .filter(|v| !ctx.a.contains(*v))
        .cloned()
        .collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockDecomposition {
    pub sizes: BTreeMap<VertexId, usize>,
}

impl BlockDecomposition {
    pub fn dimension(&self) -> usize {
        self.sizes.values().map(|k| k * k).sum()
    }

    pub fn dimension_of(&self, blocks: &VertexSet) -> usize {
        blocks
            .iter()
            .map(|w| self.sizes.get(w).map_or(0, |k| k * k))
            .sum()
    }
}

/// Incremental Gaussian elimination over `𝔽_p` on sparse vectors.
#[derive(Default)]
struct RankModP {
    pivots: BTreeMap<usize, BTreeMap<usize, i64>>,
}

const P: i64 = 2_147_483_647;

fn inv_mod(a: i64) -> i64 {
    let (mut r, mut e, mut b) = (1i64, P - 2, a.rem_euclid(P));
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % P;
        }
        b = b * b % P;
        e >>= 1;
    }
    r
}

impl RankModP {
    fn insert(&mut self, v: BTreeMap<usize, i64>) {
        let mut v: BTreeMap<usize, i64> = v
            .into_iter()
            .map(|(k, x)| (k, x.rem_euclid(P)))
            .filter(|(_, x)| *x != 0)
            .collect();
        while let Some((&lead, &x)) = v.iter().next() {
            match self.pivots.get(&lead) {
                Some(row) => {
                    for (&k, &y) in row {
                        let z = (v.get(&k).copied().unwrap_or(0) - x * y).rem_euclid(P);
                        if z == 0 {
                            v.remove(&k);
                        } else {
                            v.insert(k, z);
                        }
                    }
                }
                None => {
                    let inv = inv_mod(x);
                    let row = v.into_iter().map(|(k, y)| (k, y * inv % P)).collect();
                    self.pivots.insert(lead, row);
                    return;
                }
            }
        }
    }

    fn rank(&self) -> usize {
        self.pivots.len()
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PedersenReport {
    pub dim_e: usize,
    pub dim_i1: usize,
    pub dim_i2: usize,
    pub dim_quotient: usize,
    pub supp0: VertexSet,
    pub supp1: VertexSet,
    pub supp2: VertexSet,
    pub supp12: VertexSet,
    /// `I⁽¹²⁾ = I⁽⁰⁾`, i.e. the pushout square is a pullback.
    pub pullback: bool,
}

/// Checks the ideal-theoretic pullback criterion in the matrix model of the
/// pushout and reports whether the square is a pullback.
pub fn verify_pedersen(d: &PushoutDiagram) -> Result<PedersenReport, Error> {
    let res = compute_pushout(d)?;
    let ctx = &res.colimit;
    let rep = build_rep(ctx)?;
    let blocks = rep.blocks();
    let codes = u_codes(d, &res);
    let supp = |c: &IdealCode| -> Result<VertexSet, Error> {
        let s = rep.generator_support(c);
        if s != ideal_blocks(c, ctx) {
            return Err(Error::Consistency(format!(
                "generator support of {c} disagrees with its code"
            )));
        }
        Ok(s)
    };
    let (supp0, supp1, supp2, supp12) = (
        supp(&codes.u0)?,
        supp(&codes.u1)?,
        supp(&codes.u2)?,
        supp(&codes.u12)?,
    );

    if !supp1.is_disjoint(&supp2) {
        return Err(Error::Consistency("I1 and I2 share a summand".into()));
    }
    let joined: VertexSet = supp1.union(&supp2).cloned().collect();
    if joined != supp12 {
        return Err(Error::Consistency("I1 + I2 differs from I12".into()));
    }
    let central = |s: &VertexSet| {
        let mut q = SparseMatrix::zeros(rep.basis.len());
        for i in 0..rep.basis.len() {
            if s.contains(rep.basis.source(i)) {
                q.set(i, i, 1);
            }
        }
        q
    };
    if !central(&supp1).mul(&central(&supp2)).is_zero() {
        return Err(Error::Consistency(
            "central supports of I1 and I2 overlap".into(),
        ));
    }

    let quotient = build_rep(&RelativeGraph {
        graph: d.apex().graph.clone(),
        a: a12(d),
    })?;
    let report = PedersenReport {
        dim_e: blocks.dimension(),
        dim_i1: blocks.dimension_of(&supp1),
        dim_i2: blocks.dimension_of(&supp2),
        dim_quotient: quotient.blocks().dimension(),
        pullback: supp12 == supp0,
        supp0,
        supp1,
        supp2,
        supp12,
    };
    if report.dim_e != report.dim_i1 + report.dim_i2 + report.dim_quotient {
        return Err(Error::Consistency(
            "dimension count of E / (I1 + I2) fails".into(),
        ));
    }
    Ok(report)
}
