//! When is the pushout of relative Toeplitz graph algebras also a pullback?
//!
//! For a span with pushout `(E, A)` the four kernels
//! `U⁽ⁱ⁾ = ker(𝒯C*(E,A) → 𝒯C*(Fᵢ,Aᵢ))` and
//! `U⁽¹²⁾ = ker(𝒯C*(E,A) → 𝒯C*(F₀,A₁₂))` are coded by vertex sets. The
//! pushout square is a pullback exactly when `U⁽⁰⁾ = U⁽¹²⁾`, which reduces to
//! the admissibility condition `A₀ ⊆ A₁ ∪ A₂`.

use serde::Serialize;

use crate::error::Error;
use crate::graph::{VertexId, VertexSet};
use crate::ideal::{canonicalize_union, code_disjoint, code_equivalent, code_subset, IdealCode};
use crate::pushout::{a12, compute_pushout, PushoutDiagram, PushoutResult};
use crate::relative::{complement_in, RelativeGraph};

/// The kernel codes in context `(E, A)`, as `(H_{F,E}, B \ A)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct UCodes {
    pub u0: IdealCode,
    pub u1: IdealCode,
    pub u2: IdealCode,
    pub u12: IdealCode,
}

pub fn u_codes(d: &PushoutDiagram, res: &PushoutResult) -> UCodes {
    let e = &res.colimit;
    let kernel = |f: &RelativeGraph, b: &VertexSet| {
        IdealCode::new(
            complement_in(&f.graph, &e.graph),
            b.difference(&e.a).cloned().collect(),
        )
    };
    UCodes {
        u0: kernel(d.apex(), &d.apex().a),
        u1: kernel(d.left(), &d.left().a),
        u2: kernel(d.right(), &d.right().a),
        u12: kernel(d.apex(), &a12(d)),
    }
}

/// `U⁽¹⁾ ∩ U⁽²⁾ = ∅`.
pub fn check_disjoint(u: &UCodes, ctx: &RelativeGraph) -> bool {
    code_disjoint(&u.u1, &u.u2, ctx)
}

/// `U⁽¹⁾ ∪ U⁽²⁾ = U⁽¹²⁾`, compared through canonical codes.
pub fn check_union(u: &UCodes, ctx: &RelativeGraph) -> Result<bool, Error> {
    let lhs = canonicalize_union(&[u.u1.clone(), u.u2.clone()], ctx)?;
    let rhs = canonicalize_union(std::slice::from_ref(&u.u12), ctx)?;
    Ok(lhs == rhs)
}

/// `U⁽¹²⁾ ⊆ U⁽⁰⁾`.
pub fn check_containment(u: &UCodes, ctx: &RelativeGraph) -> bool {
    code_subset(&u.u12, &u.u0, ctx)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AdmissibilityReport {
    pub admissible: bool,
    /// Least vertex of `A₀ \ (A₁ ∪ A₂)`.
    pub witness: Option<VertexId>,
    pub a12: VertexSet,
    pub codes: UCodes,
}

/// Decides admissibility four independent ways and fails with a consistency
/// error if they disagree:
/// `A₀ ⊆ A₁ ∪ A₂`; `A₀ = A₁₂`; the singular-vertex criterion; `U⁽⁰⁾ = U⁽¹²⁾`.
pub fn admissibility(d: &PushoutDiagram) -> Result<AdmissibilityReport, Error> {
    let res = compute_pushout(d)?;
    let e = &res.colimit;
    let (f0, f1, f2) = (d.apex(), d.left(), d.right());
    let a1_or_a2: VertexSet = f1.a.union(&f2.a).cloned().collect();

    let witness = f0.a.difference(&a1_or_a2).next().cloned();
    let by_union = witness.is_none();

    let a12 = a12(d);
    let by_a12 = f0.a == a12;

    let sing1 = f1.graph.singular_vertices();
    let sing2 = f2.graph.singular_vertices();
    let by_singular = f0.a.iter().all(|v| {
        (!sing1.contains(v) || f2.a.contains(v))
            && (!sing2.contains(v) || f1.a.contains(v))
            && (!e.graph.is_regular(v) || a1_or_a2.contains(v))
    });

    let codes = u_codes(d, &res);
    let by_codes = code_equivalent(&codes.u0, &codes.u12, e);

    if ![by_a12, by_singular, by_codes]
        .iter()
        .all(|&x| x == by_union)
    {
        return Err(Error::Consistency(format!(
            "admissibility criteria disagree: union={by_union} a12={by_a12} \
             singular={by_singular} codes={by_codes}"
        )));
    }
    Ok(AdmissibilityReport {
        admissible: by_union,
        witness,
        a12,
        codes,
    })
}

/// For spans with every `Aᵢ = reg Fᵢ`: admissible iff no regular vertex of
/// `F₀` is singular in both `F₁` and `F₂`.
pub fn ck_admissibility(d: &PushoutDiagram) -> Result<bool, Error> {
    for (name, f) in [("F0", d.apex()), ("F1", d.left()), ("F2", d.right())] {
        if f.a != f.graph.regular_vertices() {
            return Err(Error::Precondition(format!(
                "relative set of {name} is not reg {name}"
            )));
        }
    }
    let sing1 = d.left().graph.singular_vertices();
    let sing2 = d.right().graph.singular_vertices();
    let verdict = !d
        .apex()
        .graph
        .regular_vertices()
        .iter()
        .any(|v| sing1.contains(v) && sing2.contains(v));
    if verdict != admissibility(d)?.admissible {
        return Err(Error::Consistency(
            "singular-vertex criterion disagrees with A0 ⊆ A1 ∪ A2".into(),
        ));
    }
    Ok(verdict)
}

/// The span with `A₀` replaced by `A₁₂`, the largest admissible choice.
pub fn suggest_a0(d: &PushoutDiagram) -> Result<PushoutDiagram, Error> {
    let a = a12(d);
    let reg = d.apex().graph.regular_vertices();
    if !a.is_subset(&reg) {
        return Err(Error::Consistency("A12 is not contained in reg F0".into()));
    }
    let repaired = d.with_apex_set(a)?;
    if !admissibility(&repaired)?.admissible {
        return Err(Error::Consistency(
            "repaired span is still not admissible".into(),
        ));
    }
    Ok(repaired)
}

/// Everything `verify-pullback` reports, at the level of codes.
#[derive(Clone, Debug, Serialize)]
pub struct PullbackReport {
    pub pushout: String,
    pub codes: UCodes,
    pub canonical: UCodes,
    pub disjoint: bool,
    pub union: bool,
    pub containment: bool,
    pub admissible: bool,
    pub witness: Option<VertexId>,
}

pub fn pullback_report(d: &PushoutDiagram) -> Result<PullbackReport, Error> {
    let adm = admissibility(d)?;
    let res = compute_pushout(d)?;
    let ctx = &res.colimit;
    let codes = adm.codes.clone();
    let canon = |c: &IdealCode| canonicalize_union(std::slice::from_ref(c), ctx);
    let canonical = UCodes {
        u0: canon(&codes.u0)?,
        u1: canon(&codes.u1)?,
        u2: canon(&codes.u2)?,
        u12: canon(&codes.u12)?,
    };
    let disjoint = check_disjoint(&codes, ctx);
    let union = check_union(&codes, ctx)?;
    let containment = check_containment(&codes, ctx);
    if !(disjoint && union && containment) {
        return Err(Error::Consistency(format!(
            "pushout kernel identities fail: disjoint={disjoint} union={union} containment={containment}"
        )));
    }
    Ok(PullbackReport {
        pushout: ctx.to_string(),
        codes,
        canonical,
        disjoint,
        union,
        containment,
        admissible: adm.admissible,
        witness: adm.witness,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::graph::vset;

    fn code(h: &[&str], b: &[&str]) -> IdealCode {
        IdealCode::new(vset(h.iter().copied()), vset(b.iter().copied()))
    }

    #[test]
    fn single_bundle_codes() {
        let d = fixtures::single_bundle_span();
        let res = compute_pushout(&d).unwrap();
        let u = u_codes(&d, &res);
        assert_eq!(u.u1, code(&["w"], &["u"]));
        assert_eq!(u.u2, code(&["v"], &[]));
        assert_eq!(u.u0, code(&["v", "w"], &["u"]));
        assert_eq!(u.u12, u.u0);
        let ctx = &res.colimit;
        assert!(check_disjoint(&u, ctx));
        assert!(check_union(&u, ctx).unwrap());
        assert!(check_containment(&u, ctx));
    }

    #[test]
    fn single_bundle_admissible() {
        let rep = admissibility(&fixtures::single_bundle_span()).unwrap();
        assert!(rep.admissible);
        assert_eq!(rep.witness, None);
        assert!(ck_admissibility(&fixtures::single_bundle_span()).unwrap());
    }

    #[test]
    fn double_bundle_not_admissible() {
        let d = fixtures::double_bundle_span();
        let rep = admissibility(&d).unwrap();
        assert!(!rep.admissible);
        assert_eq!(rep.witness, Some("u".into()));
        assert_eq!(rep.codes.u0, code(&["v", "w"], &["u"]));
        assert_eq!(rep.codes.u12, code(&["v", "w"], &[]));
        assert!(!ck_admissibility(&d).unwrap());
        let res = compute_pushout(&d).unwrap();
        assert!(check_containment(&rep.codes, &res.colimit));
        assert!(!code_subset(&rep.codes.u0, &rep.codes.u12, &res.colimit));
    }

    #[test]
    fn double_bundle_repair() {
        let fixed = suggest_a0(&fixtures::double_bundle_span()).unwrap();
        assert!(fixed.apex().a.is_empty());
        assert!(admissibility(&fixed).unwrap().admissible);
    }

    #[test]
    fn toeplitz_spans_are_admissible() {
        for d in [fixtures::star_span(), fixtures::fed_star_span(&[])] {
            assert!(admissibility(&d).unwrap().admissible);
            assert!(pullback_report(&d).unwrap().admissible);
        }
        let rep = admissibility(&fixtures::fed_star_span(&["u"])).unwrap();
        assert!(!rep.admissible);
        assert_eq!(rep.witness, Some("u".into()));
    }

    #[test]
    fn degenerate_span_is_admissible() {
        let d = fixtures::degenerate_span(crate::relative::RelativeGraph::cuntz_krieger(
            fixtures::single_bundle_graph(),
        ));
        let rep = admissibility(&d).unwrap();
        assert!(rep.admissible);
        assert_eq!(rep.codes.u0, IdealCode::zero());
    }

    #[test]
    fn ck_precondition() {
        assert!(matches!(
            ck_admissibility(&fixtures::fed_star_span(&[])),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn report_on_double_bundle() {
        let rep = pullback_report(&fixtures::double_bundle_span()).unwrap();
        assert!(!rep.admissible);
        assert!(rep.disjoint && rep.union && rep.containment);
        assert_eq!(rep.canonical.u12, code(&["v", "w"], &[]));
    }
}
