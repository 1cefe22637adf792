//! Contractions, marked contractions, and the finality predicates on an
//! object of a 2-category, together with the report that exercises their
//! proven equivalence on concrete instances.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{violation, Law, LawViolation};
use crate::fincat::terminal_objects;
use crate::slice::SliceResult;
use crate::twocat::{Marking, Obj, One, Two, TwoCat};

/// A contraction with a chosen center: a 1-cell γ_a: a → c for every object
/// and a 2-cell γ_f: γ_y∗₀f ⇒ γ_x for every 1-cell f: x → y, subject to
/// γ_c = 1_c, γ_{γ_a} = id, functoriality and 2-cell compatibility.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Contraction {
    pub center: Obj,
    pub gamma1: Vec<One>,
    pub gamma2: Vec<Two>,
}

/// Check the four contraction conditions; the report names the failing cell.
pub fn verify_contraction(c: &TwoCat, h: &Contraction) -> Result<(), LawViolation> {
    if h.gamma1.len() != c.object_count() || h.gamma2.len() != c.one_cell_count() {
        return Err(violation(Law::MissingEntry, "contraction tables do not cover the 2-category"));
    }
    for a in c.objects() {
        let g = h.gamma1[a.0];
        if c.src1(g) != a || c.tgt1(g) != h.center {
            return Err(violation(
                Law::BoundaryMismatch,
                format!("γ at `{}` does not run to the center", c.obj_name(a)),
            ));
        }
    }
    for f in c.one_cells() {
        let gf = h.gamma2[f.0];
        let x = c.src1(f);
        let y = c.tgt1(f);
        let want_src = c.comp1(h.gamma1[y.0], f);
        if c.src2(gf) != want_src || c.tgt2(gf) != h.gamma1[x.0] {
            return Err(violation(
                Law::BoundaryMismatch,
                format!("γ at 1-cell `{}` has wrong boundary", c.one_name(f)),
            ));
        }
    }
    if h.gamma1[h.center.0] != c.id1(h.center) {
        return Err(violation(
            Law::ContractionCenter,
            format!("γ at the center `{}` is not the identity", c.obj_name(h.center)),
        ));
    }
    for a in c.objects() {
        let ga = h.gamma1[a.0];
        if h.gamma2[ga.0] != c.id2(ga) {
            return Err(violation(
                Law::ContractionIdempotence,
                format!("γ_γ at `{}` is not the identity 2-cell", c.obj_name(a)),
            ));
        }
    }
    for g in c.one_cells() {
        for f in c.one_cells() {
            if c.src1(g) != c.tgt1(f) {
                continue;
            }
            let gf = c.comp1(g, f);
            let lhs = h.gamma2[gf.0];
            let rhs = c.vcomp(h.gamma2[f.0], c.rwhisk(h.gamma2[g.0], f));
            if lhs != rhs {
                return Err(violation(
                    Law::ContractionFunctoriality,
                    format!("functoriality fails at `{}∘{}`", c.one_name(g), c.one_name(f)),
                ));
            }
        }
    }
    for a in c.two_cells() {
        let f = c.src2(a);
        let g = c.tgt2(a);
        let y = c.tgt1(f);
        let lhs = h.gamma2[f.0];
        let rhs = c.vcomp(h.gamma2[g.0], c.lwhisk(h.gamma1[y.0], a));
        if lhs != rhs {
            return Err(violation(
                Law::ContractionCompatibility,
                format!("2-cell compatibility fails at `{}`", c.two_name(a)),
            ));
        }
    }
    Ok(())
}

/// Why no contraction with the requested center and prescription exists.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Obstruction {
    NoTerminal { from: String },
    PrescribedNotTerminal { from: String, one_cell: String },
    CenterNotPrescribedIdentity,
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Obstruction::NoTerminal { from } => {
                write!(f, "hom-category from `{from}` to the center has no terminal object")
            }
            Obstruction::PrescribedNotTerminal { from, one_cell } => {
                write!(f, "prescribed 1-cell `{one_cell}` from `{from}` is not terminal")
            }
            Obstruction::CenterNotPrescribedIdentity => {
                write!(f, "prescription at the center must be the identity")
            }
        }
    }
}

/// Search for a contraction with the given center. Every γ_a must be terminal
/// in its hom-category and the identity must be terminal at the center; the
/// 2-cell components are then the unique cells into the terminal objects.
/// When several terminal objects exist and no prescription is given, the
/// least id is chosen.
pub fn find_contraction(
    c: &TwoCat,
    center: Obj,
    prescribed: Option<&BTreeMap<Obj, One>>,
) -> Result<Contraction, Obstruction> {
    if let Some(p) = prescribed {
        if let Some(&fc) = p.get(&center) {
            if fc != c.id1(center) {
                return Err(Obstruction::CenterNotPrescribedIdentity);
            }
        }
    }
    let mut gamma1: Vec<One> = Vec::with_capacity(c.object_count());
    for a in c.objects() {
        let hom = c.hom_cat(a, center);
        let terminals = terminal_objects(&hom);
        let choice: One = if a == center {
            // γ_c must be the identity, and it must be terminal.
            let id = c.id1(center);
            if !terminals
                .iter()
                .any(|&t| hom.object_name(t) == c.one_name(id))
            {
                return Err(if terminals.is_empty() {
                    Obstruction::NoTerminal { from: c.obj_name(a).to_string() }
                } else {
                    Obstruction::PrescribedNotTerminal {
                        from: c.obj_name(a).to_string(),
                        one_cell: c.one_name(id).to_string(),
                    }
                });
            }
            id
        } else if let Some(&f) = prescribed.and_then(|p| p.get(&a)) {
            if !terminals.iter().any(|&t| hom.object_name(t) == c.one_name(f)) {
                return Err(Obstruction::PrescribedNotTerminal {
                    from: c.obj_name(a).to_string(),
                    one_cell: c.one_name(f).to_string(),
                });
            }
            f
        } else {
            match terminals.first() {
                Some(&t) => c.one_cell(hom.object_name(t)).expect("hom object is a 1-cell"),
                None => return Err(Obstruction::NoTerminal { from: c.obj_name(a).to_string() }),
            }
        };
        gamma1.push(choice);
    }
    let mut gamma2: Vec<Two> = Vec::with_capacity(c.one_cell_count());
    for f in c.one_cells() {
        let x = c.src1(f);
        let y = c.tgt1(f);
        let src = c.comp1(gamma1[y.0], f);
        let cells = c.two_hom(src, gamma1[x.0]);
        debug_assert_eq!(cells.len(), 1, "terminality forces a unique 2-cell");
        gamma2.push(cells[0]);
    }
    let h = Contraction { center, gamma1, gamma2 };
    debug_assert!(verify_contraction(c, &h).is_ok());
    Ok(h)
}

/// Both marked-contraction clauses, checked exhaustively: every γ_a marked,
/// and γ_f invertible for every marked f.
pub fn is_m_contraction(c: &TwoCat, m: &Marking, h: &Contraction) -> bool {
    h.gamma1.iter().all(|&g| m.contains(g))
        && c.one_cells()
            .filter(|&f| m.contains(f))
            .all(|f| c.is_invertible_2cell(h.gamma2[f.0]))
}

/// Pre-final: every hom-category into c has a terminal object, and the
/// identity of c is terminal among its endomorphisms.
pub fn is_pre_final(c: &TwoCat, center: Obj) -> bool {
    let id_terminal = {
        let hom = c.hom_cat(center, center);
        terminal_objects(&hom)
            .iter()
            .any(|&t| hom.object_name(t) == c.one_name(c.id1(center)))
    };
    id_terminal && c.objects().all(|a| !terminal_objects(&c.hom_cat(a, center)).is_empty())
}

/// M-final: pre-final, plus a marked edge into c from every object, plus
/// precomposition with every marked edge preserving terminal objects.
pub fn is_m_final(c: &TwoCat, m: &Marking, center: Obj) -> bool {
    if !is_pre_final(c, center) {
        return false;
    }
    for a in c.objects() {
        if !c.one_hom(a, center).iter().any(|&f| m.contains(f)) {
            return false;
        }
    }
    for f in c.one_cells() {
        if !m.contains(f) {
            continue;
        }
        let a = c.src1(f);
        let b = c.tgt1(f);
        let hom_b = c.hom_cat(b, center);
        let hom_a = c.hom_cat(a, center);
        for t in terminal_objects(&hom_b) {
            let t_cell = c.one_cell(hom_b.object_name(t)).expect("hom object is a 1-cell");
            let pulled = c.comp1(t_cell, f);
            let is_term = terminal_objects(&hom_a)
                .iter()
                .any(|&u| hom_a.object_name(u) == c.one_name(pulled));
            if !is_term {
                return false;
            }
        }
    }
    true
}

/// Quasi-terminal: every hom-category into c has a terminal object, with no
/// condition on the identity of c.
pub fn is_quasi_terminal(c: &TwoCat, center: Obj) -> bool {
    c.objects().all(|a| !terminal_objects(&c.hom_cat(a, center)).is_empty())
}

/// Outcome of checking M-finality against M-bifinality for prescribed marked
/// choices. The two verdicts are provably equal; a disagreement witnesses an
/// implementation bug.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FinalityReport {
    pub m_final: bool,
    pub m_bifinal: bool,
    pub agree: bool,
    pub obstruction: Option<String>,
}

/// Decide finality of `center` two ways: (i) the M-final conditions, and
/// (ii) existence of an M-contraction with the prescribed γ_a. The choices
/// must be marked edges into the center with the identity at the center.
pub fn point_finality_report(
    c: &TwoCat,
    m: &Marking,
    center: Obj,
    choices: &BTreeMap<Obj, One>,
) -> Result<FinalityReport, LawViolation> {
    for (&a, &f) in choices {
        if c.src1(f) != a || c.tgt1(f) != center {
            return Err(violation(
                Law::BoundaryMismatch,
                format!("choice `{}` does not run from `{}` to the center", c.one_name(f), c.obj_name(a)),
            ));
        }
        if !m.contains(f) {
            return Err(violation(
                Law::MarkingIdentities,
                format!("choice `{}` is not a marked edge", c.one_name(f)),
            ));
        }
    }
    if let Some(&fc) = choices.get(&center) {
        if fc != c.id1(center) {
            return Err(violation(Law::ContractionCenter, "choice at the center must be the identity".into()));
        }
    }
    let m_final = is_m_final(c, m, center);
    let (m_bifinal, obstruction) = match find_contraction(c, center, Some(choices)) {
        Ok(h) => (is_m_contraction(c, m, &h), None),
        Err(o) => (false, Some(o.to_string())),
    };
    Ok(FinalityReport { m_final, m_bifinal, agree: m_final == m_bifinal, obstruction })
}

/// The explicit contraction on an object slice with center the identity cone:
/// γ(y, α) = (α, 1_α) and γ(f, ζ) = ζ.
pub fn object_slice_contraction(s: &SliceResult) -> Option<Contraction> {
    let total = &s.total;
    let c = s.diagram().target();
    let center = s.identity_cone_object()?;
    let mut gamma1 = Vec::with_capacity(total.object_count());
    for (i, o) in s.objects.iter().enumerate() {
        let alpha = o.cone.legs[0];
        let edge = s.find_one_cell(Obj(i), center, alpha, &[c.id2(alpha)])?;
        gamma1.push(edge);
    }
    let mut gamma2 = Vec::with_capacity(total.one_cell_count());
    for (i, e) in s.one_cells.iter().enumerate() {
        // γ_tgt ∘ (f, ζ) = (β∘f, ζ); the 2-cell down to (α, 1_α) is ζ itself.
        let src_edge = total.comp1(gamma1[e.tgt], One(i));
        let cell = s.find_two_cell(src_edge, gamma1[e.src], e.components[0])?;
        gamma2.push(cell);
    }
    Some(Contraction { center, gamma1, gamma2 })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::caps::SizeCaps;
    use crate::shapes;
    use crate::slice::build_object_slice;
    use std::sync::Arc;

    #[test]
    fn find_contraction_on_arrow() {
        let c = shapes::arrow();
        let one = c.object("1").unwrap();
        let h = find_contraction(&c, one, None).unwrap();
        verify_contraction(&c, &h).unwrap();
        let zero = c.object("0").unwrap();
        assert!(find_contraction(&c, zero, None).is_err());
    }

    #[test]
    fn find_contraction_on_two_cell_fails_at_0() {
        let c = shapes::two_cell();
        let zero = c.object("0").unwrap();
        match find_contraction(&c, zero, None) {
            Err(Obstruction::NoTerminal { from }) => assert_eq!(from, "1"),
            other => panic!("expected empty-hom obstruction, got {other:?}"),
        }
    }

    #[test]
    fn slice_contraction_of_two_cell() {
        let c = Arc::new(shapes::two_cell());
        let s = build_object_slice(&c, c.object("1").unwrap(), &SizeCaps::default()).unwrap();
        let center = s.identity_cone_object().unwrap();
        let h = find_contraction(&s.total, center, None).unwrap();
        verify_contraction(&s.total, &h).unwrap();
        // γ at (0, f) is (f, 1_f), at (0, g) is (g, 1_g).
        let fcell = c.one_cell("f").unwrap();
        let gcell = c.one_cell("g").unwrap();
        for (i, o) in s.objects.iter().enumerate() {
            if o.cone.legs == vec![fcell] {
                assert_eq!(s.one_cells[h.gamma1[i].0].under, fcell);
                assert_eq!(s.one_cells[h.gamma1[i].0].components, vec![c.id2(fcell)]);
            }
            if o.cone.legs == vec![gcell] {
                assert_eq!(s.one_cells[h.gamma1[i].0].under, gcell);
            }
        }
    }

    #[test]
    fn explicit_slice_contraction_verifies_everywhere() {
        for base in [shapes::two_cell(), shapes::walking_iso(), shapes::arrow(), shapes::twin_terminals()] {
            let base = Arc::new(base);
            for at in base.objects() {
                let s = build_object_slice(&base, at, &SizeCaps::default()).unwrap();
                let h = object_slice_contraction(&s).expect("explicit contraction exists");
                verify_contraction(&s.total, &h).unwrap();
                // It is a contraction relative to the cartesian marking.
                assert!(is_m_contraction(&s.total, &s.marked, &h));
            }
        }
    }

    #[test]
    fn broken_center_is_reported() {
        let c = shapes::arrow();
        let one = c.object("1").unwrap();
        let mut h = find_contraction(&c, one, None).unwrap();
        h.gamma1[one.0] = c.one_cell("a").unwrap();
        let err = verify_contraction(&c, &h).unwrap_err();
        assert!(matches!(err.law, Law::BoundaryMismatch | Law::ContractionCenter));
    }

    #[test]
    fn contraction_iff_terminal_homs() {
        for c in [
            shapes::arrow(),
            shapes::two_cell(),
            shapes::walking_iso(),
            shapes::twin_terminals(),
            shapes::product_witness(),
        ] {
            for center in c.objects() {
                let by_terminals = {
                    let id_term = {
                        let hom = c.hom_cat(center, center);
                        terminal_objects(&hom)
                            .iter()
                            .any(|&t| hom.object_name(t) == c.one_name(c.id1(center)))
                    };
                    id_term
                        && c.objects()
                            .all(|a| !terminal_objects(&c.hom_cat(a, center)).is_empty())
                };
                let by_search = find_contraction(&c, center, None).is_ok();
                assert_eq!(by_terminals, by_search, "center {} in some corpus entry", c.obj_name(center));
                if by_search {
                    let h = find_contraction(&c, center, None).unwrap();
                    verify_contraction(&c, &h).unwrap();
                    assert!(is_quasi_terminal(&c, center));
                }
            }
        }
    }

    #[test]
    fn contractions_with_same_center_are_essentially_unique() {
        // twin_terminals: both t1 and t2 are terminal in hom(a, c).
        let c = shapes::twin_terminals();
        let center = c.object("c").unwrap();
        let a = c.object("a").unwrap();
        let t1 = c.one_cell("t1").unwrap();
        let t2 = c.one_cell("t2").unwrap();
        let mut p1 = BTreeMap::new();
        p1.insert(a, t1);
        let mut p2 = BTreeMap::new();
        p2.insert(a, t2);
        let h1 = find_contraction(&c, center, Some(&p1)).unwrap();
        let h2 = find_contraction(&c, center, Some(&p2)).unwrap();
        assert_ne!(h1.gamma1[a.0], h2.gamma1[a.0]);
        // Applying each contraction to the other's edge yields mutually
        // inverse 2-cells: γ¹ at t2 and γ² at t1.
        let u = h1.gamma2[t2.0];
        let v = h2.gamma2[t1.0];
        assert_eq!(c.vcomp(u, v), c.id2(t2));
        assert_eq!(c.vcomp(v, u), c.id2(t1));
    }

    #[test]
    fn weakened_idempotence_forces_identity() {
        // Replace the γ_{γ_x} = id clause by mere invertibility and search all
        // component assignments; every solution still has identity γ_{γ_x}.
        for c in [shapes::arrow(), shapes::two_cell(), shapes::twin_terminals(), shapes::walking_iso()] {
            for center in c.objects() {
                let candidates = weak_contractions(&c, center);
                for h in candidates {
                    for a in c.objects() {
                        let ga = h.gamma1[a.0];
                        assert_eq!(h.gamma2[ga.0], c.id2(ga), "γ_γ must collapse to the identity");
                    }
                }
            }
        }
    }

    /// Brute-force search for contractions with γ_{γ_x} only required to be
    /// invertible (all other clauses unchanged).
    fn weak_contractions(c: &TwoCat, center: Obj) -> Vec<Contraction> {
        let mut out = Vec::new();
        let leg_choices: Vec<Vec<One>> = c
            .objects()
            .map(|a| {
                if a == center {
                    vec![c.id1(center)]
                } else {
                    c.one_hom(a, center).to_vec()
                }
            })
            .collect();
        let mut legs: Vec<One> = Vec::new();
        fn rec(
            c: &TwoCat,
            center: Obj,
            choices: &[Vec<One>],
            legs: &mut Vec<One>,
            out: &mut Vec<Contraction>,
        ) {
            if legs.len() == choices.len() {
                let cell_choices: Vec<Vec<Two>> = c
                    .one_cells()
                    .map(|f| {
                        let x = c.src1(f);
                        let y = c.tgt1(f);
                        let src = c.comp1(legs[y.0], f);
                        c.two_hom(src, legs[x.0]).to_vec()
                    })
                    .collect();
                let mut cells: Vec<Two> = Vec::new();
                fn rec2(
                    c: &TwoCat,
                    center: Obj,
                    legs: &[One],
                    choices: &[Vec<Two>],
                    cells: &mut Vec<Two>,
                    out: &mut Vec<Contraction>,
                ) {
                    if cells.len() == choices.len() {
                        let h = Contraction {
                            center,
                            gamma1: legs.to_vec(),
                            gamma2: cells.clone(),
                        };
                        if weak_verify(c, &h) {
                            out.push(h);
                        }
                        return;
                    }
                    for &cand in &choices[cells.len()] {
                        cells.push(cand);
                        rec2(c, center, legs, choices, cells, out);
                        cells.pop();
                    }
                }
                rec2(c, center, legs, &cell_choices, &mut cells, out);
                return;
            }
            for &cand in &choices[legs.len()] {
                legs.push(cand);
                rec(c, center, choices, legs, out);
                legs.pop();
            }
        }
        rec(c, center, &leg_choices, &mut legs, &mut out);
        out
    }

    fn weak_verify(c: &TwoCat, h: &Contraction) -> bool {
        if h.gamma1[h.center.0] != c.id1(h.center) {
            return false;
        }
        for a in c.objects() {
            let ga = h.gamma1[a.0];
            if !c.is_invertible_2cell(h.gamma2[ga.0]) {
                return false;
            }
        }
        for g in c.one_cells() {
            for f in c.one_cells() {
                if c.src1(g) != c.tgt1(f) {
                    continue;
                }
                let gf = c.comp1(g, f);
                if h.gamma2[gf.0] != c.vcomp(h.gamma2[f.0], c.rwhisk(h.gamma2[g.0], f)) {
                    return false;
                }
            }
        }
        for a in c.two_cells() {
            let f = c.src2(a);
            let g = c.tgt2(a);
            let y = c.tgt1(f);
            if h.gamma2[f.0] != c.vcomp(h.gamma2[g.0], c.lwhisk(h.gamma1[y.0], a)) {
                return false;
            }
        }
        true
    }

    #[test]
    fn finality_predicates_on_slice() {
        let c = Arc::new(shapes::two_cell());
        let s = build_object_slice(&c, c.object("1").unwrap(), &SizeCaps::default()).unwrap();
        let center = s.identity_cone_object().unwrap();
        assert!(is_pre_final(&s.total, center));
        assert!(is_m_final(&s.total, &s.marked, center));
        assert!(is_quasi_terminal(&s.total, center));
        // A pre-final object with a marking lacking edges into it is not M-final.
        let bare = Marking::minimal(&s.total);
        assert!(!is_m_final(&s.total, &bare, center));
    }

    #[test]
    fn finality_report_agrees() {
        let c = Arc::new(shapes::two_cell());
        let s = build_object_slice(&c, c.object("1").unwrap(), &SizeCaps::default()).unwrap();
        let center = s.identity_cone_object().unwrap();
        let h = find_contraction(&s.total, center, None).unwrap();
        let choices: BTreeMap<Obj, One> = s
            .total
            .objects()
            .map(|a| (a, h.gamma1[a.0]))
            .collect();
        let report = point_finality_report(&s.total, &s.marked, center, &choices).unwrap();
        assert!(report.m_final && report.m_bifinal && report.agree);

        // Both verdicts false on a center with an empty incoming hom.
        let d2 = shapes::two_cell();
        let zero = d2.object("0").unwrap();
        let report = point_finality_report(&d2, &Marking::minimal(&d2), zero, &BTreeMap::new()).unwrap();
        assert!(!report.m_final && !report.m_bifinal && report.agree);

        // Walking isomorphism with everything marked: true everywhere.
        let iso = shapes::walking_iso();
        let m = Marking::all(&iso);
        for center in iso.objects() {
            let h = find_contraction(&iso, center, None).unwrap();
            let choices: BTreeMap<Obj, One> = iso.objects().map(|a| (a, h.gamma1[a.0])).collect();
            let report = point_finality_report(&iso, &m, center, &choices).unwrap();
            assert!(report.m_final && report.m_bifinal && report.agree);
        }
    }

    #[test]
    fn m_contraction_needs_invertible_components() {
        // In the slice of the walking 2-cell at 1, mark everything: the
        // contraction sends the non-cartesian edge (f, alpha) to a
        // non-invertible 2-cell, so it is not an all-marked contraction.
        let c = Arc::new(shapes::two_cell());
        let s = build_object_slice(&c, c.object("1").unwrap(), &SizeCaps::default()).unwrap();
        let center = s.identity_cone_object().unwrap();
        let h = find_contraction(&s.total, center, None).unwrap();
        assert!(is_m_contraction(&s.total, &s.marked, &h));
        let everything = Marking::all(&s.total);
        assert!(!is_m_contraction(&s.total, &everything, &h));
        // Its own edge set always works.
        let own = Marking::from_edges(&s.total, h.gamma1.iter().copied());
        assert!(is_m_contraction(&s.total, &own, &h));
    }
}
