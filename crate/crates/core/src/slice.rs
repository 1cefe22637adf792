//! The marked lax slice over a diagram, built cell by cell from explicit
//! tables: objects are the lax cones, 1-cells the (f, μ) morphisms of cones,
//! 2-cells the underlying 2-cells satisfying the componentwise coherence.
//! The result is sealed through full validation, projected down to the
//! target, and marked by its cartesian edges.

use std::collections::HashMap;
use std::sync::Arc;

use crate::caps::SizeCaps;
use crate::diagrams::{enumerate_cones, Cone, Diagram};
use crate::error::CatError;
use crate::fibration;
use crate::functor::{TwoFunctor, TwoFunctorData};
use crate::shapes;
use crate::twocat::{validate_twocat, CellBounds, Marking, Obj, One, Two, TwoCat, TwoCatData};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SliceObject {
    pub vertex: Obj,
    pub cone: Cone,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SliceOneCell {
    pub src: usize,
    pub tgt: usize,
    pub under: One,
    pub components: Vec<Two>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SliceTwoCell {
    pub src: usize,
    pub tgt: usize,
    pub under: Two,
}

/// A sealed slice: the total 2-category, the projection to the target, the
/// marking by cartesian edges, and index tables back to the cone data.
#[derive(Debug, Clone)]
pub struct SliceResult {
    pub total: Arc<TwoCat>,
    pub proj: TwoFunctor,
    pub marked: Marking,
    pub objects: Vec<SliceObject>,
    pub one_cells: Vec<SliceOneCell>,
    pub two_cells: Vec<SliceTwoCell>,
    object_index: HashMap<Cone, Obj>,
    one_index: HashMap<(usize, usize, One, Vec<Two>), One>,
    two_index: HashMap<(One, One, Two), Two>,
    diagram: Diagram,
}

impl SliceResult {
    pub fn diagram(&self) -> &Diagram {
        &self.diagram
    }

    pub fn find_object(&self, cone: &Cone) -> Option<Obj> {
        self.object_index.get(cone).copied()
    }

    pub fn find_one_cell(&self, src: Obj, tgt: Obj, under: One, components: &[Two]) -> Option<One> {
        self.one_index.get(&(src.0, tgt.0, under, components.to_vec())).copied()
    }

    pub fn find_two_cell(&self, src: One, tgt: One, under: Two) -> Option<Two> {
        self.two_index.get(&(src, tgt, under)).copied()
    }

    /// The identity cone on an object of the target, as a slice object of an
    /// object slice (shape = free-living object).
    pub fn identity_cone_object(&self) -> Option<Obj> {
        let c = self.diagram.target();
        let j = self.diagram.shape();
        if j.object_count() != 1 {
            return None;
        }
        let at = self.diagram.functor().on_obj(Obj(0));
        let cone = Cone {
            vertex: at,
            legs: vec![c.id1(at)],
            cells: j.one_cells().map(|_| c.id2(c.id1(at))).collect(),
        };
        self.find_object(&cone)
    }
}

fn name(prefix: char, i: usize) -> String {
    format!("{prefix}{i:06}")
}

/// Build the marked lax slice over the diagram. Objects are enumerated over
/// all vertices of the target in sorted order; exceeding a size cap is a
/// reported failure.
pub fn build_slice(diag: &Diagram, caps: &SizeCaps) -> Result<SliceResult, CatError> {
    let c = diag.target();
    let j = diag.shape();
    let f = diag.functor();

    // Objects: every lax cone at every vertex.
    let mut objects: Vec<SliceObject> = Vec::new();
    for x in c.objects() {
        for cone in enumerate_cones(diag, x) {
            objects.push(SliceObject { vertex: x, cone });
            if objects.len() > caps.max_objects {
                return Err(CatError::SizeCap {
                    construction: "slice",
                    sort: "objects",
                    count: objects.len(),
                    cap: caps.max_objects,
                });
            }
        }
    }

    // 1-cells: (f, μ) with μ_i: β_i∘f ⇒ α_i satisfying
    // α_k ∗₁ (Fk ∗₀ μ_i) = μ_j ∗₁ (β_k ∗₀ f).
    let mut one_cells: Vec<SliceOneCell> = Vec::new();
    let mut constraints: Vec<Vec<One>> = vec![Vec::new(); j.object_count().max(1)];
    for k in j.one_cells() {
        constraints[j.src1(k).0.max(j.tgt1(k).0)].push(k);
    }
    for (si, a) in objects.iter().enumerate() {
        for (ti, b) in objects.iter().enumerate() {
            for &under in c.one_hom(a.vertex, b.vertex) {
                let mut comps: Vec<Two> = Vec::new();
                enumerate_slice_components(
                    diag,
                    &a.cone,
                    &b.cone,
                    under,
                    &constraints,
                    &mut comps,
                    &mut |comps| {
                        one_cells.push(SliceOneCell {
                            src: si,
                            tgt: ti,
                            under,
                            components: comps.to_vec(),
                        });
                    },
                );
                if one_cells.len() > caps.max_one_cells {
                    return Err(CatError::SizeCap {
                        construction: "slice",
                        sort: "1-cells",
                        count: one_cells.len(),
                        cap: caps.max_one_cells,
                    });
                }
            }
        }
    }
    let one_index: HashMap<(usize, usize, One, Vec<Two>), usize> = one_cells
        .iter()
        .enumerate()
        .map(|(i, e)| ((e.src, e.tgt, e.under, e.components.clone()), i))
        .collect();

    // 2-cells: Ξ: (f, μ) ⇒ (g, δ) with δ_i ∗₁ (β_i ∗₀ Ξ) = μ_i.
    let mut two_cells: Vec<SliceTwoCell> = Vec::new();
    for (ei, e) in one_cells.iter().enumerate() {
        for (gi, g) in one_cells.iter().enumerate() {
            if e.src != g.src || e.tgt != g.tgt {
                continue;
            }
            let beta = &objects[e.tgt].cone;
            for &xi in c.two_hom(e.under, g.under) {
                let ok = (0..j.object_count()).all(|i| {
                    c.vcomp(g.components[i], c.lwhisk(beta.legs[i], xi)) == e.components[i]
                });
                if ok {
                    two_cells.push(SliceTwoCell { src: ei, tgt: gi, under: xi });
                }
            }
        }
    }
    let two_index_local: HashMap<(usize, usize, Two), usize> = two_cells
        .iter()
        .enumerate()
        .map(|(i, t)| ((t.src, t.tgt, t.under), i))
        .collect();

    // Assemble raw tables.
    let mut data = TwoCatData::default();
    for (i, _) in objects.iter().enumerate() {
        data.objects.push(name('o', i));
    }
    for (i, e) in one_cells.iter().enumerate() {
        data.one_cells
            .insert(name('m', i), CellBounds { src: name('o', e.src), tgt: name('o', e.tgt) });
    }
    for (i, t) in two_cells.iter().enumerate() {
        data.two_cells
            .insert(name('t', i), CellBounds { src: name('m', t.src), tgt: name('m', t.tgt) });
    }
    for (i, o) in objects.iter().enumerate() {
        let id_comps: Vec<Two> = o.cone.legs.iter().map(|&l| c.id2(l)).collect();
        let id_edge = one_index[&(i, i, c.id1(o.vertex), id_comps)];
        data.id1.insert(name('o', i), name('m', id_edge));
    }
    for (i, e) in one_cells.iter().enumerate() {
        let id_two = two_index_local[&(i, i, c.id2(e.under))];
        data.id2.insert(name('m', i), name('t', id_two));
    }
    // comp1 of slice 1-cells.
    let compose_one = |e2: usize, e1: usize| -> usize {
        let a = &one_cells[e1];
        let b = &one_cells[e2];
        let under = c.comp1(b.under, a.under);
        let comps: Vec<Two> = (0..j.object_count())
            .map(|i| c.vcomp(a.components[i], c.rwhisk(b.components[i], a.under)))
            .collect();
        one_index[&(a.src, b.tgt, under, comps)]
    };
    for (gi, g) in one_cells.iter().enumerate() {
        for (fi, fe) in one_cells.iter().enumerate() {
            if g.src != fe.tgt {
                continue;
            }
            let gf = compose_one(gi, fi);
            data.comp1
                .entry(name('m', gi))
                .or_default()
                .insert(name('m', fi), name('m', gf));
        }
    }
    for (bi, b) in two_cells.iter().enumerate() {
        for (ai, a) in two_cells.iter().enumerate() {
            if b.src != a.tgt {
                continue;
            }
            let under = c.vcomp(b.under, a.under);
            let ba = two_index_local[&(a.src, b.tgt, under)];
            data.vcomp
                .entry(name('t', bi))
                .or_default()
                .insert(name('t', ai), name('t', ba));
        }
    }
    for (hi, h) in one_cells.iter().enumerate() {
        for (ai, a) in two_cells.iter().enumerate() {
            if one_cells[a.src].tgt != h.src {
                continue;
            }
            let s = compose_one(hi, a.src);
            let t = compose_one(hi, a.tgt);
            let under = c.lwhisk(h.under, a.under);
            let ha = two_index_local[&(s, t, under)];
            data.lwhisk
                .entry(name('m', hi))
                .or_default()
                .insert(name('t', ai), name('t', ha));
        }
    }
    for (ai, a) in two_cells.iter().enumerate() {
        for (hi, h) in one_cells.iter().enumerate() {
            if h.tgt != one_cells[a.src].src {
                continue;
            }
            let s = compose_one(a.src, hi);
            let t = compose_one(a.tgt, hi);
            let under = c.rwhisk(a.under, h.under);
            let ah = two_index_local[&(s, t, under)];
            data.rwhisk
                .entry(name('t', ai))
                .or_default()
                .insert(name('m', hi), name('t', ah));
        }
    }

    let total = Arc::new(validate_twocat(&data)?);

    // The projection down to the target.
    let mut proj_data = TwoFunctorData::default();
    for (i, o) in objects.iter().enumerate() {
        proj_data.on_objects.insert(name('o', i), c.obj_name(o.vertex).to_string());
    }
    for (i, e) in one_cells.iter().enumerate() {
        proj_data.on_one_cells.insert(name('m', i), c.one_name(e.under).to_string());
    }
    for (i, t) in two_cells.iter().enumerate() {
        proj_data.on_two_cells.insert(name('t', i), c.two_name(t.under).to_string());
    }
    let proj = crate::functor::validate_functor(&total, c, &proj_data)?;

    // Marked edges: all components invertible.
    let marked_edges: Vec<One> = one_cells
        .iter()
        .enumerate()
        .filter(|(_, e)| e.components.iter().all(|&m| c.is_invertible_2cell(m)))
        .map(|(i, _)| total.one_cell(&name('m', i)).expect("edge name resolves"))
        .collect();
    let marked = Marking::from_edges(&total, marked_edges);

    let object_index: HashMap<Cone, Obj> = objects
        .iter()
        .enumerate()
        .map(|(i, o)| (o.cone.clone(), total.object(&name('o', i)).expect("object name resolves")))
        .collect();
    let one_index: HashMap<(usize, usize, One, Vec<Two>), One> = one_cells
        .iter()
        .enumerate()
        .map(|(i, e)| {
            (
                (e.src, e.tgt, e.under, e.components.clone()),
                total.one_cell(&name('m', i)).expect("1-cell name resolves"),
            )
        })
        .collect();
    let two_index: HashMap<(One, One, Two), Two> = two_cells
        .iter()
        .enumerate()
        .map(|(i, t)| {
            (
                (One(t.src), One(t.tgt), t.under),
                total.two_cell(&name('t', i)).expect("2-cell name resolves"),
            )
        })
        .collect();

    let _ = f;
    Ok(SliceResult {
        total,
        proj,
        marked,
        objects,
        one_cells,
        two_cells,
        object_index,
        one_index,
        two_index,
        diagram: diag.clone(),
    })
}

fn enumerate_slice_components(
    diag: &Diagram,
    alpha: &Cone,
    beta: &Cone,
    under: One,
    constraints: &[Vec<One>],
    comps: &mut Vec<Two>,
    emit: &mut dyn FnMut(&[Two]),
) {
    let j = diag.shape();
    let c = diag.target();
    if comps.len() == j.object_count() {
        emit(comps);
        return;
    }
    let i = comps.len();
    let src = c.comp1(beta.legs[i], under);
    let tgt = alpha.legs[i];
    'cand: for &cand in c.two_hom(src, tgt) {
        comps.push(cand);
        for &k in &constraints[i] {
            let s = j.src1(k);
            let t = j.tgt1(k);
            let lhs = c.vcomp(alpha.cells[k.0], c.lwhisk(diag.functor().on_one(k), comps[s.0]));
            let rhs = c.vcomp(comps[t.0], c.rwhisk(beta.cells[k.0], under));
            if lhs != rhs {
                comps.pop();
                continue 'cand;
            }
        }
        enumerate_slice_components(diag, alpha, beta, under, constraints, comps, emit);
        comps.pop();
    }
}

/// The lax slice over a single object: the slice of the point diagram at c.
pub fn build_object_slice(c: &Arc<TwoCat>, at: Obj, caps: &SizeCaps) -> Result<SliceResult, CatError> {
    let j = Arc::new(shapes::point());
    let mut data = TwoFunctorData::default();
    data.on_objects.insert("*".into(), c.obj_name(at).to_string());
    data.on_one_cells.insert("1_*".into(), c.one_name(c.id1(at)).to_string());
    data.on_two_cells
        .insert("1_1_*".into(), c.two_name(c.id2(c.id1(at))).to_string());
    let f = crate::functor::validate_functor(&j, c, &data)?;
    build_slice(&Diagram::minimal(f), caps)
}

/// Characterization: an edge is cartesian iff every component is invertible.
pub fn is_cartesian_char(s: &SliceResult, e: One) -> bool {
    let c = s.diagram.target();
    s.one_cells[e.0].components.iter().all(|&m| c.is_invertible_2cell(m))
}

/// Independent oracle: the exhaustive lifting clauses against the projection.
pub fn is_cartesian_oracle(s: &SliceResult, e: One) -> bool {
    fibration::is_cartesian_1cell(&s.proj, e)
}

/// The sub-2-category on all objects and the cartesian edges, with full
/// hom-subcategories. Closure of cartesian edges under composition is
/// verified while sealing.
pub fn cart_subcat(s: &SliceResult) -> TwoCat {
    let total = &s.total;
    let keep: Vec<bool> = total.one_cells().map(|e| s.marked.contains(e)).collect();
    let mut data = total.to_data();
    let one_names: Vec<String> = total.one_cells().map(|e| total.one_name(e).to_string()).collect();
    let dropped: std::collections::HashSet<&String> = one_names
        .iter()
        .enumerate()
        .filter(|(i, _)| !keep[*i])
        .map(|(_, n)| n)
        .collect();
    let dropped_two: std::collections::HashSet<String> = total
        .two_cells()
        .filter(|&a| {
            !keep[total.src2(a).0] || !keep[total.tgt2(a).0]
        })
        .map(|a| total.two_name(a).to_string())
        .collect();

    data.one_cells.retain(|n, _| !dropped.contains(n));
    data.two_cells.retain(|n, _| !dropped_two.contains(&n.to_string()));
    data.id2.retain(|n, _| !dropped.contains(&n.to_string()));
    data.comp1.retain(|g, _| !dropped.contains(&g.to_string()));
    for row in data.comp1.values_mut() {
        row.retain(|f, gf| !dropped.contains(&f.to_string()) && {
            assert!(
                !dropped.contains(&gf.to_string()),
                "cartesian edges must be closed under composition"
            );
            true
        });
    }
    data.vcomp.retain(|b, _| !dropped_two.contains(b));
    for row in data.vcomp.values_mut() {
        row.retain(|a, _| !dropped_two.contains(a));
    }
    data.lwhisk.retain(|h, _| !dropped.contains(&h.to_string()));
    for row in data.lwhisk.values_mut() {
        row.retain(|a, _| !dropped_two.contains(a));
    }
    data.rwhisk.retain(|a, _| !dropped_two.contains(a));
    for row in data.rwhisk.values_mut() {
        row.retain(|h, _| !dropped.contains(&h.to_string()));
    }
    validate_twocat(&data).expect("cartesian sub-2-category is sealed")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagrams::validate_cone;
    use crate::fincat::terminal_objects;

    fn d2_slice_at_1() -> SliceResult {
        let c = Arc::new(shapes::two_cell());
        let at = c.object("1").unwrap();
        build_object_slice(&c, at, &SizeCaps::default()).unwrap()
    }

    #[test]
    fn object_slice_of_arrow() {
        let c = Arc::new(shapes::arrow());
        let s = build_object_slice(&c, c.object("1").unwrap(), &SizeCaps::default()).unwrap();
        assert_eq!(s.total.object_count(), 2);
        // Only identity 2-cells.
        assert!(s.total.two_cells().all(|a| {
            let f = s.total.src2(a);
            s.total.tgt2(a) == f && s.total.id2(f) == a
        }));
        assert_eq!(s.total.one_cell_count(), 3);
    }

    #[test]
    fn object_slice_of_point_is_a_point() {
        let c = Arc::new(shapes::point());
        let s = build_object_slice(&c, c.object("*").unwrap(), &SizeCaps::default()).unwrap();
        assert_eq!(s.total.object_count(), 1);
        assert_eq!(s.total.one_cell_count(), 1);
    }

    #[test]
    fn slice_of_two_cell_at_1() {
        let s = d2_slice_at_1();
        assert_eq!(s.total.object_count(), 3);
        // hom((0,g), (1,id)) has terminal object (g, 1_g).
        let c = s.diagram().target();
        let g = c.one_cell("g").unwrap();
        let zero = c.object("0").unwrap();
        let one_obj = c.object("1").unwrap();
        let cone_g = Cone { vertex: zero, legs: vec![g], cells: vec![c.id2(g)] };
        let cone_id = Cone {
            vertex: one_obj,
            legs: vec![c.id1(one_obj)],
            cells: vec![c.id2(c.id1(one_obj))],
        };
        let og = s.find_object(&cone_g).unwrap();
        let oid = s.find_object(&cone_id).unwrap();
        let hom = s.total.hom_cat(og, oid);
        let term = terminal_objects(&hom);
        assert_eq!(term.len(), 1);
        // The terminal edge is (g, 1_g).
        let edge = s.total.one_cell(hom.object_name(term[0])).unwrap();
        assert_eq!(s.one_cells[edge.0].under, g);
        assert_eq!(s.one_cells[edge.0].components, vec![c.id2(g)]);
    }

    #[test]
    fn empty_shape_slice_is_the_target() {
        let c = Arc::new(shapes::two_cell());
        let j = Arc::new(shapes::empty());
        let f = crate::functor::validate_functor(&j, &c, &TwoFunctorData::default()).unwrap();
        let s = build_slice(&Diagram::minimal(f), &SizeCaps::default()).unwrap();
        assert_eq!(s.total.object_count(), c.object_count());
        assert_eq!(s.total.one_cell_count(), c.one_cell_count());
        assert_eq!(s.total.two_cell_count(), c.two_cell_count());
        // Projection is an isomorphism: bijective on every level.
        for x in s.total.objects() {
            let _ = x;
        }
        assert!(s.total.one_cells().all(|e| is_cartesian_char(&s, e)));
    }

    #[test]
    fn cartesian_char_on_d2_slice() {
        let s = d2_slice_at_1();
        let c = s.diagram().target();
        let alpha = c.two_cell("alpha").unwrap();
        // Edge (f, alpha): (0,g) → (1,id) is not cartesian; (f, 1_f): (0,f) → (1,id) is.
        let mut seen_alpha = false;
        let mut seen_idf = false;
        for (i, e) in s.one_cells.iter().enumerate() {
            if e.components == vec![alpha] {
                seen_alpha = true;
                assert!(!is_cartesian_char(&s, One(i)));
            }
            if e.under == c.one_cell("f").unwrap() && e.components == vec![c.id2(c.one_cell("f").unwrap())] {
                seen_idf = true;
                assert!(is_cartesian_char(&s, One(i)));
            }
        }
        assert!(seen_alpha && seen_idf);
    }

    #[test]
    fn char_equals_oracle_on_small_slices() {
        for s in [d2_slice_at_1(), {
            let c = Arc::new(shapes::walking_iso());
            build_object_slice(&c, c.object("0").unwrap(), &SizeCaps::default()).unwrap()
        }] {
            for e in s.total.one_cells() {
                assert_eq!(
                    is_cartesian_char(&s, e),
                    is_cartesian_oracle(&s, e),
                    "mismatch at {}",
                    s.total.one_name(e)
                );
            }
        }
    }

    #[test]
    fn marked_edges_are_exactly_cartesian_and_closed() {
        let s = d2_slice_at_1();
        for e in s.total.one_cells() {
            assert_eq!(s.marked.contains(e), is_cartesian_char(&s, e));
        }
        // Closure under composition, identities, isomorphism 1-cells.
        for g in s.total.one_cells() {
            for f in s.total.one_cells() {
                if s.total.src1(g) == s.total.tgt1(f) && s.marked.contains(g) && s.marked.contains(f) {
                    assert!(s.marked.contains(s.total.comp1(g, f)));
                }
            }
        }
        for o in s.total.objects() {
            assert!(s.marked.contains(s.total.id1(o)));
        }
        for f in s.total.one_cells() {
            if s.total.is_equivalence_1cell(f) {
                assert!(s.marked.contains(f), "equivalence edge must be cartesian");
            }
        }
    }

    #[test]
    fn cart_subcat_restricts_homs() {
        let s = d2_slice_at_1();
        let cart = cart_subcat(&s);
        let c = s.diagram().target();
        let g = c.one_cell("g").unwrap();
        let zero = c.object("0").unwrap();
        let one_obj = c.object("1").unwrap();
        let cone_g = Cone { vertex: zero, legs: vec![g], cells: vec![c.id2(g)] };
        let cone_id = Cone {
            vertex: one_obj,
            legs: vec![c.id1(one_obj)],
            cells: vec![c.id2(c.id1(one_obj))],
        };
        let og = s.find_object(&cone_g).unwrap();
        let oid = s.find_object(&cone_id).unwrap();
        let og_cart = cart.object(s.total.obj_name(og)).unwrap();
        let oid_cart = cart.object(s.total.obj_name(oid)).unwrap();
        let hom = cart.hom_cat(og_cart, oid_cart);
        assert_eq!(hom.object_count(), 1);
    }

    #[test]
    fn slice_projection_is_a_fibration() {
        let s = d2_slice_at_1();
        fibration::verify_1fibration(&s.proj).unwrap();
    }

    #[test]
    fn proj_surjective_iff_cones_everywhere() {
        // Point diagram at 1 in the arrow: vertex 0 has a cone (the arrow) and
        // vertex 1 has the identity cone, so the projection hits everything.
        let c = Arc::new(shapes::arrow());
        let s = build_object_slice(&c, c.object("1").unwrap(), &SizeCaps::default()).unwrap();
        let mut hit = vec![false; c.object_count()];
        for (i, _) in s.objects.iter().enumerate() {
            hit[s.proj.on_obj(Obj(i)).0] = true;
        }
        assert!(hit.iter().all(|&b| b));
        // At 0 instead: vertex 1 has no cone (no 1-cell 1 → 0).
        let s0 = build_object_slice(&c, c.object("0").unwrap(), &SizeCaps::default()).unwrap();
        let mut hit = vec![false; c.object_count()];
        for (i, _) in s0.objects.iter().enumerate() {
            hit[s0.proj.on_obj(Obj(i)).0] = true;
        }
        assert!(!hit.iter().all(|&b| b));
    }

    #[test]
    fn slice_objects_are_valid_cones() {
        let s = d2_slice_at_1();
        for o in &s.objects {
            validate_cone(s.diagram(), &o.cone).unwrap();
        }
    }

    #[test]
    fn size_cap_is_reported() {
        let c = Arc::new(shapes::two_cell());
        let err = build_object_slice(&c, c.object("1").unwrap(), &SizeCaps::with_limit(1)).unwrap_err();
        assert!(err.is_size_cap());
    }
}
