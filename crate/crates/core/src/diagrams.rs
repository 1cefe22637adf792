//! Lax natural transformations relative to a marking, cones over a diagram,
//! the cone category at a vertex, and the postcomposition functor λ∗ whose
//! vertexwise equivalence defines the bilimit.

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{violation, CatError, Law, LawViolation};
use crate::fincat::{validate_fincat, FinCat, FinCatData, FMor, FObj, Functor1, MorData};
use crate::functor::{TwoFunctor, TwoFunctorData};
use crate::twocat::{Marking, Obj, One, Two, TwoCat};

/// A 2-functor J → C together with a marking on J.
#[derive(Debug, Clone)]
pub struct Diagram {
    functor: TwoFunctor,
    marking: Marking,
}

impl Diagram {
    pub fn new(functor: TwoFunctor, marking: Marking) -> Result<Diagram, LawViolation> {
        marking.check(functor.dom())?;
        Ok(Diagram { functor, marking })
    }

    /// Marking with identities only.
    pub fn minimal(functor: TwoFunctor) -> Diagram {
        let marking = Marking::minimal(functor.dom());
        Diagram { functor, marking }
    }

    pub fn functor(&self) -> &TwoFunctor {
        &self.functor
    }

    pub fn marking(&self) -> &Marking {
        &self.marking
    }

    pub fn shape(&self) -> &Arc<TwoCat> {
        self.functor.dom()
    }

    pub fn target(&self) -> &Arc<TwoCat> {
        self.functor.cod()
    }
}

/// Raw component tables of a lax transformation: object of J → 1-cell of C,
/// 1-cell of J → 2-cell of C.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LaxTransformationData {
    pub on_objects: BTreeMap<String, String>,
    pub on_one_cells: BTreeMap<String, String>,
}

/// A validated lax transformation between 2-functors F, G: J → C, relative to
/// a marking E on J. Components: α_i: Fi → Gi and α_k: G(k)∗₀α_i ⇒ α_j∗₀F(k),
/// invertible on marked k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaxTransformation {
    pub on_objects: Vec<One>,
    pub on_one_cells: Vec<Two>,
}

/// Seal a raw lax transformation, checking the identity, marking, composition
/// and compatibility conditions; each failure names the offending cell of J.
pub fn validate_lax_transformation(
    source: &TwoFunctor,
    target: &TwoFunctor,
    marking: &Marking,
    data: &LaxTransformationData,
) -> Result<LaxTransformation, LawViolation> {
    let j = source.dom();
    let c = source.cod();
    if !Arc::ptr_eq(source.dom(), target.dom()) && source.dom().as_ref() != target.dom().as_ref() {
        return Err(violation(Law::BoundaryMismatch, "source and target 2-functors have different shapes"));
    }
    let mut on_objects = Vec::with_capacity(j.object_count());
    for i in j.objects() {
        let name = j.obj_name(i);
        let raw = data
            .on_objects
            .get(name)
            .ok_or_else(|| violation(Law::MissingEntry, format!("no component at object `{name}`")))?;
        let a = c
            .one_cell(raw)
            .ok_or_else(|| violation(Law::UnknownId, format!("component at `{name}` names unknown 1-cell `{raw}`")))?;
        if c.src1(a) != source.on_obj(i) || c.tgt1(a) != target.on_obj(i) {
            return Err(violation(
                Law::BoundaryMismatch,
                format!("component at `{name}` does not run F{name} → G{name}"),
            ));
        }
        on_objects.push(a);
    }
    let mut on_one_cells = Vec::with_capacity(j.one_cell_count());
    for k in j.one_cells() {
        let name = j.one_name(k);
        let raw = data
            .on_one_cells
            .get(name)
            .ok_or_else(|| violation(Law::MissingEntry, format!("no component at 1-cell `{name}`")))?;
        let a = c
            .two_cell(raw)
            .ok_or_else(|| violation(Law::UnknownId, format!("component at `{name}` names unknown 2-cell `{raw}`")))?;
        let i = j.src1(k);
        let jj = j.tgt1(k);
        let want_src = c.comp1(target.on_one(k), on_objects[i.0]);
        let want_tgt = c.comp1(on_objects[jj.0], source.on_one(k));
        if c.src2(a) != want_src || c.tgt2(a) != want_tgt {
            return Err(violation(
                Law::BoundaryMismatch,
                format!("component at `{name}` has wrong boundary"),
            ));
        }
        on_one_cells.push(a);
    }
    let t = LaxTransformation { on_objects, on_one_cells };
    check_lax_conditions(source, target, marking, &t)?;
    Ok(t)
}

fn check_lax_conditions(
    source: &TwoFunctor,
    target: &TwoFunctor,
    marking: &Marking,
    t: &LaxTransformation,
) -> Result<(), LawViolation> {
    let j = source.dom();
    let c = source.cod();
    for i in j.objects() {
        let k = j.id1(i);
        if t.on_one_cells[k.0] != c.id2(t.on_objects[i.0]) {
            return Err(violation(
                Law::TransformationIdentity,
                format!("component at identity of `{}` is not the identity 2-cell", j.obj_name(i)),
            ));
        }
    }
    for k in j.one_cells() {
        if marking.contains(k) && !c.is_invertible_2cell(t.on_one_cells[k.0]) {
            return Err(violation(
                Law::TransformationMarking,
                format!("component at marked 1-cell `{}` is not invertible", j.one_name(k)),
            ));
        }
    }
    for l in j.one_cells() {
        for k in j.one_cells() {
            if j.src1(l) != j.tgt1(k) {
                continue;
            }
            let lk = j.comp1(l, k);
            let lhs = t.on_one_cells[lk.0];
            let rhs = c.vcomp(
                c.rwhisk(t.on_one_cells[l.0], source.on_one(k)),
                c.lwhisk(target.on_one(l), t.on_one_cells[k.0]),
            );
            if lhs != rhs {
                return Err(violation(
                    Law::TransformationComposition,
                    format!("composition condition fails at `{}∘{}`", j.one_name(l), j.one_name(k)),
                ));
            }
        }
    }
    for d in j.two_cells() {
        let k = j.src2(d);
        let l = j.tgt2(d);
        let i = j.src1(k);
        let jj = j.tgt1(k);
        let lhs = c.vcomp(t.on_one_cells[l.0], c.rwhisk(target.on_two(d), t.on_objects[i.0]));
        let rhs = c.vcomp(c.lwhisk(t.on_objects[jj.0], source.on_two(d)), t.on_one_cells[k.0]);
        if lhs != rhs {
            return Err(violation(
                Law::TransformationCompatibility,
                format!("compatibility condition fails at 2-cell `{}`", j.two_name(d)),
            ));
        }
    }
    Ok(())
}

/// A lax cone over the diagram with a given vertex: legs α_i: x → Fi and
/// cells α_k: F(k)∗₀α_i ⇒ α_j, stored as explicit component tables. Equality
/// of cones is componentwise table equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cone {
    pub vertex: Obj,
    pub legs: Vec<One>,
    pub cells: Vec<Two>,
}

impl Cone {
    /// Reinterpret as a lax transformation Δx → F. The component tables
    /// coincide because whiskering with the constant functor is trivial.
    pub fn to_lax(&self) -> LaxTransformation {
        LaxTransformation { on_objects: self.legs.clone(), on_one_cells: self.cells.clone() }
    }
}

/// Validate a cone over `diag` with the stated vertex.
pub fn validate_cone(diag: &Diagram, cone: &Cone) -> Result<(), LawViolation> {
    let j = diag.shape();
    let c = diag.target();
    if cone.legs.len() != j.object_count() || cone.cells.len() != j.one_cell_count() {
        return Err(violation(Law::MissingEntry, "cone component tables do not cover the shape"));
    }
    for i in j.objects() {
        let leg = cone.legs[i.0];
        if c.src1(leg) != cone.vertex || c.tgt1(leg) != diag.functor().on_obj(i) {
            return Err(violation(
                Law::BoundaryMismatch,
                format!("leg at `{}` does not run from the vertex to F{}", j.obj_name(i), j.obj_name(i)),
            ));
        }
    }
    for k in j.one_cells() {
        let cell = cone.cells[k.0];
        let i = j.src1(k);
        let jj = j.tgt1(k);
        let want_src = c.comp1(diag.functor().on_one(k), cone.legs[i.0]);
        if c.src2(cell) != want_src || c.tgt2(cell) != cone.legs[jj.0] {
            return Err(violation(
                Law::BoundaryMismatch,
                format!("cone cell at `{}` has wrong boundary", j.one_name(k)),
            ));
        }
    }
    let source = TwoFunctor::constant(j, c, cone.vertex);
    check_lax_conditions(&source, diag.functor(), diag.marking(), &cone.to_lax())
}

/// Resolve a raw cone document against a diagram.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConeData {
    pub vertex: String,
    pub legs: BTreeMap<String, String>,
    pub cells: BTreeMap<String, String>,
}

pub fn resolve_cone(diag: &Diagram, data: &ConeData) -> Result<Cone, CatError> {
    let j = diag.shape();
    let c = diag.target();
    let vertex = c.object(&data.vertex).ok_or_else(|| CatError::unknown("object", data.vertex.clone()))?;
    let mut legs = Vec::with_capacity(j.object_count());
    for i in j.objects() {
        let name = j.obj_name(i);
        let raw = data
            .legs
            .get(name)
            .ok_or_else(|| CatError::Input(format!("cone has no leg at object `{name}`")))?;
        legs.push(c.one_cell(raw).ok_or_else(|| CatError::unknown("1-cell", raw.clone()))?);
    }
    let mut cells = Vec::with_capacity(j.one_cell_count());
    for k in j.one_cells() {
        let name = j.one_name(k);
        let raw = data
            .cells
            .get(name)
            .ok_or_else(|| CatError::Input(format!("cone has no cell at 1-cell `{name}`")))?;
        cells.push(c.two_cell(raw).ok_or_else(|| CatError::unknown("2-cell", raw.clone()))?);
    }
    let cone = Cone { vertex, legs, cells };
    validate_cone(diag, &cone)?;
    Ok(cone)
}

pub fn cone_to_data(diag: &Diagram, cone: &Cone) -> ConeData {
    let j = diag.shape();
    let c = diag.target();
    ConeData {
        vertex: c.obj_name(cone.vertex).to_string(),
        legs: j
            .objects()
            .map(|i| (j.obj_name(i).to_string(), c.one_name(cone.legs[i.0]).to_string()))
            .collect(),
        cells: j
            .one_cells()
            .map(|k| (j.one_name(k).to_string(), c.two_name(cone.cells[k.0]).to_string()))
            .collect(),
    }
}

/// Exhaustive, duplicate-free enumeration of the lax cones over `diag` with
/// the given vertex. Backtracks over legs in sorted object order, then cells
/// in sorted 1-cell order, pruning as soon as an equation over assigned
/// components fails. Output is sorted.
pub fn enumerate_cones(diag: &Diagram, vertex: Obj) -> Vec<Cone> {
    let j = diag.shape();
    let c = diag.target();
    let f = diag.functor();

    // Constraints triggered once their last participant is assigned.
    // Functoriality triples (k, l, lk) and compatibility pairs (k, k', Λ).
    let mut comp_triples: Vec<Vec<(One, One, One)>> = vec![Vec::new(); j.one_cell_count().max(1)];
    for l in j.one_cells() {
        for k in j.one_cells() {
            if j.src1(l) != j.tgt1(k) {
                continue;
            }
            let lk = j.comp1(l, k);
            let trigger = k.0.max(l.0).max(lk.0);
            comp_triples[trigger].push((k, l, lk));
        }
    }
    let mut compat_pairs: Vec<Vec<Two>> = vec![Vec::new(); j.one_cell_count().max(1)];
    for d in j.two_cells() {
        let k = j.src2(d);
        let l = j.tgt2(d);
        let trigger = k.0.max(l.0);
        compat_pairs[trigger].push(d);
    }

    let mut out = Vec::new();
    let mut legs: Vec<One> = Vec::with_capacity(j.object_count());
    enumerate_legs(diag, vertex, &mut legs, &mut |legs| {
        let mut cells: Vec<Two> = Vec::with_capacity(j.one_cell_count());
        enumerate_cells(diag, legs, &comp_triples, &compat_pairs, &mut cells, &mut |cells| {
            out.push(Cone { vertex, legs: legs.to_vec(), cells: cells.to_vec() });
        });
    });
    let _ = (c, f);
    out.sort();
    out
}

fn enumerate_legs(diag: &Diagram, vertex: Obj, legs: &mut Vec<One>, emit: &mut dyn FnMut(&[One])) {
    let j = diag.shape();
    let c = diag.target();
    if legs.len() == j.object_count() {
        emit(legs);
        return;
    }
    let i = Obj(legs.len());
    let target = diag.functor().on_obj(i);
    for &cand in c.one_hom(vertex, target) {
        legs.push(cand);
        enumerate_legs(diag, vertex, legs, emit);
        legs.pop();
    }
}

fn enumerate_cells(
    diag: &Diagram,
    legs: &[One],
    comp_triples: &[Vec<(One, One, One)>],
    compat_pairs: &[Vec<Two>],
    cells: &mut Vec<Two>,
    emit: &mut dyn FnMut(&[Two]),
) {
    let j = diag.shape();
    let c = diag.target();
    let f = diag.functor();
    if cells.len() == j.one_cell_count() {
        emit(cells);
        return;
    }
    let k = One(cells.len());
    let i = j.src1(k);
    let jj = j.tgt1(k);
    let src = c.comp1(f.on_one(k), legs[i.0]);
    let tgt = legs[jj.0];

    let forced_identity = j.id1(i) == k && i == jj;
    let candidates: Vec<Two> = if forced_identity {
        let id = c.id2(legs[i.0]);
        if c.src2(id) == src && c.tgt2(id) == tgt {
            vec![id]
        } else {
            Vec::new()
        }
    } else {
        c.two_hom(src, tgt)
            .iter()
            .copied()
            .filter(|&a| !diag.marking().contains(k) || c.is_invertible_2cell(a))
            .collect()
    };

    'cand: for cand in candidates {
        cells.push(cand);
        let t = cells.len() - 1;
        for &(k1, l1, lk1) in &comp_triples[t] {
            let lhs = cells[lk1.0];
            let rhs = c.vcomp(cells[l1.0], c.lwhisk(f.on_one(l1), cells[k1.0]));
            if lhs != rhs {
                cells.pop();
                continue 'cand;
            }
        }
        for &d in &compat_pairs[t] {
            let k1 = j.src2(d);
            let l1 = j.tgt2(d);
            let i1 = j.src1(k1);
            let lhs = cells[k1.0];
            let rhs = c.vcomp(cells[l1.0], c.rwhisk(f.on_two(d), legs[i1.0]));
            if lhs != rhs {
                cells.pop();
                continue 'cand;
            }
        }
        enumerate_cells(diag, legs, comp_triples, compat_pairs, cells, emit);
        cells.pop();
    }
}

/// A modification between cones at a fixed vertex: components μ_i: α_i ⇒ β_i
/// with β_k ∗₁ (Fk∗₀μ_i) = μ_j ∗₁ α_k for every k: i → j.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ConeMorphism {
    pub components: Vec<Two>,
}

/// Validate a modification μ: α → β of cones at the same vertex.
pub fn validate_cone_morphism(
    diag: &Diagram,
    alpha: &Cone,
    beta: &Cone,
    mu: &ConeMorphism,
) -> Result<(), LawViolation> {
    let j = diag.shape();
    let c = diag.target();
    if alpha.vertex != beta.vertex {
        return Err(violation(Law::BoundaryMismatch, "cones have different vertices"));
    }
    if mu.components.len() != j.object_count() {
        return Err(violation(Law::MissingEntry, "modification does not cover all objects of the shape"));
    }
    for i in j.objects() {
        let m = mu.components[i.0];
        if c.src2(m) != alpha.legs[i.0] || c.tgt2(m) != beta.legs[i.0] {
            return Err(violation(
                Law::BoundaryMismatch,
                format!("component at `{}` has wrong boundary", j.obj_name(i)),
            ));
        }
    }
    for k in j.one_cells() {
        let i = j.src1(k);
        let jj = j.tgt1(k);
        let lhs = c.vcomp(beta.cells[k.0], c.lwhisk(diag.functor().on_one(k), mu.components[i.0]));
        let rhs = c.vcomp(mu.components[jj.0], alpha.cells[k.0]);
        if lhs != rhs {
            return Err(violation(
                Law::ModificationCoherence,
                format!("coherence fails at 1-cell `{}`", j.one_name(k)),
            ));
        }
    }
    Ok(())
}

/// All modifications α → β, in lexicographic component order.
pub fn enumerate_cone_morphisms(diag: &Diagram, alpha: &Cone, beta: &Cone) -> Vec<ConeMorphism> {
    let j = diag.shape();
    let c = diag.target();
    // Constraints per 1-cell, triggered at the later endpoint.
    let mut constraints: Vec<Vec<One>> = vec![Vec::new(); j.object_count().max(1)];
    for k in j.one_cells() {
        let trigger = j.src1(k).0.max(j.tgt1(k).0);
        constraints[trigger].push(k);
    }
    let mut out = Vec::new();
    let mut comps: Vec<Two> = Vec::new();
    backtrack_cone_morphism(diag, alpha, beta, &constraints, &mut comps, &mut out);
    let _ = c;
    out
}

fn backtrack_cone_morphism(
    diag: &Diagram,
    alpha: &Cone,
    beta: &Cone,
    constraints: &[Vec<One>],
    comps: &mut Vec<Two>,
    out: &mut Vec<ConeMorphism>,
) {
    let j = diag.shape();
    let c = diag.target();
    if comps.len() == j.object_count() {
        out.push(ConeMorphism { components: comps.clone() });
        return;
    }
    let i = comps.len();
    'cand: for &cand in c.two_hom(alpha.legs[i], beta.legs[i]) {
        comps.push(cand);
        for &k in &constraints[i] {
            let s = j.src1(k);
            let t = j.tgt1(k);
            let lhs = c.vcomp(beta.cells[k.0], c.lwhisk(diag.functor().on_one(k), comps[s.0]));
            let rhs = c.vcomp(comps[t.0], alpha.cells[k.0]);
            if lhs != rhs {
                comps.pop();
                continue 'cand;
            }
        }
        backtrack_cone_morphism(diag, alpha, beta, constraints, comps, out);
        comps.pop();
    }
}

/// The cone category at a vertex: objects are the enumerated cones, morphisms
/// the modifications between them, composed objectwise by vcomp.
#[derive(Debug, Clone)]
pub struct ConeCategory {
    pub cat: FinCat,
    pub cones: Vec<Cone>,
    pub morphisms: Vec<(usize, usize, ConeMorphism)>,
    cone_index: HashMap<Cone, usize>,
    morphism_index: HashMap<(usize, usize, Vec<Two>), usize>,
}

impl ConeCategory {
    pub fn cone_index(&self, cone: &Cone) -> Option<usize> {
        self.cone_index.get(cone).copied()
    }

    pub fn morphism_index(&self, src: usize, tgt: usize, components: &[Two]) -> Option<usize> {
        self.morphism_index.get(&(src, tgt, components.to_vec())).copied()
    }

    pub fn object_of(&self, idx: usize) -> FObj {
        FObj(idx)
    }
}

pub fn cone_category(diag: &Diagram, vertex: Obj) -> ConeCategory {
    let c = diag.target();
    let cones = enumerate_cones(diag, vertex);
    let cone_index: HashMap<Cone, usize> = cones.iter().cloned().enumerate().map(|(i, c)| (c, i)).collect();

    let mut morphisms: Vec<(usize, usize, ConeMorphism)> = Vec::new();
    for (s, alpha) in cones.iter().enumerate() {
        for (t, beta) in cones.iter().enumerate() {
            for m in enumerate_cone_morphisms(diag, alpha, beta) {
                morphisms.push((s, t, m));
            }
        }
    }
    let morphism_index: HashMap<(usize, usize, Vec<Two>), usize> = morphisms
        .iter()
        .enumerate()
        .map(|(i, (s, t, m))| ((*s, *t, m.components.clone()), i))
        .collect();

    let width = 6;
    let objects: Vec<String> = (0..cones.len()).map(|i| format!("c{i:0width$}")).collect();
    let mut data = FinCatData { objects: objects.clone(), ..Default::default() };
    for (idx, (s, t, _m)) in morphisms.iter().enumerate() {
        data.morphisms.insert(
            format!("m{idx:0width$}"),
            MorData { src: objects[*s].clone(), tgt: objects[*t].clone() },
        );
    }
    for (i, cone) in cones.iter().enumerate() {
        let id_comps: Vec<Two> = cone.legs.iter().map(|&l| c.id2(l)).collect();
        let id_idx = morphism_index[&(i, i, id_comps)];
        data.id.insert(objects[i].clone(), format!("m{id_idx:0width$}"));
    }
    for (gi, (gs, gt, g)) in morphisms.iter().enumerate() {
        for (fi, (fs, ft, f)) in morphisms.iter().enumerate() {
            if *gs != *ft {
                continue;
            }
            let comps: Vec<Two> = (0..g.components.len())
                .map(|i| c.vcomp(g.components[i], f.components[i]))
                .collect();
            let gf = morphism_index[&(*fs, *gt, comps)];
            data.comp
                .entry(format!("m{gi:0width$}"))
                .or_default()
                .insert(format!("m{fi:0width$}"), format!("m{gf:0width$}"));
        }
    }
    let cat = validate_fincat(&data).expect("cone category is a valid category");
    ConeCategory { cat, cones, morphisms, cone_index, morphism_index }
}

/// Postcompose a cone at ℓ with a 1-cell f: x → ℓ: legs become λ_i∘f, cells
/// become λ_k∗₀f.
pub fn postcompose_cone(diag: &Diagram, lambda: &Cone, f: One) -> Result<Cone, CatError> {
    let c = diag.target();
    if c.tgt1(f) != lambda.vertex {
        return Err(CatError::Input("1-cell does not end at the cone vertex".into()));
    }
    Ok(Cone {
        vertex: c.src1(f),
        legs: lambda.legs.iter().map(|&l| c.comp1(l, f)).collect(),
        cells: lambda.cells.iter().map(|&a| c.rwhisk(a, f)).collect(),
    })
}

/// Postcompose a cone with a 2-cell ζ: f ⇒ g: x → ℓ, giving the modification
/// λ·f → λ·g with components λ_i∗₀ζ.
pub fn postcompose_mod(diag: &Diagram, lambda: &Cone, zeta: Two) -> Result<ConeMorphism, CatError> {
    let c = diag.target();
    if c.tgt1(c.src2(zeta)) != lambda.vertex {
        return Err(CatError::Input("2-cell does not lie under the cone vertex".into()));
    }
    Ok(ConeMorphism { components: lambda.legs.iter().map(|&l| c.lwhisk(l, zeta)).collect() })
}

/// The postcomposition functor λ∗ = λ·Δ(−): C(x, ℓ) → cone category at x.
pub struct LambdaStar {
    pub functor: Functor1,
    pub hom: FinCat,
    pub cones: ConeCategory,
}

pub fn lambda_star(diag: &Diagram, ell: Obj, lambda: &Cone, x: Obj) -> Result<LambdaStar, CatError> {
    let c = diag.target();
    if lambda.vertex != ell {
        return Err(CatError::Input("cone vertex does not match ℓ".into()));
    }
    let hom = c.hom_cat(x, ell);
    let cones = cone_category(diag, x);
    let mut obj_map: Vec<FObj> = Vec::with_capacity(hom.object_count());
    let hom_ones: Vec<One> = (0..hom.object_count())
        .map(|i| c.one_cell(hom.object_name(FObj(i))).expect("hom object is a 1-cell"))
        .collect();
    for &f in &hom_ones {
        let cone = postcompose_cone(diag, lambda, f)?;
        let idx = cones
            .cone_index(&cone)
            .ok_or_else(|| CatError::Input("postcomposed cone missing from enumeration".into()))?;
        obj_map.push(FObj(idx));
    }
    let mut mor_map: Vec<FMor> = Vec::with_capacity(hom.morphism_count());
    for mi in 0..hom.morphism_count() {
        let m = FMor(mi);
        let zeta = c.two_cell(hom.morphism_name(m)).expect("hom morphism is a 2-cell");
        let modification = postcompose_mod(diag, lambda, zeta)?;
        let s = obj_map[hom.src(m).0].0;
        let t = obj_map[hom.tgt(m).0].0;
        let idx = cones
            .morphism_index(s, t, &modification.components)
            .ok_or_else(|| CatError::Input("postcomposed modification missing from enumeration".into()))?;
        mor_map.push(FMor(idx));
    }
    let functor = Functor1::validate(hom.clone(), cones.cat.clone(), obj_map, mor_map)?;
    Ok(LambdaStar { functor, hom, cones })
}

/// Resolve a raw lax transformation document against a pair of functors.
pub fn resolve_lax_transformation(
    source: &TwoFunctor,
    target: &TwoFunctor,
    marking: &Marking,
    data: &LaxTransformationData,
) -> Result<LaxTransformation, CatError> {
    Ok(validate_lax_transformation(source, target, marking, data)?)
}

/// Identity transformation F → F.
pub fn identity_transformation(f: &TwoFunctor) -> LaxTransformationData {
    let j = f.dom();
    let c = f.cod();
    LaxTransformationData {
        on_objects: j
            .objects()
            .map(|i| (j.obj_name(i).to_string(), c.one_name(c.id1(f.on_obj(i))).to_string()))
            .collect(),
        on_one_cells: j
            .one_cells()
            .map(|k| (j.one_name(k).to_string(), c.two_name(c.id2(f.on_one(k))).to_string()))
            .collect(),
    }
}

/// Helper: build a 2-functor document from object/1-cell assignments of a
/// shape whose 2-cells are all identities, filling the forced 2-cell map.
pub fn functor_data_from_one_maps(
    j: &TwoCat,
    c: &TwoCat,
    on_objects: &[(&str, &str)],
    on_one_cells: &[(&str, &str)],
) -> TwoFunctorData {
    let mut data = TwoFunctorData::default();
    for (k, v) in on_objects {
        data.on_objects.insert(k.to_string(), v.to_string());
    }
    for (k, v) in on_one_cells {
        data.on_one_cells.insert(k.to_string(), v.to_string());
    }
    for a in j.two_cells() {
        let f = j.src2(a);
        if j.tgt2(a) == f && j.id2(f) == a {
            if let Some(im) = data.on_one_cells.get(j.one_name(f)) {
                if let Some(im_cell) = c.one_cell(im) {
                    data.on_two_cells
                        .insert(j.two_name(a).to_string(), c.two_name(c.id2(im_cell)).to_string());
                }
            }
        }
    }
    data
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::functor::validate_functor;
    use crate::shapes;
    use crate::twocat::validate_twocat;

    fn point_diagram(c: &Arc<TwoCat>, at: &str) -> Diagram {
        let j = Arc::new(shapes::point());
        let data = functor_data_from_one_maps(
            &j,
            c,
            &[("*", at)],
            &[("1_*", c.one_name(c.id1(c.object(at).unwrap())))],
        );
        let f = validate_functor(&j, c, &data).unwrap();
        Diagram::minimal(f)
    }

    #[test]
    fn identity_transformation_is_valid_for_any_marking() {
        let c = Arc::new(shapes::two_cell());
        let f = TwoFunctor::identity(&c);
        let data = identity_transformation(&f);
        for marking in [Marking::minimal(&c), Marking::all(&c)] {
            validate_lax_transformation(&f, &f, &marking, &data).unwrap();
        }
    }

    #[test]
    fn point_cones_are_one_cells() {
        let c = Arc::new(shapes::two_cell());
        let diag = point_diagram(&c, "1");
        let zero = c.object("0").unwrap();
        let cones = enumerate_cones(&diag, zero);
        assert_eq!(cones.len(), 2); // f and g
        let cat = cone_category(&diag, zero);
        let hom = c.hom_cat(zero, c.object("1").unwrap());
        assert!(crate::fincat::cats_isomorphic(&cat.cat, &hom));
    }

    #[test]
    fn empty_shape_has_one_cone_per_vertex() {
        let c = Arc::new(shapes::two_cell());
        let j = Arc::new(shapes::empty());
        let f = validate_functor(&j, &c, &TwoFunctorData::default()).unwrap();
        let diag = Diagram::minimal(f);
        for x in c.objects() {
            let cones = enumerate_cones(&diag, x);
            assert_eq!(cones.len(), 1);
            let cat = cone_category(&diag, x);
            assert_eq!(cat.cat.object_count(), 1);
            assert_eq!(cat.cat.morphism_count(), 1);
        }
    }

    #[test]
    fn arrow_shaped_cones_in_two_cell() {
        // Shape Δ1 into the walking 2-cell along the arrow ↦ f embedding.
        let c = Arc::new(shapes::two_cell());
        let j = Arc::new(shapes::arrow());
        let data = functor_data_from_one_maps(
            &j,
            &c,
            &[("0", "0"), ("1", "1")],
            &[("1_0", "1_0"), ("1_1", "1_1"), ("a", "f")],
        );
        let f = validate_functor(&j, &c, &data).unwrap();
        let diag = Diagram::minimal(f);
        let zero = c.object("0").unwrap();
        let cones = enumerate_cones(&diag, zero);
        // α_0 = 1_0 forced, α_1 ∈ {f, g}, cell: f∘1_0 ⇒ α_1.
        assert_eq!(cones.len(), 2);
    }

    #[test]
    fn pruned_enumeration_matches_naive() {
        let c = Arc::new(shapes::two_cell());
        let j = Arc::new(shapes::arrow());
        let data = functor_data_from_one_maps(
            &j,
            &c,
            &[("0", "0"), ("1", "1")],
            &[("1_0", "1_0"), ("1_1", "1_1"), ("a", "f")],
        );
        let f = validate_functor(&j, &c, &data).unwrap();
        let diag = Diagram::minimal(f);
        for x in c.objects() {
            let fast = enumerate_cones(&diag, x);
            let slow = naive_enumerate(&diag, x);
            assert_eq!(fast, slow);
        }
    }

    /// Full product enumeration with post-hoc filtering; no pruning.
    fn naive_enumerate(diag: &Diagram, vertex: Obj) -> Vec<Cone> {
        let j = diag.shape();
        let c = diag.target();
        let mut out = Vec::new();
        let leg_choices: Vec<Vec<One>> = j
            .objects()
            .map(|i| c.one_hom(vertex, diag.functor().on_obj(i)).to_vec())
            .collect();
        let mut legs = vec![None; j.object_count()];
        product(&leg_choices, &mut legs, 0, &mut |legs| {
            let legs: Vec<One> = legs.iter().map(|l| l.unwrap()).collect();
            let cell_choices: Vec<Vec<Two>> = j
                .one_cells()
                .map(|k| {
                    let src = c.comp1(diag.functor().on_one(k), legs[j.src1(k).0]);
                    let tgt = legs[j.tgt1(k).0];
                    c.two_hom(src, tgt).to_vec()
                })
                .collect();
            let mut cells = vec![None; j.one_cell_count()];
            product(&cell_choices, &mut cells, 0, &mut |cells| {
                let cells: Vec<Two> = cells.iter().map(|x| x.unwrap()).collect();
                let cone = Cone { vertex, legs: legs.clone(), cells };
                if validate_cone(diag, &cone).is_ok() {
                    out.push(cone);
                }
            });
        });
        out.sort();
        out.dedup();
        out
    }

    fn product<T: Copy>(choices: &[Vec<T>], slots: &mut Vec<Option<T>>, at: usize, emit: &mut dyn FnMut(&Vec<Option<T>>)) {
        if at == choices.len() {
            emit(slots);
            return;
        }
        for &cand in &choices[at] {
            slots[at] = Some(cand);
            product(choices, slots, at + 1, emit);
        }
        slots[at] = None;
        if choices[at].is_empty() {
            // no candidates: dead branch
        }
    }

    #[test]
    fn cone_category_morphisms_match_brute_force() {
        let c = Arc::new(shapes::two_cell());
        let diag = point_diagram(&c, "1");
        let zero = c.object("0").unwrap();
        let cat = cone_category(&diag, zero);
        for (s, alpha) in cat.cones.iter().enumerate() {
            for (t, beta) in cat.cones.iter().enumerate() {
                let listed = cat.morphisms.iter().filter(|(a, b, _)| *a == s && *b == t).count();
                let mut brute = 0;
                for m in c.two_cells() {
                    let cand = ConeMorphism { components: vec![m] };
                    if validate_cone_morphism(&diag, alpha, beta, &cand).is_ok() {
                        brute += 1;
                    }
                }
                assert_eq!(listed, brute);
            }
        }
    }

    #[test]
    fn lambda_star_point_identity_is_isomorphism() {
        let c = Arc::new(shapes::two_cell());
        for at in ["0", "1"] {
            let diag = point_diagram(&c, at);
            let ell = c.object(at).unwrap();
            let id_cone = Cone { vertex: ell, legs: vec![c.id1(ell)], cells: vec![c.id2(c.id1(ell))] };
            validate_cone(&diag, &id_cone).unwrap();
            for x in c.objects() {
                let ls = lambda_star(&diag, ell, &id_cone, x).unwrap();
                // Isomorphism of categories: bijective on objects and morphisms.
                assert_eq!(ls.hom.object_count(), ls.cones.cat.object_count());
                assert_eq!(ls.hom.morphism_count(), ls.cones.cat.morphism_count());
                assert!(crate::fincat::functor_is_equivalence(&ls.functor));
            }
        }
    }

    #[test]
    fn broken_compatibility_is_reported() {
        // Shape Δ2 mapped into the category with two parallel 2-cells alpha,
        // beta: the cone cell at f is pinned to alpha by the relation
        // α_f = α_g ∗₁ (Fα ∗₀ α_0); putting beta there must fail.
        let c = Arc::new(shapes::parallel_two_cells());
        let j = Arc::new(shapes::two_cell());
        let mut data = functor_data_from_one_maps(
            &j,
            &c,
            &[("0", "0"), ("1", "1")],
            &[("1_0", "1_0"), ("1_1", "1_1"), ("f", "f"), ("g", "g")],
        );
        data.on_two_cells.insert("alpha".into(), "alpha".into());
        let f = validate_functor(&j, &c, &data).unwrap();
        let diag = Diagram::minimal(f);
        let zero = c.object("0").unwrap();
        let gcell = c.one_cell("g").unwrap();
        // Sorted 1-cells of the shape: 1_0, 1_1, f, g.
        let legs = vec![c.id1(zero), gcell];
        let good = Cone {
            vertex: zero,
            legs: legs.clone(),
            cells: vec![c.id2(c.id1(zero)), c.id2(gcell), c.two_cell("alpha").unwrap(), c.id2(gcell)],
        };
        validate_cone(&diag, &good).unwrap();
        let bad = Cone {
            vertex: zero,
            legs,
            cells: vec![c.id2(c.id1(zero)), c.id2(gcell), c.two_cell("beta").unwrap(), c.id2(gcell)],
        };
        let err = validate_cone(&diag, &bad).unwrap_err();
        assert_eq!(err.law, Law::TransformationCompatibility);
        assert!(err.detail.contains("alpha"));
        // The enumeration must likewise only ever produce the pinned cone.
        let cones = enumerate_cones(&diag, zero);
        assert!(cones.contains(&good) && !cones.contains(&bad));
    }

    #[test]
    fn postcompose_laws() {
        let c = Arc::new(shapes::two_cell());
        let diag = point_diagram(&c, "1");
        let ell = c.object("1").unwrap();
        let id_cone = Cone { vertex: ell, legs: vec![c.id1(ell)], cells: vec![c.id2(c.id1(ell))] };
        // λ·id = λ
        let back = postcompose_cone(&diag, &id_cone, c.id1(ell)).unwrap();
        assert_eq!(back, id_cone);
        // (λ·f)·g = λ·(f∘g) on the walking 2-cell: pick f: 0→1 then nothing
        // composes further, so check at identities instead.
        let fcell = c.one_cell("f").unwrap();
        let composed = postcompose_cone(&diag, &id_cone, fcell).unwrap();
        let zero = c.object("0").unwrap();
        let again = postcompose_cone(&diag, &composed, c.id1(zero)).unwrap();
        assert_eq!(composed, again);
    }

    #[test]
    fn validate_twocat_rejects_unknown_reference() {
        let mut data = shapes::two_cell_data();
        data.two_cells.get_mut("alpha").unwrap().src = "nope".into();
        assert!(validate_twocat(&data).is_err());
    }
}
