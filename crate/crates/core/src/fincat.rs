//! Finite 1-categories with fully tabulated composition, plus the decision
//! procedures built on them: terminal objects, isomorphism classes, skeletons,
//! functor equivalence, and equivalence of categories via skeleton isomorphism.

use std::collections::{BTreeMap, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::error::{violation, Law, LawViolation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FObj(pub usize);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FMor(pub usize);

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MorData {
    pub src: String,
    pub tgt: String,
}

/// Raw tables of a finite category, as they appear on disk. `comp[g][f]`
/// holds `g∘f` and must be defined exactly on the composable pairs.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FinCatData {
    pub objects: Vec<String>,
    pub morphisms: BTreeMap<String, MorData>,
    pub id: BTreeMap<String, String>,
    pub comp: BTreeMap<String, BTreeMap<String, String>>,
}

/// A validated finite category. Immutable after sealing.
#[derive(Debug, Clone)]
pub struct FinCat {
    obj_names: Vec<String>,
    mor_names: Vec<String>,
    obj_index: HashMap<String, FObj>,
    mor_index: HashMap<String, FMor>,
    src: Vec<FObj>,
    tgt: Vec<FObj>,
    id: Vec<FMor>,
    comp: HashMap<(FMor, FMor), FMor>,
    homs: HashMap<(FObj, FObj), Vec<FMor>>,
}

impl PartialEq for FinCat {
    fn eq(&self, other: &Self) -> bool {
        self.obj_names == other.obj_names
            && self.mor_names == other.mor_names
            && self.src == other.src
            && self.tgt == other.tgt
            && self.id == other.id
            && self.comp == other.comp
    }
}
impl Eq for FinCat {}

/// Seal a raw finite category, checking well-formedness, unit and
/// associativity laws. Reports the first violation with concrete witnesses,
/// scanning in sorted id order.
pub fn validate_fincat(data: &FinCatData) -> Result<FinCat, LawViolation> {
    let mut obj_names = data.objects.clone();
    obj_names.sort();
    for w in obj_names.windows(2) {
        if w[0] == w[1] {
            return Err(violation(Law::DuplicateId, format!("object `{}` listed twice", w[0])));
        }
    }
    let obj_index: HashMap<String, FObj> =
        obj_names.iter().enumerate().map(|(i, n)| (n.clone(), FObj(i))).collect();

    let mor_names: Vec<String> = data.morphisms.keys().cloned().collect();
    let mor_index: HashMap<String, FMor> =
        mor_names.iter().enumerate().map(|(i, n)| (n.clone(), FMor(i))).collect();

    let mut src = Vec::with_capacity(mor_names.len());
    let mut tgt = Vec::with_capacity(mor_names.len());
    for name in &mor_names {
        let m = &data.morphisms[name];
        let s = *obj_index.get(&m.src).ok_or_else(|| {
            violation(Law::UnknownId, format!("morphism `{name}` has unknown src `{}`", m.src))
        })?;
        let t = *obj_index.get(&m.tgt).ok_or_else(|| {
            violation(Law::UnknownId, format!("morphism `{name}` has unknown tgt `{}`", m.tgt))
        })?;
        src.push(s);
        tgt.push(t);
    }

    // Identities: total, endo, and resolving.
    let mut id = vec![FMor(usize::MAX); obj_names.len()];
    for (obj, mor) in &data.id {
        let o = *obj_index
            .get(obj)
            .ok_or_else(|| violation(Law::UnknownId, format!("id table names unknown object `{obj}`")))?;
        let m = *mor_index
            .get(mor)
            .ok_or_else(|| violation(Law::UnknownId, format!("id[{obj}] names unknown morphism `{mor}`")))?;
        if src[m.0] != o || tgt[m.0] != o {
            return Err(violation(
                Law::IdentityShape,
                format!("id[{obj}] = `{mor}` is not an endomorphism of `{obj}`"),
            ));
        }
        id[o.0] = m;
    }
    for (i, name) in obj_names.iter().enumerate() {
        if id[i] == FMor(usize::MAX) {
            return Err(violation(Law::MissingEntry, format!("no identity assigned to object `{name}`")));
        }
    }

    // Composition: defined exactly on composable pairs, with correct boundaries.
    let mut comp: HashMap<(FMor, FMor), FMor> = HashMap::new();
    for (g_name, row) in &data.comp {
        let g = *mor_index
            .get(g_name)
            .ok_or_else(|| violation(Law::UnknownId, format!("comp row names unknown morphism `{g_name}`")))?;
        for (f_name, gf_name) in row {
            let f = *mor_index.get(f_name).ok_or_else(|| {
                violation(Law::UnknownId, format!("comp[{g_name}] names unknown morphism `{f_name}`"))
            })?;
            let gf = *mor_index.get(gf_name).ok_or_else(|| {
                violation(Law::UnknownId, format!("comp[{g_name}][{f_name}] names unknown morphism `{gf_name}`"))
            })?;
            if src[g.0] != tgt[f.0] {
                return Err(violation(
                    Law::SpuriousEntry,
                    format!("comp[{g_name}][{f_name}] defined but `{g_name}` and `{f_name}` are not composable"),
                ));
            }
            if src[gf.0] != src[f.0] || tgt[gf.0] != tgt[g.0] {
                return Err(violation(
                    Law::BoundaryMismatch,
                    format!("comp[{g_name}][{f_name}] = `{gf_name}` has wrong boundary"),
                ));
            }
            comp.insert((g, f), gf);
        }
    }
    for g in 0..mor_names.len() {
        for f in 0..mor_names.len() {
            if src[g] == tgt[f] && !comp.contains_key(&(FMor(g), FMor(f))) {
                return Err(violation(
                    Law::MissingEntry,
                    format!("comp[{}][{}] undefined for a composable pair", mor_names[g], mor_names[f]),
                ));
            }
        }
    }

    // Unit laws.
    for f in 0..mor_names.len() {
        let fm = FMor(f);
        let left = comp[&(id[tgt[f].0], fm)];
        if left != fm {
            return Err(violation(
                Law::UnitLaw,
                format!("id∘{} = {} differs from {}", mor_names[f], mor_names[left.0], mor_names[f]),
            ));
        }
        let right = comp[&(fm, id[src[f].0])];
        if right != fm {
            return Err(violation(
                Law::UnitLaw,
                format!("{}∘id = {} differs from {}", mor_names[f], mor_names[right.0], mor_names[f]),
            ));
        }
    }

    // Associativity over all composable triples.
    for h in 0..mor_names.len() {
        for g in 0..mor_names.len() {
            if src[h] != tgt[g] {
                continue;
            }
            for f in 0..mor_names.len() {
                if src[g] != tgt[f] {
                    continue;
                }
                let hg = comp[&(FMor(h), FMor(g))];
                let gf = comp[&(FMor(g), FMor(f))];
                if comp[&(hg, FMor(f))] != comp[&(FMor(h), gf)] {
                    return Err(violation(
                        Law::Associativity,
                        format!(
                            "({}∘{})∘{} ≠ {}∘({}∘{})",
                            mor_names[h], mor_names[g], mor_names[f], mor_names[h], mor_names[g], mor_names[f]
                        ),
                    ));
                }
            }
        }
    }

    let mut homs: HashMap<(FObj, FObj), Vec<FMor>> = HashMap::new();
    for m in 0..mor_names.len() {
        homs.entry((src[m], tgt[m])).or_default().push(FMor(m));
    }

    Ok(FinCat { obj_names, mor_names, obj_index, mor_index, src, tgt, id, comp, homs })
}

impl FinCat {
    pub fn object_count(&self) -> usize {
        self.obj_names.len()
    }

    pub fn morphism_count(&self) -> usize {
        self.mor_names.len()
    }

    pub fn objects(&self) -> impl Iterator<Item = FObj> {
        (0..self.obj_names.len()).map(FObj)
    }

    pub fn morphisms(&self) -> impl Iterator<Item = FMor> {
        (0..self.mor_names.len()).map(FMor)
    }

    pub fn object_name(&self, o: FObj) -> &str {
        &self.obj_names[o.0]
    }

    pub fn morphism_name(&self, m: FMor) -> &str {
        &self.mor_names[m.0]
    }

    pub fn object(&self, name: &str) -> Option<FObj> {
        self.obj_index.get(name).copied()
    }

    pub fn morphism(&self, name: &str) -> Option<FMor> {
        self.mor_index.get(name).copied()
    }

    pub fn src(&self, m: FMor) -> FObj {
        self.src[m.0]
    }

    pub fn tgt(&self, m: FMor) -> FObj {
        self.tgt[m.0]
    }

    pub fn id(&self, o: FObj) -> FMor {
        self.id[o.0]
    }

    pub fn comp(&self, g: FMor, f: FMor) -> Option<FMor> {
        self.comp.get(&(g, f)).copied()
    }

    /// Composable composition; panics on a non-composable pair, which is a
    /// caller bug on sealed data.
    pub fn comp_unchecked(&self, g: FMor, f: FMor) -> FMor {
        self.comp[&(g, f)]
    }

    pub fn hom(&self, a: FObj, b: FObj) -> &[FMor] {
        self.homs.get(&(a, b)).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn is_iso(&self, m: FMor) -> bool {
        self.inverse(m).is_some()
    }

    pub fn inverse(&self, m: FMor) -> Option<FMor> {
        let (a, b) = (self.src(m), self.tgt(m));
        self.hom(b, a)
            .iter()
            .copied()
            .find(|&n| self.comp_unchecked(n, m) == self.id(a) && self.comp_unchecked(m, n) == self.id(b))
    }

    pub fn objects_isomorphic(&self, a: FObj, b: FObj) -> bool {
        a == b || self.hom(a, b).iter().any(|&m| self.is_iso(m))
    }

    pub fn opposite(&self) -> FinCat {
        let data = self.to_data_reversed();
        validate_fincat(&data).expect("opposite of a sealed category is sealed")
    }

    fn to_data_reversed(&self) -> FinCatData {
        let mut morphisms = BTreeMap::new();
        for m in self.morphisms() {
            morphisms.insert(
                self.morphism_name(m).to_string(),
                MorData {
                    src: self.object_name(self.tgt(m)).to_string(),
                    tgt: self.object_name(self.src(m)).to_string(),
                },
            );
        }
        let id = self
            .objects()
            .map(|o| (self.object_name(o).to_string(), self.morphism_name(self.id(o)).to_string()))
            .collect();
        let mut comp: BTreeMap<String, BTreeMap<String, String>> = BTreeMap::new();
        for (&(g, f), &gf) in &self.comp {
            comp.entry(self.morphism_name(f).to_string())
                .or_default()
                .insert(self.morphism_name(g).to_string(), self.morphism_name(gf).to_string());
        }
        FinCatData { objects: self.obj_names.clone(), morphisms, id, comp }
    }

    pub fn to_data(&self) -> FinCatData {
        let mut morphisms = BTreeMap::new();
        for m in self.morphisms() {
            morphisms.insert(
                self.morphism_name(m).to_string(),
                MorData {
                    src: self.object_name(self.src(m)).to_string(),
                    tgt: self.object_name(self.tgt(m)).to_string(),
                },
            );
        }
        let id = self
            .objects()
            .map(|o| (self.object_name(o).to_string(), self.morphism_name(self.id(o)).to_string()))
            .collect();
        let mut comp: BTreeMap<String, BTreeMap<String, String>> = BTreeMap::new();
        for (&(g, f), &gf) in &self.comp {
            comp.entry(self.morphism_name(g).to_string())
                .or_default()
                .insert(self.morphism_name(f).to_string(), self.morphism_name(gf).to_string());
        }
        FinCatData { objects: self.obj_names.clone(), morphisms, id, comp }
    }

    /// Partition objects into isomorphism classes; each class is sorted and
    /// the classes are ordered by their least member.
    pub fn iso_classes(&self) -> Vec<Vec<FObj>> {
        let n = self.object_count();
        let mut class = vec![usize::MAX; n];
        let mut classes: Vec<Vec<FObj>> = Vec::new();
        for i in 0..n {
            if class[i] != usize::MAX {
                continue;
            }
            let c = classes.len();
            class[i] = c;
            let mut members = vec![FObj(i)];
            for j in (i + 1)..n {
                if class[j] == usize::MAX && self.objects_isomorphic(FObj(i), FObj(j)) {
                    class[j] = c;
                    members.push(FObj(j));
                }
            }
            classes.push(members);
        }
        classes
    }

    /// Full subcategory on the least-id representative of each isomorphism
    /// class.
    pub fn skeleton(&self) -> FinCat {
        let reps: HashSet<FObj> = self.iso_classes().into_iter().map(|c| c[0]).collect();
        let keep_obj: Vec<FObj> = self.objects().filter(|o| reps.contains(o)).collect();
        self.full_subcategory(&keep_obj)
    }

    pub fn full_subcategory(&self, keep: &[FObj]) -> FinCat {
        let keep_set: HashSet<FObj> = keep.iter().copied().collect();
        let mut morphisms = BTreeMap::new();
        for m in self.morphisms() {
            if keep_set.contains(&self.src(m)) && keep_set.contains(&self.tgt(m)) {
                morphisms.insert(
                    self.morphism_name(m).to_string(),
                    MorData {
                        src: self.object_name(self.src(m)).to_string(),
                        tgt: self.object_name(self.tgt(m)).to_string(),
                    },
                );
            }
        }
        let id = keep
            .iter()
            .map(|&o| (self.object_name(o).to_string(), self.morphism_name(self.id(o)).to_string()))
            .collect();
        let mut comp: BTreeMap<String, BTreeMap<String, String>> = BTreeMap::new();
        for (&(g, f), &gf) in &self.comp {
            let gs = self.src(g);
            let fs = self.src(f);
            let gt = self.tgt(g);
            if keep_set.contains(&fs) && keep_set.contains(&gs) && keep_set.contains(&gt) {
                comp.entry(self.morphism_name(g).to_string())
                    .or_default()
                    .insert(self.morphism_name(f).to_string(), self.morphism_name(gf).to_string());
            }
        }
        let objects = keep.iter().map(|&o| self.object_name(o).to_string()).collect();
        validate_fincat(&FinCatData { objects, morphisms, id, comp })
            .expect("full subcategory of a sealed category is sealed")
    }
}

/// Objects `t` with exactly one morphism from every object, returned in
/// sorted id order.
pub fn terminal_objects(cat: &FinCat) -> Vec<FObj> {
    cat.objects()
        .filter(|&t| cat.objects().all(|a| cat.hom(a, t).len() == 1))
        .collect()
}

/// A functor between sealed finite categories, stored as explicit maps.
#[derive(Debug, Clone, PartialEq)]
pub struct Functor1 {
    dom: FinCat,
    cod: FinCat,
    obj_map: Vec<FObj>,
    mor_map: Vec<FMor>,
}

impl Functor1 {
    /// Validate preservation of boundaries, identities and composition.
    pub fn validate(dom: FinCat, cod: FinCat, obj_map: Vec<FObj>, mor_map: Vec<FMor>) -> Result<Functor1, LawViolation> {
        if obj_map.len() != dom.object_count() || mor_map.len() != dom.morphism_count() {
            return Err(violation(Law::MissingEntry, "functor maps do not cover the domain"));
        }
        if let Some(&o) = obj_map.iter().find(|o| o.0 >= cod.object_count()) {
            return Err(violation(Law::UnknownId, format!("object map hits missing index {}", o.0)));
        }
        if let Some(&m) = mor_map.iter().find(|m| m.0 >= cod.morphism_count()) {
            return Err(violation(Law::UnknownId, format!("morphism map hits missing index {}", m.0)));
        }
        for m in dom.morphisms() {
            let im = mor_map[m.0];
            if cod.src(im) != obj_map[dom.src(m).0] || cod.tgt(im) != obj_map[dom.tgt(m).0] {
                return Err(violation(
                    Law::Preservation,
                    format!("image of `{}` has wrong boundary", dom.morphism_name(m)),
                ));
            }
        }
        for o in dom.objects() {
            if mor_map[dom.id(o).0] != cod.id(obj_map[o.0]) {
                return Err(violation(
                    Law::Preservation,
                    format!("identity of `{}` not preserved", dom.object_name(o)),
                ));
            }
        }
        for g in dom.morphisms() {
            for f in dom.morphisms() {
                if let Some(gf) = dom.comp(g, f) {
                    let lhs = mor_map[gf.0];
                    let rhs = cod.comp_unchecked(mor_map[g.0], mor_map[f.0]);
                    if lhs != rhs {
                        return Err(violation(
                            Law::Preservation,
                            format!(
                                "composition `{}∘{}` not preserved",
                                dom.morphism_name(g),
                                dom.morphism_name(f)
                            ),
                        ));
                    }
                }
            }
        }
        Ok(Functor1 { dom, cod, obj_map, mor_map })
    }

    pub fn identity(cat: &FinCat) -> Functor1 {
        Functor1 {
            dom: cat.clone(),
            cod: cat.clone(),
            obj_map: cat.objects().collect(),
            mor_map: cat.morphisms().collect(),
        }
    }

    pub fn dom(&self) -> &FinCat {
        &self.dom
    }

    pub fn cod(&self) -> &FinCat {
        &self.cod
    }

    pub fn on_object(&self, o: FObj) -> FObj {
        self.obj_map[o.0]
    }

    pub fn on_morphism(&self, m: FMor) -> FMor {
        self.mor_map[m.0]
    }
}

/// Why a functor fails to be an equivalence of categories.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EquivalenceFailure {
    NotFaithful { a: String, b: String, first: String, second: String },
    NotFull { a: String, b: String, missing: String },
    NotEssentiallySurjective { object: String },
}

/// Fully faithful + essentially surjective, decided by scanning.
pub fn functor_equivalence_report(u: &Functor1) -> Result<(), EquivalenceFailure> {
    let dom = u.dom();
    let cod = u.cod();
    for a in dom.objects() {
        for b in dom.objects() {
            let image_a = u.on_object(a);
            let image_b = u.on_object(b);
            let hom = dom.hom(a, b);
            let mut seen: HashMap<FMor, FMor> = HashMap::new();
            for &m in hom {
                let im = u.on_morphism(m);
                if let Some(&prev) = seen.get(&im) {
                    return Err(EquivalenceFailure::NotFaithful {
                        a: dom.object_name(a).to_string(),
                        b: dom.object_name(b).to_string(),
                        first: dom.morphism_name(prev).to_string(),
                        second: dom.morphism_name(m).to_string(),
                    });
                }
                seen.insert(im, m);
            }
            for &n in cod.hom(image_a, image_b) {
                if !seen.contains_key(&n) {
                    return Err(EquivalenceFailure::NotFull {
                        a: dom.object_name(a).to_string(),
                        b: dom.object_name(b).to_string(),
                        missing: cod.morphism_name(n).to_string(),
                    });
                }
            }
        }
    }
    for d in cod.objects() {
        let hit = dom.objects().any(|a| cod.objects_isomorphic(u.on_object(a), d));
        if !hit {
            return Err(EquivalenceFailure::NotEssentiallySurjective {
                object: cod.object_name(d).to_string(),
            });
        }
    }
    Ok(())
}

pub fn functor_is_equivalence(u: &Functor1) -> bool {
    functor_equivalence_report(u).is_ok()
}

/// Equivalence of finite categories, decided by isomorphism of skeletons.
pub fn cats_equivalent(a: &FinCat, b: &FinCat) -> bool {
    cats_isomorphic(&a.skeleton(), &b.skeleton())
}

/// Backtracking search for an isomorphism of categories.
pub fn cats_isomorphic(a: &FinCat, b: &FinCat) -> bool {
    if a.object_count() != b.object_count() || a.morphism_count() != b.morphism_count() {
        return false;
    }
    let n = a.object_count();
    let profile = |cat: &FinCat, o: FObj| -> Vec<usize> {
        let mut outs: Vec<usize> = cat.objects().map(|t| cat.hom(o, t).len()).collect();
        let mut ins: Vec<usize> = cat.objects().map(|s| cat.hom(s, o).len()).collect();
        outs.sort_unstable();
        ins.sort_unstable();
        outs.push(usize::MAX);
        outs.extend(ins);
        outs
    };
    let prof_a: Vec<Vec<usize>> = a.objects().map(|o| profile(a, o)).collect();
    let prof_b: Vec<Vec<usize>> = b.objects().map(|o| profile(b, o)).collect();

    let mut assigned = vec![usize::MAX; n];
    let mut used = vec![false; n];
    search_object_map(a, b, &prof_a, &prof_b, 0, &mut assigned, &mut used)
}

fn search_object_map(
    a: &FinCat,
    b: &FinCat,
    prof_a: &[Vec<usize>],
    prof_b: &[Vec<usize>],
    next: usize,
    assigned: &mut Vec<usize>,
    used: &mut Vec<bool>,
) -> bool {
    let n = a.object_count();
    if next == n {
        return morphism_bijection_exists(a, b, assigned);
    }
    for cand in 0..n {
        if used[cand] || prof_a[next] != prof_b[cand] {
            continue;
        }
        let consistent = (0..next).all(|prev| {
            a.hom(FObj(prev), FObj(next)).len() == b.hom(FObj(assigned[prev]), FObj(cand)).len()
                && a.hom(FObj(next), FObj(prev)).len() == b.hom(FObj(cand), FObj(assigned[prev])).len()
        });
        if !consistent {
            continue;
        }
        assigned[next] = cand;
        used[cand] = true;
        if search_object_map(a, b, prof_a, prof_b, next + 1, assigned, used) {
            return true;
        }
        used[cand] = false;
        assigned[next] = usize::MAX;
    }
    false
}

fn morphism_bijection_exists(a: &FinCat, b: &FinCat, obj_map: &[usize]) -> bool {
    let mut mor_map: Vec<Option<FMor>> = vec![None; a.morphism_count()];
    let mut taken: HashSet<FMor> = HashSet::new();
    // Identities are forced.
    for o in a.objects() {
        let im = b.id(FObj(obj_map[o.0]));
        mor_map[a.id(o).0] = Some(im);
        taken.insert(im);
    }
    let free: Vec<FMor> = a.morphisms().filter(|m| mor_map[m.0].is_none()).collect();
    assign_morphisms(a, b, obj_map, &free, 0, &mut mor_map, &mut taken)
}

fn assign_morphisms(
    a: &FinCat,
    b: &FinCat,
    obj_map: &[usize],
    free: &[FMor],
    next: usize,
    mor_map: &mut Vec<Option<FMor>>,
    taken: &mut HashSet<FMor>,
) -> bool {
    if next == free.len() {
        return composition_respected(a, b, mor_map);
    }
    let m = free[next];
    let s = FObj(obj_map[a.src(m).0]);
    let t = FObj(obj_map[a.tgt(m).0]);
    for &cand in b.hom(s, t) {
        if taken.contains(&cand) {
            continue;
        }
        mor_map[m.0] = Some(cand);
        taken.insert(cand);
        if partial_composition_ok(a, b, mor_map) && assign_morphisms(a, b, obj_map, free, next + 1, mor_map, taken) {
            return true;
        }
        taken.remove(&cand);
        mor_map[m.0] = None;
    }
    false
}

fn partial_composition_ok(a: &FinCat, b: &FinCat, mor_map: &[Option<FMor>]) -> bool {
    for g in a.morphisms() {
        let Some(ig) = mor_map[g.0] else { continue };
        for f in a.morphisms() {
            let Some(if_) = mor_map[f.0] else { continue };
            if let Some(gf) = a.comp(g, f) {
                if let Some(igf) = mor_map[gf.0] {
                    if b.comp_unchecked(ig, if_) != igf {
                        return false;
                    }
                }
            }
        }
    }
    true
}

fn composition_respected(a: &FinCat, b: &FinCat, mor_map: &[Option<FMor>]) -> bool {
    for g in a.morphisms() {
        for f in a.morphisms() {
            if let Some(gf) = a.comp(g, f) {
                let ig = mor_map[g.0].unwrap();
                let if_ = mor_map[f.0].unwrap();
                if b.comp_unchecked(ig, if_) != mor_map[gf.0].unwrap() {
                    return false;
                }
            }
        }
    }
    true
}
