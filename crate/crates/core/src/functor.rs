//! Strict 2-functors between sealed 2-categories.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::error::{violation, CatError, Law, LawViolation};
use crate::fincat::FinCat;
use crate::twocat::{validate_twocat, Obj, One, Two, TwoCat, TwoCatBuilder, TwoCatData};

/// Raw name-level maps of a 2-functor.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TwoFunctorData {
    pub on_objects: BTreeMap<String, String>,
    pub on_one_cells: BTreeMap<String, String>,
    pub on_two_cells: BTreeMap<String, String>,
}

/// A validated strict 2-functor. Holds its domain and codomain.
#[derive(Debug, Clone)]
pub struct TwoFunctor {
    dom: Arc<TwoCat>,
    cod: Arc<TwoCat>,
    on_obj: Vec<Obj>,
    on_one: Vec<One>,
    on_two: Vec<Two>,
}

/// Seal a raw 2-functor: every cell mapped, boundaries, identities, both
/// compositions and both whiskerings preserved strictly.
pub fn validate_functor(
    dom: &Arc<TwoCat>,
    cod: &Arc<TwoCat>,
    data: &TwoFunctorData,
) -> Result<TwoFunctor, LawViolation> {
    let mut on_obj = Vec::with_capacity(dom.object_count());
    for o in dom.objects() {
        let name = dom.obj_name(o);
        let image = data
            .on_objects
            .get(name)
            .ok_or_else(|| violation(Law::MissingEntry, format!("object `{name}` has no image")))?;
        on_obj.push(
            cod.object(image)
                .ok_or_else(|| violation(Law::UnknownId, format!("image object `{image}` not in codomain")))?,
        );
    }
    let mut on_one = Vec::with_capacity(dom.one_cell_count());
    for f in dom.one_cells() {
        let name = dom.one_name(f);
        let image = data
            .on_one_cells
            .get(name)
            .ok_or_else(|| violation(Law::MissingEntry, format!("1-cell `{name}` has no image")))?;
        on_one.push(
            cod.one_cell(image)
                .ok_or_else(|| violation(Law::UnknownId, format!("image 1-cell `{image}` not in codomain")))?,
        );
    }
    let mut on_two = Vec::with_capacity(dom.two_cell_count());
    for a in dom.two_cells() {
        let name = dom.two_name(a);
        let image = data
            .on_two_cells
            .get(name)
            .ok_or_else(|| violation(Law::MissingEntry, format!("2-cell `{name}` has no image")))?;
        on_two.push(
            cod.two_cell(image)
                .ok_or_else(|| violation(Law::UnknownId, format!("image 2-cell `{image}` not in codomain")))?,
        );
    }

    let fun = TwoFunctor { dom: Arc::clone(dom), cod: Arc::clone(cod), on_obj, on_one, on_two };
    fun.check_strictness()?;
    Ok(fun)
}

impl TwoFunctor {
    fn check_strictness(&self) -> Result<(), LawViolation> {
        let dom = &self.dom;
        let cod = &self.cod;
        for f in dom.one_cells() {
            let im = self.on_one(f);
            if cod.src1(im) != self.on_obj(dom.src1(f)) || cod.tgt1(im) != self.on_obj(dom.tgt1(f)) {
                return Err(violation(
                    Law::Preservation,
                    format!("boundary of 1-cell `{}` not preserved", dom.one_name(f)),
                ));
            }
        }
        for a in dom.two_cells() {
            let im = self.on_two(a);
            if cod.src2(im) != self.on_one(dom.src2(a)) || cod.tgt2(im) != self.on_one(dom.tgt2(a)) {
                return Err(violation(
                    Law::Preservation,
                    format!("boundary of 2-cell `{}` not preserved", dom.two_name(a)),
                ));
            }
        }
        for o in dom.objects() {
            if self.on_one(dom.id1(o)) != cod.id1(self.on_obj(o)) {
                return Err(violation(
                    Law::Preservation,
                    format!("identity 1-cell of `{}` not preserved", dom.obj_name(o)),
                ));
            }
        }
        for f in dom.one_cells() {
            if self.on_two(dom.id2(f)) != cod.id2(self.on_one(f)) {
                return Err(violation(
                    Law::Preservation,
                    format!("identity 2-cell of `{}` not preserved", dom.one_name(f)),
                ));
            }
        }
        for g in dom.one_cells() {
            for f in dom.one_cells() {
                if dom.src1(g) == dom.tgt1(f)
                    && self.on_one(dom.comp1(g, f)) != cod.comp1(self.on_one(g), self.on_one(f))
                {
                    return Err(violation(
                        Law::Preservation,
                        format!("comp1 `{}∘{}` not preserved", dom.one_name(g), dom.one_name(f)),
                    ));
                }
            }
        }
        for b in dom.two_cells() {
            for a in dom.two_cells() {
                if dom.src2(b) == dom.tgt2(a)
                    && self.on_two(dom.vcomp(b, a)) != cod.vcomp(self.on_two(b), self.on_two(a))
                {
                    return Err(violation(
                        Law::Preservation,
                        format!("vcomp `{}∗₁{}` not preserved", dom.two_name(b), dom.two_name(a)),
                    ));
                }
            }
        }
        for h in dom.one_cells() {
            for a in dom.two_cells() {
                if dom.src1(h) == dom.tgt1(dom.src2(a))
                    && self.on_two(dom.lwhisk(h, a)) != cod.lwhisk(self.on_one(h), self.on_two(a))
                {
                    return Err(violation(
                        Law::Preservation,
                        format!("lwhisk `{}∗₀{}` not preserved", dom.one_name(h), dom.two_name(a)),
                    ));
                }
                if dom.src1(dom.src2(a)) == dom.tgt1(h)
                    && self.on_two(dom.rwhisk(a, h)) != cod.rwhisk(self.on_two(a), self.on_one(h))
                {
                    return Err(violation(
                        Law::Preservation,
                        format!("rwhisk `{}∗₀{}` not preserved", dom.two_name(a), dom.one_name(h)),
                    ));
                }
            }
        }
        Ok(())
    }

    pub fn identity(cat: &Arc<TwoCat>) -> TwoFunctor {
        TwoFunctor {
            dom: Arc::clone(cat),
            cod: Arc::clone(cat),
            on_obj: cat.objects().collect(),
            on_one: cat.one_cells().collect(),
            on_two: cat.two_cells().collect(),
        }
    }

    /// The constant 2-functor Δx.
    pub fn constant(dom: &Arc<TwoCat>, cod: &Arc<TwoCat>, x: Obj) -> TwoFunctor {
        TwoFunctor {
            dom: Arc::clone(dom),
            cod: Arc::clone(cod),
            on_obj: vec![x; dom.object_count()],
            on_one: vec![cod.id1(x); dom.one_cell_count()],
            on_two: vec![cod.id2(cod.id1(x)); dom.two_cell_count()],
        }
    }

    /// Compose g∘f. The middle categories must be the same sealed value.
    pub fn compose(g: &TwoFunctor, f: &TwoFunctor) -> Result<TwoFunctor, CatError> {
        if !Arc::ptr_eq(&f.cod, &g.dom) && f.cod.as_ref() != g.dom.as_ref() {
            return Err(CatError::Input("2-functors are not composable".into()));
        }
        Ok(TwoFunctor {
            dom: Arc::clone(&f.dom),
            cod: Arc::clone(&g.cod),
            on_obj: f.on_obj.iter().map(|&o| g.on_obj[o.0]).collect(),
            on_one: f.on_one.iter().map(|&c| g.on_one[c.0]).collect(),
            on_two: f.on_two.iter().map(|&c| g.on_two[c.0]).collect(),
        })
    }

    pub fn dom(&self) -> &Arc<TwoCat> {
        &self.dom
    }

    pub fn cod(&self) -> &Arc<TwoCat> {
        &self.cod
    }

    pub fn on_obj(&self, o: Obj) -> Obj {
        self.on_obj[o.0]
    }

    pub fn on_one(&self, f: One) -> One {
        self.on_one[f.0]
    }

    pub fn on_two(&self, a: Two) -> Two {
        self.on_two[a.0]
    }

    pub fn to_data(&self) -> TwoFunctorData {
        TwoFunctorData {
            on_objects: self
                .dom
                .objects()
                .map(|o| (self.dom.obj_name(o).to_string(), self.cod.obj_name(self.on_obj(o)).to_string()))
                .collect(),
            on_one_cells: self
                .dom
                .one_cells()
                .map(|f| (self.dom.one_name(f).to_string(), self.cod.one_name(self.on_one(f)).to_string()))
                .collect(),
            on_two_cells: self
                .dom
                .two_cells()
                .map(|a| (self.dom.two_name(a).to_string(), self.cod.two_name(self.on_two(a)).to_string()))
                .collect(),
        }
    }

    /// Raw constructor for internal builders that already hold index maps.
    /// Strictness is still checked.
    pub(crate) fn from_maps(
        dom: Arc<TwoCat>,
        cod: Arc<TwoCat>,
        on_obj: Vec<Obj>,
        on_one: Vec<One>,
        on_two: Vec<Two>,
    ) -> Result<TwoFunctor, LawViolation> {
        let fun = TwoFunctor { dom, cod, on_obj, on_one, on_two };
        fun.check_strictness()?;
        Ok(fun)
    }
}

/// Embed a finite 1-category as a locally discrete 2-category: same objects
/// and arrows, identity 2-cells only.
pub fn embed_discrete(cat: &FinCat) -> TwoCat {
    let mut b = TwoCatBuilder::new();
    let mut data = TwoCatData::default();
    let _ = &mut b;
    for o in cat.objects() {
        data.objects.push(cat.object_name(o).to_string());
    }
    for m in cat.morphisms() {
        data.one_cells.insert(
            cat.morphism_name(m).to_string(),
            crate::twocat::CellBounds {
                src: cat.object_name(cat.src(m)).to_string(),
                tgt: cat.object_name(cat.tgt(m)).to_string(),
            },
        );
        let id2 = format!("1_{}", cat.morphism_name(m));
        data.two_cells.insert(
            id2.clone(),
            crate::twocat::CellBounds {
                src: cat.morphism_name(m).to_string(),
                tgt: cat.morphism_name(m).to_string(),
            },
        );
        data.id2.insert(cat.morphism_name(m).to_string(), id2);
    }
    for o in cat.objects() {
        data.id1
            .insert(cat.object_name(o).to_string(), cat.morphism_name(cat.id(o)).to_string());
    }
    for g in cat.morphisms() {
        for f in cat.morphisms() {
            if let Some(gf) = cat.comp(g, f) {
                data.comp1
                    .entry(cat.morphism_name(g).to_string())
                    .or_default()
                    .insert(cat.morphism_name(f).to_string(), cat.morphism_name(gf).to_string());
            }
        }
    }
    // All 2-cells are identities; whiskers and vcomp are forced.
    for g in cat.morphisms() {
        for f in cat.morphisms() {
            if let Some(gf) = cat.comp(g, f) {
                let id_f = format!("1_{}", cat.morphism_name(f));
                let id_g = format!("1_{}", cat.morphism_name(g));
                let id_gf = format!("1_{}", cat.morphism_name(gf));
                data.lwhisk
                    .entry(cat.morphism_name(g).to_string())
                    .or_default()
                    .insert(id_f.clone(), id_gf.clone());
                data.rwhisk
                    .entry(id_g.clone())
                    .or_default()
                    .insert(cat.morphism_name(f).to_string(), id_gf.clone());
            }
        }
    }
    for m in cat.morphisms() {
        let id_m = format!("1_{}", cat.morphism_name(m));
        data.vcomp.entry(id_m.clone()).or_default().insert(id_m.clone(), id_m.clone());
    }
    validate_twocat(&data).expect("locally discrete embedding is valid")
}

/// Embed a functor of finite categories as a strict 2-functor between the
/// locally discrete embeddings.
pub fn embed_discrete_functor(
    u: &crate::fincat::Functor1,
    dom: &Arc<TwoCat>,
    cod: &Arc<TwoCat>,
) -> Result<TwoFunctor, LawViolation> {
    let mut data = TwoFunctorData::default();
    for o in u.dom().objects() {
        data.on_objects.insert(
            u.dom().object_name(o).to_string(),
            u.cod().object_name(u.on_object(o)).to_string(),
        );
    }
    for m in u.dom().morphisms() {
        let im = u.on_morphism(m);
        data.on_one_cells
            .insert(u.dom().morphism_name(m).to_string(), u.cod().morphism_name(im).to_string());
        data.on_two_cells.insert(
            format!("1_{}", u.dom().morphism_name(m)),
            format!("1_{}", u.cod().morphism_name(im)),
        );
    }
    validate_functor(dom, cod, &data)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::shapes;

    #[test]
    fn identity_functor_validates() {
        let c = Arc::new(shapes::two_cell());
        let data = TwoFunctor::identity(&c).to_data();
        validate_functor(&c, &c, &data).unwrap();
    }

    #[test]
    fn constant_functor_validates() {
        let d2 = Arc::new(shapes::two_cell());
        let d1 = Arc::new(shapes::arrow());
        let zero = d1.object("0").unwrap();
        let data = TwoFunctor::constant(&d2, &d1, zero).to_data();
        validate_functor(&d2, &d1, &data).unwrap();
    }

    #[test]
    fn boundary_preservation_failure_is_reported() {
        let c = Arc::new(shapes::two_cell());
        let mut data = TwoFunctor::identity(&c).to_data();
        // Send alpha to the identity of f while keeping tgt2 = g: mismatch.
        data.on_two_cells.insert("alpha".into(), "1_f".into());
        let err = validate_functor(&c, &c, &data).unwrap_err();
        assert_eq!(err.law, Law::Preservation);
    }

    #[test]
    fn locally_discrete_embedding_validates() {
        for name in shapes::fin::builtin_names() {
            let cat = shapes::fin::builtin(name).unwrap();
            let e = embed_discrete(&cat);
            assert_eq!(e.object_count(), cat.object_count());
            assert_eq!(e.one_cell_count(), cat.morphism_count());
            assert_eq!(e.two_cell_count(), cat.morphism_count());
        }
    }
}
