//! The built-in example library. Everything here is constructed in code and
//! sealed through validation, so tests, the CLI and the docs share one source
//! of truth.

use crate::twocat::{validate_twocat, TwoCat, TwoCatBuilder, TwoCatData};

/// Free-living object: one object, identity cells only.
pub fn point_data() -> TwoCatData {
    TwoCatBuilder::new().object("*").finish()
}

pub fn point() -> TwoCat {
    validate_twocat(&point_data()).expect("point is valid")
}

/// Free-living 1-cell 0 → 1.
pub fn arrow_data() -> TwoCatData {
    let mut b = TwoCatBuilder::new();
    b.object("0").object("1").one_cell("a", "0", "1");
    b.finish()
}

pub fn arrow() -> TwoCat {
    validate_twocat(&arrow_data()).expect("arrow is valid")
}

/// Free-living 2-cell: f, g: 0 → 1 with alpha: f ⇒ g.
pub fn two_cell_data() -> TwoCatData {
    let mut b = TwoCatBuilder::new();
    b.object("0")
        .object("1")
        .one_cell("f", "0", "1")
        .one_cell("g", "0", "1")
        .two_cell("alpha", "f", "g");
    b.finish()
}

pub fn two_cell() -> TwoCat {
    validate_twocat(&two_cell_data()).expect("walking 2-cell is valid")
}

/// Strict isomorphism: f: 0 → 1 and g: 1 → 0 with gf = 1_0 and fg = 1_1.
pub fn walking_iso_data() -> TwoCatData {
    let mut b = TwoCatBuilder::new();
    b.object("0")
        .object("1")
        .one_cell("f", "0", "1")
        .one_cell("g", "1", "0")
        .comp1("g", "f", "1_0")
        .comp1("f", "g", "1_1");
    b.finish()
}

pub fn walking_iso() -> TwoCat {
    validate_twocat(&walking_iso_data()).expect("walking isomorphism is valid")
}

/// Invertible 2-cell: u: f ⇒ g with inverse v.
pub fn invertible_two_cell_data() -> TwoCatData {
    let mut b = TwoCatBuilder::new();
    b.object("0")
        .object("1")
        .one_cell("f", "0", "1")
        .one_cell("g", "0", "1")
        .two_cell("u", "f", "g")
        .two_cell("v", "g", "f")
        .vcomp("v", "u", "1_f")
        .vcomp("u", "v", "1_g");
    b.finish()
}

pub fn invertible_two_cell() -> TwoCat {
    validate_twocat(&invertible_two_cell_data()).expect("walking invertible 2-cell is valid")
}

/// Two objects, no non-identity cells.
pub fn discrete_pair_data() -> TwoCatData {
    let mut b = TwoCatBuilder::new();
    b.object("a").object("b");
    b.finish()
}

pub fn discrete_pair() -> TwoCat {
    validate_twocat(&discrete_pair_data()).expect("discrete pair is valid")
}

/// Objects a, b, p with projections pa: p → a and pb: p → b and nothing else,
/// so p is the product of the pair (a, b).
pub fn product_witness_data() -> TwoCatData {
    let mut b = TwoCatBuilder::new();
    b.object("a").object("b").object("p").one_cell("pa", "p", "a").one_cell("pb", "p", "b");
    b.finish()
}

pub fn product_witness() -> TwoCat {
    validate_twocat(&product_witness_data()).expect("product witness is valid")
}

/// Composable chain 0 → 1 → 2 with the composite stored as c.
pub fn chain3_data() -> TwoCatData {
    let mut b = TwoCatBuilder::new();
    b.object("0")
        .object("1")
        .object("2")
        .one_cell("a", "0", "1")
        .one_cell("b", "1", "2")
        .one_cell("c", "0", "2")
        .comp1("b", "a", "c");
    b.finish()
}

pub fn chain3() -> TwoCat {
    validate_twocat(&chain3_data()).expect("chain3 is valid")
}

/// Two parallel 1-cells t1, t2: a → c joined by an invertible 2-cell, so the
/// hom-category C(a, c) has two isomorphic terminal objects.
pub fn twin_terminals_data() -> TwoCatData {
    let mut b = TwoCatBuilder::new();
    b.object("a")
        .object("c")
        .one_cell("t1", "a", "c")
        .one_cell("t2", "a", "c")
        .two_cell("u", "t1", "t2")
        .two_cell("v", "t2", "t1")
        .vcomp("v", "u", "1_t1")
        .vcomp("u", "v", "1_t2");
    b.finish()
}

pub fn twin_terminals() -> TwoCat {
    validate_twocat(&twin_terminals_data()).expect("twin terminals is valid")
}

/// Two parallel 1-cells f, g: 0 → 1 with two distinct 2-cells alpha, beta
/// between them and no relations.
pub fn parallel_two_cells_data() -> TwoCatData {
    let mut b = TwoCatBuilder::new();
    b.object("0")
        .object("1")
        .one_cell("f", "0", "1")
        .one_cell("g", "0", "1")
        .two_cell("alpha", "f", "g")
        .two_cell("beta", "f", "g");
    b.finish()
}

pub fn parallel_two_cells() -> TwoCat {
    validate_twocat(&parallel_two_cells_data()).expect("parallel 2-cells is valid")
}

/// The empty 2-category.
pub fn empty_data() -> TwoCatData {
    TwoCatData::default()
}

pub fn empty() -> TwoCat {
    validate_twocat(&empty_data()).expect("empty 2-category is valid")
}

/// Names and constructors of the built-in examples.
pub fn builtin_names() -> Vec<&'static str> {
    vec![
        "empty",
        "point",
        "arrow",
        "two-cell",
        "walking-iso",
        "invertible-two-cell",
        "discrete-pair",
        "product-witness",
        "chain3",
        "twin-terminals",
        "parallel-two-cells",
    ]
}

pub fn builtin_data(name: &str) -> Option<TwoCatData> {
    Some(match name {
        "empty" => empty_data(),
        "point" => point_data(),
        "arrow" => arrow_data(),
        "two-cell" => two_cell_data(),
        "walking-iso" => walking_iso_data(),
        "invertible-two-cell" => invertible_two_cell_data(),
        "discrete-pair" => discrete_pair_data(),
        "product-witness" => product_witness_data(),
        "chain3" => chain3_data(),
        "twin-terminals" => twin_terminals_data(),
        "parallel-two-cells" => parallel_two_cells_data(),
        _ => return None,
    })
}

/// Small finite 1-categories used as weights, embeddings and hom oracles.
pub mod fin {
    use std::collections::BTreeMap;

    use crate::fincat::{validate_fincat, FinCat, FinCatData, MorData};

    pub fn point() -> FinCat {
        build(&["*"], &[], &[])
    }

    pub fn empty() -> FinCat {
        validate_fincat(&FinCatData::default()).expect("empty category is valid")
    }

    pub fn arrow() -> FinCat {
        build(&["0", "1"], &[("a", "0", "1")], &[])
    }

    pub fn chain3() -> FinCat {
        build(&["0", "1", "2"], &[("a", "0", "1"), ("b", "1", "2"), ("c", "0", "2")], &[("b", "a", "c")])
    }

    pub fn discrete(names: &[&str]) -> FinCat {
        build(names, &[], &[])
    }

    /// Exactly one morphism between every ordered pair of objects.
    pub fn chaotic(names: &[&str]) -> FinCat {
        let mut morphisms: Vec<(String, &str, &str)> = Vec::new();
        for &s in names {
            for &t in names {
                if s != t {
                    morphisms.push((format!("{s}_{t}"), s, t));
                }
            }
        }
        let mors: Vec<(&str, &str, &str)> = morphisms.iter().map(|(n, s, t)| (n.as_str(), *s, *t)).collect();
        let mut comps: Vec<(String, String, String)> = Vec::new();
        let name_of = |s: &str, t: &str| if s == t { format!("1_{s}") } else { format!("{s}_{t}") };
        for &s in names {
            for &m in names {
                for &t in names {
                    let f = name_of(s, m);
                    let g = name_of(m, t);
                    if !f.starts_with("1_") && !g.starts_with("1_") {
                        comps.push((g, f, name_of(s, t)));
                    }
                }
            }
        }
        let comp_refs: Vec<(&str, &str, &str)> =
            comps.iter().map(|(g, f, gf)| (g.as_str(), f.as_str(), gf.as_str())).collect();
        build(names, &mors, &comp_refs)
    }

    /// Cospan a → c ← b.
    pub fn cospan() -> FinCat {
        build(&["a", "b", "c"], &[("f", "a", "c"), ("g", "b", "c")], &[])
    }

    /// Span a ← c → b.
    pub fn span() -> FinCat {
        build(&["a", "b", "c"], &[("f", "c", "a"), ("g", "c", "b")], &[])
    }

    /// Two parallel arrows 0 ⇉ 1.
    pub fn parallel_pair() -> FinCat {
        build(&["0", "1"], &[("s", "0", "1"), ("t", "0", "1")], &[])
    }

    /// Commutative square poset bot → l/r → top.
    pub fn diamond() -> FinCat {
        build(
            &["b", "l", "r", "t"],
            &[
                ("bl", "b", "l"),
                ("br", "b", "r"),
                ("lt", "l", "t"),
                ("rt", "r", "t"),
                ("bt", "b", "t"),
            ],
            &[("lt", "bl", "bt"), ("rt", "br", "bt")],
        )
    }

    /// Poset with two incomparable maximal elements over a bottom.
    pub fn vee() -> FinCat {
        build(&["b", "l", "r"], &[("bl", "b", "l"), ("br", "b", "r")], &[])
    }

    /// Assemble and seal a finite category, auto-filling identities and unit
    /// composites.
    pub fn build(objects: &[&str], morphisms: &[(&str, &str, &str)], comps: &[(&str, &str, &str)]) -> FinCat {
        let mut data = FinCatData {
            objects: objects.iter().map(|s| s.to_string()).collect(),
            ..Default::default()
        };
        for &o in objects {
            let id = format!("1_{o}");
            data.morphisms.insert(id.clone(), MorData { src: o.to_string(), tgt: o.to_string() });
            data.id.insert(o.to_string(), id);
        }
        for &(n, s, t) in morphisms {
            data.morphisms.insert(n.to_string(), MorData { src: s.to_string(), tgt: t.to_string() });
        }
        for &(g, f, gf) in comps {
            data.comp
                .entry(g.to_string())
                .or_default()
                .insert(f.to_string(), gf.to_string());
        }
        // Unit composites.
        let morphs: Vec<(String, MorData)> = data.morphisms.iter().map(|(k, v)| (k.clone(), v.clone())).collect();
        let mut comp = std::mem::take(&mut data.comp);
        for (name, m) in &morphs {
            let id_src = data.id[&m.src].clone();
            let id_tgt = data.id[&m.tgt].clone();
            comp.entry(id_tgt).or_default().entry(name.clone()).or_insert_with(|| name.clone());
            comp.entry(name.clone()).or_default().entry(id_src).or_insert_with(|| name.clone());
        }
        data.comp = comp;
        validate_fincat(&data).expect("built finite category is valid")
    }

    pub fn builtin_names() -> Vec<&'static str> {
        vec!["point", "empty", "arrow", "chain3", "parallel-pair", "span", "cospan", "diamond", "vee"]
    }

    pub fn builtin(name: &str) -> Option<FinCat> {
        Some(match name {
            "point" => point(),
            "empty" => empty(),
            "arrow" => arrow(),
            "chain3" => chain3(),
            "parallel-pair" => parallel_pair(),
            "span" => span(),
            "cospan" => cospan(),
            "diamond" => diamond(),
            "vee" => vee(),
            _ => return None,
        })
    }

    /// Convenience for tests: a map of every builtin by name.
    pub fn all_builtins() -> BTreeMap<&'static str, FinCat> {
        builtin_names().into_iter().map(|n| (n, builtin(n).unwrap())).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_builtin_validates() {
        for name in builtin_names() {
            let data = builtin_data(name).unwrap();
            validate_twocat(&data).unwrap_or_else(|e| panic!("builtin `{name}` failed: {e}"));
        }
        for name in fin::builtin_names() {
            fin::builtin(name).unwrap();
        }
    }
}
