//! Browser bindings. The `*_json` functions are plain Rust and are what the
//! wasm exports call; they return JSON text or an error message.

use flagmap::census::stability_census;
use flagmap::families::{
    glide_automorphism, hosohedron, nn2, reflection_automorphism, semi_star, torus_44, Glide,
    Lattice, ReflectionFamily,
};
use flagmap::group_level::family_report;
use flagmap::{
    automorphism_group, quotient_by_involution, stability_report, surface_invariants,
    symmetry_class, FlagSystem, Kind, StabilitySummary,
};
use serde::Serialize;
use wasm_bindgen::prelude::*;

/// Largest census the page will run (the browser build is single-threaded).
pub const MAX_BROWSER_MAP_FLAGS: usize = 10;
pub const MAX_BROWSER_HYPERMAP_FLAGS: usize = 8;

#[derive(Serialize)]
#[serde(rename_all = "camelCase")]
struct QuotientView {
    construction: String,
    parent_flags: usize,
    parent_aut: usize,
    quotient: flagmap::SurfaceInvariants,
    summary: StabilitySummary,
}

fn err(e: impl ToString) -> String {
    e.to_string()
}

fn construction(name: &str, p: usize) -> flagmap::Result<(String, FlagSystem, FlagSystem)> {
    let (label, parent, a) = match name {
        "hosohedron" => (
            format!("{{2,{p}}} / edge reflection"),
            hosohedron(p)?,
            reflection_automorphism(ReflectionFamily::Hosohedron, p)?,
        ),
        "semistar" => (
            format!("semi-star({p}) / edge reflection"),
            semi_star(p)?,
            reflection_automorphism(ReflectionFamily::SemiStar, p)?,
        ),
        "diag-glide" => (
            format!("{{4,4}}_({0},{0}) / glide", 2 * p),
            torus_44(Lattice::Diag(p))?,
            glide_automorphism(Lattice::Diag(p), Glide::Diag)?,
        ),
        "rect-glide" => (
            format!("{{4,4}}_({},0) / glide", 2 * p),
            torus_44(Lattice::Rect(p))?,
            glide_automorphism(Lattice::Rect(p), Glide::Rect)?,
        ),
        "nn2" => {
            let k = nn2(2 * p)?;
            let a = k.left_multiplication(&k.word(&[0, 1, 2]))?;
            (format!("{{{0},{0}}}_2 / r0 r1 r2", 2 * p), k.map, a)
        }
        _ => {
            return Err(flagmap::Error::BadParameter {
                what: "construction",
                requirement: "hosohedron|semistar|diag-glide|rect-glide|nn2",
                value: -1,
            })
        }
    };
    let q = quotient_by_involution(&parent, &a)?;
    Ok((label, parent, q))
}

/// Quotient of a family member by its named involution, with stability.
pub fn quotient_json(name: &str, p: usize) -> Result<String, String> {
    if p == 0 || p > 24 {
        return Err("parameter must be between 1 and 24".into());
    }
    let (label, parent, q) = construction(name, p).map_err(err)?;
    let report = stability_report(&q).map_err(err)?;
    let aut = automorphism_group(&q);
    let view = QuotientView {
        construction: label,
        parent_flags: parent.flags(),
        parent_aut: automorphism_group(&parent).order(),
        quotient: surface_invariants(&q),
        summary: StabilitySummary::new(&report, &symmetry_class(&q, &aut)),
    };
    serde_json::to_string(&view).map_err(err)
}

/// Group-level quotient table for the symmetric family.
pub fn sym_json(n: usize, hypermap: bool) -> Result<String, String> {
    serde_json::to_string(&family_report(n, hypermap).map_err(err)?).map_err(err)
}

/// Per-flag-count stable/unstable totals of the census.
pub fn census_json(max_flags: usize, hypermap: bool) -> Result<String, String> {
    let (kind, cap) = if hypermap {
        (Kind::Hypermap, MAX_BROWSER_HYPERMAP_FLAGS)
    } else {
        (Kind::Map, MAX_BROWSER_MAP_FLAGS)
    };
    if max_flags == 0 || max_flags > cap {
        return Err(format!("max flags must be between 1 and {cap}"));
    }
    let census = stability_census(max_flags, kind);
    serde_json::to_string(&serde_json::json!({
        "byFlags": census.by_flags,
        "totals": census.totals(),
    }))
    .map_err(err)
}

#[wasm_bindgen]
pub fn quotient(name: &str, p: u32) -> Result<String, JsValue> {
    quotient_json(name, p as usize).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn sym(n: u32, hypermap: bool) -> Result<String, JsValue> {
    sym_json(n as usize, hypermap).map_err(|e| JsValue::from_str(&e))
}

#[wasm_bindgen]
pub fn census(max_flags: u32, hypermap: bool) -> Result<String, JsValue> {
    census_json(max_flags as usize, hypermap).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn klein_bottle_view() {
        let v: serde_json::Value =
            serde_json::from_str(&quotient_json("diag-glide", 1).unwrap()).unwrap();
        assert_eq!(v["summary"]["index"], 4);
        assert_eq!(v["parentAut"], 64);
        assert!(quotient_json("nope", 1).is_err());
        assert!(quotient_json("hosohedron", 0).is_err());
    }

    #[test]
    fn sym_and_census() {
        let v: serde_json::Value = serde_json::from_str(&sym_json(11, false).unwrap()).unwrap();
        assert_eq!(v["analyses"][0]["autOrder"], "2880");
        assert!(sym_json(12, false).is_err());
        let c: serde_json::Value = serde_json::from_str(&census_json(4, false).unwrap()).unwrap();
        assert_eq!(c["totals"]["total"], 1 + 7 + 3 + 22);
        assert!(census_json(11, false).is_err());
    }
}
