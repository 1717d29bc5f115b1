//! String-in, string-out entry points for the browser page. Every function
//! returns JSON; failures come back as `{"error": "..."}`.

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use wurst::coherent::q;
use wurst::homology::{contractibility_evidence, homology};
use wurst::quasicat::{hom_space, Variant};
use wurst::sset::enumerate::Budget;
use wurst::SimplicialSet;

/// Node limit for searches started from the page.
const BUDGET: u64 = 2_000_000;

fn finish(r: Result<Value, String>) -> String {
    match r {
        Ok(v) => v.to_string(),
        Err(e) => json!({ "error": e }).to_string(),
    }
}

fn groups(x: &SimplicialSet, upto: usize) -> Result<Vec<Value>, String> {
    (0..=upto)
        .map(|k| {
            let g = homology(x, k).map_err(|e| e.to_string())?;
            Ok(json!({ "degree": k, "group": g.to_string(), "betti": g.betti }))
        })
        .collect()
}

pub fn q_report(i: usize, j: usize, cap: usize) -> Result<Value, String> {
    if i + j > 5 || cap > 4 || cap == 0 {
        return Err("keep i + j ≤ 5 and 1 ≤ cap ≤ 4".into());
    }
    let x = q(i, j, cap);
    let ev = contractibility_evidence(&x, cap - 1).map_err(|e| e.to_string())?;
    Ok(json!({
        "nondegenerate": x.nondegenerate_counts(),
        "homology": groups(&x, cap - 1)?,
        "acyclic": ev.passed(),
    }))
}

pub fn homology_report(space: &str, upto: usize) -> Result<Value, String> {
    let x = SimplicialSet::from_json(space).map_err(|e| e.to_string())?;
    Ok(json!({ "nondegenerate": x.nondegenerate_counts(), "homology": groups(&x, upto)? }))
}

pub fn mapping_space_report(space: &str, x: usize, y: usize, cap: usize) -> Result<Value, String> {
    let k = SimplicialSet::from_json(space).map_err(|e| e.to_string())?;
    if x >= k.count(0) || y >= k.count(0) {
        return Err(format!("vertices must be below {}", k.count(0)));
    }
    if cap > 2 {
        return Err("keep cap ≤ 2 in the browser".into());
    }
    let budget = Budget::new(BUDGET);
    let mut rows = Vec::new();
    for variant in [Variant::Left, Variant::Middle, Variant::Right] {
        let h = hom_space(&k, x, y, variant, cap, &budget).map_err(|e| e.to_string())?;
        let upto = cap.saturating_sub(1).min(1);
        rows.push(json!({
            "variant": variant.to_string(),
            "nondegenerate": h.set.nondegenerate_counts(),
            "homology": groups(&h.set, upto)?,
        }));
    }
    Ok(Value::Array(rows))
}

/// Nondegenerate counts and homology of `Q(i,j)`.
#[wasm_bindgen]
pub fn q_complex(i: usize, j: usize, cap: usize) -> String {
    finish(q_report(i, j, cap))
}

/// Homology of a simplicial set given as JSON.
#[wasm_bindgen]
pub fn space_homology(space: &str, upto: usize) -> String {
    finish(homology_report(space, upto))
}

/// The three mapping spaces between two vertices of a simplicial set.
#[wasm_bindgen]
pub fn mapping_spaces(space: &str, x: usize, y: usize, cap: usize) -> String {
    finish(mapping_space_report(space, x, y, cap))
}
