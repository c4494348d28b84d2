//! Browser bindings. Each export takes plain strings and returns a JSON
//! string; errors come back as `{"error": "..."}`.

use std::sync::Arc;

use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

use perioddomain::cohomology::{flag_dimension, flag_poincare};
use perioddomain::curvature::{block_positivity, verify_nonnegativity};
use perioddomain::hodge::HodgeDatum;
use perioddomain::rootsys::{invariant_degrees, CartanType, RootSystem};
use perioddomain::chevalley::WeylBasis;

fn marking(s: &str) -> Result<Vec<i64>, String> {
    s.split(',').map(|x| x.trim().parse::<i64>().map_err(|e| format!("marking `{x}`: {e}"))).collect()
}

fn datum(ty: &str, m: &str) -> Result<HodgeDatum, String> {
    let t: CartanType = ty.trim().parse().map_err(|e: perioddomain::Error| e.to_string())?;
    HodgeDatum::from_marking(Arc::new(RootSystem::new(t)), &marking(m)?).map_err(|e| e.to_string())
}

fn finish(r: Result<Value, String>) -> String {
    r.unwrap_or_else(|e| json!({ "error": e })).to_string()
}

pub fn root_system_value(ty: &str) -> Result<Value, String> {
    let t: CartanType = ty.trim().parse().map_err(|e: perioddomain::Error| e.to_string())?;
    let rs = RootSystem::new(t);
    let w = invariant_degrees(t).map_err(|e| e.to_string())?;
    let positive: Vec<Value> = (0..rs.num_positive())
        .map(|i| json!({"name": rs.root_name(rs.root(i)), "height": rs.root(i).height(), "norm": rs.fmt_norm(i)}))
        .collect();
    Ok(json!({
        "type": t.to_string(),
        "rank": t.rank,
        "roots": rs.num_roots(),
        "weyl_order": w.order.to_string(),
        "degrees": w.degrees,
        "cartan_matrix": rs.cartan_matrix(),
        "positive": positive,
    }))
}

pub fn hodge_datum_value(ty: &str, m: &str) -> Result<Value, String> {
    let hd = datum(ty, m)?;
    let wb = WeylBasis::new(Arc::clone(hd.root_system()));
    let rs = hd.root_system();
    let blocks: Vec<Value> = hd
        .blocks()
        .iter()
        .map(|b| serde_json::to_value(block_positivity(&wb, &hd, b)).expect("block report"))
        .collect();
    let nn = verify_nonnegativity(&wb, &hd);
    Ok(json!({
        "datum": hd.label(),
        "horizontal": hd.horizontal().iter().map(|&i| rs.root_name(rs.root(i))).collect::<Vec<_>>(),
        "hermitian": hd.is_hermitian_grading(),
        "blocks": blocks,
        "pairs_checked": nn.pairs_checked,
        "min_coefficient": nn.min_coefficient.map(|q| perioddomain::scalar::fmt_q(&q)),
        "negative_coefficients": nn.violations.len(),
    }))
}

pub fn poincare_value(ty: &str, m: &str) -> Result<Value, String> {
    let hd = datum(ty, m)?;
    let p = flag_poincare(&hd).map_err(|e| e.to_string())?;
    Ok(json!({
        "datum": hd.label(),
        "polynomial": p.to_string(),
        "coefficients": p,
        "real_dimension": flag_dimension(&hd),
        "euler_characteristic": p.at_one().to_string(),
    }))
}

/// Roots, Weyl group order and invariant degrees of a simple type.
#[wasm_bindgen]
pub fn root_system(ty: &str) -> String {
    finish(root_system_value(ty))
}

/// Horizontal roots, blocks and curvature coefficients of a marking.
#[wasm_bindgen]
pub fn hodge_datum(ty: &str, marking: &str) -> String {
    finish(hodge_datum_value(ty, marking))
}

/// Poincaré polynomial of the flag manifold of a marking.
#[wasm_bindgen]
pub fn poincare(ty: &str, marking: &str) -> String {
    finish(poincare_value(ty, marking))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exports_return_json() {
        let v: Value = serde_json::from_str(&root_system("G2")).unwrap();
        assert_eq!(v["roots"], 12);
        let v: Value = serde_json::from_str(&hodge_datum("A3", "0,1,0")).unwrap();
        assert_eq!(v["horizontal"].as_array().unwrap().len(), 4);
        let v: Value = serde_json::from_str(&poincare("A2", "1,1")).unwrap();
        assert_eq!(v["euler_characteristic"], "6");
        let v: Value = serde_json::from_str(&poincare("A2", "x")).unwrap();
        assert!(v["error"].is_string());
    }
}
