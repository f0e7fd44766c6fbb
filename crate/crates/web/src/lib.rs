//! WebAssembly bindings for the browser demo. Every export takes literals
//! and returns a JSON string; failures come back as a JSON error object.

use homz_core::intlin::smith_normal_form;
use homz_core::robinson::{component_group, pi0 as components, pi0_report, Truncation};
use homz_core::torfun::tor_table;
use homz_core::{Error, FgAbGroup, IntMatrix};
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

/// Keeps the page responsive; rank-2 truncations of small groups fit easily.
const OBJECT_LIMIT: usize = 20_000;

fn to_js(e: Error) -> JsValue {
    let mut v = json!({"error": e.to_string()});
    if let Error::Parse { position, .. } = e {
        v["position"] = json!(position);
    }
    JsValue::from_str(&v.to_string())
}

fn encode(v: Value) -> String {
    v.to_string()
}

pub fn classify_json(literal: &str) -> Result<String, Error> {
    let g = FgAbGroup::parse(literal)?;
    let c = g.canonical();
    Ok(encode(json!({
        "literal": c.to_literal(),
        "invariant_factors": c.invariant_factors.iter().map(ToString::to_string).collect::<Vec<_>>(),
        "free_rank": c.free_rank,
        "order": g.order().map(|o| o.to_string()),
    })))
}

pub fn tor_json(a: &str, b: &str, nmax: usize) -> Result<String, Error> {
    let t = tor_table(&FgAbGroup::parse(a)?, &FgAbGroup::parse(b)?, nmax.min(6))?;
    let rows: Vec<Value> = t
        .results
        .iter()
        .map(|e| json!({"n": e.n, "literal": e.group.to_literal()}))
        .collect();
    Ok(encode(json!({"A": t.a, "B": t.b, "results": rows})))
}

pub fn pi0_json(a: &str, b: &str, rank: usize) -> Result<String, Error> {
    let t = Truncation::enumerate(&FgAbGroup::parse(a)?, &FgAbGroup::parse(b)?, rank, OBJECT_LIMIT)?;
    let p = components(&t, None)?;
    let g = component_group(&t, &p)?;
    Ok(encode(serde_json::to_value(pi0_report(&t, &p, &g)).expect("report serialises")))
}

pub fn snf_json(matrix: &str) -> Result<String, Error> {
    let a = IntMatrix::from_json(matrix)?;
    let s = smith_normal_form(&a);
    Ok(encode(json!({
        "rank": s.rank,
        "diagonal": s.diagonal().iter().map(ToString::to_string).collect::<Vec<_>>(),
        "U": s.u,
        "D": s.d,
        "V": s.v,
    })))
}

#[wasm_bindgen]
pub fn classify(literal: &str) -> Result<String, JsValue> {
    classify_json(literal).map_err(to_js)
}

#[wasm_bindgen]
pub fn tor(a: &str, b: &str, nmax: usize) -> Result<String, JsValue> {
    tor_json(a, b, nmax).map_err(to_js)
}

#[wasm_bindgen]
pub fn pi0(a: &str, b: &str, rank: usize) -> Result<String, JsValue> {
    pi0_json(a, b, rank).map_err(to_js)
}

#[wasm_bindgen]
pub fn snf(matrix: &str) -> Result<String, JsValue> {
    snf_json(matrix).map_err(to_js)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Value {
        serde_json::from_str(s).unwrap()
    }

    #[test]
    fn classify_reports_order() {
        let v = parse(&classify_json("Z/2 + Z/3").unwrap());
        assert_eq!(v["literal"], "Z/6");
        assert_eq!(v["order"], "6");
        assert_eq!(parse(&classify_json("Z").unwrap())["order"], Value::Null);
    }

    #[test]
    fn tor_rows() {
        let v = parse(&tor_json("Z/4", "Z/6", 2).unwrap());
        let lits: Vec<&str> = v["results"]
            .as_array()
            .unwrap()
            .iter()
            .map(|r| r["literal"].as_str().unwrap())
            .collect();
        assert_eq!(lits, ["Z/2", "Z/2", "0"]);
    }

    #[test]
    fn pi0_counts_components() {
        let v = parse(&pi0_json("Z/2", "Z/4", 1).unwrap());
        assert_eq!(v["componentCount"], 2);
    }

    #[test]
    fn errors_carry_positions() {
        assert!(matches!(classify_json("Z/"), Err(Error::Parse { position: 2, .. })));
        assert!(snf_json("[[1],[2,3]]").is_err());
    }
}
