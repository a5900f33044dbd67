//! Browser bindings: every export takes plain values and returns a JSON string,
//! either the result record or `{"error": message}`.

use cudiv::divisibility::matrix_div;
use cudiv::euler::{hall_check, SetFamily};
use cudiv::villadsen::verify_thm_simple;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

const TABLE_LIMIT: u64 = 64;

fn render(r: Result<Value, String>) -> String {
    r.unwrap_or_else(|e| json!({ "error": e })).to_string()
}

/// `Div_m(k)` for `2 ≤ m ≤ m_max`, `1 ≤ k ≤ k_max`, as rows indexed by `k`.
pub fn div_table(m_max: u64, k_max: u64) -> Result<Value, String> {
    if m_max < 2 || k_max < 1 || m_max > TABLE_LIMIT || k_max > TABLE_LIMIT {
        return Err(format!("m_max must lie in 2..={TABLE_LIMIT} and k_max in 1..={TABLE_LIMIT}"));
    }
    let rows = (1..=k_max)
        .map(|k| {
            let values = (2..=m_max)
                .map(|m| matrix_div(m, k).map(|v| v.to_string()))
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| e.to_string())?;
            Ok(json!({ "k": k, "values": values }))
        })
        .collect::<Result<Vec<_>, String>>()?;
    Ok(json!({ "m": (2..=m_max).collect::<Vec<_>>(), "rows": rows }))
}

/// Hall feasibility of a family given in its JSON interchange form.
pub fn hall(text: &str) -> Result<Value, String> {
    let family = SetFamily::from_json(text).map_err(|e| e.to_string())?;
    let cert = hall_check(&family).map_err(|e| e.to_string())?;
    let rechecked = cert.recheck(&family);
    Ok(json!({ "family": family, "certificate": cert, "rechecked": rechecked }))
}

/// The certified interval for the first simple construction.
pub fn interval(big_n: u64, n: u64) -> Result<Value, String> {
    if big_n > 20 || n > 8 {
        return Err("keep N ≤ 20 and n ≤ 8 in the browser".into());
    }
    let r = verify_thm_simple(big_n, n).map_err(|e| e.to_string())?;
    Ok(json!({
        "interval": r.to_string(),
        "lower": r.lower,
        "upper": r.upper,
        "witness": r.upper_cert.witness,
        "stages": r.lower_cert.len(),
        "provenance": r.provenance,
    }))
}

#[wasm_bindgen]
pub fn matrix_div_table(m_max: u32, k_max: u32) -> String {
    render(div_table(m_max as u64, k_max as u64))
}

#[wasm_bindgen]
pub fn hall_check_json(text: &str) -> String {
    render(hall(text))
}

#[wasm_bindgen]
pub fn villadsen_interval(big_n: u32, n: u32) -> String {
    render(interval(big_n as u64, n as u64))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table_rows() {
        let t = div_table(3, 7).unwrap();
        assert_eq!(t["rows"][6]["values"], json!(["3", "4"]));
        assert_eq!(t["rows"][0]["values"], json!(["∞", "∞"]));
        assert!(div_table(1, 3).is_err());
    }

    #[test]
    fn hall_records() {
        let v = hall(r#"{"ground": 1, "members": [{"set": [1], "mult": 2}]}"#).unwrap();
        assert_eq!(v["certificate"]["feasible"], false);
        assert_eq!(v["rechecked"], true);
        assert!(hall_check_json("nonsense").contains("error"));
    }

    #[test]
    fn intervals() {
        assert_eq!(interval(2, 3).unwrap()["interval"], "(2, 10]");
        assert!(villadsen_interval(1, 1).contains("error"));
    }
}
