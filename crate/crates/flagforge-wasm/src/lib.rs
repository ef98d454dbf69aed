//! Browser bindings for the flag-code library: construct-and-verify,
//! bounds, and rank-metric enumeration, each returning a JSON string for
//! the demo page to render. The `*_impl` functions hold the logic and run
//! natively in tests; the `wasm_bindgen` wrappers only adapt errors.

use wasm_bindgen::prelude::*;

use flagforge::analysis::{odfc_bounds, verify_odfc, GaussianBinomial};
use flagforge::flag::{construct_odfc, type_set};
use flagforge::galois::Field;
use flagforge::rankmetric::{min_rank_distance, verify_mrd, MrdCode};
use flagforge::wire;

fn parse_ticks(csv: &str, n: usize, k: usize) -> Result<Vec<usize>, String> {
    let csv = csv.trim();
    if csv.is_empty() {
        return Ok(type_set(n, k).map_err(|e| e.to_string())?.ticks().to_vec());
    }
    csv.split(',')
        .map(|part| {
            part.trim()
                .parse::<usize>()
                .map_err(|_| format!("bad tick {part:?} in type list"))
        })
        .collect()
}

fn construct_and_verify_impl(q: u64, n: usize, k: usize, ticks_csv: &str) -> Result<String, String> {
    let field = Field::from_order(q).map_err(|e| e.to_string())?;
    let ticks = parse_ticks(ticks_csv, n, k)?;
    let code = construct_odfc(n, k, &ticks, &field).map_err(|e| e.to_string())?;
    let report = verify_odfc(&code).map_err(|e| e.to_string())?;
    let code_json = wire::flag_code_to_json(&code).map_err(|e| e.to_string())?;
    let report_json = wire::report_to_json(&report).map_err(|e| e.to_string())?;
    let combined = serde_json::json!({
        "code": serde_json::from_str::<serde_json::Value>(&code_json)
            .map_err(|e| e.to_string())?,
        "report": serde_json::from_str::<serde_json::Value>(&report_json)
            .map_err(|e| e.to_string())?,
    });
    serde_json::to_string(&combined).map_err(|e| e.to_string())
}

fn bounds_impl(q: u64, n: usize, k: usize, ticks_csv: &str) -> Result<String, String> {
    let field = Field::from_order(q).map_err(|e| e.to_string())?;
    let ticks = parse_ticks(ticks_csv, n, k)?;
    let bounds = odfc_bounds(n, k, field.order(), &ticks).map_err(|e| e.to_string())?;
    let r = n % k;
    let doc = serde_json::json!({
        "q": q,
        "n": n,
        "k": k,
        "r": r,
        "type": ticks,
        "size_formula": bounds.size_formula.to_string(),
        "upper_bound": bounds.upper_bound.as_ref().map(|b| b.to_string()),
        "bound_exact": bounds.exact,
        "lines_binomial": GaussianBinomial::lines(q, r).value.to_string(),
        "verdict": wire::optimality_label(bounds.verdict),
    });
    serde_json::to_string(&doc).map_err(|e| e.to_string())
}

fn mrd_impl(q: u64, m: usize, delta: usize) -> Result<String, String> {
    let field = Field::from_order(q).map_err(|e| e.to_string())?;
    let code = MrdCode::gabidulin(m, delta, &field).map_err(|e| e.to_string())?;
    let words = code.codewords();
    let dist = min_rank_distance(&words).map_err(|e| e.to_string())?;
    let attained = verify_mrd(&words, delta).map_err(|e| e.to_string())?;
    wire::mrd_to_json(&code, &words, dist, attained).map_err(|e| e.to_string())
}

/// Construct the flag code for (n, k, q) with an optional comma-separated
/// type list (empty string = full admissible type), verify it, and return
/// `{code, report}` as JSON.
#[wasm_bindgen]
pub fn construct_and_verify(q: u32, n: u32, k: u32, ticks_csv: &str) -> Result<String, JsValue> {
    construct_and_verify_impl(q as u64, n as usize, k as usize, ticks_csv)
        .map_err(|e| JsValue::from_str(&e))
}

/// Size formula, applicable upper bound, and verdict for (n, k, q) with an
/// optional type list, as JSON.
#[wasm_bindgen]
pub fn bounds(q: u32, n: u32, k: u32, ticks_csv: &str) -> Result<String, JsValue> {
    bounds_impl(q as u64, n as usize, k as usize, ticks_csv).map_err(|e| JsValue::from_str(&e))
}

/// Enumerate the square rank-metric code for (m, delta, q) and return its
/// codewords plus the exhaustively verified minimum distance, as JSON.
#[wasm_bindgen]
pub fn mrd(q: u32, m: u32, delta: u32) -> Result<String, JsValue> {
    mrd_impl(q as u64, m as usize, delta as usize).map_err(|e| JsValue::from_str(&e))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construct_and_verify_returns_code_and_report() {
        let text = construct_and_verify_impl(2, 5, 2, "").unwrap();
        let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(doc["code"]["format"], "flagforge/1");
        assert_eq!(doc["code"]["flags"].as_array().unwrap().len(), 9);
        assert_eq!(doc["report"]["is_odfc"], true);
        assert_eq!(doc["report"]["optimality"], "optimal");
    }

    #[test]
    fn explicit_type_restriction() {
        let text = construct_and_verify_impl(2, 6, 2, "2, 4").unwrap();
        let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(doc["code"]["type"], serde_json::json!([2, 4]));
        assert_eq!(doc["report"]["size"], 21);
    }

    #[test]
    fn bounds_gap_case() {
        let text = bounds_impl(2, 8, 3, "").unwrap();
        let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(doc["size_formula"], "33");
        assert_eq!(doc["upper_bound"], "34");
        assert_eq!(doc["bound_exact"], false);
        assert_eq!(doc["lines_binomial"], "3");
        assert_eq!(doc["verdict"], "not-proven-optimal");
    }

    #[test]
    fn mrd_listing() {
        let text = mrd_impl(2, 2, 2).unwrap();
        let doc: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(doc["codeword_count"], 4);
        assert_eq!(doc["min_rank_distance"], 2);
        assert_eq!(doc["is_mrd"], true);
    }

    #[test]
    fn errors_surface_as_strings() {
        assert!(construct_and_verify_impl(6, 4, 2, "").is_err());
        assert!(construct_and_verify_impl(2, 5, 3, "").is_err());
        assert!(construct_and_verify_impl(2, 5, 2, "1,zebra").is_err());
        assert!(bounds_impl(2, 7, 2, "3").is_err());
        assert!(mrd_impl(2, 2, 3).is_err());
    }
}
