//! WebAssembly bindings for the static demo page in `www/`.
//!
//! Each export wraps a plain function returning JSON text, so the logic is
//! testable without a browser.

use std::sync::OnceLock;

use serde_json::json;
use wasm_bindgen::prelude::*;

use invgen_core::atlas::{AtlasCaps, SolvableAtlas, DEFAULT_MAX_DEGREE};
use invgen_core::galois::{certify_nonsolvable, IntPolynomial, PrimeOrder};
use invgen_core::prob::{exact_p2, is_covered, round_decimal, to_f64, CoverageQuery, GroupKind};
use invgen_core::CycleType;

/// Largest prime budget accepted from the page.
pub const MAX_BUDGET: usize = 2000;

fn atlas() -> Result<&'static SolvableAtlas, String> {
    static ATLAS: OnceLock<Result<SolvableAtlas, String>> = OnceLock::new();
    ATLAS
        .get_or_init(|| SolvableAtlas::build(DEFAULT_MAX_DEGREE, AtlasCaps::standard()).map_err(|e| e.to_string()))
        .as_ref()
        .map_err(Clone::clone)
}

fn group(name: &str) -> Result<GroupKind, String> {
    match name {
        "symmetric" | "S" => Ok(GroupKind::Symmetric),
        "alternating" | "A" => Ok(GroupKind::Alternating),
        other => Err(format!("unknown group {other:?}")),
    }
}

/// Exact `P(N_n = 2)` for `lo..=hi` as `{rows: [{n, p_num, p_den, p_rounded, p, inv_gap}]}`.
pub fn table_rows(lo: u32, hi: u32, group_name: &str) -> Result<String, String> {
    let kind = group(group_name)?;
    if lo == 0 || lo > hi {
        return Err(format!("empty range {lo}..{hi}"));
    }
    let a = atlas()?;
    let mut rows = Vec::new();
    for n in lo..=hi {
        let p = exact_p2(n, kind, a).map_err(|e| e.to_string())?;
        let pf = to_f64(&p);
        rows.push(json!({
            "n": n,
            "p_num": p.numer().to_string(),
            "p_den": p.denom().to_string(),
            "p_rounded": round_decimal(&p, 3),
            "p": pf,
            "inv_gap": 1.0 / (1.0 - pf),
        }));
    }
    Ok(json!({ "rows": rows }).to_string())
}

/// Parses `"7,1; 4,4"` or `"7 1 | 4 4"`-style lists of cycle types.
fn parse_types(n: u32, text: &str) -> Result<Vec<CycleType>, String> {
    text.split([';', '|', '\n'])
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            let parts = s
                .split([',', ' '])
                .filter(|p| !p.is_empty())
                .map(|p| p.parse::<u32>().map_err(|_| format!("bad cycle type {s:?}")))
                .collect::<Result<Vec<_>, _>>()?;
            let t = CycleType::new(parts).map_err(|e| e.to_string())?;
            if t.degree() != n {
                return Err(format!("{t} has degree {}, not {n}", t.degree()));
            }
            Ok(t)
        })
        .collect()
}

/// Whether one solvable subgroup of `S_n` holds all listed cycle types.
pub fn coverage(n: u32, types: &str) -> Result<String, String> {
    let observed = parse_types(n, types)?;
    let shown: Vec<String> = observed.iter().map(ToString::to_string).collect();
    let q = CoverageQuery::new(n, observed).map_err(|e| e.to_string())?;
    let covered = is_covered(&q, atlas()?).map_err(|e| e.to_string())?;
    Ok(json!({ "degree": n, "types": shown, "covered": covered }).to_string())
}

/// Certificate JSON plus a readable transcript.
pub fn certify(poly: &str, budget: usize) -> Result<String, String> {
    if budget == 0 || budget > MAX_BUDGET {
        return Err(format!("budget must be between 1 and {MAX_BUDGET}"));
    }
    let f = IntPolynomial::parse(poly).map_err(|e| e.to_string())?;
    let c = certify_nonsolvable(&f, budget, atlas()?, PrimeOrder::Increasing).map_err(|e| e.to_string())?;
    let mut v: serde_json::Value = serde_json::from_str(&c.to_json()).map_err(|e| e.to_string())?;
    v["transcript"] = json!(c.transcript());
    Ok(v.to_string())
}

#[wasm_bindgen(js_name = tableRows)]
pub fn table_rows_js(lo: u32, hi: u32, group_name: &str) -> Result<String, JsError> {
    table_rows(lo, hi, group_name).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = coverage)]
pub fn coverage_js(n: u32, types: &str) -> Result<String, JsError> {
    coverage(n, types).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = certify)]
pub fn certify_js(poly: &str, budget: usize) -> Result<String, JsError> {
    certify(poly, budget).map_err(|e| JsError::new(&e))
}
