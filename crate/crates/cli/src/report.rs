//! Text renderings of results. CSV uses a period decimal separator everywhere.

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use num_traits::One;
use serde_json::json;

use invgen_core::atlas::{SolvableAtlas, ENGINE_VERSION};
use invgen_core::conditions::ConditionStats;
use invgen_core::galois::FrobeniusTable;
use invgen_core::prob::{exact_p2, round_decimal, GroupKind, TrialStats};
use invgen_core::Error;

use num_rational::BigRational;

const A_N_MODEL: &str = "both elements uniform over A_n";

struct Row {
    n: u32,
    p: BigRational,
    inv_gap: BigRational,
}

fn rows(atlas: &SolvableAtlas, range: RangeInclusive<u32>, kind: GroupKind) -> Result<Vec<Row>, Error> {
    range
        .map(|n| {
            let p = exact_p2(n, kind, atlas)?;
            let inv_gap = (BigRational::one() - &p).recip();
            Ok(Row { n, p, inv_gap })
        })
        .collect()
}

fn group_name(kind: GroupKind) -> &'static str {
    match kind {
        GroupKind::Symmetric => "symmetric",
        GroupKind::Alternating => "alternating",
    }
}

fn meta(kind: GroupKind) -> serde_json::Value {
    let mut m = json!({ "group": group_name(kind), "atlas_version": ENGINE_VERSION });
    if kind == GroupKind::Alternating {
        m["model"] = json!(A_N_MODEL);
    }
    m
}

pub fn table(
    atlas: &SolvableAtlas,
    range: RangeInclusive<u32>,
    kind: GroupKind,
    as_json: bool,
) -> Result<String, Error> {
    let rows = rows(atlas, range, kind)?;
    if as_json {
        let rows: Vec<_> = rows
            .iter()
            .map(|r| {
                json!({
                    "n": r.n,
                    "p_num": r.p.numer().to_string(),
                    "p_den": r.p.denom().to_string(),
                    "p_rounded": round_decimal(&r.p, 3),
                    "inv_gap": round_decimal(&r.inv_gap, 6),
                })
            })
            .collect();
        let mut doc = meta(kind);
        doc["rows"] = json!(rows);
        return Ok(format!("{}\n", serde_json::to_string_pretty(&doc).expect("json")));
    }
    let mut out = String::from("n,p_num,p_den,p_rounded,inv_gap\n");
    for r in &rows {
        let _ = writeln!(
            out,
            "{},{},{},{},{}",
            r.n,
            r.p.numer(),
            r.p.denom(),
            round_decimal(&r.p, 3),
            round_decimal(&r.inv_gap, 6)
        );
    }
    Ok(out)
}

pub fn figure(
    atlas: &SolvableAtlas,
    range: RangeInclusive<u32>,
    kind: GroupKind,
    as_json: bool,
) -> Result<String, Error> {
    let rows = rows(atlas, range, kind)?;
    if as_json {
        let pts: Vec<_> = rows
            .iter()
            .map(|r| json!({ "n": r.n, "inv_gap": round_decimal(&r.inv_gap, 6) }))
            .collect();
        let mut doc = meta(kind);
        doc["x"] = json!("n");
        doc["y"] = json!("1/(1-P(N_n=2))");
        doc["points"] = json!(pts);
        return Ok(format!("{}\n", serde_json::to_string_pretty(&doc).expect("json")));
    }
    let mut out = String::from("n,inv_gap\n");
    for r in &rows {
        let _ = writeln!(out, "{},{}", r.n, round_decimal(&r.inv_gap, 6));
    }
    Ok(out)
}

pub fn estimate(stats: &TrialStats, as_json: bool) -> String {
    let (p2, p2_se) = stats.p2();
    if as_json {
        let mut v = serde_json::to_value(stats).expect("json");
        v["p2"] = json!(p2);
        v["p2_std_error"] = json!(p2_se);
        if stats.group == GroupKind::Alternating {
            v["model"] = json!(A_N_MODEL);
        }
        return format!("{}\n", serde_json::to_string_pretty(&v).expect("json"));
    }
    let mut out = String::from("n,group,trials,seed,mean,std_error,p2,p2_std_error\n");
    let _ = writeln!(
        out,
        "{},{},{},{},{:.6},{:.6},{:.6},{:.6}",
        stats.n,
        group_name(stats.group),
        stats.trials,
        stats.seed,
        stats.mean,
        stats.std_error,
        p2,
        p2_se
    );
    out
}

pub fn conditions(stats: &ConditionStats, seed: u64, as_json: bool) -> String {
    if as_json {
        let mut v = serde_json::to_value(stats).expect("json");
        v["seed"] = json!(seed);
        return format!("{}\n", serde_json::to_string_pretty(&v).expect("json"));
    }
    let mut out = String::from(
        "n,trials,seed,window_lo,window_hi,coprime_prime_cycle,coprime_prime_cycle_se,mersenne_cycle,mersenne_cycle_se\n",
    );
    let _ = writeln!(
        out,
        "{},{},{},{},{},{:.6},{:.6},{:.6},{:.6}",
        stats.n,
        stats.trials,
        seed,
        stats.window.0,
        stats.window.1,
        stats.coprime_prime_cycle.estimate,
        stats.coprime_prime_cycle.std_error,
        stats.mersenne_cycle.estimate,
        stats.mersenne_cycle.std_error
    );
    out
}

pub fn frobenius(t: &FrobeniusTable, as_json: bool) -> String {
    if as_json {
        return format!("{}\n", serde_json::to_string_pretty(&t.to_json()).expect("json"));
    }
    let mut out = String::from("pattern,count,density\n");
    for (pattern, (count, density)) in &t.patterns {
        let parts: Vec<String> = pattern.parts().iter().map(u32::to_string).collect();
        let _ = writeln!(out, "\"{}\",{count},{density:.6}", parts.join(","));
    }
    out
}

pub fn inspect(atlas: &SolvableAtlas, degree: Option<u32>) -> Result<String, Error> {
    let mut out = String::new();
    match degree {
        Some(n) => {
            for s in atlas.sets(n)? {
                let types: Vec<String> = s.types().iter().map(ToString::to_string).collect();
                let _ = writeln!(out, "{:?} {}", s.provenance(), types.join(" "));
            }
        }
        None => {
            let caps = atlas.caps();
            let _ = writeln!(out, "version {ENGINE_VERSION}");
            let _ = writeln!(
                out,
                "max_degree {} stretch {} max_gl_order {}",
                atlas.max_degree(),
                caps.stretch,
                caps.max_gl_order
            );
            let degrees: Vec<String> = atlas.primitive_degrees().iter().map(u32::to_string).collect();
            let _ = writeln!(out, "primitive degrees {}", degrees.join(","));
            for row in atlas.rows() {
                let _ = writeln!(out, "degree {:>2}: {} maximal sets", row.degree(), row.sets().len());
            }
        }
    }
    Ok(out)
}
