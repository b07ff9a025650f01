//! Plain-text rendering. Morphisms are printed as labeled matrices; other
//! values fall back to compact JSON.

use std::fmt::Write;

use exactcat::engine::Report;
use serde_json::Value;

fn is_morphism(v: &Value) -> bool {
    v.get("matrix").is_some() && v.get("dom").is_some() && v.get("cod").is_some()
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn morphism(out: &mut String, indent: &str, label: &str, v: &Value) {
    let _ = writeln!(out, "{indent}{label}: {} -> {}", v["dom"], v["cod"]);
    let rows: Vec<Vec<String>> = v["matrix"]
        .as_array()
        .map(|rows| {
            rows.iter().map(|r| r.as_array().map(|r| r.iter().map(scalar).collect()).unwrap_or_default()).collect()
        })
        .unwrap_or_default();
    if rows.is_empty() || rows.iter().all(Vec::is_empty) {
        let _ = writeln!(out, "{indent}  (empty {} x {})", rows.len(), rows.first().map_or(0, Vec::len));
        return;
    }
    let width = rows.iter().flatten().map(String::len).max().unwrap_or(1);
    for r in &rows {
        let cells: Vec<String> = r.iter().map(|c| format!("{c:>width$}")).collect();
        let _ = writeln!(out, "{indent}  [ {} ]", cells.join("  "));
    }
}

fn value(out: &mut String, indent: &str, label: &str, v: &Value) {
    if is_morphism(v) {
        morphism(out, indent, label, v);
        return;
    }
    match v {
        Value::Object(map) if map.values().any(is_morphism) => {
            let _ = writeln!(out, "{indent}{label}:");
            let deeper = format!("{indent}  ");
            for (k, x) in map {
                value(out, &deeper, k, x);
            }
        }
        _ => {
            let _ = writeln!(out, "{indent}{label}: {}", scalar(v));
        }
    }
}

/// Any single-result document.
pub fn document(v: &Value) -> String {
    let mut out = String::new();
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                value(&mut out, "", k, x);
            }
        }
        other => value(&mut out, "", "result", other),
    }
    out
}

pub fn report(r: &Report) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} on {}: {} cases, {} violations", r.suite, r.category, r.cases, r.violations.len());
    let _ = writeln!(
        out,
        "status {}; {} vacuous, {} unknown; verdicts yes {} no {} unknown {}",
        serde_json::to_value(r.status).map(|s| scalar(&s)).unwrap_or_default(),
        r.vacuous,
        r.unknown,
        r.verdicts.yes,
        r.verdicts.no,
        r.verdicts.unknown
    );
    for (k, v) in &r.findings {
        let _ = writeln!(out, "  {k}: {}", scalar(v));
    }
    for w in &r.witnesses {
        let kind = w.get("kind").map(scalar).unwrap_or_else(|| "witness".into());
        let _ = writeln!(out, "witness ({kind}):");
        if let Value::Object(map) = w {
            for (k, x) in map.iter().filter(|(k, _)| *k != "kind") {
                value(&mut out, "  ", k, x);
            }
        }
    }
    for (i, v) in r.violations.iter().enumerate() {
        let case = v.case.map_or_else(|| "fixed".to_string(), |c| format!("case {c}"));
        let _ = writeln!(out, "violation {} ({case}) {}: {}", i + 1, v.check, v.message);
        for (k, x) in &v.diagram.0 {
            value(&mut out, "  ", k, x);
        }
    }
    out
}
