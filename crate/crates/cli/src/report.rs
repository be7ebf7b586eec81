//! JSON values and text renderings of the per-triangle reports.
//!
//! JSON goes through `serde_json::Value`, whose maps keep keys sorted, so
//! emitted documents are canonical: parsing and re-serializing one gives
//! the same bytes.

use std::fmt::Write;

use feuerbach_core::{compute_centers, feuerbach_report, metrics, Scalar, TangencyKind, ToleranceProfile};
use serde::Serialize;
use serde_json::{json, Value};

use crate::Problem;

fn value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

pub fn to_canonical_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

fn input_value<S: Scalar>(p: &Problem<S>, tol: &ToleranceProfile, fell_back: bool) -> Value {
    let mut input = json!({
        "backend": S::NAME,
        "sides": value(&p.sides.as_array()),
        "conditioning": p.sides.conditioning(),
        "tolerance": { "rel_eps": tol.rel_eps(), "abs_eps": tol.abs_eps() },
    });
    if p.vertices_given {
        input["vertices"] = value(p.embedding.as_ref().expect("vertices given").vertices());
    }
    if fell_back {
        input["requested_backend"] = json!("exact");
        input["note"] = json!("side lengths are irrational; computed in floating point");
    }
    input
}

pub fn compute_value<S: Scalar>(p: &Problem<S>, tol: &ToleranceProfile, fell_back: bool) -> Value {
    let centers = compute_centers(&p.sides, p.embedding.as_ref());
    let mut m = value(&metrics(&p.sides));
    m["R9_sq"] = value(&metrics(&p.sides).nine_point_radius_sq());
    json!({
        "input": input_value(p, tol, fell_back),
        "metrics": m,
        "centers": value(&centers),
        "equilateral": p.sides.is_equilateral(),
    })
}

fn kind_label(kind: TangencyKind, equilateral: bool) -> String {
    if kind == TangencyKind::Coincident && equilateral {
        format!("{kind} (equilateral)")
    } else {
        kind.to_string()
    }
}

/// The report and whether every tangency holds.
pub fn feuerbach_value<S: Scalar>(p: &Problem<S>, tol: &ToleranceProfile, fell_back: bool) -> (Value, bool) {
    let report = feuerbach_report(&p.sides, tol);
    let entries: Vec<Value> = report
        .entries
        .iter()
        .map(|e| {
            json!({
                "circle": e.circle.name(),
                "kind": kind_label(e.kind, report.equilateral),
                "expected": e.circle.expected().to_string(),
                "holds": e.holds(),
                "center_dist_sq": value(&e.center_dist_sq),
                "predicted_sq": value(&e.predicted_sq),
                "residual": value(&e.residual),
                "normalized_residual": e.normalized_residual,
            })
        })
        .collect();
    let ok = report.all_hold();
    let mut m = value(&report.metrics);
    m["R9_sq"] = value(&report.metrics.nine_point_radius_sq());
    let v = json!({
        "input": input_value(p, tol, fell_back),
        "metrics": m,
        "feuerbach": entries,
        "equilateral": report.equilateral,
        "all_hold": ok,
        "max_normalized_residual": report.max_normalized_residual(),
    });
    (v, ok)
}

fn scalar_text(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn point_text(v: &Value) -> String {
    if let Some(o) = v.as_object() {
        let keys: &[&str] = if o.contains_key("alpha") { &["alpha", "beta", "gamma"] } else { &["x", "y"] };
        let parts: Vec<String> = keys.iter().map(|k| scalar_text(&o[*k])).collect();
        return format!("({})", parts.join(", "));
    }
    scalar_text(v)
}

fn input_text(out: &mut String, v: &Value) {
    let input = &v["input"];
    let sides: Vec<String> = input["sides"].as_array().into_iter().flatten().map(scalar_text).collect();
    writeln!(out, "backend {}", scalar_text(&input["backend"])).unwrap();
    if let Some(note) = input.get("note") {
        writeln!(out, "note: {}", scalar_text(note)).unwrap();
    }
    writeln!(out, "sides a = {}, b = {}, c = {}", sides[0], sides[1], sides[2]).unwrap();
}

fn metrics_text(out: &mut String, v: &Value) {
    writeln!(out, "metrics").unwrap();
    for key in ["s", "K_sq", "R_sq", "R9_sq", "r_sq", "rA_sq", "rB_sq", "rC_sq", "Rr", "RrA", "RrB", "RrC"] {
        writeln!(out, "  {key:<6} {}", scalar_text(&v["metrics"][key])).unwrap();
    }
}

pub fn compute_text(v: &Value) -> String {
    let mut out = String::new();
    input_text(&mut out, v);
    metrics_text(&mut out, v);
    writeln!(out, "barycentric centers").unwrap();
    for key in ["G", "I", "Ea", "Eb", "Ec"] {
        writeln!(out, "  {key:<3} {}", point_text(&v["centers"]["barycentric"][key])).unwrap();
    }
    match v["centers"]["cartesian"].as_object() {
        Some(c) => {
            writeln!(out, "cartesian centers").unwrap();
            for key in ["O", "G", "H", "N", "I", "Ea", "Eb", "Ec"] {
                writeln!(out, "  {key:<3} {}", point_text(&c[key])).unwrap();
            }
        }
        None => writeln!(out, "cartesian centers: no exact placement (irrational height)").unwrap(),
    }
    out
}

pub fn feuerbach_text(v: &Value) -> String {
    let mut out = String::new();
    input_text(&mut out, v);
    metrics_text(&mut out, v);
    writeln!(out, "tangency with the nine-point circle").unwrap();
    for e in v["feuerbach"].as_array().into_iter().flatten() {
        writeln!(
            out,
            "  {:<9} {:<24} |XN|^2 = {}  predicted {}  residual {}",
            scalar_text(&e["circle"]),
            scalar_text(&e["kind"]),
            scalar_text(&e["center_dist_sq"]),
            scalar_text(&e["predicted_sq"]),
            scalar_text(&e["residual"]),
        )
        .unwrap();
    }
    let verdict = if v["all_hold"] == Value::Bool(true) { "all tangencies hold" } else { "RESIDUAL FAILURE" };
    writeln!(out, "{verdict}").unwrap();
    out
}
