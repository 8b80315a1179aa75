//! JSON and text renderings of results. All JSON goes through
//! `serde_json::Value`, whose maps keep keys sorted.

use conic_isotopy::classify::{ClassLabel, ClassifierSigns, Classification};
use conic_isotopy::exactalg::{format_rational, Rational};
use conic_isotopy::invariants::{InvariantBundle, CUBIC_MONOMIALS};
use conic_isotopy::oracle::IntersectionReport;
use conic_isotopy::quadform::QuadraticForm;
use serde_json::{json, Map, Value};

fn r(q: &Rational) -> Value {
    Value::String(format_rational(q))
}

pub fn form(q: &QuadraticForm) -> Value {
    q.to_strings().into()
}

pub fn label(l: &ClassLabel) -> Value {
    json!({
        "orbit": l.orbit.name(),
        "pair": l.pair.name(),
        "couple": l.couple.to_string(),
        "ambient": l.ambient.to_string(),
        "inside": l.couple.inside.map(|i| i.name()),
        "quartic_code": l.pair.quartic_code(),
    })
}

pub fn signs(s: &ClassifierSigns) -> Value {
    json!({
        "disc_phi": s.disc_phi.to_i32(),
        "h_zero": s.h_zero,
        "g_zero": s.g_zero,
        "p2": s.p2.to_i32(),
        "a1": s.a1.to_i32(),
        "phi30": s.phi30.to_i32(),
        "phi21": s.phi21.to_i32(),
        "phi12": s.phi12.to_i32(),
        "phi03": s.phi03.to_i32(),
        "antisym": s.antisym.to_i32(),
        "trace_t": s.trace_t.to_i32(),
        "r": s.r.to_i32(),
        "b1": s.b1.to_i32(),
        "q2": s.q2.to_i32(),
    })
}

pub fn classification(f: &QuadraticForm, g: &QuadraticForm, c: &Classification) -> Value {
    let mut v = label(&c.label);
    let o = v.as_object_mut().unwrap();
    o.insert("f".into(), form(f));
    o.insert("g".into(), form(g));
    o.insert("signs".into(), signs(&c.signs));
    v
}

fn monomial(e: [u32; 3]) -> String {
    let mut s = String::new();
    for (v, k) in ["x", "y", "z"].iter().zip(e) {
        match k {
            0 => {}
            1 => s.push_str(v),
            _ => s.push_str(&format!("{v}^{k}")),
        }
    }
    s
}

pub fn bundle(b: &InvariantBundle) -> Value {
    let mut g = Map::new();
    for (e, c) in CUBIC_MONOMIALS.iter().zip(&b.g.coeffs) {
        g.insert(monomial(*e), r(c));
    }
    json!({
        "phi": {
            "phi30": r(&b.phi.phi30),
            "phi21": r(&b.phi.phi21),
            "phi12": r(&b.phi.phi12),
            "phi03": r(&b.phi.phi03),
        },
        "traces": {
            "psi20": r(&b.traces.psi20),
            "psi11": r(&b.traces.psi11),
            "psi02": r(&b.traces.psi02),
            "mu10": r(&b.traces.mu10),
            "mu01": r(&b.traces.mu01),
        },
        "disc_phi": r(&b.disc_phi),
        "hessian": { "h20": r(&b.hessian.h20), "h11": r(&b.hessian.h11), "h02": r(&b.hessian.h02) },
        "g": Value::Object(g),
        "p": { "c2": r(&b.p.c2), "c1": r(&b.p.c1), "c0": r(&b.p.c0) },
        "a1": r(&b.a1),
        "q": { "c2": r(&b.q.c2), "c1": r(&b.q.c1), "c0": r(&b.q.c0) },
        "b1": r(&b.b1),
        "r": r(&b.r),
        "antisym": r(&b.antisym),
        "trace_t": r(&b.trace_t),
    })
}

fn float(x: f64) -> Value {
    Value::String(format!("{x:.12e}"))
}

pub fn intersection(rep: &IntersectionReport) -> Value {
    let pts: Vec<Value> = rep
        .real_points
        .iter()
        .map(|p| json!({ "coords": p.coords.iter().map(|c| float(*c)).collect::<Vec<_>>(), "multiplicity": p.multiplicity }))
        .collect();
    json!({
        "real_points": pts,
        "imaginary_multiplicities": rep.imaginary_multiplicities,
        "total_complex_multiplicity": rep.total_complex_multiplicity,
        "residual": float(rep.residual),
    })
}

/// Canonical serialization: pretty JSON with sorted keys and a final newline.
pub fn to_canonical(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values serialize");
    s.push('\n');
    s
}

/// `key = value` lines for nested objects, keys joined by dots.
pub fn flatten(v: &Value) -> String {
    fn walk(prefix: &str, v: &Value, out: &mut String) {
        match v {
            Value::Object(o) => {
                for (k, x) in o {
                    let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                    walk(&key, x, out);
                }
            }
            Value::String(s) => out.push_str(&format!("{prefix} = {s}\n")),
            Value::Array(a) => {
                let items: Vec<String> = a
                    .iter()
                    .map(|x| match x {
                        Value::String(s) => s.clone(),
                        other => other.to_string(),
                    })
                    .collect();
                out.push_str(&format!("{prefix} = [{}]\n", items.join(", ")));
            }
            other => out.push_str(&format!("{prefix} = {other}\n")),
        }
    }
    let mut out = String::new();
    walk("", v, &mut out);
    out
}
