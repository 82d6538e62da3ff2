use std::fmt::Write as _;

use num_bigint::BigInt;
use serde_json::{json, Map, Value};

/// An exact JSON integer.
pub fn int(v: &BigInt) -> Value {
    Value::Number(v.to_string().parse().expect("integers are valid JSON numbers"))
}

pub fn ints(v: &[BigInt]) -> Value {
    Value::Array(v.iter().map(int).collect())
}

pub fn matrix(rows: &[Vec<BigInt>]) -> Value {
    Value::Array(rows.iter().map(|r| ints(r)).collect())
}

/// What a command hands back: the payload plus the names of failed checks.
pub struct Outcome {
    pub payload: Value,
    pub failed: Vec<String>,
}

impl From<Value> for Outcome {
    fn from(payload: Value) -> Self {
        Outcome { payload, failed: Vec::new() }
    }
}

pub fn envelope(command: &str, options: Value, digest: &str, payload: Value, timing_ms: f64) -> Value {
    json!({
        "tool": "pcb",
        "version": env!("CARGO_PKG_VERSION"),
        "command": command,
        "options": options,
        "input_sha256": digest,
        "payload": payload,
        "timing_ms": timing_ms,
    })
}

/// Indented plain-text rendering of a report.
pub fn render(v: &Value) -> String {
    let mut out = String::new();
    render_into(&mut out, v, 0);
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(if *b { "yes" } else { "no" }.into()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()) => {
            Some(format!("[{}]", items.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")))
        }
        _ => None,
    }
}

fn render_into(out: &mut String, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => render_map(out, map, depth),
        Value::Array(items) => {
            for item in items {
                match scalar(item) {
                    Some(s) => writeln!(out, "{pad}- {s}").unwrap(),
                    None => {
                        // first line of the nested block carries the dash
                        let mut inner = String::new();
                        render_into(&mut inner, item, depth + 1);
                        let body = inner.trim_start();
                        write!(out, "{pad}- {body}").unwrap();
                    }
                }
            }
        }
        other => writeln!(out, "{pad}{}", scalar(other).unwrap_or_default()).unwrap(),
    }
}

fn render_map(out: &mut String, map: &Map<String, Value>, depth: usize) {
    let pad = "  ".repeat(depth);
    for (k, v) in map {
        match scalar(v) {
            Some(s) => writeln!(out, "{pad}{k}: {s}").unwrap(),
            None => {
                writeln!(out, "{pad}{k}:").unwrap();
                render_into(out, v, depth + 1);
            }
        }
    }
}
