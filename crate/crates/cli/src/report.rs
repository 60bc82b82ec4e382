//! Command reports and their text and JSON renderings.

use std::fmt::Write as _;

use lyrb_core::linalg::{Matrix, Rational};
use lyrb_core::structures::{AxiomReport, Violation};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Violated,
    Error,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Violated => 1,
            Status::Error => 2,
        }
    }
}

/// What every command returns. `details` is a JSON object whose keys are
/// kept sorted, so output is deterministic.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub status: Status,
    pub details: Value,
    pub exit_code: i32,
}

impl Report {
    pub fn new(command: impl Into<String>, status: Status, details: Value) -> Self {
        Report {
            command: command.into(),
            status,
            details,
            exit_code: status.exit_code(),
        }
    }

    pub fn error(command: impl Into<String>, message: impl Into<String>) -> Self {
        Report::new(command, Status::Error, json!({ "error": message.into() }))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

pub fn emit_report(r: &Report, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(r).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Text => {
            let mut s = format!("{}: {}\n", r.command, status_word(r.status));
            render_text(&mut s, &r.details, 1);
            s
        }
    }
}

fn status_word(s: Status) -> &'static str {
    match s {
        Status::Ok => "ok",
        Status::Violated => "violated",
        Status::Error => "error",
    }
}

fn scalar_text(v: &Value) -> Option<String> {
    match v {
        Value::String(s) => Some(s.clone()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::Null => Some("-".into()),
        Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()) => Some(format!(
            "[{}]",
            items.iter().filter_map(scalar_text).collect::<Vec<_>>().join(", ")
        )),
        Value::Array(items) if items.iter().all(|i| i.is_array() && i.as_array().unwrap().iter().all(|x| !x.is_array() && !x.is_object())) => {
            Some(format!("[{}]", items.iter().filter_map(scalar_text).collect::<Vec<_>>().join(", ")))
        }
        _ => None,
    }
}

fn render_text(out: &mut String, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            for (k, val) in map {
                match scalar_text(val) {
                    Some(s) => {
                        let _ = writeln!(out, "{pad}{k}: {s}");
                    }
                    None => {
                        let _ = writeln!(out, "{pad}{k}:");
                        render_text(out, val, depth + 1);
                    }
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match scalar_text(item) {
                    Some(s) => {
                        let _ = writeln!(out, "{pad}- {s}");
                    }
                    None => {
                        let _ = writeln!(out, "{pad}-");
                        render_text(out, item, depth + 1);
                    }
                }
            }
        }
        other => {
            let _ = writeln!(out, "{pad}{}", scalar_text(other).unwrap_or_default());
        }
    }
}

pub fn rational(q: &Rational) -> Value {
    Value::String(q.to_string())
}

pub fn vector(v: &[Rational]) -> Value {
    Value::Array(v.iter().map(rational).collect())
}

/// Row-major list of rows.
pub fn matrix(m: &Matrix) -> Value {
    Value::Array((0..m.rows()).map(|r| vector(m.row(r))).collect())
}

/// A witness with its basis tuple spelled out in basis names.
pub fn witness(v: &Violation, names: &[String]) -> Value {
    json!({
        "identity": v.identity,
        "args": v.args.iter().map(|&a| names.get(a).cloned().unwrap_or_else(|| (a + 1).to_string())).collect::<Vec<_>>(),
        "residual": vector(&v.residual),
    })
}

/// First witness per failed identity.
pub fn witnesses(report: &AxiomReport, names: &[String]) -> Value {
    Value::Array(
        report
            .first_per_identity()
            .violations
            .iter()
            .map(|v| witness(v, names))
            .collect(),
    )
}
