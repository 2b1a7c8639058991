use std::io::{ErrorKind, Write};

use serde::Serialize;
use serde_json::Value;

use crate::config::Format;
use crate::CliError;

/// Prints to stdout; a closed pipe downstream is not an error.
pub fn emit<T: Serialize>(value: &T, format: Format) -> Result<(), CliError> {
    let text = render(value, format)?;
    match writeln!(std::io::stdout().lock(), "{text}") {
        Err(e) if e.kind() != ErrorKind::BrokenPipe => Err(e.into()),
        _ => Ok(()),
    }
}

pub fn render<T: Serialize>(value: &T, format: Format) -> Result<String, CliError> {
    let v = serde_json::to_value(value)?;
    Ok(match format {
        Format::Json => serde_json::to_string_pretty(&v)?,
        Format::Text => {
            let mut lines = Vec::new();
            flatten("", &v, &mut lines);
            lines.join("\n")
        }
    })
}

/// `a.b[2].c: value` lines.
fn flatten(prefix: &str, v: &Value, out: &mut Vec<String>) {
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                let key = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                flatten(&key, x, out);
            }
        }
        Value::Array(items) if items.iter().all(|x| !x.is_object() && !x.is_array()) => {
            let parts: Vec<String> = items.iter().map(scalar).collect();
            out.push(format!("{prefix}: [{}]", parts.join(", ")));
        }
        Value::Array(items) => {
            for (i, x) in items.iter().enumerate() {
                flatten(&format!("{prefix}[{i}]"), x, out);
            }
        }
        _ => out.push(format!("{prefix}: {}", scalar(v))),
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}
