//! `--pretty`: plain-text tables from the JSON value.

use serde_json::Value;

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Null => "-".into(),
        Value::Array(items) if items.iter().all(is_flat) => {
            items.iter().map(scalar).collect::<Vec<_>>().join(", ")
        }
        Value::Array(items) => items
            .iter()
            .map(|i| format!("[{}]", scalar(i)))
            .collect::<Vec<_>>()
            .join(" "),
        Value::Object(_) => v.to_string(),
        _ => v.to_string(),
    }
}

fn is_flat(v: &Value) -> bool {
    !matches!(v, Value::Array(_) | Value::Object(_))
}

fn is_table(items: &[Value]) -> bool {
    !items.is_empty()
        && items.iter().all(|i| {
            i.as_object()
                .is_some_and(|o| o.values().all(|v| !v.is_object()))
        })
}

fn table(items: &[Value], indent: &str, out: &mut String) {
    let keys: Vec<&String> = items[0].as_object().unwrap().keys().collect();
    let rows: Vec<Vec<String>> = items
        .iter()
        .map(|i| keys.iter().map(|k| scalar(&i[k.as_str()])).collect())
        .collect();
    let widths: Vec<usize> = keys
        .iter()
        .enumerate()
        .map(|(c, k)| {
            rows.iter()
                .map(|r| r[c].chars().count())
                .chain([k.len()])
                .max()
                .unwrap()
        })
        .collect();
    let line = |cells: Vec<String>| -> String {
        let padded: Vec<String> = cells
            .iter()
            .zip(&widths)
            .map(|(c, w)| format!("{c:<w$}"))
            .collect();
        format!("{indent}{}\n", padded.join("  ").trim_end())
    };
    out.push_str(&line(keys.iter().map(|k| k.to_string()).collect()));
    out.push_str(&line(widths.iter().map(|w| "-".repeat(*w)).collect()));
    for r in rows {
        out.push_str(&line(r));
    }
}

fn object(map: &serde_json::Map<String, Value>, indent: &str, out: &mut String) {
    let width = map.keys().map(String::len).max().unwrap_or(0);
    for (k, v) in map {
        match v {
            Value::Object(inner) => {
                out.push_str(&format!("{indent}{k}:\n"));
                object(inner, &format!("{indent}  "), out);
            }
            Value::Array(items) if is_table(items) => {
                out.push_str(&format!("{indent}{k}:\n"));
                table(items, &format!("{indent}  "), out);
            }
            _ => out.push_str(&format!("{indent}{k:<width$}  {}\n", scalar(v))),
        }
    }
}

pub fn pretty(v: &Value) -> String {
    let mut out = String::new();
    match v {
        Value::Object(map) => object(map, "", &mut out),
        Value::Array(items) if is_table(items) => table(items, "", &mut out),
        _ => {
            out.push_str(&scalar(v));
            out.push('\n');
        }
    }
    out
}
