//! Report values and their JSON / table rendering.
//!
//! Reports are built as `serde_json::Value` trees. Object keys are kept
//! sorted, and every real is rounded to 12 significant digits before it is
//! stored, so identical inputs render to identical bytes.

use serde_json::{json, Map, Value};
use selfloop_core::{BoundRecord, SelfLoopGraph};

use crate::args::Format;

/// A real rounded to 12 significant digits; non-finite values become strings.
pub fn real(x: f64) -> Value {
    if !x.is_finite() {
        return Value::String(x.to_string());
    }
    let rounded: f64 = format!("{x:.11e}").parse().expect("formatted float parses");
    // avoid "-0.0"
    json!(if rounded == 0.0 { 0.0 } else { rounded })
}

pub fn graph_summary(g: &SelfLoopGraph) -> Value {
    json!({
        "n": g.order(),
        "m": g.size(),
        "sigma": g.sigma(),
        "connected": g.is_connected(),
    })
}

pub fn bound(r: &BoundRecord) -> Value {
    json!({
        "name": r.name,
        "lhs": real(r.lhs),
        "rhs": real(r.rhs),
        "slack": real(r.slack),
        "holds": r.holds,
    })
}

pub fn render(value: &Value, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = serde_json::to_string_pretty(value).expect("report serializes");
            s.push('\n');
            s
        }
        Format::Table => {
            let mut rows = Vec::new();
            let mut tables = Vec::new();
            flatten("", value, &mut rows, &mut tables);
            let mut out = String::new();
            let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
            for (k, v) in &rows {
                out.push_str(&format!("{k:<width$}  {v}\n"));
            }
            for (title, records) in tables {
                out.push('\n');
                out.push_str(&record_table(&title, &records));
            }
            out
        }
    }
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => items.iter().map(scalar).collect::<Vec<_>>().join(", "),
        other => other.to_string(),
    }
}

type Rows = Vec<(String, String)>;
type Tables = Vec<(String, Vec<Map<String, Value>>)>;

fn flatten(prefix: &str, v: &Value, rows: &mut Rows, tables: &mut Tables) {
    let join = |k: &str| {
        if prefix.is_empty() {
            k.to_string()
        } else {
            format!("{prefix}.{k}")
        }
    };
    match v {
        Value::Object(map) => {
            for (k, child) in map {
                flatten(&join(k), child, rows, tables);
            }
        }
        Value::Array(items) if !items.is_empty() && items.iter().all(Value::is_object) => {
            let maps = items
                .iter()
                .filter_map(|i| i.as_object().cloned())
                .collect();
            tables.push((prefix.to_string(), maps));
        }
        other => rows.push((prefix.to_string(), scalar(other))),
    }
}

fn record_table(title: &str, records: &[Map<String, Value>]) -> String {
    let mut columns: Vec<String> = Vec::new();
    for r in records {
        for k in r.keys() {
            if !columns.contains(k) {
                columns.push(k.clone());
            }
        }
    }
    // put the name column first when present
    if let Some(pos) = columns.iter().position(|c| c == "name") {
        let name = columns.remove(pos);
        columns.insert(0, name);
    }
    let cells: Vec<Vec<String>> = records
        .iter()
        .map(|r| {
            columns
                .iter()
                .map(|c| r.get(c).map(scalar).unwrap_or_default())
                .collect()
        })
        .collect();
    let widths: Vec<usize> = columns
        .iter()
        .enumerate()
        .map(|(i, c)| cells.iter().map(|row| row[i].len()).fold(c.len(), usize::max))
        .collect();
    let line = |row: &[String]| {
        row.iter()
            .zip(&widths)
            .map(|(cell, &w)| format!("{cell:<w$}"))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    let mut out = format!("{title}\n{}\n", line(&columns));
    for row in &cells {
        out.push_str(&line(row));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reals_keep_twelve_digits() {
        assert_eq!(real(4.0).to_string(), "4.0");
        assert_eq!(real(1.0 / 3.0).to_string(), "0.333333333333");
        assert_eq!(real(2f64.sqrt() * 1e10).to_string(), "14142135623.7");
        assert_eq!(real(-1e-20).to_string(), "-1e-20");
        assert_eq!(real(-0.0).to_string(), "0.0");
        assert_eq!(real(f64::INFINITY), Value::String("inf".into()));
    }

    #[test]
    fn json_keys_are_sorted() {
        let v = json!({"zeta": 1, "alpha": {"y": 2, "b": 3}});
        let s = render(&v, Format::Json);
        assert!(s.find("alpha").unwrap() < s.find("zeta").unwrap());
        assert!(s.find("\"b\"").unwrap() < s.find("\"y\"").unwrap());
    }

    #[test]
    fn table_layout() {
        let v = json!({
            "graph": {"n": 3, "m": 2},
            "bounds": [{"name": "x", "holds": true}, {"name": "longer", "holds": false}],
        });
        let s = render(&v, Format::Table);
        assert!(s.contains("graph.m  2\ngraph.n  3\n"));
        assert!(s.contains("bounds\nname    holds\nx       true\nlonger  false\n"));
    }
}
