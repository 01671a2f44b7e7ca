//! CSV and JSON emitters.
//!
//! CSV: UTF-8, comma separated, one header row, LF endings. Numbers use the
//! shortest decimal form that parses back to the same `f64`.
//! JSON: one object with `config`, `data` (array of row objects keyed by
//! column name) and `summary`.

use std::fmt::Write as _;

use serde_json::{json, Map, Value};

use crate::config::RunConfig;

/// Column-named numeric table.
#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub columns: Vec<String>,
    pub rows: Vec<Vec<f64>>,
}

impl Table {
    pub fn new<S: Into<String>>(columns: impl IntoIterator<Item = S>) -> Self {
        Self { columns: columns.into_iter().map(Into::into).collect(), rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<f64>) {
        debug_assert_eq!(row.len(), self.columns.len());
        self.rows.push(row);
    }

    pub fn to_csv(&self) -> String {
        let mut s = self.columns.join(",");
        s.push('\n');
        for row in &self.rows {
            for (i, v) in row.iter().enumerate() {
                if i > 0 {
                    s.push(',');
                }
                write_number(&mut s, *v);
            }
            s.push('\n');
        }
        s
    }

    pub fn to_json_rows(&self) -> Value {
        Value::Array(
            self.rows
                .iter()
                .map(|row| {
                    let obj: Map<String, Value> =
                        self.columns.iter().cloned().zip(row.iter().map(|&v| number(v))).collect();
                    Value::Object(obj)
                })
                .collect(),
        )
    }
}

fn write_number(s: &mut String, v: f64) {
    let a = v.abs();
    if a != 0.0 && a.is_finite() && !(1e-5..1e16).contains(&a) {
        let _ = write!(s, "{v:e}");
    } else {
        let _ = write!(s, "{v}");
    }
}

/// JSON number, or `null` for non-finite values.
pub fn number(v: f64) -> Value {
    serde_json::Number::from_f64(v).map(Value::Number).unwrap_or(Value::Null)
}

/// Parses CSV produced by [`Table::to_csv`].
pub fn parse_csv(text: &str) -> Option<Table> {
    let mut lines = text.split_terminator('\n');
    let columns: Vec<String> = lines.next()?.split(',').map(str::to_owned).collect();
    let rows = lines
        .map(|l| l.split(',').map(|c| c.parse::<f64>().ok()).collect::<Option<Vec<f64>>>())
        .collect::<Option<Vec<_>>>()?;
    Some(Table { columns, rows })
}

pub fn config_json(cfg: &RunConfig) -> Value {
    let p = &cfg.params;
    let d = &cfg.damping;
    let mut obj = json!({
        "omega_c": number(p.omega_c),
        "omega_a": number(p.omega_a),
        "delta": number(p.delta()),
        "g": number(p.g),
        "kappa": number(p.kappa),
        "gamma1": number(d.gamma1),
        "gamma2": number(d.gamma2),
        "gammac1": number(d.gammac1),
        "gammac2": number(d.gammac2),
        "gamma_a": d.gamma_a.map(number).unwrap_or(Value::Null),
    });
    if let Some(sw) = &cfg.sweep {
        obj["sweep_start"] = number(sw.start);
        obj["sweep_stop"] = number(sw.stop);
        obj["sweep_count"] = json!(sw.count);
    }
    obj
}

/// `{"config": .., "data": .., "summary": ..}` as pretty JSON with a trailing newline.
pub fn document(cfg: &RunConfig, table: &Table, summary: Value) -> String {
    let doc = json!({
        "config": config_json(cfg),
        "data": table.to_json_rows(),
        "summary": summary,
    });
    let mut s = serde_json::to_string_pretty(&doc).expect("serializable document");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn csv_layout() {
        let mut t = Table::new(["a", "b"]);
        t.push(vec![0.1, -2.0]);
        t.push(vec![1e-300, 3.0]);
        assert_eq!(t.to_csv(), "a,b\n0.1,-2\n1e-300,3\n");
    }

    #[test]
    fn json_rows() {
        let mut t = Table::new(["x", "y"]);
        t.push(vec![1.5, f64::NAN]);
        assert_eq!(t.to_json_rows(), json!([{"x": 1.5, "y": null}]));
    }

    mod props {
        use super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn csv_values_round_trip(rows in proptest::collection::vec(
                proptest::collection::vec(proptest::num::f64::NORMAL | proptest::num::f64::SUBNORMAL | proptest::num::f64::ZERO, 3),
                0..20)) {
                let mut t = Table::new(["a", "b", "c"]);
                for r in &rows {
                    t.push(r.clone());
                }
                let back = parse_csv(&t.to_csv()).unwrap();
                prop_assert_eq!(back.columns, t.columns);
                for (x, y) in back.rows.iter().flatten().zip(t.rows.iter().flatten()) {
                    prop_assert_eq!(x.to_bits(), y.to_bits());
                }
            }
        }
    }
}
