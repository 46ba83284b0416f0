//! Serialization of command results.
//!
//! Every floating-point number is written with 17 significant digits so it
//! parses back to the same `f64`.

use std::str::FromStr;

use serde::Serialize;
use serde_json::{Map, Number, Value};

/// A scalar table cell.
#[derive(Debug, Clone, PartialEq)]
pub enum Cell {
    Num(f64),
    Int(u64),
    Bool(bool),
    Text(String),
}

impl From<f64> for Cell {
    fn from(x: f64) -> Self {
        Cell::Num(x)
    }
}

impl From<u64> for Cell {
    fn from(x: u64) -> Self {
        Cell::Int(x)
    }
}

impl From<bool> for Cell {
    fn from(x: bool) -> Self {
        Cell::Bool(x)
    }
}

impl From<&str> for Cell {
    fn from(x: &str) -> Self {
        Cell::Text(x.to_string())
    }
}

/// An ordered list of named cells.
pub type Row = Vec<(String, Cell)>;

pub fn format_f64(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        x.to_string()
    }
}

fn number(x: f64) -> Value {
    if x.is_finite() {
        Value::Number(Number::from_str(&format_f64(x)).expect("formatted f64 is a JSON number"))
    } else {
        Value::Null
    }
}

impl Cell {
    fn to_json(&self) -> Value {
        match self {
            Cell::Num(x) => number(*x),
            Cell::Int(n) => Value::from(*n),
            Cell::Bool(b) => Value::Bool(*b),
            Cell::Text(s) => Value::String(s.clone()),
        }
    }

    fn to_csv(&self) -> String {
        match self {
            Cell::Num(x) => format_f64(*x),
            Cell::Int(n) => n.to_string(),
            Cell::Bool(b) => b.to_string(),
            Cell::Text(s) => s.clone(),
        }
    }
}

pub fn row_to_json(row: &Row) -> Value {
    Value::Object(
        row.iter()
            .map(|(k, v)| (k.clone(), v.to_json()))
            .collect::<Map<_, _>>(),
    )
}

/// Rewrites every floating-point number in `v` to 17 significant digits.
fn reformat_floats(v: &mut Value) {
    match v {
        Value::Number(n) if n.is_f64() => {
            let x = n.as_f64().expect("finite float");
            *v = number(x);
        }
        Value::Array(items) => items.iter_mut().for_each(reformat_floats),
        Value::Object(map) => map.values_mut().for_each(reformat_floats),
        _ => {}
    }
}

pub fn to_json<T: Serialize>(value: &T) -> Value {
    let mut v = serde_json::to_value(value).expect("result types serialize to JSON");
    reformat_floats(&mut v);
    v
}

pub fn json_line(v: &Value) -> String {
    serde_json::to_string(v).expect("JSON values serialize")
}

/// CSV with the header taken from the first row. Cells never contain commas.
pub fn csv_table(rows: &[Row]) -> String {
    let mut out = String::new();
    if let Some(first) = rows.first() {
        let header: Vec<&str> = first.iter().map(|(k, _)| k.as_str()).collect();
        out.push_str(&header.join(","));
        out.push('\n');
    }
    for row in rows {
        let cells: Vec<String> = row.iter().map(|(_, v)| v.to_csv()).collect();
        out.push_str(&cells.join(","));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_digits_round_trip() {
        for x in [0.1, 1.0 / 3.0, 2.0 - 3f64.sqrt(), 1e-300, 12345.678] {
            let s = format_f64(x);
            let mantissa = s.split('e').next().unwrap().replace(['.', '-'], "");
            assert_eq!(mantissa.len(), 17, "{s}");
            assert_eq!(s.parse::<f64>().unwrap(), x);
        }
    }

    #[test]
    fn floats_are_rewritten_integers_kept() {
        #[derive(Serialize)]
        struct S {
            a: f64,
            n: usize,
            v: Vec<f64>,
        }
        let v = to_json(&S {
            a: 0.5,
            n: 3,
            v: vec![0.25],
        });
        assert_eq!(
            json_line(&v),
            r#"{"a":5.0000000000000000e-1,"n":3,"v":[2.5000000000000000e-1]}"#
        );
    }

    #[test]
    fn csv_layout() {
        let rows = vec![
            vec![
                ("a".to_string(), Cell::Num(1.0)),
                ("b".to_string(), Cell::Bool(true)),
            ],
            vec![
                ("a".to_string(), Cell::Num(2.0)),
                ("b".to_string(), Cell::Bool(false)),
            ],
        ];
        assert_eq!(
            csv_table(&rows),
            "a,b\n1.0000000000000000e0,true\n2.0000000000000000e0,false\n"
        );
    }
}
