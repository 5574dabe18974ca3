//! Table, CSV and JSON output.
//!
//! JSON numbers are written as exact decimal literals (serde_json's
//! arbitrary-precision mode), never through floating point. Non-integral
//! entries are emitted as "p/q" strings.

use std::str::FromStr;

use clap::ValueEnum;
use riordan_core::{QMatrix, Rational};
use serde_json::{Number, Value};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Table,
    Csv,
    Json,
}

pub fn json_number(v: &Rational) -> Value {
    if v.is_integer() {
        Value::Number(Number::from_str(&v.numer().to_string()).expect("integer literal"))
    } else {
        Value::String(v.to_string())
    }
}

pub fn matrix_json(m: &QMatrix) -> Value {
    Value::Array(m.rows().iter().map(|r| Value::Array(r.iter().map(json_number).collect())).collect())
}

/// `triangle` restricts CSV output to the lower triangle (row i has i+1
/// fields), the usual way to print a Riordan array.
pub fn matrix(m: &QMatrix, format: Format, triangle: bool) -> String {
    match format {
        Format::Table => m.to_string(),
        Format::Csv => {
            let mut out = String::new();
            for (i, row) in m.rows().iter().enumerate() {
                let end = if triangle { i + 1 } else { row.len() };
                let cells: Vec<String> = row[..end].iter().map(|v| v.to_string()).collect();
                out.push_str(&cells.join(","));
                out.push('\n');
            }
            out
        }
        Format::Json => format!("{}\n", matrix_json(m)),
    }
}

pub fn sequence(values: &[Rational], format: Format) -> String {
    let cells: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    match format {
        Format::Table => format!("{}\n", cells.join(" ")),
        Format::Csv => format!("{}\n", cells.join(",")),
        Format::Json => format!("{}\n", Value::Array(values.iter().map(json_number).collect())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Rational {
        Rational::from_integer(v.into())
    }

    #[test]
    fn big_integers_stay_exact() {
        let v = Rational::from_integer("31095744852375000000000001".parse().unwrap());
        assert_eq!(json_number(&v).to_string(), "31095744852375000000000001");
        let half = Rational::new(1.into(), 2.into());
        assert_eq!(json_number(&half), Value::String("1/2".into()));
    }

    #[test]
    fn csv_triangle() {
        let m = QMatrix::from_ints(&[&[1, 0], &[1, 1]]).unwrap();
        assert_eq!(matrix(&m, Format::Csv, true), "1\n1,1\n");
        assert_eq!(matrix(&m, Format::Csv, false), "1,0\n1,1\n");
        assert_eq!(matrix(&m, Format::Json, false), "[[1,0],[1,1]]\n");
    }

    #[test]
    fn sequences() {
        let v = [q(1), q(-3)];
        assert_eq!(sequence(&v, Format::Table), "1 -3\n");
        assert_eq!(sequence(&v, Format::Csv), "1,-3\n");
        assert_eq!(sequence(&v, Format::Json), "[1,-3]\n");
    }
}
