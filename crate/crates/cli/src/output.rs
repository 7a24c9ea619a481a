//! One table model rendered as text, JSON or CSV.

use std::fmt;
use std::str::FromStr;

use catkit_core::exactnum::{ExactRational, Natural};
use clap::ValueEnum;
use serde_json::{Map, Number, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Debug, PartialEq)]
pub enum Cell {
    Int(Natural),
    Rational(ExactRational),
    Text(String),
    Bool(bool),
    Empty,
}

impl From<Natural> for Cell {
    fn from(v: Natural) -> Self {
        Cell::Int(v)
    }
}

impl From<usize> for Cell {
    fn from(v: usize) -> Self {
        Cell::Int(Natural::from(v))
    }
}

impl From<ExactRational> for Cell {
    fn from(v: ExactRational) -> Self {
        Cell::Rational(v)
    }
}

impl From<String> for Cell {
    fn from(v: String) -> Self {
        Cell::Text(v)
    }
}

impl From<&str> for Cell {
    fn from(v: &str) -> Self {
        Cell::Text(v.to_string())
    }
}

impl From<bool> for Cell {
    fn from(v: bool) -> Self {
        Cell::Bool(v)
    }
}

impl<T: Into<Cell>> From<Option<T>> for Cell {
    fn from(v: Option<T>) -> Self {
        v.map_or(Cell::Empty, Into::into)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cell::Int(v) => write!(f, "{v}"),
            Cell::Rational(v) => write!(f, "{v}"),
            Cell::Text(v) => f.write_str(v),
            Cell::Bool(v) => f.write_str(if *v { "yes" } else { "no" }),
            Cell::Empty => f.write_str("-"),
        }
    }
}

impl Cell {
    fn to_json(&self) -> Value {
        match self {
            // Arbitrary-precision numbers keep big integers exact.
            Cell::Int(v) => Value::Number(Number::from_str(&v.to_string()).expect("decimal digits")),
            Cell::Rational(v) => Value::String(v.to_string()),
            Cell::Text(v) => Value::String(v.clone()),
            Cell::Bool(v) => Value::Bool(*v),
            Cell::Empty => Value::Null,
        }
    }

    fn to_csv(&self) -> String {
        match self {
            Cell::Bool(v) => v.to_string(),
            Cell::Empty => String::new(),
            other => other.to_string(),
        }
    }
}

/// Rows of cells under named columns. A one-column table prints bare values
/// in text mode.
#[derive(Clone, Debug, PartialEq)]
pub struct Table {
    columns: Vec<&'static str>,
    rows: Vec<Vec<Cell>>,
}

impl Table {
    pub fn new(columns: &[&'static str]) -> Self {
        Self {
            columns: columns.to_vec(),
            rows: Vec::new(),
        }
    }

    pub fn single(column: &'static str, value: impl Into<Cell>) -> Self {
        let mut t = Self::new(&[column]);
        t.push(vec![value.into()]);
        t
    }

    pub fn push(&mut self, row: Vec<Cell>) {
        assert_eq!(row.len(), self.columns.len(), "row width");
        self.rows.push(row);
    }

    pub fn rows(&self) -> &[Vec<Cell>] {
        &self.rows
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.render_text(),
            Format::Json => self.render_json(),
            Format::Csv => self.render_csv(),
        }
    }

    fn render_text(&self) -> String {
        let mut out = String::new();
        if self.columns.len() == 1 {
            for row in &self.rows {
                out.push_str(&row[0].to_string());
                out.push('\n');
            }
            return out;
        }
        let cells: Vec<Vec<String>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|c| c.to_string()).collect())
            .collect();
        let widths: Vec<usize> = self
            .columns
            .iter()
            .enumerate()
            .map(|(i, h)| cells.iter().map(|r| r[i].len()).chain([h.len()]).max().unwrap_or(0))
            .collect();
        let line = |fields: Vec<&str>| {
            let padded: Vec<String> = fields.iter().zip(&widths).map(|(f, w)| format!("{f:<w$}")).collect();
            padded.join("  ").trim_end().to_string() + "\n"
        };
        out.push_str(&line(self.columns.clone()));
        for row in &cells {
            out.push_str(&line(row.iter().map(String::as_str).collect()));
        }
        out
    }

    fn render_json(&self) -> String {
        let rows: Vec<Value> = self
            .rows
            .iter()
            .map(|row| {
                let obj: Map<String, Value> = self
                    .columns
                    .iter()
                    .zip(row)
                    .map(|(k, v)| (k.to_string(), v.to_json()))
                    .collect();
                Value::Object(obj)
            })
            .collect();
        serde_json::to_string_pretty(&Value::Array(rows)).expect("serializable") + "\n"
    }

    fn render_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.columns).expect("in-memory write");
        for row in &self.rows {
            w.write_record(row.iter().map(Cell::to_csv)).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf-8")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sample() -> Table {
        let mut t = Table::new(&["n", "value", "ok"]);
        t.push(vec![3usize.into(), "1,2|3".into(), true.into()]);
        t.push(vec![10usize.into(), Cell::Empty, false.into()]);
        t
    }

    #[test]
    fn text_single_column_is_bare() {
        assert_eq!(Table::single("count", 9usize).render(Format::Text), "9\n");
    }

    #[test]
    fn text_aligns_columns() {
        assert_eq!(
            sample().render(Format::Text),
            "n   value  ok\n3   1,2|3  yes\n10  -      no\n"
        );
    }

    #[test]
    fn csv_quotes_commas() {
        assert_eq!(
            sample().render(Format::Csv),
            "n,value,ok\n3,\"1,2|3\",true\n10,,false\n"
        );
    }

    #[test]
    fn json_keeps_big_integers_exact() {
        let big: Natural = "96614908840363322603893139521372656".parse().unwrap();
        let out = Table::single("count", big).render(Format::Json);
        assert!(out.contains("\"count\": 96614908840363322603893139521372656"));
        let v: Value = serde_json::from_str(&sample().render(Format::Json)).unwrap();
        assert_eq!(v[1]["value"], Value::Null);
        assert_eq!(v[0]["ok"], Value::Bool(true));
    }
}
