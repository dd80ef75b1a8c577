// Copyright 2026 the Cartan Authors
// SPDX-License-Identifier: Apache-2.0

//! Tables and records, rendered as CSV or as structured text (JSON).
//!
//! CSV numbers use `{:.16e}`, i.e. 17 significant digits, so the same input
//! always yields the same bytes. A document with several sections puts a
//! `# name` line before each one and a blank line between them.

use std::fs;
use std::io::Write;
use std::path::Path;

use clap::ValueEnum;
use serde_json::{Map, Value as Json};

use crate::error::{CliError, CliResult};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
pub enum Format {
    #[default]
    Csv,
    StructuredText,
}

#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Num(f64),
    Int(i64),
    Bool(bool),
    Text(String),
    Missing,
}

impl From<f64> for Value {
    fn from(x: f64) -> Self {
        Value::Num(x)
    }
}

impl From<bool> for Value {
    fn from(x: bool) -> Self {
        Value::Bool(x)
    }
}

impl From<&str> for Value {
    fn from(x: &str) -> Self {
        Value::Text(x.to_string())
    }
}

impl From<String> for Value {
    fn from(x: String) -> Self {
        Value::Text(x)
    }
}

impl From<usize> for Value {
    fn from(x: usize) -> Self {
        Value::Int(x as i64)
    }
}

impl From<Option<f64>> for Value {
    fn from(x: Option<f64>) -> Self {
        x.map_or(Value::Missing, Value::Num)
    }
}

pub fn format_number(x: f64) -> String {
    if x.is_finite() {
        format!("{x:.16e}")
    } else {
        format!("{x}")
    }
}

impl Value {
    fn csv_cell(&self) -> String {
        match self {
            Value::Num(x) => format_number(*x),
            Value::Int(i) => i.to_string(),
            Value::Bool(b) => b.to_string(),
            Value::Text(t) => t.clone(),
            Value::Missing => String::new(),
        }
    }

    fn json(&self) -> Json {
        match self {
            Value::Num(x) => serde_json::Number::from_f64(*x).map_or(Json::Null, Json::Number),
            Value::Int(i) => Json::from(*i),
            Value::Bool(b) => Json::Bool(*b),
            Value::Text(t) => Json::String(t.clone()),
            Value::Missing => Json::Null,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Table {
    pub name: String,
    pub columns: Vec<String>,
    pub rows: Vec<Vec<Value>>,
}

impl Table {
    pub fn new(name: &str, columns: &[&str]) -> Self {
        Table {
            name: name.to_string(),
            columns: columns.iter().map(|c| c.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<Value>) {
        debug_assert_eq!(
            row.len(),
            self.columns.len(),
            "row width in table {}",
            self.name
        );
        self.rows.push(row);
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Record {
    pub name: String,
    pub fields: Vec<(String, Value)>,
}

impl Record {
    pub fn new(name: &str) -> Self {
        Record {
            name: name.to_string(),
            fields: Vec::new(),
        }
    }

    pub fn field(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.fields.push((key.to_string(), value.into()));
        self
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Section {
    Table(Table),
    Record(Record),
}

impl Section {
    fn name(&self) -> &str {
        match self {
            Section::Table(t) => &t.name,
            Section::Record(r) => &r.name,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Default)]
pub struct Document {
    pub sections: Vec<Section>,
}

impl Document {
    pub fn table(mut self, t: Table) -> Self {
        self.sections.push(Section::Table(t));
        self
    }

    pub fn record(mut self, r: Record) -> Self {
        self.sections.push(Section::Record(r));
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.render_csv(),
            Format::StructuredText => self.render_json(),
        }
    }

    fn render_csv(&self) -> String {
        let headed = self.sections.len() > 1;
        let mut out = String::new();
        for (i, section) in self.sections.iter().enumerate() {
            if i > 0 {
                out.push('\n');
            }
            if headed {
                out.push_str(&format!("# {}\n", section.name()));
            }
            let (header, rows): (Vec<String>, Vec<Vec<String>>) = match section {
                Section::Table(t) => (
                    t.columns.clone(),
                    t.rows
                        .iter()
                        .map(|r| r.iter().map(Value::csv_cell).collect())
                        .collect(),
                ),
                Section::Record(r) => (
                    vec!["field".to_string(), "value".to_string()],
                    r.fields
                        .iter()
                        .map(|(k, v)| vec![k.clone(), v.csv_cell()])
                        .collect(),
                ),
            };
            out.push_str(&csv_block(&header, &rows));
        }
        out
    }

    fn render_json(&self) -> String {
        let mut top = Map::new();
        for section in &self.sections {
            let body = match section {
                Section::Table(t) => Json::Array(
                    t.rows
                        .iter()
                        .map(|row| {
                            let obj: Map<String, Json> = t
                                .columns
                                .iter()
                                .cloned()
                                .zip(row.iter().map(Value::json))
                                .collect();
                            Json::Object(obj)
                        })
                        .collect(),
                ),
                Section::Record(r) => Json::Object(
                    r.fields
                        .iter()
                        .map(|(k, v)| (k.clone(), v.json()))
                        .collect(),
                ),
            };
            top.insert(section.name().to_string(), body);
        }
        let mut text =
            serde_json::to_string_pretty(&Json::Object(top)).expect("documents serialize");
        text.push('\n');
        text
    }
}

fn csv_block(header: &[String], rows: &[Vec<String>]) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("writing to memory");
    for row in rows {
        w.write_record(row).expect("writing to memory");
    }
    String::from_utf8(w.into_inner().expect("flushing to memory")).expect("csv output is UTF-8")
}

/// Writes `text` to `path`, or to standard output when `path` is `None`.
pub fn emit(text: &str, path: Option<&Path>) -> CliResult<()> {
    match path {
        Some(p) => fs::write(p, text).map_err(|e| CliError::io(p, e)),
        None => std::io::stdout()
            .lock()
            .write_all(text.as_bytes())
            .map_err(|e| CliError::io("<stdout>", e)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn doc() -> Document {
        let mut t = Table::new("rows", &["s", "k1", "note"]);
        t.push(vec![0.5.into(), 1.5.into(), "a,b".into()]);
        t.push(vec![1.0.into(), Value::Missing, "".into()]);
        Document::default().table(t)
    }

    #[test]
    fn csv_numbers_have_seventeen_digits() {
        assert_eq!(format_number(1.5), "1.5000000000000000e0");
        assert_eq!(format_number(0.1), "1.0000000000000001e-1");
        assert_eq!(format_number(f64::NAN), "NaN");
    }

    #[test]
    fn single_table_is_plain_csv() {
        let text = doc().render(Format::Csv);
        assert_eq!(
            text,
            "s,k1,note\n5.0000000000000000e-1,1.5000000000000000e0,\"a,b\"\n1.0000000000000000e0,,\n"
        );
    }

    #[test]
    fn sections_are_headed() {
        let d = doc().record(Record::new("summary").field("ok", true).field("n", 2usize));
        let text = d.render(Format::Csv);
        assert!(text.starts_with("# rows\ns,k1,note\n"));
        assert!(text.ends_with("\n# summary\nfield,value\nok,true\nn,2\n"));
    }

    #[test]
    fn structured_text_keeps_order() {
        let d = doc().record(Record::new("summary").field("z", 1.0).field("a", f64::NAN));
        let v: Json = serde_json::from_str(&d.render(Format::StructuredText)).unwrap();
        assert_eq!(v["rows"][0]["note"], "a,b");
        assert_eq!(v["rows"][1]["k1"], Json::Null);
        let keys: Vec<_> = v["summary"].as_object().unwrap().keys().cloned().collect();
        assert_eq!(keys, ["z", "a"]);
        assert_eq!(v["summary"]["a"], Json::Null);
    }
}
