//! A command's result and its JSON / CSV / text renderings.
//!
//! JSON is canonical: keys are sorted (serde_json's default map), numbers
//! that may exceed 64 bits are strings, and the output ends in a newline.
//! CSV is the `table` projection; text is a readable summary of both.

use std::fmt::Write as _;

use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: &[&str]) -> Self {
        Table {
            header: header.iter().map(|s| s.to_string()).collect(),
            rows: Vec::new(),
        }
    }

    pub fn push(&mut self, row: Vec<String>) {
        debug_assert_eq!(row.len(), self.header.len());
        self.rows.push(row);
    }
}

#[derive(Debug)]
pub struct Report {
    pub command: &'static str,
    pub provenance: &'static str,
    pub inputs: Map<String, Value>,
    pub fields: Map<String, Value>,
    pub table: Table,
    /// Set when two independent computations disagree; the report is still
    /// written and the process exits with status 2.
    pub failure: Option<String>,
}

impl Report {
    pub fn new(command: &'static str, provenance: &'static str) -> Self {
        Report {
            command,
            provenance,
            inputs: Map::new(),
            fields: Map::new(),
            table: Table::default(),
            failure: None,
        }
    }

    pub fn input(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.inputs.insert(key.into(), value.into());
        self
    }

    pub fn field(&mut self, key: &str, value: impl Into<Value>) {
        self.fields.insert(key.into(), value.into());
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => self.json(),
            Format::Csv => self.csv(),
            Format::Text => self.text(),
        }
    }

    fn json(&self) -> String {
        let mut top = self.fields.clone();
        top.insert("command".into(), self.command.into());
        top.insert("provenance".into(), self.provenance.into());
        top.insert("inputs".into(), Value::Object(self.inputs.clone()));
        if let Some(f) = &self.failure {
            top.insert("failure".into(), f.clone().into());
        }
        let mut s = serde_json::to_string_pretty(&Value::Object(top)).expect("JSON values serialize");
        s.push('\n');
        s
    }

    fn csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(&self.table.header).expect("in-memory write");
        for row in &self.table.rows {
            w.write_record(row).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("in-memory flush")).expect("utf-8")
    }

    fn text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "{} — {}", self.command, self.provenance);
        let inputs: Vec<String> = self.inputs.iter().map(|(k, v)| format!("{k}={}", plain(v))).collect();
        let _ = writeln!(s, "inputs: {}", inputs.join(" "));
        let t = &self.table;
        let widths: Vec<usize> = (0..t.header.len())
            .map(|j| {
                t.rows
                    .iter()
                    .map(|r| r[j].chars().count())
                    .chain([t.header[j].chars().count()])
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        let line = |cells: &[String]| {
            cells
                .iter()
                .zip(&widths)
                .map(|(c, w)| format!("{c:<w$}"))
                .collect::<Vec<_>>()
                .join("  ")
                .trim_end()
                .to_string()
        };
        let _ = writeln!(s, "{}", line(&t.header));
        for row in &t.rows {
            let _ = writeln!(s, "{}", line(row));
        }
        if let Some(f) = &self.failure {
            let _ = writeln!(s, "FAILURE: {f}");
        }
        s
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn failure_is_rendered_everywhere_but_csv() {
        let mut r = Report::new("x", "y").input("n", 5);
        r.table = Table::new(&["a"]);
        r.table.push(vec!["1".into()]);
        r.failure = Some("cell (0,1)".into());
        assert!(r.render(Format::Json).contains("\"failure\": \"cell (0,1)\""));
        assert!(r.render(Format::Text).contains("FAILURE: cell (0,1)"));
        assert_eq!(r.render(Format::Csv), "a\n1\n");
    }
}
