//! Report envelope and output formats.

use std::io::Write;
use std::path::Path;

use anyhow::Result;
use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

pub const TOOL: &str = "fusiondim";
pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// A rectangular projection of a result, for `--format tsv`.
#[derive(Clone, Debug, Default)]
pub struct Table {
    pub header: Vec<String>,
    pub rows: Vec<Vec<String>>,
}

impl Table {
    pub fn new(header: Vec<String>) -> Self {
        Table { header, rows: Vec::new() }
    }

    pub fn push(&mut self, row: Vec<String>) {
        self.rows.push(row);
    }

    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for row in std::iter::once(&self.header).chain(&self.rows) {
            out.push_str(&row.join("\t"));
            out.push('\n');
        }
        out
    }
}

/// What a command produced, and whether it contradicts a proved statement.
pub struct Outcome {
    pub result: Value,
    pub table: Option<Table>,
    pub falsified: bool,
}

impl Outcome {
    pub fn new(result: impl Serialize) -> Result<Self> {
        Ok(Outcome { result: serde_json::to_value(result)?, table: None, falsified: false })
    }

    pub fn with_table(mut self, table: Table) -> Self {
        self.table = Some(table);
        self
    }

    pub fn falsified_if(mut self, flag: bool) -> Self {
        self.falsified |= flag;
        self
    }
}

#[derive(Serialize, serde::Deserialize)]
pub struct Envelope {
    pub tool: String,
    pub version: String,
    pub input_hash: String,
    pub command: String,
    pub falsified: bool,
    pub result: Value,
}

pub fn input_hash(command: &str, input: &Value) -> String {
    let canonical = serde_json::to_string(&serde_json::json!({ "command": command, "input": input }))
        .expect("JSON values always serialize");
    hex::encode(Sha256::digest(canonical.as_bytes()))
}

impl Envelope {
    pub fn new(command: &str, input: &Value, outcome: &Outcome) -> Self {
        Envelope {
            tool: TOOL.into(),
            version: VERSION.into(),
            input_hash: input_hash(command, input),
            command: command.into(),
            falsified: outcome.falsified,
            result: outcome.result.clone(),
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("JSON values always serialize");
        s.push('\n');
        s
    }
}

/// Flattened `path<TAB>value` lines, for results without a natural table.
pub fn flatten(v: &Value) -> Table {
    fn walk(prefix: &str, v: &Value, t: &mut Table) {
        match v {
            Value::Object(m) => {
                for (k, x) in m {
                    let p = if prefix.is_empty() { k.clone() } else { format!("{prefix}.{k}") };
                    walk(&p, x, t);
                }
            }
            Value::Array(a) if a.iter().any(|x| x.is_object() || x.is_array()) => {
                for (i, x) in a.iter().enumerate() {
                    walk(&format!("{prefix}.{i}"), x, t);
                }
            }
            Value::Array(a) => {
                let items: Vec<String> = a.iter().map(scalar).collect();
                t.push(vec![prefix.to_string(), items.join(",")]);
            }
            _ => t.push(vec![prefix.to_string(), scalar(v)]),
        }
    }
    let mut t = Table::new(vec!["key".into(), "value".into()]);
    walk("", v, &mut t);
    t
}

fn scalar(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

pub fn emit(text: &str, output: Option<&Path>) -> Result<()> {
    match output {
        Some(path) => std::fs::write(path, text)?,
        None => std::io::stdout().lock().write_all(text.as_bytes())?,
    }
    Ok(())
}
