//! Reading and writing complexes.
//!
//! JSON: `{"cells": [[1], [2], [1, 2]], "dims": [0, 0, 1], "name": "edge",
//! "labels": {"Anna": 1}}`, where `dims`, `name` and `labels` are optional and cell
//! entries may be integers or vertex names.
//!
//! Plain text: one cell per line, labels separated by spaces or commas, an optional
//! trailing `:d` giving the dimension, `#` starting a comment.
//!
//! Vertex names without an entry in the label table get integers in first-seen order,
//! above every numeric label in the document.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::Serialize;
use serde_json::Value;

use crate::complex::{Cell, DeltaComplex, Label};
use crate::error::{Error, Result};

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ComplexDocument {
    pub cells: Vec<Vec<Label>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dims: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<BTreeMap<String, Label>>,
    /// Where each cell came from, for error messages.
    #[serde(skip)]
    locations: Vec<String>,
}

fn parse_err(location: impl Into<String>, message: impl Into<String>) -> Error {
    Error::Parse {
        location: location.into(),
        message: message.into(),
    }
}

enum Token {
    Number(Label),
    Name(String),
}

type Resolved = (Vec<Vec<Label>>, Option<BTreeMap<String, Label>>);

/// Resolves names against the table, assigning fresh labels to new names.
fn resolve(raw: Vec<Vec<Token>>, mut table: BTreeMap<String, Label>) -> Result<Resolved> {
    let had_table = !table.is_empty();
    let mut next = raw
        .iter()
        .flatten()
        .filter_map(|t| match t {
            Token::Number(n) => Some(*n),
            Token::Name(_) => None,
        })
        .chain(table.values().copied())
        .max()
        .map_or(1, |m| m + 1);
    let mut named = had_table;
    let cells = raw
        .into_iter()
        .map(|cell| {
            cell.into_iter()
                .map(|t| match t {
                    Token::Number(n) => n,
                    Token::Name(s) => {
                        named = true;
                        *table.entry(s).or_insert_with(|| {
                            next += 1;
                            next - 1
                        })
                    }
                })
                .collect()
        })
        .collect();
    Ok((cells, named.then_some(table)))
}

fn parse_token(tok: &str) -> Token {
    match tok.parse::<Label>() {
        Ok(n) => Token::Number(n),
        Err(_) => Token::Name(tok.to_string()),
    }
}

fn parse_json(text: &str) -> Result<ComplexDocument> {
    let v: Value = serde_json::from_str(text)
        .map_err(|e| parse_err(format!("line {} column {}", e.line(), e.column()), e.to_string()))?;
    let obj = v
        .as_object()
        .ok_or_else(|| parse_err("document", "expected a JSON object"))?;
    for key in obj.keys() {
        if !matches!(key.as_str(), "cells" | "dims" | "name" | "labels") {
            return Err(parse_err(key.as_str(), "unknown field"));
        }
    }
    let cells = obj
        .get("cells")
        .ok_or_else(|| parse_err("cells", "missing field"))?
        .as_array()
        .ok_or_else(|| parse_err("cells", "expected an array"))?;
    let mut raw = Vec::with_capacity(cells.len());
    for (i, c) in cells.iter().enumerate() {
        let entries = c
            .as_array()
            .ok_or_else(|| parse_err(format!("cells[{i}]"), "expected an array of labels"))?;
        let mut cell = Vec::with_capacity(entries.len());
        for (j, e) in entries.iter().enumerate() {
            let loc = || format!("cells[{i}][{j}]");
            cell.push(match e {
                Value::Number(n) => Token::Number(
                    n.as_u64()
                        .and_then(|x| Label::try_from(x).ok())
                        .ok_or_else(|| parse_err(loc(), format!("{n} is not a vertex label")))?,
                ),
                Value::String(s) => parse_token(s),
                other => return Err(parse_err(loc(), format!("expected a label, found {other}"))),
            });
        }
        raw.push(cell);
    }
    let dims = match obj.get("dims") {
        None | Some(Value::Null) => None,
        Some(Value::Array(a)) => Some(
            a.iter()
                .enumerate()
                .map(|(i, d)| {
                    d.as_u64()
                        .map(|x| x as usize)
                        .ok_or_else(|| parse_err(format!("dims[{i}]"), "expected a non-negative integer"))
                })
                .collect::<Result<Vec<_>>>()?,
        ),
        Some(_) => return Err(parse_err("dims", "expected an array")),
    };
    let name = match obj.get("name") {
        None | Some(Value::Null) => None,
        Some(Value::String(s)) => Some(s.clone()),
        Some(_) => return Err(parse_err("name", "expected a string")),
    };
    let mut table = BTreeMap::new();
    match obj.get("labels") {
        None | Some(Value::Null) => {}
        Some(Value::Object(m)) => {
            for (k, v) in m {
                let n = v
                    .as_u64()
                    .and_then(|x| Label::try_from(x).ok())
                    .ok_or_else(|| parse_err(format!("labels.{k}"), "expected a vertex label"))?;
                table.insert(k.clone(), n);
            }
        }
        Some(_) => return Err(parse_err("labels", "expected an object")),
    }
    let locations = (0..raw.len()).map(|i| format!("cells[{i}]")).collect();
    let (cells, labels) = resolve(raw, table)?;
    Ok(ComplexDocument {
        cells,
        dims,
        name,
        labels,
        locations,
    })
}

fn parse_text(text: &str) -> Result<ComplexDocument> {
    let mut raw = Vec::new();
    let mut dims = Vec::new();
    let mut locations = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let loc = || format!("line {}", n + 1);
        let line = line.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let (body, dim) = match line.rsplit_once(':') {
            Some((body, d)) => {
                let d = d
                    .trim()
                    .parse::<usize>()
                    .map_err(|_| parse_err(loc(), format!("bad dimension `{}`", d.trim())))?;
                (body, Some(d))
            }
            None => (line, None),
        };
        let tokens: Vec<Token> = body
            .split(|c: char| c.is_whitespace() || c == ',' || c == '{' || c == '}')
            .filter(|t| !t.is_empty())
            .map(parse_token)
            .collect();
        if tokens.is_empty() {
            return Err(parse_err(loc(), "empty cell"));
        }
        raw.push(tokens);
        dims.push(dim);
        locations.push(loc());
    }
    let dims = if dims.iter().all(Option::is_none) {
        None
    } else if let Some(i) = dims.iter().position(Option::is_none) {
        return Err(parse_err(
            locations[i].clone(),
            "dimension missing; give `:d` on every line or on none",
        ));
    } else {
        Some(dims.into_iter().flatten().collect())
    };
    let (cells, labels) = resolve(raw, BTreeMap::new())?;
    Ok(ComplexDocument {
        cells,
        dims,
        name: None,
        labels,
        locations,
    })
}

/// JSON when the input opens an object (`{` followed by `"` or `}`), plain text
/// otherwise, so a text line like `{1,2}` stays text.
pub fn parse_document(text: &str) -> Result<ComplexDocument> {
    let json = text
        .trim_start()
        .strip_prefix('{')
        .is_some_and(|rest| matches!(rest.trim_start().chars().next(), Some('"' | '}')));
    if json {
        parse_json(text)
    } else {
        parse_text(text)
    }
}

pub fn parse_complex(bytes: &[u8]) -> Result<DeltaComplex> {
    let text = std::str::from_utf8(bytes)
        .map_err(|e| parse_err(format!("byte {}", e.valid_up_to()), "input is not UTF-8"))?;
    parse_document(text)?.to_complex()
}

impl ComplexDocument {
    pub fn from_complex(g: &DeltaComplex) -> Self {
        Self {
            cells: g.cells().iter().map(|c| c.labels().to_vec()).collect(),
            dims: (!g.has_default_dims()).then(|| g.dims().to_vec()),
            name: None,
            labels: None,
            locations: Vec::new(),
        }
    }

    pub fn with_name(mut self, name: Option<String>) -> Self {
        self.name = name;
        self
    }

    pub fn with_labels(mut self, labels: Option<BTreeMap<String, Label>>) -> Self {
        self.labels = labels;
        self
    }

    fn location(&self, i: usize) -> String {
        self.locations
            .get(i)
            .cloned()
            .unwrap_or_else(|| format!("cells[{i}]"))
    }

    pub fn to_complex(&self) -> Result<DeltaComplex> {
        let mut cells = Vec::with_capacity(self.cells.len());
        let mut first_seen: BTreeMap<Cell, usize> = BTreeMap::new();
        for (i, raw) in self.cells.iter().enumerate() {
            let cell = Cell::new(raw.iter().copied()).map_err(|e| parse_err(self.location(i), e.to_string()))?;
            if let Some(&j) = first_seen.get(&cell) {
                return Err(parse_err(
                    self.location(i),
                    format!("duplicate cell {cell} (first at {})", self.location(j)),
                ));
            }
            first_seen.insert(cell.clone(), i);
            cells.push(cell);
        }
        match &self.dims {
            None => DeltaComplex::from_cells(cells),
            Some(d) if d.len() != cells.len() => Err(Error::DimsLengthMismatch {
                cells: cells.len(),
                dims: d.len(),
            }),
            Some(d) => DeltaComplex::with_dims(cells.into_iter().zip(d.iter().copied())).map_err(|e| match &e {
                Error::NonMonotoneDims { coface, .. } => parse_err(self.location(first_seen[coface]), e.to_string()),
                _ => e,
            }),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("documents serialize")
    }

    /// Plain text, writing names from the label table where available.
    pub fn to_text(&self) -> String {
        let names: BTreeMap<Label, &str> = self
            .labels
            .iter()
            .flatten()
            .map(|(k, v)| (*v, k.as_str()))
            .collect();
        let mut out = String::new();
        if let Some(name) = &self.name {
            let _ = writeln!(out, "# {name}");
        }
        for (i, cell) in self.cells.iter().enumerate() {
            let labels: Vec<String> = cell
                .iter()
                .map(|v| names.get(v).map_or_else(|| v.to_string(), |s| s.to_string()))
                .collect();
            out.push_str(&labels.join(" "));
            if let Some(d) = &self.dims {
                let _ = write!(out, ":{}", d[i]);
            }
            out.push('\n');
        }
        out
    }
}
