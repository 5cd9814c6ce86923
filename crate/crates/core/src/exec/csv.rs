// Copyright 2026 The Skyline Authors. Licensed under Apache-2.0.

//! CSV ingestion and output.
//!
//! Every file has a header row. An empty field is NULL. Column types come
//! either from a schema file (`name:type:nullable` per line, type one of
//! `int|float|bool|text`) or are inferred: the first of Int, Float, Bool that
//! parses every non-empty field, else Text; a column is nullable iff it holds
//! an empty field.

use std::fs::File;
use std::io::{Read, Write};
use std::path::Path;

use super::Dataset;
use crate::error::{Error, Result};
use crate::model::{ColumnKind, ColumnType, Row, Schema, Value};

#[derive(Debug, Clone)]
pub enum SchemaSource {
    Infer,
    File(std::path::PathBuf),
    Given(Schema),
}

pub fn ingest_csv(path: impl AsRef<Path>, source: &SchemaSource) -> Result<Dataset> {
    let path = path.as_ref();
    let file = File::open(path)
        .map_err(|e| Error::ingest(None, format!("cannot open {}: {e}", path.display())))?;
    read_csv(file, source)
}

pub fn read_csv(reader: impl Read, source: &SchemaSource) -> Result<Dataset> {
    let mut rdr = csv::ReaderBuilder::new()
        .has_headers(true)
        .trim(csv::Trim::All)
        .from_reader(reader);
    let header: Vec<String> = rdr
        .headers()
        .map_err(csv_error)?
        .iter()
        .map(str::to_string)
        .collect();
    let mut records = Vec::new();
    for rec in rdr.records() {
        let rec = rec.map_err(csv_error)?;
        let line = rec.position().map(|p| p.line() as usize).unwrap_or(0);
        records.push((line, rec));
    }

    let schema = match source {
        SchemaSource::Infer => infer_schema(&header, &records)?,
        SchemaSource::File(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| {
                Error::ingest(
                    None,
                    format!("cannot read schema file {}: {e}", path.display()),
                )
            })?;
            check_header(parse_schema_file(&text)?, &header)?
        }
        SchemaSource::Given(schema) => check_header(schema.clone(), &header)?,
    };

    let mut rows = Vec::with_capacity(records.len());
    for (ordinal, (line, rec)) in records.iter().enumerate() {
        let values = rec
            .iter()
            .zip(schema.columns())
            .map(|(field, col)| parse_field(field, col, *line))
            .collect::<Result<Vec<_>>>()?;
        rows.push(Row::new(values, ordinal));
    }
    Ok(Dataset { schema, rows })
}

fn csv_error(e: csv::Error) -> Error {
    match e.kind() {
        csv::ErrorKind::UnequalLengths {
            pos,
            expected_len,
            len,
        } => Error::ingest(
            pos.as_ref().map(|p| p.line() as usize),
            format!("expected {expected_len} fields, found {len}"),
        ),
        _ => Error::ingest(e.position().map(|p| p.line() as usize), e.to_string()),
    }
}

fn check_header(schema: Schema, header: &[String]) -> Result<Schema> {
    let names: Vec<&str> = schema.columns().iter().map(|c| c.name.as_str()).collect();
    let matches = names.len() == header.len()
        && names
            .iter()
            .zip(header)
            .all(|(a, b)| a.eq_ignore_ascii_case(b));
    if !matches {
        return Err(Error::ingest(
            1,
            format!(
                "header [{}] does not match schema [{}]",
                header.join(","),
                names.join(",")
            ),
        ));
    }
    Ok(schema)
}

/// Parses `name:type:nullable` lines. Blank lines and `#` comments are skipped.
pub fn parse_schema_file(text: &str) -> Result<Schema> {
    let mut columns = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let parts: Vec<&str> = line.split(':').map(str::trim).collect();
        let [name, kind, nullable] = parts[..] else {
            return Err(Error::ingest(
                i + 1,
                format!("schema line '{line}' is not name:type:nullable"),
            ));
        };
        let kind = ColumnKind::parse(kind)
            .ok_or_else(|| Error::ingest(i + 1, format!("unknown column type '{kind}'")))?;
        let nullable = match nullable.to_ascii_lowercase().as_str() {
            "true" => true,
            "false" => false,
            other => {
                return Err(Error::ingest(
                    i + 1,
                    format!("nullable must be true or false, got '{other}'"),
                ))
            }
        };
        columns.push(ColumnType::new(name, kind, nullable));
    }
    Schema::new(columns).map_err(|e| Error::ingest(None, e.to_string()))
}

pub fn render_schema_file(schema: &Schema) -> String {
    schema
        .columns()
        .iter()
        .map(|c| format!("{}:{}:{}\n", c.name, c.kind, c.nullable))
        .collect()
}

fn parse_bool(s: &str) -> Option<bool> {
    if s.eq_ignore_ascii_case("true") {
        Some(true)
    } else if s.eq_ignore_ascii_case("false") {
        Some(false)
    } else {
        None
    }
}

fn infer_schema(header: &[String], records: &[(usize, csv::StringRecord)]) -> Result<Schema> {
    let mut columns = Vec::with_capacity(header.len());
    for (i, name) in header.iter().enumerate() {
        let (mut int, mut float, mut boolean, mut nullable) = (true, true, true, false);
        for (_, rec) in records {
            let field = &rec[i];
            if field.is_empty() {
                nullable = true;
                continue;
            }
            int &= field.parse::<i64>().is_ok();
            float &= field.parse::<f64>().is_ok();
            boolean &= parse_bool(field).is_some();
        }
        let kind = if int {
            ColumnKind::Int
        } else if float {
            ColumnKind::Float
        } else if boolean {
            ColumnKind::Bool
        } else {
            ColumnKind::Text
        };
        columns.push(ColumnType::new(name.clone(), kind, nullable));
    }
    Schema::new(columns).map_err(|e| Error::ingest(1, e.to_string()))
}

fn parse_field(field: &str, col: &ColumnType, line: usize) -> Result<Value> {
    if field.is_empty() {
        if !col.nullable {
            return Err(Error::ingest(
                line,
                format!("empty value in non-nullable column '{}'", col.name),
            ));
        }
        return Ok(Value::Null);
    }
    let bad = || {
        Error::ingest(
            line,
            format!(
                "cannot parse '{field}' as {} for column '{}'",
                col.kind, col.name
            ),
        )
    };
    Ok(match col.kind {
        ColumnKind::Int => Value::Int(field.parse().map_err(|_| bad())?),
        ColumnKind::Float => {
            let v: f64 = field.parse().map_err(|_| bad())?;
            if v.is_nan() {
                return Err(Error::ingest(
                    line,
                    format!("NaN is not allowed (column '{}')", col.name),
                ));
            }
            Value::Float(v)
        }
        ColumnKind::Bool => Value::Bool(parse_bool(field).ok_or_else(bad)?),
        ColumnKind::Text => Value::text(field),
    })
}

/// Writes `data` with a header row; NULL is written as an empty field.
pub fn write_csv(data: &Dataset, writer: impl Write) -> Result<()> {
    let mut w = csv::Writer::from_writer(writer);
    let io = |e: csv::Error| match e.into_kind() {
        csv::ErrorKind::Io(e) => Error::Io(e),
        other => Error::Execution(format!("csv output failed: {other:?}")),
    };
    w.write_record(data.schema.columns().iter().map(|c| c.name.as_str()))
        .map_err(io)?;
    let mut buf: Vec<String> = Vec::with_capacity(data.schema.len());
    for row in &data.rows {
        buf.clear();
        buf.extend(row.values.iter().map(|v| v.to_string()));
        w.write_record(&buf).map_err(io)?;
    }
    w.flush()?;
    Ok(())
}
