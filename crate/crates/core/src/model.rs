// Copyright 2026 The Skyline Authors. Licensed under Apache-2.0.

//! Typed tabular data model and the skyline specification.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};

/// A single nullable cell.
///
/// `Float` never holds NaN; ingestion rejects it so every numeric column is
/// totally ordered.
#[derive(Debug, Clone, PartialEq)]
pub enum Value {
    Null,
    Int(i64),
    Float(f64),
    Bool(bool),
    Text(Arc<str>),
}

impl Value {
    pub fn is_null(&self) -> bool {
        matches!(self, Value::Null)
    }

    pub fn text(s: &str) -> Self {
        Value::Text(Arc::from(s))
    }

    /// Kind of a non-null value.
    pub fn kind(&self) -> Option<ColumnKind> {
        match self {
            Value::Null => None,
            Value::Int(_) => Some(ColumnKind::Int),
            Value::Float(_) => Some(ColumnKind::Float),
            Value::Bool(_) => Some(ColumnKind::Bool),
            Value::Text(_) => Some(ColumnKind::Text),
        }
    }

    /// Ordering between two non-null values of the same kind.
    ///
    /// Int and Float are compared against each other numerically; this is only
    /// used by filters against literals, never by the dominance kernel.
    pub fn partial_cmp_same_kind(&self, other: &Value) -> Option<Ordering> {
        match (self, other) {
            (Value::Int(a), Value::Int(b)) => Some(a.cmp(b)),
            (Value::Float(a), Value::Float(b)) => a.partial_cmp(b),
            (Value::Int(a), Value::Float(b)) => (*a as f64).partial_cmp(b),
            (Value::Float(a), Value::Int(b)) => a.partial_cmp(&(*b as f64)),
            (Value::Bool(a), Value::Bool(b)) => Some(a.cmp(b)),
            (Value::Text(a), Value::Text(b)) => Some(a.cmp(b)),
            _ => None,
        }
    }
}

impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Null => Ok(()),
            Value::Int(v) => write!(f, "{v}"),
            Value::Float(v) => write!(f, "{v}"),
            Value::Bool(v) => write!(f, "{v}"),
            Value::Text(v) => f.write_str(v),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ColumnKind {
    Int,
    Float,
    Bool,
    Text,
}

impl ColumnKind {
    pub fn is_ordered(self) -> bool {
        !matches!(self, ColumnKind::Text)
    }

    pub fn name(self) -> &'static str {
        match self {
            ColumnKind::Int => "int",
            ColumnKind::Float => "float",
            ColumnKind::Bool => "bool",
            ColumnKind::Text => "text",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "int" => Some(ColumnKind::Int),
            "float" => Some(ColumnKind::Float),
            "bool" => Some(ColumnKind::Bool),
            "text" => Some(ColumnKind::Text),
            _ => None,
        }
    }
}

impl fmt::Display for ColumnKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ColumnType {
    pub name: String,
    pub kind: ColumnKind,
    pub nullable: bool,
}

impl ColumnType {
    pub fn new(name: impl Into<String>, kind: ColumnKind, nullable: bool) -> Self {
        Self {
            name: name.into(),
            kind,
            nullable,
        }
    }

    /// Whether `value` may be stored in this column.
    pub fn accepts(&self, value: &Value) -> bool {
        match value.kind() {
            None => self.nullable,
            Some(kind) => kind == self.kind,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Schema {
    columns: Vec<ColumnType>,
}

impl Schema {
    /// Builds a schema, rejecting duplicate column names (case-insensitive).
    pub fn new(columns: Vec<ColumnType>) -> Result<Self> {
        for (i, c) in columns.iter().enumerate() {
            if columns[..i]
                .iter()
                .any(|p| p.name.eq_ignore_ascii_case(&c.name))
            {
                return Err(Error::Analysis(format!(
                    "duplicate column name '{}'",
                    c.name
                )));
            }
        }
        Ok(Self { columns })
    }

    pub fn columns(&self) -> &[ColumnType] {
        &self.columns
    }

    pub fn column(&self, index: usize) -> &ColumnType {
        &self.columns[index]
    }

    pub fn len(&self) -> usize {
        self.columns.len()
    }

    pub fn is_empty(&self) -> bool {
        self.columns.is_empty()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.columns
            .iter()
            .position(|c| c.name.eq_ignore_ascii_case(name))
    }

    pub fn project(&self, indices: &[usize]) -> Schema {
        Schema {
            columns: indices.iter().map(|&i| self.columns[i].clone()).collect(),
        }
    }
}

/// A tuple plus its position in the input it was read from.
#[derive(Debug, Clone, PartialEq)]
pub struct Row {
    pub values: Vec<Value>,
    pub ordinal: usize,
}

impl Row {
    pub fn new(values: Vec<Value>, ordinal: usize) -> Self {
        Self { values, ordinal }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DimKind {
    Min,
    Max,
    Diff,
}

impl fmt::Display for DimKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            DimKind::Min => "MIN",
            DimKind::Max => "MAX",
            DimKind::Diff => "DIFF",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SkylineDimension {
    pub column: usize,
    pub kind: DimKind,
}

impl SkylineDimension {
    pub fn new(column: usize, kind: DimKind) -> Self {
        Self { column, kind }
    }
}

/// Upper bound on skyline dimensions; null signatures are 64-bit masks.
pub const MAX_SKYLINE_DIMS: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SkylineSpec {
    dims: Vec<SkylineDimension>,
    pub distinct: bool,
    pub complete: bool,
}

impl SkylineSpec {
    /// Validates the structural invariants: at least one dimension, no column
    /// used twice, and at least one MIN or MAX dimension.
    pub fn new(dims: Vec<SkylineDimension>, distinct: bool, complete: bool) -> Result<Self> {
        if dims.is_empty() {
            return Err(Error::Analysis(
                "skyline needs at least one dimension".into(),
            ));
        }
        if dims.len() > MAX_SKYLINE_DIMS {
            return Err(Error::Analysis(format!(
                "skyline supports at most {MAX_SKYLINE_DIMS} dimensions, got {}",
                dims.len()
            )));
        }
        for (i, d) in dims.iter().enumerate() {
            if dims[..i].iter().any(|p| p.column == d.column) {
                return Err(Error::Analysis(format!(
                    "column #{} appears twice in the skyline clause",
                    d.column
                )));
            }
        }
        if dims.iter().all(|d| d.kind == DimKind::Diff) {
            return Err(Error::Analysis(
                "skyline needs at least one MIN or MAX dimension".into(),
            ));
        }
        Ok(Self {
            dims,
            distinct,
            complete,
        })
    }

    pub fn dims(&self) -> &[SkylineDimension] {
        &self.dims
    }

    /// Checks each dimension's column kind against `schema`.
    pub fn check_types(&self, schema: &Schema) -> Result<()> {
        for d in &self.dims {
            let col = schema.columns().get(d.column).ok_or_else(|| {
                Error::Analysis(format!("skyline column #{} out of range", d.column))
            })?;
            if d.kind != DimKind::Diff && !col.kind.is_ordered() {
                return Err(Error::Analysis(format!(
                    "{} is not allowed on {} column '{}'",
                    d.kind, col.kind, col.name
                )));
            }
        }
        Ok(())
    }

    /// True when some skyline column may hold NULL.
    pub fn is_nullable(&self, schema: &Schema) -> bool {
        self.dims.iter().any(|d| schema.column(d.column).nullable)
    }

    /// Same dimensions, with column indices rewritten through `map`.
    pub fn remap(&self, map: impl Fn(usize) -> usize) -> SkylineSpec {
        SkylineSpec {
            dims: self
                .dims
                .iter()
                .map(|d| SkylineDimension::new(map(d.column), d.kind))
                .collect(),
            distinct: self.distinct,
            complete: self.complete,
        }
    }
}

/// Per-dimension comparison of `a` against `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValueOrdering {
    Better,
    Equal,
    Worse,
    Incomparable,
}

/// Compares two values of one skyline dimension.
///
/// Returns `Incomparable` when either side is NULL; callers decide what a
/// missing value means. Values of different kinds are an engine defect.
pub fn compare_values(a: &Value, b: &Value, kind: DimKind) -> Result<ValueOrdering> {
    let ord = match (a, b) {
        (Value::Null, _) | (_, Value::Null) => return Ok(ValueOrdering::Incomparable),
        (Value::Int(x), Value::Int(y)) => x.cmp(y),
        (Value::Float(x), Value::Float(y)) => x
            .partial_cmp(y)
            .ok_or_else(|| Error::Defect("NaN reached the dominance kernel".into()))?,
        (Value::Bool(x), Value::Bool(y)) => x.cmp(y),
        (Value::Text(x), Value::Text(y)) => {
            if kind != DimKind::Diff {
                return Err(Error::Defect(format!("{kind} applied to a text value")));
            }
            x.cmp(y)
        }
        _ => {
            return Err(Error::Defect(format!(
                "type mismatch in skyline dimension: {a:?} vs {b:?}"
            )))
        }
    };
    Ok(order_for(ord, kind))
}

#[inline]
pub(crate) fn order_for(ord: Ordering, kind: DimKind) -> ValueOrdering {
    match (kind, ord) {
        (_, Ordering::Equal) => ValueOrdering::Equal,
        (DimKind::Diff, _) => ValueOrdering::Incomparable,
        (DimKind::Min, Ordering::Less) | (DimKind::Max, Ordering::Greater) => ValueOrdering::Better,
        _ => ValueOrdering::Worse,
    }
}
