// Copyright 2026 The Skyline Authors. Licensed under Apache-2.0.

use std::fmt;

use crate::model::{Row, Schema, SkylineSpec, Value};
use crate::sql::CompareOp;

/// Filter predicate with columns resolved to input indices.
#[derive(Debug, Clone, PartialEq)]
pub enum Predicate {
    Compare {
        column: usize,
        op: CompareOp,
        value: Value,
    },
    IsNull {
        column: usize,
        negated: bool,
    },
    And(Box<Predicate>, Box<Predicate>),
    Or(Box<Predicate>, Box<Predicate>),
    Not(Box<Predicate>),
}

impl Predicate {
    /// Three-valued evaluation; `None` is SQL's UNKNOWN.
    pub fn eval(&self, row: &Row) -> Option<bool> {
        match self {
            Predicate::Compare { column, op, value } => {
                let ord = row.values[*column].partial_cmp_same_kind(value)?;
                Some(match op {
                    CompareOp::Eq => ord.is_eq(),
                    CompareOp::NotEq => ord.is_ne(),
                    CompareOp::Lt => ord.is_lt(),
                    CompareOp::LtEq => ord.is_le(),
                    CompareOp::Gt => ord.is_gt(),
                    CompareOp::GtEq => ord.is_ge(),
                })
            }
            Predicate::IsNull { column, negated } => {
                Some(row.values[*column].is_null() != *negated)
            }
            Predicate::And(l, r) => match (l.eval(row), r.eval(row)) {
                (Some(false), _) | (_, Some(false)) => Some(false),
                (Some(true), Some(true)) => Some(true),
                _ => None,
            },
            Predicate::Or(l, r) => match (l.eval(row), r.eval(row)) {
                (Some(true), _) | (_, Some(true)) => Some(true),
                (Some(false), Some(false)) => Some(false),
                _ => None,
            },
            Predicate::Not(e) => e.eval(row).map(|b| !b),
        }
    }

    pub(crate) fn display<'a>(&'a self, schema: &'a Schema) -> impl fmt::Display + 'a {
        DisplayPredicate { pred: self, schema }
    }
}

struct DisplayPredicate<'a> {
    pred: &'a Predicate,
    schema: &'a Schema,
}

impl fmt::Display for DisplayPredicate<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = |i: usize| &self.schema.column(i).name;
        let sub = |p: &'_ Predicate| {
            DisplayPredicate {
                pred: p,
                schema: self.schema,
            }
            .to_string()
        };
        match self.pred {
            Predicate::Compare { column, op, value } => {
                let op = match op {
                    CompareOp::Eq => "=",
                    CompareOp::NotEq => "<>",
                    CompareOp::Lt => "<",
                    CompareOp::LtEq => "<=",
                    CompareOp::Gt => ">",
                    CompareOp::GtEq => ">=",
                };
                match value {
                    Value::Text(s) => {
                        write!(f, "{} {op} '{}'", name(*column), s.replace('\'', "''"))
                    }
                    v => write!(f, "{} {op} {v}", name(*column)),
                }
            }
            Predicate::IsNull { column, negated } => write!(
                f,
                "{} IS {}NULL",
                name(*column),
                if *negated { "NOT " } else { "" }
            ),
            Predicate::And(l, r) => write!(f, "({} AND {})", sub(l), sub(r)),
            Predicate::Or(l, r) => write!(f, "({} OR {})", sub(l), sub(r)),
            Predicate::Not(e) => write!(f, "NOT ({})", sub(e)),
        }
    }
}

/// Renders `price MIN, user_rating MAX` against `schema`.
pub(crate) fn display_spec(spec: &SkylineSpec, schema: &Schema) -> String {
    let mut s = String::new();
    if spec.distinct {
        s.push_str("DISTINCT ");
    }
    if spec.complete {
        s.push_str("COMPLETE ");
    }
    let items: Vec<String> = spec
        .dims()
        .iter()
        .map(|d| format!("{} {}", schema.column(d.column).name, d.kind))
        .collect();
    s.push_str(&items.join(", "));
    s
}

/// Resolved relational plan. Every skyline is a single node over one input.
#[derive(Debug, Clone, PartialEq)]
pub enum LogicalPlan {
    Scan {
        table: String,
        schema: Schema,
    },
    Filter {
        predicate: Predicate,
        input: Box<LogicalPlan>,
    },
    Project {
        columns: Vec<usize>,
        input: Box<LogicalPlan>,
    },
    Skyline {
        spec: SkylineSpec,
        input: Box<LogicalPlan>,
    },
    /// A skyline over one MIN/MAX dimension of complete data, computed by a
    /// scan for the optimum instead of pairwise dominance.
    SingleDim {
        spec: SkylineSpec,
        input: Box<LogicalPlan>,
    },
    Sort {
        column: usize,
        descending: bool,
        input: Box<LogicalPlan>,
    },
}

impl LogicalPlan {
    pub fn schema(&self) -> Schema {
        match self {
            LogicalPlan::Scan { schema, .. } => schema.clone(),
            LogicalPlan::Project { columns, input } => input.schema().project(columns),
            LogicalPlan::Filter { input, .. }
            | LogicalPlan::Skyline { input, .. }
            | LogicalPlan::SingleDim { input, .. }
            | LogicalPlan::Sort { input, .. } => input.schema(),
        }
    }

    pub fn input(&self) -> Option<&LogicalPlan> {
        match self {
            LogicalPlan::Scan { .. } => None,
            LogicalPlan::Filter { input, .. }
            | LogicalPlan::Project { input, .. }
            | LogicalPlan::Skyline { input, .. }
            | LogicalPlan::SingleDim { input, .. }
            | LogicalPlan::Sort { input, .. } => Some(input),
        }
    }

    /// Rebuilds the plan bottom-up, applying `f` to every node after its
    /// input has been rewritten.
    pub fn transform_up(self, f: &impl Fn(LogicalPlan) -> LogicalPlan) -> LogicalPlan {
        let node = match self {
            LogicalPlan::Scan { .. } => self,
            LogicalPlan::Filter { predicate, input } => LogicalPlan::Filter {
                predicate,
                input: Box::new(input.transform_up(f)),
            },
            LogicalPlan::Project { columns, input } => LogicalPlan::Project {
                columns,
                input: Box::new(input.transform_up(f)),
            },
            LogicalPlan::Skyline { spec, input } => LogicalPlan::Skyline {
                spec,
                input: Box::new(input.transform_up(f)),
            },
            LogicalPlan::SingleDim { spec, input } => LogicalPlan::SingleDim {
                spec,
                input: Box::new(input.transform_up(f)),
            },
            LogicalPlan::Sort {
                column,
                descending,
                input,
            } => LogicalPlan::Sort {
                column,
                descending,
                input: Box::new(input.transform_up(f)),
            },
        };
        f(node)
    }

    fn fmt_indent(&self, f: &mut fmt::Formatter<'_>, depth: usize) -> fmt::Result {
        let pad = "  ".repeat(depth);
        match self {
            LogicalPlan::Scan { table, .. } => writeln!(f, "{pad}Scan: {table}")?,
            LogicalPlan::Filter { predicate, input } => {
                writeln!(f, "{pad}Filter: {}", predicate.display(&input.schema()))?
            }
            LogicalPlan::Project { columns, input } => {
                let s = input.schema();
                let names: Vec<&str> = columns.iter().map(|&c| s.column(c).name.as_str()).collect();
                writeln!(f, "{pad}Project: {}", names.join(", "))?
            }
            LogicalPlan::Skyline { spec, input } => {
                writeln!(f, "{pad}Skyline: {}", display_spec(spec, &input.schema()))?
            }
            LogicalPlan::SingleDim { spec, input } => {
                writeln!(f, "{pad}SingleDim: {}", display_spec(spec, &input.schema()))?
            }
            LogicalPlan::Sort {
                column,
                descending,
                input,
            } => writeln!(
                f,
                "{pad}Sort: {} {}",
                input.schema().column(*column).name,
                if *descending { "DESC" } else { "ASC" }
            )?,
        }
        match self.input() {
            Some(input) => input.fmt_indent(f, depth + 1),
            None => Ok(()),
        }
    }
}

impl fmt::Display for LogicalPlan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_indent(f, 0)
    }
}
