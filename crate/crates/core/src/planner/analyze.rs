// Copyright 2026 The Skyline Authors. Licensed under Apache-2.0.

use super::logical::{LogicalPlan, Predicate};
use crate::error::{Error, Result};
use crate::model::{ColumnKind, Schema, SkylineDimension, SkylineSpec, Value};
use crate::sql::{Expr, Literal, QueryAst, SelectList};

/// Source of table schemas for name resolution.
pub trait SchemaProvider {
    fn table_schema(&self, name: &str) -> Option<Schema>;
}

impl<F: Fn(&str) -> Option<Schema>> SchemaProvider for F {
    fn table_schema(&self, name: &str) -> Option<Schema> {
        self(name)
    }
}

fn resolve(schema: &Schema, name: &str) -> Result<usize> {
    schema
        .index_of(name)
        .ok_or_else(|| Error::Analysis(format!("unknown column '{name}'")))
}

/// Resolves names and builds
/// `Scan -> Filter? -> Project(needed)? -> Skyline? -> Project -> Sort?`.
///
/// Skyline dimensions missing from the select list are carried through the
/// skyline and dropped by the final projection. The narrowing projection
/// below the skyline is only added when it removes columns.
pub fn analyze(ast: &QueryAst, catalog: &impl SchemaProvider) -> Result<LogicalPlan> {
    let schema = catalog
        .table_schema(&ast.from)
        .ok_or_else(|| Error::Analysis(format!("unknown table '{}'", ast.from)))?;
    let mut plan = LogicalPlan::Scan {
        table: ast.from.clone(),
        schema: schema.clone(),
    };

    if let Some(expr) = &ast.where_clause {
        plan = LogicalPlan::Filter {
            predicate: resolve_predicate(expr, &schema)?,
            input: Box::new(plan),
        };
    }

    let selected: Vec<usize> = match &ast.select {
        SelectList::Wildcard => (0..schema.len()).collect(),
        SelectList::Columns(names) => names
            .iter()
            .map(|n| resolve(&schema, n))
            .collect::<Result<_>>()?,
    };
    // positions in the current plan's output schema
    let mut output: Vec<usize> = selected.clone();

    if let Some(clause) = &ast.skyline {
        let dims: Vec<SkylineDimension> = clause
            .items
            .iter()
            .map(|item| {
                Ok(SkylineDimension::new(
                    resolve(&schema, &item.column)?,
                    item.kind,
                ))
            })
            .collect::<Result<_>>()?;
        if let Some(dup) = clause.items.iter().enumerate().find_map(|(i, item)| {
            clause.items[..i]
                .iter()
                .any(|p| p.column.eq_ignore_ascii_case(&item.column))
                .then_some(&item.column)
        }) {
            return Err(Error::Analysis(format!(
                "column '{dup}' appears twice in the skyline clause"
            )));
        }
        let mut spec = SkylineSpec::new(dims, clause.distinct, clause.complete)?;
        spec.check_types(&schema)?;

        let mut needed: Vec<usize> = selected
            .iter()
            .copied()
            .chain(spec.dims().iter().map(|d| d.column))
            .collect();
        needed.sort_unstable();
        needed.dedup();
        if needed.len() < schema.len() {
            let pos = |c: usize| {
                needed
                    .binary_search(&c)
                    .expect("column is in the needed set")
            };
            spec = spec.remap(pos);
            output = selected.iter().map(|&c| pos(c)).collect();
            plan = LogicalPlan::Project {
                columns: needed.clone(),
                input: Box::new(plan),
            };
        }
        plan = LogicalPlan::Skyline {
            spec,
            input: Box::new(plan),
        };
    }

    plan = LogicalPlan::Project {
        columns: output,
        input: Box::new(plan),
    };

    if let Some(order) = &ast.order_by {
        let out_schema = plan.schema();
        let column = out_schema.index_of(&order.column).ok_or_else(|| {
            Error::Analysis(format!(
                "ORDER BY column '{}' is not in the select list",
                order.column
            ))
        })?;
        plan = LogicalPlan::Sort {
            column,
            descending: order.descending,
            input: Box::new(plan),
        };
    }
    Ok(plan)
}

fn resolve_predicate(expr: &Expr, schema: &Schema) -> Result<Predicate> {
    Ok(match expr {
        Expr::Compare {
            column,
            op,
            literal,
        } => {
            let idx = resolve(schema, column)?;
            let col = schema.column(idx);
            let value = match (col.kind, literal) {
                (ColumnKind::Int, Literal::Int(v)) => Value::Int(*v),
                (ColumnKind::Int | ColumnKind::Float, Literal::Float(v)) => Value::Float(*v),
                (ColumnKind::Float, Literal::Int(v)) => Value::Float(*v as f64),
                (ColumnKind::Bool, Literal::Bool(v)) => Value::Bool(*v),
                (ColumnKind::Text, Literal::Str(s)) => Value::text(s),
                (kind, lit) => {
                    return Err(Error::Analysis(format!(
                        "cannot compare {kind} column '{}' with {lit}",
                        col.name
                    )))
                }
            };
            Predicate::Compare {
                column: idx,
                op: *op,
                value,
            }
        }
        Expr::IsNull { column, negated } => Predicate::IsNull {
            column: resolve(schema, column)?,
            negated: *negated,
        },
        Expr::And(l, r) => Predicate::And(
            Box::new(resolve_predicate(l, schema)?),
            Box::new(resolve_predicate(r, schema)?),
        ),
        Expr::Or(l, r) => Predicate::Or(
            Box::new(resolve_predicate(l, schema)?),
            Box::new(resolve_predicate(r, schema)?),
        ),
        Expr::Not(e) => Predicate::Not(Box::new(resolve_predicate(e, schema)?)),
    })
}
