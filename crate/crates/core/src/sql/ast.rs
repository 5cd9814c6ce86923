// Copyright 2026 The Skyline Authors. Licensed under Apache-2.0.

//! Unresolved query syntax tree. `Display` renders canonical query text that
//! parses back to the same tree.

use std::fmt;

use crate::model::DimKind;

#[derive(Debug, Clone, PartialEq)]
pub struct QueryAst {
    pub select: SelectList,
    pub from: String,
    pub where_clause: Option<Expr>,
    pub skyline: Option<SkylineClauseAst>,
    pub order_by: Option<OrderByAst>,
}

#[derive(Debug, Clone, PartialEq)]
pub enum SelectList {
    Wildcard,
    Columns(Vec<String>),
}

#[derive(Debug, Clone, PartialEq)]
pub struct SkylineClauseAst {
    pub distinct: bool,
    pub complete: bool,
    pub items: Vec<SkylineItemAst>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SkylineItemAst {
    pub column: String,
    pub kind: DimKind,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OrderByAst {
    pub column: String,
    pub descending: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompareOp {
    Eq,
    NotEq,
    Lt,
    LtEq,
    Gt,
    GtEq,
}

impl CompareOp {
    /// The operator with its operands swapped: `lit < col` is `col > lit`.
    pub fn flipped(self) -> Self {
        match self {
            CompareOp::Lt => CompareOp::Gt,
            CompareOp::LtEq => CompareOp::GtEq,
            CompareOp::Gt => CompareOp::Lt,
            CompareOp::GtEq => CompareOp::LtEq,
            other => other,
        }
    }

    fn as_str(self) -> &'static str {
        match self {
            CompareOp::Eq => "=",
            CompareOp::NotEq => "<>",
            CompareOp::Lt => "<",
            CompareOp::LtEq => "<=",
            CompareOp::Gt => ">",
            CompareOp::GtEq => ">=",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Literal {
    Int(i64),
    Float(f64),
    Str(String),
    Bool(bool),
}

#[derive(Debug, Clone, PartialEq)]
pub enum Expr {
    /// `column op literal`; a literal on the left is normalized away.
    Compare {
        column: String,
        op: CompareOp,
        literal: Literal,
    },
    IsNull {
        column: String,
        negated: bool,
    },
    And(Box<Expr>, Box<Expr>),
    Or(Box<Expr>, Box<Expr>),
    Not(Box<Expr>),
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Literal::Int(v) => write!(f, "{v}"),
            // Debug keeps a '.' or exponent so the text lexes as a float again
            Literal::Float(v) => write!(f, "{v:?}"),
            Literal::Str(s) => write!(f, "'{}'", s.replace('\'', "''")),
            Literal::Bool(true) => f.write_str("TRUE"),
            Literal::Bool(false) => f.write_str("FALSE"),
        }
    }
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Compare {
                column,
                op,
                literal,
            } => write!(f, "{column} {} {literal}", op.as_str()),
            Expr::IsNull {
                column,
                negated: false,
            } => write!(f, "{column} IS NULL"),
            Expr::IsNull {
                column,
                negated: true,
            } => write!(f, "{column} IS NOT NULL"),
            Expr::And(l, r) => write!(f, "({l} AND {r})"),
            Expr::Or(l, r) => write!(f, "({l} OR {r})"),
            Expr::Not(e) => write!(f, "NOT ({e})"),
        }
    }
}

impl fmt::Display for SkylineClauseAst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("SKYLINE OF")?;
        if self.distinct {
            f.write_str(" DISTINCT")?;
        }
        if self.complete {
            f.write_str(" COMPLETE")?;
        }
        for (i, item) in self.items.iter().enumerate() {
            let sep = if i == 0 { " " } else { ", " };
            write!(f, "{sep}{} {}", item.column, item.kind)?;
        }
        Ok(())
    }
}

impl fmt::Display for QueryAst {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("SELECT ")?;
        match &self.select {
            SelectList::Wildcard => f.write_str("*")?,
            SelectList::Columns(cols) => f.write_str(&cols.join(", "))?,
        }
        write!(f, " FROM {}", self.from)?;
        if let Some(w) = &self.where_clause {
            write!(f, " WHERE {w}")?;
        }
        if let Some(s) = &self.skyline {
            write!(f, " {s}")?;
        }
        if let Some(o) = &self.order_by {
            write!(
                f,
                " ORDER BY {} {}",
                o.column,
                if o.descending { "DESC" } else { "ASC" }
            )?;
        }
        Ok(())
    }
}
