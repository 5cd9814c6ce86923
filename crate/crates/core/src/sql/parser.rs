// Copyright 2026 The Skyline Authors. Licensed under Apache-2.0.

//! Recursive-descent parser.
//!
//! ```text
//! query    := SELECT select FROM ident [WHERE expr] [skyline] [ORDER BY ident [ASC|DESC]] [';']
//! select   := '*' | ident (',' ident)*
//! skyline  := SKYLINE OF [DISTINCT] [COMPLETE] item (',' item)*
//! item     := ident (MIN | MAX | DIFF)
//! expr     := conj (OR conj)*
//! conj     := unary (AND unary)*
//! unary    := NOT unary | '(' expr ')' | ident IS [NOT] NULL
//!           | ident cmp literal | literal cmp ident
//! ```

use super::ast::*;
use super::lexer::{Keyword, Token, TokenKind};
use crate::error::{Error, Result};
use crate::model::DimKind;

/// Parses a token stream produced by [`super::tokenize`].
pub fn parse(tokens: &[Token]) -> Result<QueryAst> {
    let mut p = Parser { tokens, pos: 0 };
    let q = p.query()?;
    p.eat(&TokenKind::Semicolon);
    if p.peek().kind != TokenKind::Eof {
        return Err(p.error("unexpected trailing input"));
    }
    Ok(q)
}

struct Parser<'a> {
    tokens: &'a [Token],
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> &'a Token {
        &self.tokens[self.pos.min(self.tokens.len() - 1)]
    }

    fn advance(&mut self) -> &'a Token {
        let t = self.peek();
        if self.pos < self.tokens.len() - 1 {
            self.pos += 1;
        }
        t
    }

    fn error(&self, message: impl Into<String>) -> Error {
        let t = self.peek();
        Error::Parse {
            offset: t.offset,
            token: t.kind.to_string(),
            message: message.into(),
        }
    }

    fn eat(&mut self, kind: &TokenKind) -> bool {
        if &self.peek().kind == kind {
            self.advance();
            true
        } else {
            false
        }
    }

    fn at_keyword(&self, kw: Keyword) -> bool {
        self.peek().kind == TokenKind::Keyword(kw)
    }

    fn eat_keyword(&mut self, kw: Keyword) -> bool {
        self.eat(&TokenKind::Keyword(kw))
    }

    fn expect_keyword(&mut self, kw: Keyword) -> Result<()> {
        if self.eat_keyword(kw) {
            Ok(())
        } else {
            Err(self.error(format!("expected {}", kw.as_str())))
        }
    }

    fn ident(&mut self, what: &str) -> Result<String> {
        match &self.peek().kind {
            TokenKind::Ident(name) => {
                self.advance();
                Ok(name.clone())
            }
            _ => Err(self.error(format!("expected {what}"))),
        }
    }

    fn reject_unsupported(&self) -> Result<()> {
        let feature = match self.peek().kind {
            TokenKind::Keyword(Keyword::Group) => "GROUP BY",
            TokenKind::Keyword(Keyword::Having) => "HAVING",
            TokenKind::Keyword(Keyword::Join) => "JOIN",
            TokenKind::Keyword(Keyword::Limit) => "LIMIT",
            TokenKind::Keyword(Keyword::Union) => "UNION",
            _ => return Ok(()),
        };
        Err(self.error(format!("unsupported feature: {feature}")))
    }

    fn query(&mut self) -> Result<QueryAst> {
        self.expect_keyword(Keyword::Select)?;
        if self.at_keyword(Keyword::Distinct) {
            return Err(
                self.error("unsupported feature: SELECT DISTINCT (use SKYLINE OF DISTINCT)")
            );
        }
        let select = if self.eat(&TokenKind::Star) {
            SelectList::Wildcard
        } else {
            let mut cols = vec![self.ident("column name or '*'")?];
            while self.eat(&TokenKind::Comma) {
                cols.push(self.ident("column name")?);
            }
            SelectList::Columns(cols)
        };
        self.expect_keyword(Keyword::From)?;
        let from = self.ident("table name")?;
        if matches!(self.peek().kind, TokenKind::Comma | TokenKind::Ident(_)) {
            return Err(self.error("unsupported feature: multiple tables or joins"));
        }
        self.reject_unsupported()?;

        let where_clause = if self.eat_keyword(Keyword::Where) {
            Some(self.expr()?)
        } else {
            None
        };
        self.reject_unsupported()?;

        let skyline = if self.at_keyword(Keyword::Skyline) {
            Some(self.skyline()?)
        } else {
            None
        };
        self.reject_unsupported()?;

        let order_by = if self.eat_keyword(Keyword::Order) {
            self.expect_keyword(Keyword::By)?;
            let column = self.ident("ORDER BY column")?;
            let descending = if self.eat_keyword(Keyword::Desc) {
                true
            } else {
                self.eat_keyword(Keyword::Asc);
                false
            };
            if self.peek().kind == TokenKind::Comma {
                return Err(self.error("unsupported feature: ORDER BY on more than one column"));
            }
            Some(OrderByAst { column, descending })
        } else {
            None
        };
        if self.at_keyword(Keyword::Skyline) {
            return Err(self.error("SKYLINE OF must come before ORDER BY"));
        }
        self.reject_unsupported()?;
        Ok(QueryAst {
            select,
            from,
            where_clause,
            skyline,
            order_by,
        })
    }

    fn skyline(&mut self) -> Result<SkylineClauseAst> {
        self.expect_keyword(Keyword::Skyline)?;
        self.expect_keyword(Keyword::Of)?;
        let distinct = self.eat_keyword(Keyword::Distinct);
        if distinct && self.at_keyword(Keyword::Distinct) {
            return Err(self.error("duplicate DISTINCT"));
        }
        let complete = self.eat_keyword(Keyword::Complete);
        if complete && self.at_keyword(Keyword::Complete) {
            return Err(self.error("duplicate COMPLETE"));
        }
        if self.at_keyword(Keyword::Distinct) {
            return Err(self.error(if distinct {
                "duplicate DISTINCT"
            } else {
                "DISTINCT must precede COMPLETE"
            }));
        }
        let mut items = vec![self.skyline_item()?];
        while self.eat(&TokenKind::Comma) {
            items.push(self.skyline_item()?);
        }
        Ok(SkylineClauseAst {
            distinct,
            complete,
            items,
        })
    }

    fn skyline_item(&mut self) -> Result<SkylineItemAst> {
        let column = self.ident("skyline dimension")?;
        let kind = match self.peek().kind {
            TokenKind::Keyword(Keyword::Min) => DimKind::Min,
            TokenKind::Keyword(Keyword::Max) => DimKind::Max,
            TokenKind::Keyword(Keyword::Diff) => DimKind::Diff,
            _ => return Err(self.error("expected MIN, MAX or DIFF")),
        };
        self.advance();
        Ok(SkylineItemAst { column, kind })
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut left = self.conjunction()?;
        while self.eat_keyword(Keyword::Or) {
            let right = self.conjunction()?;
            left = Expr::Or(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn conjunction(&mut self) -> Result<Expr> {
        let mut left = self.unary()?;
        while self.eat_keyword(Keyword::And) {
            let right = self.unary()?;
            left = Expr::And(Box::new(left), Box::new(right));
        }
        Ok(left)
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat_keyword(Keyword::Not) {
            return Ok(Expr::Not(Box::new(self.unary()?)));
        }
        if self.eat(&TokenKind::LParen) {
            let e = self.expr()?;
            if !self.eat(&TokenKind::RParen) {
                return Err(self.error("expected ')'"));
            }
            return Ok(e);
        }
        if let TokenKind::Ident(column) = &self.peek().kind {
            self.advance();
            if self.eat_keyword(Keyword::Is) {
                let negated = self.eat_keyword(Keyword::Not);
                self.expect_keyword(Keyword::Null)?;
                return Ok(Expr::IsNull {
                    column: column.clone(),
                    negated,
                });
            }
            let op = self.compare_op()?;
            let literal = self.literal()?;
            return Ok(Expr::Compare {
                column: column.clone(),
                op,
                literal,
            });
        }
        if self.is_literal_start() {
            let literal = self.literal()?;
            let op = self.compare_op()?;
            let column = self.ident("column name")?;
            return Ok(Expr::Compare {
                column,
                op: op.flipped(),
                literal,
            });
        }
        Err(self.error("expected a condition"))
    }

    fn compare_op(&mut self) -> Result<CompareOp> {
        let op = match self.peek().kind {
            TokenKind::Eq => CompareOp::Eq,
            TokenKind::NotEq => CompareOp::NotEq,
            TokenKind::Lt => CompareOp::Lt,
            TokenKind::LtEq => CompareOp::LtEq,
            TokenKind::Gt => CompareOp::Gt,
            TokenKind::GtEq => CompareOp::GtEq,
            _ => return Err(self.error("expected a comparison operator")),
        };
        self.advance();
        Ok(op)
    }

    fn is_literal_start(&self) -> bool {
        matches!(
            self.peek().kind,
            TokenKind::Int(_)
                | TokenKind::Float(_)
                | TokenKind::Str(_)
                | TokenKind::Minus
                | TokenKind::Keyword(Keyword::True)
                | TokenKind::Keyword(Keyword::False)
        )
    }

    fn literal(&mut self) -> Result<Literal> {
        let negative = self.eat(&TokenKind::Minus);
        let lit = match &self.peek().kind {
            TokenKind::Int(v) => {
                let v = if negative {
                    0i64.checked_sub_unsigned(*v)
                } else {
                    i64::try_from(*v).ok()
                };
                Literal::Int(v.ok_or_else(|| self.error("integer literal out of range"))?)
            }
            TokenKind::Float(v) => Literal::Float(if negative { -v } else { *v }),
            TokenKind::Str(s) if !negative => Literal::Str(s.clone()),
            TokenKind::Keyword(Keyword::True) if !negative => Literal::Bool(true),
            TokenKind::Keyword(Keyword::False) if !negative => Literal::Bool(false),
            TokenKind::Keyword(Keyword::Null) => {
                return Err(self.error("comparison with NULL is never true; use IS NULL"))
            }
            _ => return Err(self.error("expected a literal")),
        };
        self.advance();
        Ok(lit)
    }
}
