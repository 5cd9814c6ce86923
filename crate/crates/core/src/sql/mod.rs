// Copyright 2026 The Skyline Authors. Licensed under Apache-2.0.

//! SELECT-FROM-WHERE dialect with a `SKYLINE OF` clause between WHERE and
//! ORDER BY.

pub mod ast;
mod lexer;
mod parser;

pub use ast::*;
pub use lexer::{tokenize, Keyword, Token, TokenKind};
pub use parser::parse;

use crate::error::Result;

/// Tokenizes and parses `text`.
pub fn parse_query(text: &str) -> Result<QueryAst> {
    parse(&tokenize(text)?)
}
