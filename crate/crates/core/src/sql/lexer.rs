// Copyright 2026 The Skyline Authors. Licensed under Apache-2.0.

use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Keyword {
    Select,
    From,
    Where,
    Skyline,
    Of,
    Distinct,
    Complete,
    Min,
    Max,
    Diff,
    Order,
    By,
    And,
    Or,
    Not,
    Asc,
    Desc,
    Is,
    Null,
    True,
    False,
    // recognised only to reject them with a clear message
    Group,
    Having,
    Join,
    Limit,
    Union,
}

impl Keyword {
    fn lookup(word: &str) -> Option<Keyword> {
        use Keyword::*;
        let kw = match word.to_ascii_uppercase().as_str() {
            "SELECT" => Select,
            "FROM" => From,
            "WHERE" => Where,
            "SKYLINE" => Skyline,
            "OF" => Of,
            "DISTINCT" => Distinct,
            "COMPLETE" => Complete,
            "MIN" => Min,
            "MAX" => Max,
            "DIFF" => Diff,
            "ORDER" => Order,
            "BY" => By,
            "AND" => And,
            "OR" => Or,
            "NOT" => Not,
            "ASC" => Asc,
            "DESC" => Desc,
            "IS" => Is,
            "NULL" => Null,
            "TRUE" => True,
            "FALSE" => False,
            "GROUP" => Group,
            "HAVING" => Having,
            "JOIN" => Join,
            "LIMIT" => Limit,
            "UNION" => Union,
            _ => return None,
        };
        Some(kw)
    }

    pub fn as_str(self) -> &'static str {
        use Keyword::*;
        match self {
            Select => "SELECT",
            From => "FROM",
            Where => "WHERE",
            Skyline => "SKYLINE",
            Of => "OF",
            Distinct => "DISTINCT",
            Complete => "COMPLETE",
            Min => "MIN",
            Max => "MAX",
            Diff => "DIFF",
            Order => "ORDER",
            By => "BY",
            And => "AND",
            Or => "OR",
            Not => "NOT",
            Asc => "ASC",
            Desc => "DESC",
            Is => "IS",
            Null => "NULL",
            True => "TRUE",
            False => "FALSE",
            Group => "GROUP",
            Having => "HAVING",
            Join => "JOIN",
            Limit => "LIMIT",
            Union => "UNION",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum TokenKind {
    Keyword(Keyword),
    Ident(String),
    /// Magnitude of an integer literal; the parser applies any sign.
    Int(u64),
    Float(f64),
    Str(String),
    Comma,
    Star,
    LParen,
    RParen,
    Minus,
    Semicolon,
    Eq,
    NotEq,
    Lt,
    LtEq,
    Gt,
    GtEq,
    Eof,
}

impl fmt::Display for TokenKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TokenKind::Keyword(k) => write!(f, "keyword {}", k.as_str()),
            TokenKind::Ident(s) => write!(f, "identifier '{s}'"),
            TokenKind::Int(v) => write!(f, "integer {v}"),
            TokenKind::Float(v) => write!(f, "float {v:?}"),
            TokenKind::Str(s) => write!(f, "string '{s}'"),
            TokenKind::Comma => f.write_str("','"),
            TokenKind::Star => f.write_str("'*'"),
            TokenKind::LParen => f.write_str("'('"),
            TokenKind::RParen => f.write_str("')'"),
            TokenKind::Minus => f.write_str("'-'"),
            TokenKind::Semicolon => f.write_str("';'"),
            TokenKind::Eq => f.write_str("'='"),
            TokenKind::NotEq => f.write_str("'<>'"),
            TokenKind::Lt => f.write_str("'<'"),
            TokenKind::LtEq => f.write_str("'<='"),
            TokenKind::Gt => f.write_str("'>'"),
            TokenKind::GtEq => f.write_str("'>='"),
            TokenKind::Eof => f.write_str("end of input"),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Token {
    pub kind: TokenKind,
    /// Byte offset of the first character in the query text.
    pub offset: usize,
}

/// Splits query text into tokens. The last token is always `Eof`.
pub fn tokenize(text: &str) -> Result<Vec<Token>> {
    let bytes = text.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        let start = i;
        let simple = |kind| Token {
            kind,
            offset: start,
        };
        match c {
            b' ' | b'\t' | b'\n' | b'\r' => {
                i += 1;
            }
            b'-' if bytes.get(i + 1) == Some(&b'-') => {
                while i < bytes.len() && bytes[i] != b'\n' {
                    i += 1;
                }
            }
            b',' => {
                out.push(simple(TokenKind::Comma));
                i += 1;
            }
            b'*' => {
                out.push(simple(TokenKind::Star));
                i += 1;
            }
            b'(' => {
                out.push(simple(TokenKind::LParen));
                i += 1;
            }
            b')' => {
                out.push(simple(TokenKind::RParen));
                i += 1;
            }
            b'-' => {
                out.push(simple(TokenKind::Minus));
                i += 1;
            }
            b';' => {
                out.push(simple(TokenKind::Semicolon));
                i += 1;
            }
            b'=' => {
                out.push(simple(TokenKind::Eq));
                i += 1;
            }
            b'!' if bytes.get(i + 1) == Some(&b'=') => {
                out.push(simple(TokenKind::NotEq));
                i += 2;
            }
            b'<' => match bytes.get(i + 1) {
                Some(b'=') => {
                    out.push(simple(TokenKind::LtEq));
                    i += 2;
                }
                Some(b'>') => {
                    out.push(simple(TokenKind::NotEq));
                    i += 2;
                }
                _ => {
                    out.push(simple(TokenKind::Lt));
                    i += 1;
                }
            },
            b'>' => {
                if bytes.get(i + 1) == Some(&b'=') {
                    out.push(simple(TokenKind::GtEq));
                    i += 2;
                } else {
                    out.push(simple(TokenKind::Gt));
                    i += 1;
                }
            }
            b'\'' => {
                let (s, next) = lex_string(text, i)?;
                out.push(simple(TokenKind::Str(s)));
                i = next;
            }
            b'0'..=b'9' | b'.' if c != b'.' || bytes.get(i + 1).is_some_and(u8::is_ascii_digit) => {
                let (kind, next) = lex_number(text, i)?;
                out.push(simple(kind));
                i = next;
            }
            c if c.is_ascii_alphabetic() || c == b'_' => {
                while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                    i += 1;
                }
                let word = &text[start..i];
                let kind = match Keyword::lookup(word) {
                    Some(k) => TokenKind::Keyword(k),
                    None => TokenKind::Ident(word.to_string()),
                };
                out.push(simple(kind));
            }
            _ => {
                let ch = text[i..].chars().next().unwrap_or('?');
                return Err(Error::Lex {
                    offset: i,
                    message: format!("illegal character {ch:?}"),
                });
            }
        }
    }
    out.push(Token {
        kind: TokenKind::Eof,
        offset: text.len(),
    });
    Ok(out)
}

fn lex_string(text: &str, start: usize) -> Result<(String, usize)> {
    let bytes = text.as_bytes();
    let mut i = start + 1;
    let mut s = String::new();
    let mut run = i;
    loop {
        match bytes.get(i) {
            None => {
                return Err(Error::Lex {
                    offset: start,
                    message: "unterminated string literal".into(),
                })
            }
            Some(b'\'') if bytes.get(i + 1) == Some(&b'\'') => {
                s.push_str(&text[run..=i]);
                i += 2;
                run = i;
            }
            Some(b'\'') => {
                s.push_str(&text[run..i]);
                return Ok((s, i + 1));
            }
            Some(_) => i += 1,
        }
    }
}

fn lex_number(text: &str, start: usize) -> Result<(TokenKind, usize)> {
    let bytes = text.as_bytes();
    let mut i = start;
    let digits = |i: &mut usize| {
        while *i < bytes.len() && bytes[*i].is_ascii_digit() {
            *i += 1;
        }
    };
    digits(&mut i);
    let mut is_float = false;
    if bytes.get(i) == Some(&b'.') {
        is_float = true;
        i += 1;
        digits(&mut i);
    }
    if matches!(bytes.get(i), Some(b'e' | b'E')) {
        let mut j = i + 1;
        if matches!(bytes.get(j), Some(b'+' | b'-')) {
            j += 1;
        }
        if bytes.get(j).is_some_and(u8::is_ascii_digit) {
            is_float = true;
            i = j;
            digits(&mut i);
        }
    }
    if bytes
        .get(i)
        .is_some_and(|b| b.is_ascii_alphabetic() || *b == b'_')
    {
        return Err(Error::Lex {
            offset: start,
            message: format!("malformed number '{}'", &text[start..=i]),
        });
    }
    let lexeme = &text[start..i];
    let kind = if is_float {
        TokenKind::Float(lexeme.parse().map_err(|_| Error::Lex {
            offset: start,
            message: format!("malformed number '{lexeme}'"),
        })?)
    } else {
        TokenKind::Int(lexeme.parse().map_err(|_| Error::Lex {
            offset: start,
            message: format!("integer literal '{lexeme}' out of range"),
        })?)
    };
    Ok((kind, i))
}
