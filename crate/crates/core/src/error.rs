// Copyright 2026 The Skyline Authors. Licensed under Apache-2.0.

use std::time::Duration;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Errors surfaced by the engine.
///
/// User errors (bad query text, unknown columns, malformed CSV) are kept
/// apart from [`Error::Defect`], which signals a broken internal contract.
#[derive(Debug, Error)]
pub enum Error {
    #[error("lex error at offset {offset}: {message}")]
    Lex { offset: usize, message: String },

    #[error("parse error at offset {offset} near {token}: {message}")]
    Parse {
        offset: usize,
        token: String,
        message: String,
    },

    #[error("analysis error: {0}")]
    Analysis(String),

    #[error("planning error: {0}")]
    Planning(String),

    #[error("ingest error{}: {message}", line.map(|l| format!(" at line {l}")).unwrap_or_default())]
    Ingest {
        line: Option<usize>,
        message: String,
    },

    #[error("execution error: {0}")]
    Execution(String),

    #[error("query exceeded its time budget of {0:?}")]
    Timeout(Duration),

    #[error("engine defect: {0}")]
    Defect(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

/// Coarse error category, used for process exit codes and FFI status codes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    Parse,
    Analysis,
    Planning,
    Ingest,
    Runtime,
    Defect,
    Io,
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::Lex { .. } | Error::Parse { .. } => ErrorKind::Parse,
            Error::Analysis(_) => ErrorKind::Analysis,
            Error::Planning(_) => ErrorKind::Planning,
            Error::Ingest { .. } => ErrorKind::Ingest,
            Error::Execution(_) | Error::Timeout(_) => ErrorKind::Runtime,
            Error::Defect(_) => ErrorKind::Defect,
            Error::Io(_) => ErrorKind::Io,
        }
    }

    pub(crate) fn ingest(line: impl Into<Option<usize>>, message: impl Into<String>) -> Self {
        Error::Ingest {
            line: line.into(),
            message: message.into(),
        }
    }
}
