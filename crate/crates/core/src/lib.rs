// Copyright 2026 The Skyline Authors. Licensed under Apache-2.0.

//! A small query engine that executes skyline (Pareto-front) queries over
//! in-memory tables, using a SQL dialect extended with a
//! `SKYLINE OF [DISTINCT] [COMPLETE] col MIN|MAX|DIFF, ...` clause.

pub mod bench;
pub mod dominance;
pub mod engine;
pub mod error;
pub mod exec;
pub mod model;
pub mod planner;
pub mod skyline;
pub mod sql;

pub use engine::Engine;
pub use error::{Error, ErrorKind, Result};
