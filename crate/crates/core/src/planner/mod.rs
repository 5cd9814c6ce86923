// Copyright 2026 The Skyline Authors. Licensed under Apache-2.0.

//! Name resolution, rewrite rules, and lowering to physical operators.

mod analyze;
mod logical;
mod optimize;
mod physical;

pub use analyze::{analyze, SchemaProvider};
pub use logical::{LogicalPlan, Predicate};
pub use optimize::{optimize, Optimizer, OptimizerRule, SingleDimensionRule};
pub use physical::{select_algorithm, AlgorithmChoice, Distribution, GlobalVariant, PhysicalPlan};
