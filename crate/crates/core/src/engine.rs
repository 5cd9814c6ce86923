// Copyright 2026 The Skyline Authors. Licensed under Apache-2.0.

use std::collections::HashMap;
use std::path::Path;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exec::csv::{ingest_csv, SchemaSource};
use crate::exec::{self, Dataset, ExecConfig, QueryResult, TableSource};
use crate::model::Schema;
use crate::planner::{
    analyze, select_algorithm, AlgorithmChoice, LogicalPlan, Optimizer, PhysicalPlan,
    SchemaProvider,
};
use crate::sql::parse_query;

/// A catalog of in-memory tables plus the planner configuration.
///
/// Table names are case-insensitive. The engine is immutable while queries
/// run, so it can be shared across threads.
#[derive(Default)]
pub struct Engine {
    tables: HashMap<String, Arc<Dataset>>,
    optimizer: Optimizer,
}

impl Engine {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_optimizer(optimizer: Optimizer) -> Self {
        Self {
            tables: HashMap::new(),
            optimizer,
        }
    }

    pub fn register(&mut self, name: &str, data: Dataset) -> Result<()> {
        let valid = name
            .chars()
            .next()
            .is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
            && name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
        if !valid {
            return Err(Error::Analysis(format!(
                "'{name}' is not a valid table name"
            )));
        }
        self.tables
            .insert(name.to_ascii_lowercase(), Arc::new(data));
        Ok(())
    }

    pub fn register_csv(
        &mut self,
        name: &str,
        path: impl AsRef<Path>,
        schema: &SchemaSource,
    ) -> Result<()> {
        let data = ingest_csv(path, schema)?;
        self.register(name, data)
    }

    pub fn table_names(&self) -> Vec<&str> {
        let mut names: Vec<&str> = self.tables.keys().map(String::as_str).collect();
        names.sort_unstable();
        names
    }

    /// Parsed, analyzed and optimized plan for `sql`.
    pub fn logical_plan(&self, sql: &str) -> Result<LogicalPlan> {
        let ast = parse_query(sql)?;
        let plan = analyze(&ast, self)?;
        Ok(self.optimizer.optimize(plan))
    }

    pub fn plan(&self, sql: &str, choice: AlgorithmChoice) -> Result<PhysicalPlan> {
        select_algorithm(self.logical_plan(sql)?, choice)
    }

    pub fn execute(&self, plan: &PhysicalPlan, config: &ExecConfig) -> Result<QueryResult> {
        exec::execute(plan, self, config)
    }

    pub fn query(
        &self,
        sql: &str,
        choice: AlgorithmChoice,
        config: &ExecConfig,
    ) -> Result<QueryResult> {
        let plan = self.plan(sql, choice)?;
        self.execute(&plan, config)
    }
}

impl TableSource for Engine {
    fn table(&self, name: &str) -> Option<Arc<Dataset>> {
        self.tables.get(&name.to_ascii_lowercase()).cloned()
    }
}

impl SchemaProvider for Engine {
    fn table_schema(&self, name: &str) -> Option<Schema> {
        self.table(name).map(|d| d.schema.clone())
    }
}
