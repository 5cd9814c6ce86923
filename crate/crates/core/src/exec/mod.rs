// Copyright 2026 The Skyline Authors. Licensed under Apache-2.0.

//! Partition-parallel execution of physical plans.
//!
//! The local skyline phase runs one task per partition on a worker pool of
//! `ExecConfig::workers` threads; everything else, including the global
//! skyline phase, runs on the calling thread. Output is independent of the
//! number of workers and partitions.

pub mod csv;

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;
use std::time::{Duration, Instant};

use crate::dominance::CheckCounter;
use crate::error::{Error, Result};
use crate::model::{Row, Schema, SkylineSpec};
use crate::planner::{Distribution, GlobalVariant, PhysicalPlan};
use crate::skyline;

/// Environment variable capping the number of worker threads.
pub const THREADS_ENV: &str = "SKYLINE_THREADS";

#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    pub schema: Schema,
    pub rows: Vec<Row>,
}

impl Dataset {
    /// Builds a dataset, checking every row against the schema and numbering
    /// rows `0..n` in order.
    pub fn new(schema: Schema, rows: Vec<Vec<crate::model::Value>>) -> Result<Self> {
        let mut out = Vec::with_capacity(rows.len());
        for (i, values) in rows.into_iter().enumerate() {
            if values.len() != schema.len() {
                return Err(Error::ingest(
                    None,
                    format!(
                        "row {i} has {} values, schema has {}",
                        values.len(),
                        schema.len()
                    ),
                ));
            }
            for (v, col) in values.iter().zip(schema.columns()) {
                if !col.accepts(v) {
                    return Err(Error::ingest(
                        None,
                        format!(
                            "row {i}: {v:?} does not fit column '{}' ({})",
                            col.name, col.kind
                        ),
                    ));
                }
                if matches!(v, crate::model::Value::Float(f) if f.is_nan()) {
                    return Err(Error::ingest(
                        None,
                        format!("row {i}: NaN in column '{}'", col.name),
                    ));
                }
            }
            out.push(Row::new(values, i));
        }
        Ok(Self { schema, rows: out })
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }
}

/// Looks up registered tables by name.
pub trait TableSource {
    fn table(&self, name: &str) -> Option<Arc<Dataset>>;
}

#[derive(Debug, Clone)]
pub struct ExecConfig {
    /// Number of concurrent workers for the local phase (at least 1).
    pub workers: usize,
    /// Number of partitions for the complete pipeline; defaults to `workers`.
    pub partitions: Option<usize>,
    /// Abort with [`Error::Timeout`] once this much time has passed.
    pub timeout: Option<Duration>,
}

impl Default for ExecConfig {
    fn default() -> Self {
        Self {
            workers: 1,
            partitions: None,
            timeout: None,
        }
    }
}

impl ExecConfig {
    pub fn with_workers(workers: usize) -> Self {
        Self {
            workers,
            ..Self::default()
        }
    }

    pub fn partition_count(&self) -> usize {
        self.partitions.unwrap_or(self.workers).max(1)
    }

    /// Worker threads to spawn: `workers`, capped by `SKYLINE_THREADS`.
    pub fn thread_count(&self) -> usize {
        let cap = std::env::var(THREADS_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .filter(|&n| n >= 1);
        let w = self.workers.max(1);
        cap.map_or(w, |c| w.min(c))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StageTiming {
    pub stage: &'static str,
    pub elapsed: Duration,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ExecStats {
    pub stages: Vec<StageTiming>,
    pub dominance_tests: u64,
    /// Partitions in the local skyline phase (signature partitions on the
    /// incomplete path); 0 when the plan has no local phase.
    pub local_partitions: usize,
    pub local_input_rows: usize,
    pub global_input_rows: usize,
    pub output_rows: usize,
    pub total: Duration,
}

impl ExecStats {
    pub fn stage(&self, name: &str) -> Option<Duration> {
        self.stages
            .iter()
            .find(|s| s.stage == name)
            .map(|s| s.elapsed)
    }
}

impl fmt::Display for ExecStats {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "rows: {}", self.output_rows)?;
        writeln!(f, "dominance_tests: {}", self.dominance_tests)?;
        writeln!(f, "local_partitions: {}", self.local_partitions)?;
        writeln!(f, "local_input_rows: {}", self.local_input_rows)?;
        writeln!(f, "global_input_rows: {}", self.global_input_rows)?;
        for s in &self.stages {
            writeln!(
                f,
                "stage {}: {:.3} ms",
                s.stage,
                s.elapsed.as_secs_f64() * 1e3
            )?;
        }
        write!(f, "total: {:.3} ms", self.total.as_secs_f64() * 1e3)
    }
}

#[derive(Debug, Clone)]
pub struct QueryResult {
    pub data: Dataset,
    pub stats: ExecStats,
}

/// Splits `rows` into `k` contiguous chunks whose sizes differ by at most one,
/// larger chunks first. Chunks may be empty when `k > rows.len()`.
pub fn split_unspecified(rows: Vec<Row>, k: usize) -> Vec<Vec<Row>> {
    let k = k.max(1);
    let n = rows.len();
    let (base, extra) = (n / k, n % k);
    let mut out = Vec::with_capacity(k);
    let mut it = rows.into_iter();
    for i in 0..k {
        let size = base + usize::from(i < extra);
        out.push(it.by_ref().take(size).collect());
    }
    out
}

/// Executes `plan` against `tables`.
pub fn execute(
    plan: &PhysicalPlan,
    tables: &impl TableSource,
    config: &ExecConfig,
) -> Result<QueryResult> {
    if config.workers == 0 {
        return Err(Error::Execution("workers must be at least 1".into()));
    }
    let start = Instant::now();
    let mut ctx = Context {
        tables,
        config,
        stats: ExecStats::default(),
        counter: CheckCounter::with_deadline(config.timeout.map(|t| (start + t, t))),
        pool: None,
    };
    let rows = ctx.run(plan)?;
    let mut stats = ctx.stats;
    stats.dominance_tests = ctx.counter.dominance_tests;
    stats.output_rows = rows.len();
    stats.total = start.elapsed();
    Ok(QueryResult {
        data: Dataset {
            schema: plan.schema(),
            rows,
        },
        stats,
    })
}

struct Context<'a, T> {
    tables: &'a T,
    config: &'a ExecConfig,
    stats: ExecStats,
    counter: CheckCounter,
    pool: Option<rayon::ThreadPool>,
}

impl<T: TableSource> Context<'_, T> {
    fn timed<R>(
        &mut self,
        stage: &'static str,
        f: impl FnOnce(&mut Self) -> Result<R>,
    ) -> Result<R> {
        let t = Instant::now();
        let out = f(self)?;
        self.stats.stages.push(StageTiming {
            stage,
            elapsed: t.elapsed(),
        });
        Ok(out)
    }

    fn pool(&mut self) -> Result<&rayon::ThreadPool> {
        if self.pool.is_none() {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(self.config.thread_count())
                .thread_name(|i| format!("skyline-worker-{i}"))
                .build()
                .map_err(|e| Error::Execution(format!("cannot start worker pool: {e}")))?;
            self.pool = Some(pool);
        }
        Ok(self.pool.as_ref().expect("pool initialised above"))
    }

    fn run(&mut self, plan: &PhysicalPlan) -> Result<Vec<Row>> {
        match plan {
            PhysicalPlan::Scan { table, schema } => {
                let data = self.tables.table(table).ok_or_else(|| {
                    Error::Execution(format!("table '{table}' is not registered"))
                })?;
                if &data.schema != schema {
                    return Err(Error::Execution(format!(
                        "table '{table}' changed schema after planning"
                    )));
                }
                self.timed("scan", |_| Ok(data.rows.clone()))
            }
            PhysicalPlan::Filter { predicate, input } => {
                let rows = self.run(input)?;
                self.timed("filter", |_| {
                    Ok(rows
                        .into_iter()
                        .filter(|r| predicate.eval(r) == Some(true))
                        .collect())
                })
            }
            PhysicalPlan::Project { columns, input } => {
                let rows = self.run(input)?;
                self.timed("project", |_| {
                    Ok(rows
                        .into_iter()
                        .map(|r| {
                            let values = columns.iter().map(|&c| r.values[c].clone()).collect();
                            Row::new(values, r.ordinal)
                        })
                        .collect())
                })
            }
            PhysicalPlan::Sort {
                column,
                descending,
                input,
            } => {
                let mut rows = self.run(input)?;
                self.timed("sort", |_| {
                    rows.sort_by(|a, b| {
                        let ord = sort_cmp(&a.values[*column], &b.values[*column]);
                        if *descending {
                            ord.reverse()
                        } else {
                            ord
                        }
                    });
                    Ok(rows)
                })
            }
            PhysicalPlan::LocalSkyline {
                spec,
                distribution,
                input,
            } => {
                let rows = self.run(input)?;
                let schema = input.schema();
                self.stats.local_input_rows = rows.len();
                self.timed("local_skyline", |ctx| {
                    let mut counter = ctx.counter.shard();
                    let local = match distribution {
                        Distribution::Unspecified => {
                            ensure_complete(&rows, spec, &schema)?;
                            let parts = split_unspecified(rows, ctx.config.partition_count());
                            ctx.stats.local_partitions = parts.len();
                            let pool = ctx.pool()?;
                            pool.install(|| {
                                skyline::local_skylines_complete(parts, spec, &mut counter)
                            })?
                        }
                        Distribution::BySignature => {
                            let parts = skyline::partition_by_null_signature(rows, spec);
                            ctx.stats.local_partitions = parts.len();
                            let pool = ctx.pool()?;
                            pool.install(|| {
                                skyline::local_skylines_incomplete(parts, spec, &mut counter)
                            })?
                        }
                    };
                    ctx.counter.merge(&counter);
                    Ok(local.into_iter().flatten().collect())
                })
            }
            PhysicalPlan::GlobalSkyline {
                spec,
                variant,
                input,
            } => {
                let rows = self.run(input)?;
                let schema = input.schema();
                self.stats.global_input_rows = rows.len();
                self.timed("global_skyline", |ctx| match variant {
                    GlobalVariant::Complete => {
                        ensure_complete(&rows, spec, &schema)?;
                        skyline::global_skyline_complete(rows, spec, &mut ctx.counter)
                    }
                    GlobalVariant::Incomplete => {
                        skyline::global_skyline_incomplete(rows, spec, &mut ctx.counter)
                    }
                })
            }
            PhysicalPlan::SingleDimScan { spec, input } => {
                let rows = self.run(input)?;
                let schema = input.schema();
                self.timed("single_dim_scan", |_| {
                    ensure_complete(&rows, spec, &schema)?;
                    skyline::single_dim_skyline(rows, spec)
                })
            }
            PhysicalPlan::ReferenceSkyline { spec, mode, input } => {
                let rows = self.run(input)?;
                let schema = input.schema();
                self.timed("reference_skyline", |ctx| {
                    if *mode == crate::dominance::DominanceMode::Complete {
                        ensure_complete(&rows, spec, &schema)?;
                    }
                    skyline::reference_skyline(rows, spec, *mode, &mut ctx.counter)
                })
            }
        }
    }
}

/// Rejects NULLs on the complete path. Planning only routes nullable columns
/// here when the query said `COMPLETE`, so this is a user error.
fn ensure_complete(rows: &[Row], spec: &SkylineSpec, schema: &Schema) -> Result<()> {
    for d in spec.dims() {
        if !schema.column(d.column).nullable {
            continue;
        }
        if let Some(r) = rows.iter().find(|r| r.values[d.column].is_null()) {
            return Err(Error::Execution(format!(
                "skyline declared COMPLETE but column '{}' is NULL in input row {}",
                schema.column(d.column).name,
                r.ordinal
            )));
        }
    }
    Ok(())
}

/// NULLs sort after every value.
fn sort_cmp(a: &crate::model::Value, b: &crate::model::Value) -> Ordering {
    match (a.is_null(), b.is_null()) {
        (true, true) => Ordering::Equal,
        (true, false) => Ordering::Greater,
        (false, true) => Ordering::Less,
        (false, false) => a.partial_cmp_same_kind(b).unwrap_or(Ordering::Equal),
    }
}
