// Copyright 2026 The Skyline Authors. Licensed under Apache-2.0.

//! Synthetic data generation and the benchmark matrix.

use std::io::Write;
use std::time::{Duration, Instant};

use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::engine::Engine;
use crate::error::{Error, Result};
use crate::exec::{Dataset, ExecConfig};
use crate::model::{ColumnKind, ColumnType, Schema, Value};
use crate::planner::AlgorithmChoice;

/// Upper bound (exclusive) of generated integer values.
pub const INT_RANGE: i64 = 1_000_000;

/// Default per-run timeout of the benchmark harness.
pub const DEFAULT_TIMEOUT: Duration = Duration::from_secs(300);

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValueKind {
    Int,
    Float,
}

impl std::str::FromStr for ValueKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s.to_ascii_lowercase().as_str() {
            "int" => Ok(Self::Int),
            "float" => Ok(Self::Float),
            _ => Err(format!("value kind must be int or float, got '{s}'")),
        }
    }
}

/// Parameters of a uniform-independent synthetic table with columns
/// `id, d1..dd`.
#[derive(Debug, Clone, PartialEq)]
pub struct GenSpec {
    pub n: usize,
    pub d: usize,
    pub value_kind: ValueKind,
    /// Probability that any single skyline value is NULL, in `[0, 1)`.
    pub null_rate: f64,
    pub seed: u64,
    /// Mark the value columns nullable even when `null_rate` is 0.
    pub declare_nullable: bool,
}

impl GenSpec {
    pub fn new(n: usize, d: usize, seed: u64) -> Self {
        Self {
            n,
            d,
            value_kind: ValueKind::Int,
            null_rate: 0.0,
            seed,
            declare_nullable: false,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 || self.d == 0 {
            return Err(Error::Analysis("n and d must both be at least 1".into()));
        }
        if !(0.0..1.0).contains(&self.null_rate) {
            return Err(Error::Analysis(format!(
                "null rate {} is outside [0, 1)",
                self.null_rate
            )));
        }
        Ok(())
    }

    pub fn schema(&self) -> Schema {
        let kind = match self.value_kind {
            ValueKind::Int => ColumnKind::Int,
            ValueKind::Float => ColumnKind::Float,
        };
        let nullable = self.declare_nullable || self.null_rate > 0.0;
        let mut cols = vec![ColumnType::new("id", ColumnKind::Int, false)];
        cols.extend((1..=self.d).map(|i| ColumnType::new(format!("d{i}"), kind, nullable)));
        Schema::new(cols).expect("generated column names are distinct")
    }
}

pub fn generate(spec: &GenSpec) -> Result<Dataset> {
    spec.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut rows = Vec::with_capacity(spec.n);
    for id in 0..spec.n {
        let mut values = Vec::with_capacity(spec.d + 1);
        values.push(Value::Int(id as i64));
        for _ in 0..spec.d {
            let null = spec.null_rate > 0.0 && rng.random_bool(spec.null_rate);
            let v = match spec.value_kind {
                ValueKind::Int => Value::Int(rng.random_range(0..INT_RANGE)),
                ValueKind::Float => Value::Float(rng.random_range(0.0..1.0)),
            };
            values.push(if null { Value::Null } else { v });
        }
        rows.push(values);
    }
    Dataset::new(spec.schema(), rows)
}

/// `SELECT * FROM table SKYLINE OF c1 MIN, ..., cd MIN`.
pub fn skyline_query(table: &str, columns: &[&str]) -> String {
    let dims: Vec<String> = columns.iter().map(|c| format!("{c} MIN")).collect();
    format!("SELECT * FROM {table} SKYLINE OF {}", dims.join(", "))
}

#[derive(Debug, Clone, PartialEq)]
pub struct BenchRecord {
    pub algorithm: AlgorithmChoice,
    pub n: usize,
    pub d: usize,
    pub workers: usize,
    pub wall_ms: f64,
    pub dominance_tests: u64,
    pub skyline_size: usize,
    pub timed_out: bool,
    /// Set when the cell could not run, e.g. a planning error.
    pub error: Option<String>,
}

pub const BENCH_HEADER: [&str; 9] = [
    "algorithm",
    "n",
    "d",
    "workers",
    "wall_ms",
    "dominance_tests",
    "skyline_size",
    "timed_out",
    "error",
];

pub fn write_records(records: &[BenchRecord], writer: impl Write) -> Result<()> {
    let mut w = csv::Writer::from_writer(writer);
    let fail = |e: csv::Error| Error::Execution(format!("cannot write benchmark csv: {e}"));
    w.write_record(BENCH_HEADER).map_err(fail)?;
    for r in records {
        w.write_record([
            r.algorithm.name().to_string(),
            r.n.to_string(),
            r.d.to_string(),
            r.workers.to_string(),
            format!("{:.3}", r.wall_ms),
            r.dominance_tests.to_string(),
            r.skyline_size.to_string(),
            r.timed_out.to_string(),
            r.error.clone().unwrap_or_default(),
        ])
        .map_err(fail)?;
    }
    w.flush()?;
    Ok(())
}

/// Where the benchmark data comes from.
#[derive(Debug, Clone)]
pub enum BenchData {
    /// Generate one table per `(n, d)` cell from this template; its `n` and
    /// `d` are overwritten by the matrix.
    Generated(GenSpec),
    /// Run every cell on this table; `d` picks the first `d` orderable
    /// columns other than `id`, and `n` is the table size.
    Supplied(Dataset),
}

#[derive(Debug, Clone)]
pub struct BenchMatrix {
    pub n_list: Vec<usize>,
    pub d_list: Vec<usize>,
    pub workers_list: Vec<usize>,
    pub algorithms: Vec<AlgorithmChoice>,
    pub repeats: usize,
    pub timeout: Duration,
    pub partitions: Option<usize>,
}

impl Default for BenchMatrix {
    fn default() -> Self {
        Self {
            n_list: vec![10_000],
            d_list: (1..=6).collect(),
            workers_list: vec![4],
            algorithms: AlgorithmChoice::FORCED.to_vec(),
            repeats: 3,
            timeout: DEFAULT_TIMEOUT,
            partitions: None,
        }
    }
}

const TABLE: &str = "bench";

/// Runs every cell of the matrix, one at a time, calling `progress` after
/// each. Errors inside a cell are recorded in the cell, not returned.
pub fn run_matrix(
    matrix: &BenchMatrix,
    data: &BenchData,
    mut progress: impl FnMut(&BenchRecord),
) -> Result<Vec<BenchRecord>> {
    if matrix.repeats == 0 {
        return Err(Error::Analysis("repeats must be at least 1".into()));
    }
    let n_list = match data {
        BenchData::Generated(_) => matrix.n_list.clone(),
        BenchData::Supplied(ds) => vec![ds.len()],
    };
    let mut out = Vec::new();
    for &n in &n_list {
        for &d in &matrix.d_list {
            let (engine, columns) = match cell_table(data, n, d) {
                Ok(t) => t,
                Err(e) => {
                    for &workers in &matrix.workers_list {
                        for &algorithm in &matrix.algorithms {
                            let r = failed(algorithm, n, d, workers, &e);
                            progress(&r);
                            out.push(r);
                        }
                    }
                    continue;
                }
            };
            let cols: Vec<&str> = columns.iter().map(String::as_str).collect();
            let sql = skyline_query(TABLE, &cols);
            for &workers in &matrix.workers_list {
                for &algorithm in &matrix.algorithms {
                    let r = run_cell(&engine, &sql, algorithm, n, d, workers, matrix);
                    progress(&r);
                    out.push(r);
                }
            }
        }
    }
    Ok(out)
}

fn cell_table(data: &BenchData, n: usize, d: usize) -> Result<(Engine, Vec<String>)> {
    let mut engine = Engine::new();
    let columns = match data {
        BenchData::Generated(template) => {
            let spec = GenSpec {
                n,
                d,
                ..template.clone()
            };
            engine.register(TABLE, generate(&spec)?)?;
            (1..=d).map(|i| format!("d{i}")).collect()
        }
        BenchData::Supplied(ds) => {
            let cols: Vec<String> = ds
                .schema
                .columns()
                .iter()
                .filter(|c| c.kind.is_ordered() && !c.name.eq_ignore_ascii_case("id"))
                .take(d)
                .map(|c| c.name.clone())
                .collect();
            if cols.len() < d {
                return Err(Error::Analysis(format!(
                    "supplied table has only {} usable skyline columns, {d} requested",
                    cols.len()
                )));
            }
            engine.register(TABLE, ds.clone())?;
            cols
        }
    };
    Ok((engine, columns))
}

fn failed(
    algorithm: AlgorithmChoice,
    n: usize,
    d: usize,
    workers: usize,
    e: &Error,
) -> BenchRecord {
    BenchRecord {
        algorithm,
        n,
        d,
        workers,
        wall_ms: 0.0,
        dominance_tests: 0,
        skyline_size: 0,
        timed_out: false,
        error: Some(e.to_string()),
    }
}

fn run_cell(
    engine: &Engine,
    sql: &str,
    algorithm: AlgorithmChoice,
    n: usize,
    d: usize,
    workers: usize,
    matrix: &BenchMatrix,
) -> BenchRecord {
    let plan = match engine.plan(sql, algorithm) {
        Ok(p) => p,
        Err(e) => return failed(algorithm, n, d, workers, &e),
    };
    let config = ExecConfig {
        workers,
        partitions: matrix.partitions,
        timeout: Some(matrix.timeout),
    };
    let budget_ms = matrix.timeout.as_secs_f64() * 1e3;
    let mut walls = Vec::with_capacity(matrix.repeats);
    let mut record = BenchRecord {
        algorithm,
        n,
        d,
        workers,
        wall_ms: 0.0,
        dominance_tests: 0,
        skyline_size: 0,
        timed_out: false,
        error: None,
    };
    for _ in 0..matrix.repeats {
        let start = Instant::now();
        let outcome = engine.execute(&plan, &config);
        let wall = start.elapsed().as_secs_f64() * 1e3;
        match outcome {
            Ok(r) => {
                record.dominance_tests = r.stats.dominance_tests;
                record.skyline_size = r.data.len();
                if wall >= budget_ms {
                    record.timed_out = true;
                    record.wall_ms = wall;
                    return record;
                }
                walls.push(wall);
            }
            Err(Error::Timeout(_)) => {
                record.timed_out = true;
                record.wall_ms = wall.max(budget_ms);
                return record;
            }
            Err(e) => return failed(algorithm, n, d, workers, &e),
        }
    }
    record.wall_ms = median(&mut walls);
    record
}

fn median(values: &mut [f64]) -> f64 {
    values.sort_by(f64::total_cmp);
    let m = values.len() / 2;
    if values.len() % 2 == 1 {
        values[m]
    } else {
        (values[m - 1] + values[m]) / 2.0
    }
}
