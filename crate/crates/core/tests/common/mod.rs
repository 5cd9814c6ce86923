// Copyright 2026 The Skyline Authors. Licensed under Apache-2.0.

//! Random skyline workloads and a brute-force oracle written directly from
//! the dominance definition over raw integers.

#![allow(dead_code)]

pub mod corpus;

use rand::{Rng, RngExt};
use skyline_core::exec::{Dataset, ExecConfig};
use skyline_core::model::{ColumnKind, ColumnType, DimKind, Schema, Value};
use skyline_core::planner::AlgorithmChoice;
use skyline_core::Engine;

/// A random table `t(c1..cd)` plus a skyline query over all its columns.
#[derive(Debug, Clone)]
pub struct Case {
    pub values: Vec<Vec<Option<i64>>>,
    pub kinds: Vec<DimKind>,
    pub distinct: bool,
    pub nullable: bool,
}

impl Case {
    pub fn random(rng: &mut impl Rng, n: usize, d: usize, null_rate: f64) -> Self {
        // Small domains force ties and duplicates; large ones give small skylines.
        let domain = [3i64, 10, 100, 1_000_000][rng.random_range(0..4)];
        let mut kinds: Vec<DimKind> = (0..d)
            .map(|_| match rng.random_range(0..5) {
                0 | 1 => DimKind::Min,
                2 | 3 => DimKind::Max,
                _ => DimKind::Diff,
            })
            .collect();
        if kinds.iter().all(|k| *k == DimKind::Diff) {
            kinds[0] = DimKind::Min;
        }
        let values = (0..n)
            .map(|_| {
                (0..d)
                    .map(|_| {
                        let null = null_rate > 0.0 && rng.random_bool(null_rate);
                        let v = rng.random_range(0..domain);
                        (!null).then_some(v)
                    })
                    .collect()
            })
            .collect();
        Case {
            values,
            kinds,
            distinct: rng.random_bool(0.5),
            nullable: null_rate > 0.0,
        }
    }

    pub fn d(&self) -> usize {
        self.kinds.len()
    }

    pub fn dataset(&self) -> Dataset {
        let schema = Schema::new(
            (1..=self.d())
                .map(|i| ColumnType::new(format!("c{i}"), ColumnKind::Int, self.nullable))
                .collect(),
        )
        .unwrap();
        let rows = self
            .values
            .iter()
            .map(|r| {
                r.iter()
                    .map(|v| v.map_or(Value::Null, Value::Int))
                    .collect()
            })
            .collect();
        Dataset::new(schema, rows).unwrap()
    }

    pub fn engine(&self) -> Engine {
        let mut e = Engine::new();
        e.register("t", self.dataset()).unwrap();
        e
    }

    pub fn sql(&self) -> String {
        let items: Vec<String> = self
            .kinds
            .iter()
            .enumerate()
            .map(|(i, k)| format!("c{} {k}", i + 1))
            .collect();
        format!(
            "SELECT * FROM t SKYLINE OF {}{}",
            if self.distinct { "DISTINCT " } else { "" },
            items.join(", ")
        )
    }

    /// `s` dominates `r` on the dims where both are present.
    pub fn dominates(&self, s: usize, r: usize) -> bool {
        let (s, r) = (&self.values[s], &self.values[r]);
        let mut strict = false;
        let mut common = false;
        for (i, kind) in self.kinds.iter().enumerate() {
            let (Some(a), Some(b)) = (s[i], r[i]) else {
                continue;
            };
            common = true;
            match kind {
                DimKind::Min if a > b => return false,
                DimKind::Max if a < b => return false,
                DimKind::Diff if a != b => return false,
                _ => strict |= a != b,
            }
        }
        common && strict
    }

    /// Ordinals of the skyline: rows no other row dominates; with DISTINCT,
    /// the first row of each group of equal skyline values.
    pub fn oracle(&self) -> Vec<usize> {
        let n = self.values.len();
        let mut out: Vec<usize> = (0..n)
            .filter(|&r| !(0..n).any(|s| self.dominates(s, r)))
            .collect();
        if self.distinct {
            let mut seen: Vec<&Vec<Option<i64>>> = Vec::new();
            out.retain(|&o| {
                let v = &self.values[o];
                let dup = seen.contains(&v);
                if !dup {
                    seen.push(v);
                }
                !dup
            });
        }
        out
    }

    pub fn run(
        &self,
        engine: &Engine,
        algorithm: AlgorithmChoice,
        config: &ExecConfig,
    ) -> Vec<usize> {
        let r = engine
            .query(&self.sql(), algorithm, config)
            .unwrap_or_else(|e| panic!("{algorithm} failed on {}: {e}", self.sql()));
        r.data.rows.iter().map(|r| r.ordinal).collect()
    }
}

pub fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

pub fn config(workers: usize, partitions: Option<usize>) -> ExecConfig {
    ExecConfig {
        workers,
        partitions,
        timeout: None,
    }
}
