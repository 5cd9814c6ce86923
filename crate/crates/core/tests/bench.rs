// Copyright 2026 The Skyline Authors. Licensed under Apache-2.0.

use std::time::Duration;

use skyline_core::bench::{generate, run_matrix, write_records, BenchData, BenchMatrix, GenSpec};
use skyline_core::exec::Dataset;
use skyline_core::model::{ColumnKind, ColumnType, Schema, Value};
use skyline_core::planner::AlgorithmChoice;

fn matrix(n: usize, d: Vec<usize>, algorithms: Vec<AlgorithmChoice>) -> BenchMatrix {
    BenchMatrix {
        n_list: vec![n],
        d_list: d,
        workers_list: vec![2],
        algorithms,
        repeats: 2,
        timeout: Duration::from_secs(60),
        partitions: None,
    }
}

#[test]
fn skyline_size_is_deterministic_across_algorithms() {
    let m = matrix(
        800,
        vec![1, 2, 3, 4, 5, 6],
        AlgorithmChoice::FORCED.to_vec(),
    );
    let data = BenchData::Generated(GenSpec::new(1, 1, 42));
    let a = run_matrix(&m, &data, |_| {}).unwrap();
    let b = run_matrix(&m, &data, |_| {}).unwrap();
    assert_eq!(a.len(), 24);
    for (x, y) in a.iter().zip(&b) {
        assert_eq!(
            (x.algorithm, x.d, x.skyline_size, x.dominance_tests),
            (y.algorithm, y.d, y.skyline_size, y.dominance_tests)
        );
    }
    for cell in a.chunks(4) {
        assert!(cell.iter().all(|r| r.error.is_none() && !r.timed_out));
        assert!(cell
            .iter()
            .all(|r| r.skyline_size == cell[0].skyline_size && r.skyline_size <= r.n));
    }
    // The scalar scan replaces pairwise tests only in automatic mode, so the
    // forced variants all perform some on d = 1.
    assert!(a[..4].iter().all(|r| r.dominance_tests > 0));
}

#[test]
fn incomplete_data_records_planning_errors() {
    let m = matrix(500, vec![3], AlgorithmChoice::FORCED.to_vec());
    let spec = GenSpec {
        null_rate: 0.2,
        ..GenSpec::new(1, 1, 9)
    };
    let records = run_matrix(&m, &BenchData::Generated(spec), |_| {}).unwrap();
    let errors: Vec<_> = records.iter().map(|r| r.error.is_some()).collect();
    assert_eq!(errors, [true, true, false, false]);
    assert!(records[0]
        .error
        .as_ref()
        .unwrap()
        .contains("planning error"));
    assert_eq!(records[2].skyline_size, records[3].skyline_size);
}

#[test]
fn reference_times_out_on_adversarial_input() {
    // Anti-correlated points: every row is in the skyline, so the nested
    // scan never exits early.
    let n = 3000;
    let schema = Schema::new(vec![
        ColumnType::new("d1", ColumnKind::Int, false),
        ColumnType::new("d2", ColumnKind::Int, false),
    ])
    .unwrap();
    let rows = (0..n)
        .map(|i| vec![Value::Int(i), Value::Int(n - i)])
        .collect();
    let data = BenchData::Supplied(Dataset::new(schema, rows).unwrap());
    let mut m = matrix(0, vec![2], vec![AlgorithmChoice::Reference]);
    m.timeout = Duration::from_millis(1);
    m.repeats = 3;
    let records = run_matrix(&m, &data, |_| {}).unwrap();
    assert_eq!(records.len(), 1);
    assert!(records[0].timed_out);
    assert!(records[0].wall_ms >= 1.0);
    assert!(records[0].error.is_none());
}

#[test]
fn declared_nullable_complete_data_has_one_signature_partition() {
    let spec = GenSpec {
        declare_nullable: true,
        ..GenSpec::new(2000, 4, 5)
    };
    let data = generate(&spec).unwrap();
    assert!(data.schema.columns()[1].nullable);
    let mut engine = skyline_core::Engine::new();
    engine.register("g", data).unwrap();
    let sql = "SELECT * FROM g SKYLINE OF d1 MIN, d2 MIN, d3 MIN, d4 MIN";
    let r = engine
        .query(
            sql,
            AlgorithmChoice::Auto,
            &skyline_core::exec::ExecConfig::with_workers(4),
        )
        .unwrap();
    assert_eq!(r.stats.local_partitions, 1);
}

#[test]
fn csv_output() {
    let m = matrix(50, vec![2], vec![AlgorithmChoice::DistributedComplete]);
    let records = run_matrix(&m, &BenchData::Generated(GenSpec::new(1, 1, 1)), |_| {}).unwrap();
    let mut out = Vec::new();
    write_records(&records, &mut out).unwrap();
    let text = String::from_utf8(out).unwrap();
    let line = text.lines().nth(1).unwrap();
    assert!(line.starts_with("distributed-complete,50,2,2,"), "{line}");
    assert!(line.ends_with(",false,"), "{line}");
}
