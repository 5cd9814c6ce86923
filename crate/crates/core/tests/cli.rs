// Copyright 2026 The Skyline Authors. Licensed under Apache-2.0.

use std::path::Path;
use std::process::{Command, Output};

const HOTEL_QUERY: &str =
    "SELECT price, user_rating FROM hotels SKYLINE OF price MIN, user_rating MAX";

fn skyline(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_skyline"))
        .args(args)
        .env_remove("SKYLINE_THREADS")
        .output()
        .unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn hotels(dir: &Path) -> String {
    let p = dir.join("hotels.csv");
    std::fs::write(&p, "price,user_rating\n50,7\n80,9\n60,9\n90,6\n").unwrap();
    p.to_str().unwrap().to_string()
}

#[test]
fn query_prints_csv_and_stats() {
    let dir = tempfile::tempdir().unwrap();
    let input = hotels(dir.path());
    let out = skyline(&[
        "query",
        "--input",
        &input,
        "--query",
        HOTEL_QUERY,
        "--workers",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert_eq!(stdout(&out), "price,user_rating\n50,7\n60,9\n");
    let err = stderr(&out);
    assert!(
        err.contains("dominance_tests:") && err.contains("rows: 2"),
        "{err}"
    );
}

#[test]
fn explicit_table_name_schema_and_output_file() {
    let dir = tempfile::tempdir().unwrap();
    let input = hotels(dir.path());
    let schema = dir.path().join("h.schema");
    std::fs::write(&schema, "price:float:false\nuser_rating:int:true\n").unwrap();
    let result = dir.path().join("out.csv");
    let out = skyline(&[
        "query",
        "--input",
        &format!("h={input}"),
        "--schema",
        schema.to_str().unwrap(),
        "--query",
        "SELECT * FROM h SKYLINE OF price MIN, user_rating MAX",
        "--algorithm",
        "distributed-incomplete",
        "--output",
        result.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    assert_eq!(
        std::fs::read_to_string(result).unwrap(),
        "price,user_rating\n50,7\n60,9\n"
    );
}

#[test]
fn explain_shows_two_phase_plan() {
    let dir = tempfile::tempdir().unwrap();
    let input = hotels(dir.path());
    let out = skyline(&[
        "query",
        "--input",
        &input,
        "--query",
        HOTEL_QUERY,
        "--explain",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let plan = stdout(&out);
    assert!(
        plan.contains("LocalSkylineExec") && plan.contains("GlobalSkylineExec(Complete)"),
        "{plan}"
    );
}

#[test]
fn error_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let input = hotels(dir.path());
    let run = |q: &str| skyline(&["query", "--input", &input, "--query", q]);

    let parse = run("SELECT price FROM hotels SKYLINE OF price");
    assert_eq!(parse.status.code(), Some(3));
    assert!(stderr(&parse).contains("offset 41"), "{}", stderr(&parse));

    assert_eq!(run("SELECT nope FROM hotels").status.code(), Some(4));

    let planning = skyline(&[
        "query",
        "--input",
        &input,
        "--query",
        HOTEL_QUERY,
        "--algorithm",
        "distributed-complete",
        "--schema",
        dir.path().join("nullable.schema").to_str().unwrap(),
    ]);
    assert_eq!(
        planning.status.code(),
        Some(6),
        "missing schema file is an ingest error"
    );
    std::fs::write(
        dir.path().join("nullable.schema"),
        "price:int:true\nuser_rating:int:false\n",
    )
    .unwrap();
    let planning = skyline(&[
        "query",
        "--input",
        &input,
        "--query",
        HOTEL_QUERY,
        "--algorithm",
        "distributed-complete",
        "--schema",
        dir.path().join("nullable.schema").to_str().unwrap(),
    ]);
    assert_eq!(planning.status.code(), Some(5), "{}", stderr(&planning));

    let bad = dir.path().join("bad.csv");
    std::fs::write(&bad, "a,b\n1,2\n3\n").unwrap();
    let ingest = skyline(&[
        "query",
        "--input",
        bad.to_str().unwrap(),
        "--query",
        "SELECT * FROM bad",
    ]);
    assert_eq!(ingest.status.code(), Some(6));
    assert!(stderr(&ingest).contains("line 3"), "{}", stderr(&ingest));

    let nulls = dir.path().join("n.csv");
    std::fs::write(&nulls, "a,b\n1,\n2,3\n").unwrap();
    let runtime = skyline(&[
        "query",
        "--input",
        nulls.to_str().unwrap(),
        "--query",
        "SELECT * FROM n SKYLINE OF COMPLETE a MIN, b MIN",
    ]);
    assert_eq!(runtime.status.code(), Some(7), "{}", stderr(&runtime));

    assert_eq!(
        skyline(&["query", "--query", "SELECT * FROM t"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(skyline(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn version_and_help() {
    let v = skyline(&["--version"]);
    assert_eq!(v.status.code(), Some(0));
    assert!(stdout(&v).contains(env!("CARGO_PKG_VERSION")));
    let h = skyline(&["--help"]);
    assert_eq!(h.status.code(), Some(0));
    for word in ["query", "generate", "bench", "SKYLINE_THREADS"] {
        assert!(stdout(&h).contains(word), "{word}");
    }
    for sub in ["query", "generate", "bench"] {
        assert_eq!(skyline(&[sub, "--help"]).status.code(), Some(0));
    }
}

#[test]
fn generate_is_reproducible() {
    let dir = tempfile::tempdir().unwrap();
    let a = dir.path().join("a.csv");
    let b = dir.path().join("b.csv");
    for p in [&a, &b] {
        let out = skyline(&[
            "generate",
            "--n",
            "100",
            "--d",
            "3",
            "--seed",
            "7",
            "--out",
            p.to_str().unwrap(),
        ]);
        assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    }
    let text = std::fs::read(&a).unwrap();
    assert_eq!(text, std::fs::read(&b).unwrap());
    assert_eq!(String::from_utf8(text).unwrap().lines().count(), 101);

    let one = dir.path().join("one.csv");
    let schema = dir.path().join("one.schema");
    let out = skyline(&[
        "generate",
        "--n",
        "1",
        "--d",
        "2",
        "--value-kind",
        "float",
        "--declare-nullable",
        "--out",
        one.to_str().unwrap(),
        "--schema-out",
        schema.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&one).unwrap().lines().count(), 2);
    assert_eq!(
        std::fs::read_to_string(&schema).unwrap(),
        "id:int:false\nd1:float:true\nd2:float:true\n"
    );

    let bad = skyline(&[
        "generate",
        "--n",
        "0",
        "--d",
        "2",
        "--out",
        one.to_str().unwrap(),
    ]);
    assert_eq!(bad.status.code(), Some(2));
    let unwritable = skyline(&[
        "generate",
        "--n",
        "3",
        "--d",
        "2",
        "--out",
        "/nonexistent/dir/x.csv",
    ]);
    assert_eq!(unwritable.status.code(), Some(8));
}

#[test]
fn bench_writes_one_record_per_cell() {
    let dir = tempfile::tempdir().unwrap();
    let out_path = dir.path().join("bench.csv");
    let out = skyline(&[
        "bench",
        "--n-list",
        "300",
        "--d-list",
        "1,2,3,4,5,6",
        "--workers-list",
        "4",
        "--repeats",
        "1",
        "--out",
        out_path.to_str().unwrap(),
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = std::fs::read_to_string(&out_path).unwrap();
    let mut lines = text.lines();
    assert_eq!(
        lines.next().unwrap(),
        "algorithm,n,d,workers,wall_ms,dominance_tests,skyline_size,timed_out,error"
    );
    assert_eq!(lines.count(), 24);
}

#[test]
fn bench_on_supplied_data() {
    let dir = tempfile::tempdir().unwrap();
    let input = hotels(dir.path());
    let out = skyline(&[
        "bench",
        "--input",
        &input,
        "--d-list",
        "2,3",
        "--algorithms",
        "reference,distributed-complete",
        "--workers-list",
        "1,2",
        "--repeats",
        "2",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let text = stdout(&out);
    let rows: Vec<&str> = text.lines().skip(1).collect();
    assert_eq!(rows.len(), 8);
    assert!(
        rows[0].starts_with("reference,4,2,1,") && rows[0].contains(",2,false,"),
        "{}",
        rows[0]
    );
    assert!(rows[4].contains("usable skyline columns"), "{}", rows[4]);
}
