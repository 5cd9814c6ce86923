// Copyright 2026 The Skyline Authors. Licensed under Apache-2.0.

//! `skyline` command-line tool: run queries, generate data, benchmark.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use skyline_core::bench::{self, BenchData, BenchMatrix, GenSpec, ValueKind};
use skyline_core::exec::csv::{ingest_csv, render_schema_file, write_csv, SchemaSource};
use skyline_core::exec::{ExecConfig, THREADS_ENV};
use skyline_core::planner::AlgorithmChoice;
use skyline_core::{Engine, Error, ErrorKind};

const EXIT_USAGE: u8 = 2;

fn exit_code(kind: ErrorKind) -> u8 {
    match kind {
        ErrorKind::Parse => 3,
        ErrorKind::Analysis => 4,
        ErrorKind::Planning => 5,
        ErrorKind::Ingest => 6,
        ErrorKind::Runtime => 7,
        ErrorKind::Io => 8,
        ErrorKind::Defect => 70,
    }
}

#[derive(Parser)]
#[command(name = "skyline", version, about = "Skyline query engine", after_help = after_help())]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

fn after_help() -> String {
    format!(
        "Exit codes: 0 ok, 2 usage, 3 parse, 4 analysis, 5 planning, 6 ingest, 7 runtime, 8 io, 70 internal defect.\n\
         Environment: {THREADS_ENV} caps the number of worker threads."
    )
}

#[derive(Subcommand)]
enum Command {
    /// Run a query over CSV tables, or print its physical plan.
    Query(QueryArgs),
    /// Write a synthetic table with columns id, d1..dN.
    Generate(GenerateArgs),
    /// Run the benchmark matrix and write one CSV record per cell.
    Bench(BenchArgs),
}

#[derive(Args)]
struct QueryArgs {
    /// Table to load, as `name=path` or `path` (name = file stem). Repeatable.
    #[arg(long, required = true, value_name = "[NAME=]PATH")]
    input: Vec<String>,
    /// Schema file (`name:type:nullable` lines), as `name=path` or `path`
    /// when there is a single input. Types are inferred otherwise.
    #[arg(long, value_name = "[NAME=]PATH")]
    schema: Vec<String>,
    /// Query text.
    #[arg(long, short)]
    query: String,
    /// auto, distributed-complete, nondistributed-complete,
    /// distributed-incomplete or reference.
    #[arg(long, default_value = "auto")]
    algorithm: AlgorithmChoice,
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    workers: u32,
    /// Partitions for the complete pipeline (defaults to --workers).
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    partitions: Option<u32>,
    /// Print the physical plan instead of executing.
    #[arg(long)]
    explain: bool,
    /// Write the result here instead of stdout.
    #[arg(long, short)]
    output: Option<PathBuf>,
    /// Abort after this many seconds.
    #[arg(long)]
    timeout: Option<f64>,
}

#[derive(Args)]
struct GenSpecArgs {
    #[arg(long, default_value = "int")]
    value_kind: ValueKind,
    /// Probability of NULL per skyline value, in [0, 1).
    #[arg(long, default_value_t = 0.0)]
    null_rate: f64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Mark value columns nullable even when --null-rate is 0.
    #[arg(long)]
    declare_nullable: bool,
}

#[derive(Args)]
struct GenerateArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    d: usize,
    #[command(flatten)]
    spec: GenSpecArgs,
    /// Output CSV path.
    #[arg(long)]
    out: PathBuf,
    /// Also write the schema file here.
    #[arg(long)]
    schema_out: Option<PathBuf>,
}

#[derive(Args)]
struct BenchArgs {
    #[arg(long, value_delimiter = ',', default_value = "10000")]
    n_list: Vec<usize>,
    #[arg(long, value_delimiter = ',', default_value = "1,2,3,4,5,6")]
    d_list: Vec<usize>,
    #[arg(long, value_delimiter = ',', default_value = "4")]
    workers_list: Vec<usize>,
    /// Comma-separated forced algorithms, or `all`.
    #[arg(long, value_delimiter = ',', default_value = "all")]
    algorithms: Vec<String>,
    /// Per-run timeout in seconds.
    #[arg(long, default_value_t = bench::DEFAULT_TIMEOUT.as_secs_f64())]
    timeout: f64,
    #[arg(long, default_value_t = 3, value_parser = clap::value_parser!(u32).range(1..))]
    repeats: u32,
    #[arg(long, value_parser = clap::value_parser!(u32).range(1..))]
    partitions: Option<u32>,
    #[command(flatten)]
    spec: GenSpecArgs,
    /// Benchmark this CSV instead of generated data.
    #[arg(long)]
    input: Option<PathBuf>,
    /// Schema file for --input.
    #[arg(long, requires = "input")]
    schema: Option<PathBuf>,
    /// Output CSV path (stdout if absent).
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(EXIT_USAGE)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let outcome = match cli.command {
        Command::Query(args) => cmd_query(args),
        Command::Generate(args) => cmd_generate(args),
        Command::Bench(args) => cmd_bench(args),
    };
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(CliError::Engine { error, query }) => {
            eprintln!("error: {error}");
            if let (Some(q), Error::Parse { offset, .. } | Error::Lex { offset, .. }) =
                (&query, &error)
            {
                eprintln!("  {q}");
                let col = q[..(*offset).min(q.len())].chars().count();
                eprintln!("  {}^", " ".repeat(col));
            }
            ExitCode::from(exit_code(error.kind()))
        }
    }
}

enum CliError {
    Usage(String),
    Engine { error: Error, query: Option<String> },
}

impl From<Error> for CliError {
    fn from(error: Error) -> Self {
        CliError::Engine { error, query: None }
    }
}

impl From<io::Error> for CliError {
    fn from(e: io::Error) -> Self {
        Error::Io(e).into()
    }
}

fn split_named(arg: &str) -> (Option<&str>, &str) {
    match arg.split_once('=') {
        Some((name, path)) if !name.is_empty() && !name.contains(['/', '\\']) => (Some(name), path),
        _ => (None, arg),
    }
}

fn table_name(arg: &str) -> Result<(String, PathBuf), CliError> {
    let (name, path) = split_named(arg);
    let path = PathBuf::from(path);
    let name = match name {
        Some(n) => n.to_string(),
        None => path
            .file_stem()
            .and_then(|s| s.to_str())
            .map(str::to_string)
            .ok_or_else(|| CliError::Usage(format!("cannot derive a table name from '{arg}'")))?,
    };
    Ok((name, path))
}

fn cmd_query(args: QueryArgs) -> Result<(), CliError> {
    let inputs = args
        .input
        .iter()
        .map(|a| table_name(a))
        .collect::<Result<Vec<_>, _>>()?;
    let mut schemas: Vec<(Option<String>, PathBuf)> = Vec::new();
    for s in &args.schema {
        let (name, path) = split_named(s);
        if name.is_none() && inputs.len() != 1 {
            return Err(CliError::Usage(
                "with several inputs, --schema must be given as name=path".into(),
            ));
        }
        schemas.push((name.map(str::to_string), PathBuf::from(path)));
    }
    for (name, _) in &schemas {
        if let Some(n) = name {
            if !inputs.iter().any(|(t, _)| t.eq_ignore_ascii_case(n)) {
                return Err(CliError::Usage(format!(
                    "--schema names unknown input '{n}'"
                )));
            }
        }
    }

    let mut engine = Engine::new();
    for (name, path) in &inputs {
        let schema = schemas
            .iter()
            .find(|(n, _)| n.as_deref().is_none_or(|n| n.eq_ignore_ascii_case(name)))
            .map_or(SchemaSource::Infer, |(_, p)| SchemaSource::File(p.clone()));
        engine.register_csv(name, path, &schema)?;
    }

    let with_query = |error: Error| CliError::Engine {
        error,
        query: Some(args.query.clone()),
    };
    let plan = engine
        .plan(&args.query, args.algorithm)
        .map_err(with_query)?;
    if args.explain {
        return write_output(args.output.as_deref(), |w| Ok(write!(w, "{plan}")?));
    }
    let config = ExecConfig {
        workers: args.workers as usize,
        partitions: args.partitions.map(|p| p as usize),
        timeout: args.timeout.map(timeout_from_secs).transpose()?,
    };
    let result = engine.execute(&plan, &config)?;
    write_output(args.output.as_deref(), |w| write_csv(&result.data, w))?;
    eprintln!("algorithm: {}", args.algorithm);
    eprintln!("workers: {}", config.workers);
    eprintln!("{}", result.stats);
    Ok(())
}

fn timeout_from_secs(secs: f64) -> Result<Duration, CliError> {
    Duration::try_from_secs_f64(secs)
        .ok()
        .filter(|d| !d.is_zero())
        .ok_or_else(|| CliError::Usage(format!("invalid timeout {secs}")))
}

fn write_output(
    path: Option<&Path>,
    f: impl FnOnce(&mut dyn Write) -> skyline_core::Result<()>,
) -> Result<(), CliError> {
    match path {
        Some(p) => {
            let mut w = BufWriter::new(File::create(p)?);
            f(&mut w)?;
            w.flush()?;
        }
        None => {
            let stdout = io::stdout();
            let mut w = BufWriter::new(stdout.lock());
            f(&mut w)?;
            w.flush()?;
        }
    }
    Ok(())
}

fn gen_spec(n: usize, d: usize, args: &GenSpecArgs) -> GenSpec {
    GenSpec {
        n,
        d,
        value_kind: args.value_kind,
        null_rate: args.null_rate,
        seed: args.seed,
        declare_nullable: args.declare_nullable,
    }
}

fn cmd_generate(args: GenerateArgs) -> Result<(), CliError> {
    let spec = gen_spec(args.n, args.d, &args.spec);
    spec.validate()
        .map_err(|e| CliError::Usage(e.to_string()))?;
    let data = bench::generate(&spec)?;
    write_output(Some(&args.out), |w| write_csv(&data, w))?;
    if let Some(p) = &args.schema_out {
        std::fs::write(p, render_schema_file(&data.schema))?;
    }
    Ok(())
}

fn cmd_bench(args: BenchArgs) -> Result<(), CliError> {
    let algorithms = if args
        .algorithms
        .iter()
        .any(|a| a.eq_ignore_ascii_case("all"))
    {
        AlgorithmChoice::FORCED.to_vec()
    } else {
        args.algorithms
            .iter()
            .map(|a| match a.parse::<AlgorithmChoice>() {
                Ok(AlgorithmChoice::Auto) => {
                    Err("bench needs a forced algorithm, not auto".to_string())
                }
                other => other,
            })
            .collect::<Result<Vec<_>, _>>()
            .map_err(CliError::Usage)?
    };
    if args.n_list.contains(&0) || args.d_list.contains(&0) || args.workers_list.contains(&0) {
        return Err(CliError::Usage(
            "n, d and workers must all be at least 1".into(),
        ));
    }
    let matrix = BenchMatrix {
        n_list: args.n_list.clone(),
        d_list: args.d_list.clone(),
        workers_list: args.workers_list.clone(),
        algorithms,
        repeats: args.repeats as usize,
        timeout: timeout_from_secs(args.timeout)?,
        partitions: args.partitions.map(|p| p as usize),
    };
    let data = match &args.input {
        Some(path) => {
            let source = args
                .schema
                .clone()
                .map_or(SchemaSource::Infer, SchemaSource::File);
            BenchData::Supplied(ingest_csv(path, &source)?)
        }
        None => {
            let template = gen_spec(1, 1, &args.spec);
            template
                .validate()
                .map_err(|e| CliError::Usage(e.to_string()))?;
            BenchData::Generated(template)
        }
    };
    let records = bench::run_matrix(&matrix, &data, |r| {
        let status = match (&r.error, r.timed_out) {
            (Some(e), _) => format!("error: {e}"),
            (None, true) => "timed out".to_string(),
            (None, false) => format!("{:.3} ms, skyline {}", r.wall_ms, r.skyline_size),
        };
        eprintln!(
            "{} n={} d={} workers={}: {status}",
            r.algorithm, r.n, r.d, r.workers
        );
    })?;
    write_output(args.out.as_deref(), |w| bench::write_records(&records, w))
}
