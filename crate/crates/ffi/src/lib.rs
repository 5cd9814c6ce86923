// Copyright 2026 The Skyline Authors. Licensed under Apache-2.0.

//! C ABI for the skyline engine.
//!
//! Handles are opaque and owned by the caller, who releases them with the
//! matching `*_free` function. Every fallible call returns a [`SkyStatus`];
//! on failure, [`sky_last_error`] describes the error on the calling thread.
//! Strings returned through out-parameters are released with
//! [`sky_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use skyline_core::exec::csv::{write_csv, SchemaSource};
use skyline_core::exec::{ExecConfig, QueryResult};
use skyline_core::planner::AlgorithmChoice;
use skyline_core::{Engine, Error, ErrorKind};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SkyStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    InvalidArgument = 3,
    ParseError = 4,
    AnalysisError = 5,
    PlanningError = 6,
    IngestError = 7,
    RuntimeError = 8,
    IoError = 9,
    EngineDefect = 10,
    Panic = 11,
}

impl From<ErrorKind> for SkyStatus {
    fn from(kind: ErrorKind) -> Self {
        match kind {
            ErrorKind::Parse => SkyStatus::ParseError,
            ErrorKind::Analysis => SkyStatus::AnalysisError,
            ErrorKind::Planning => SkyStatus::PlanningError,
            ErrorKind::Ingest => SkyStatus::IngestError,
            ErrorKind::Runtime => SkyStatus::RuntimeError,
            ErrorKind::Io => SkyStatus::IoError,
            ErrorKind::Defect => SkyStatus::EngineDefect,
        }
    }
}

/// A table catalog. Not safe to use from two threads at once.
pub struct SkyEngine {
    engine: Engine,
}

/// A materialized query result.
pub struct SkyResult {
    result: QueryResult,
    column_names: Vec<CString>,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: &str) {
    let c = CString::new(message.replace('\0', " ")).expect("interior NULs were replaced");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

struct Failure(SkyStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure(e.kind().into(), e.to_string())
    }
}

/// Runs `f`, converting errors and panics into a status plus last error.
fn guard(f: impl FnOnce() -> Result<(), Failure>) -> SkyStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            SkyStatus::Ok
        }
        Ok(Err(Failure(status, message))) => {
            set_last_error(&message);
            status
        }
        Err(_) => {
            set_last_error("panic inside the skyline engine");
            SkyStatus::Panic
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(SkyStatus::NullArgument, format!("{what} is NULL")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(SkyStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

unsafe fn opt_str_arg<'a>(p: *const c_char, what: &str) -> Result<Option<&'a str>, Failure> {
    if p.is_null() {
        Ok(None)
    } else {
        str_arg(p, what).map(Some)
    }
}

unsafe fn engine_ref<'a>(p: *const SkyEngine) -> Result<&'a SkyEngine, Failure> {
    p.as_ref()
        .ok_or_else(|| Failure(SkyStatus::NullArgument, "engine is NULL".into()))
}

fn algorithm(name: Option<&str>) -> Result<AlgorithmChoice, Failure> {
    name.map_or(Ok(AlgorithmChoice::Auto), |n| {
        n.parse()
            .map_err(|e| Failure(SkyStatus::InvalidArgument, e))
    })
}

fn out_string(out: *mut *mut c_char, text: String) -> Result<(), Failure> {
    let c = CString::new(text)
        .map_err(|_| Failure(SkyStatus::EngineDefect, "output contains a NUL byte".into()))?;
    // SAFETY: callers check `out` for NULL first.
    unsafe { *out = c.into_raw() };
    Ok(())
}

/// Creates an empty engine. Never returns NULL.
#[no_mangle]
pub extern "C" fn sky_engine_new() -> *mut SkyEngine {
    Box::into_raw(Box::new(SkyEngine {
        engine: Engine::new(),
    }))
}

/// Releases an engine. NULL is ignored.
///
/// # Safety
/// `engine` must come from [`sky_engine_new`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sky_engine_free(engine: *mut SkyEngine) {
    if !engine.is_null() {
        drop(Box::from_raw(engine));
    }
}

/// Loads a CSV file as table `name`. `schema_path` may be NULL to infer
/// column types.
///
/// # Safety
/// Pointers must be NULL or valid; strings must be NUL-terminated.
#[no_mangle]
pub unsafe extern "C" fn sky_engine_register_csv(
    engine: *mut SkyEngine,
    name: *const c_char,
    csv_path: *const c_char,
    schema_path: *const c_char,
) -> SkyStatus {
    guard(|| {
        let engine = engine
            .as_mut()
            .ok_or_else(|| Failure(SkyStatus::NullArgument, "engine is NULL".into()))?;
        let name = str_arg(name, "name")?;
        let path = str_arg(csv_path, "csv_path")?;
        let source = match opt_str_arg(schema_path, "schema_path")? {
            Some(p) => SchemaSource::File(p.into()),
            None => SchemaSource::Infer,
        };
        engine.engine.register_csv(name, path, &source)?;
        Ok(())
    })
}

/// Writes the physical plan of `sql` to `*out_plan`. `algorithm_name` may be NULL
/// for automatic selection.
///
/// # Safety
/// Pointers must be NULL or valid; strings must be NUL-terminated.
#[no_mangle]
pub unsafe extern "C" fn sky_engine_explain(
    engine: *const SkyEngine,
    sql: *const c_char,
    algorithm_name: *const c_char,
    out_plan: *mut *mut c_char,
) -> SkyStatus {
    guard(|| {
        let engine = engine_ref(engine)?;
        let sql = str_arg(sql, "sql")?;
        let choice = algorithm(opt_str_arg(algorithm_name, "algorithm")?)?;
        if out_plan.is_null() {
            return Err(Failure(SkyStatus::NullArgument, "out_plan is NULL".into()));
        }
        let plan = engine.engine.plan(sql, choice)?;
        out_string(out_plan, plan.to_string())
    })
}

/// Runs `sql` and stores a new result handle in `*out_result`.
/// `algorithm_name` may be NULL for automatic selection; `partitions` 0 means
/// one partition per worker; `timeout_ms` 0 means no limit.
///
/// # Safety
/// Pointers must be NULL or valid; strings must be NUL-terminated.
#[no_mangle]
pub unsafe extern "C" fn sky_engine_query(
    engine: *const SkyEngine,
    sql: *const c_char,
    algorithm_name: *const c_char,
    workers: u32,
    partitions: u32,
    timeout_ms: u64,
    out_result: *mut *mut SkyResult,
) -> SkyStatus {
    guard(|| {
        let engine = engine_ref(engine)?;
        let sql = str_arg(sql, "sql")?;
        let choice = algorithm(opt_str_arg(algorithm_name, "algorithm")?)?;
        if out_result.is_null() {
            return Err(Failure(
                SkyStatus::NullArgument,
                "out_result is NULL".into(),
            ));
        }
        if workers == 0 {
            return Err(Failure(
                SkyStatus::InvalidArgument,
                "workers must be at least 1".into(),
            ));
        }
        let config = ExecConfig {
            workers: workers as usize,
            partitions: (partitions > 0).then_some(partitions as usize),
            timeout: (timeout_ms > 0).then(|| std::time::Duration::from_millis(timeout_ms)),
        };
        let result = engine.engine.query(sql, choice, &config)?;
        let column_names = result
            .data
            .schema
            .columns()
            .iter()
            .map(|c| CString::new(c.name.as_str()).unwrap_or_default())
            .collect();
        *out_result = Box::into_raw(Box::new(SkyResult {
            result,
            column_names,
        }));
        Ok(())
    })
}

/// Releases a result. NULL is ignored.
///
/// # Safety
/// `result` must come from [`sky_engine_query`] and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sky_result_free(result: *mut SkyResult) {
    if !result.is_null() {
        drop(Box::from_raw(result));
    }
}

/// Number of result rows; 0 for NULL.
///
/// # Safety
/// `result` must be NULL or valid.
#[no_mangle]
pub unsafe extern "C" fn sky_result_row_count(result: *const SkyResult) -> usize {
    result.as_ref().map_or(0, |r| r.result.data.len())
}

/// Number of result columns; 0 for NULL.
///
/// # Safety
/// `result` must be NULL or valid.
#[no_mangle]
pub unsafe extern "C" fn sky_result_column_count(result: *const SkyResult) -> usize {
    result.as_ref().map_or(0, |r| r.column_names.len())
}

/// Name of column `index`, owned by the result; NULL if out of range.
///
/// # Safety
/// `result` must be NULL or valid.
#[no_mangle]
pub unsafe extern "C" fn sky_result_column_name(
    result: *const SkyResult,
    index: usize,
) -> *const c_char {
    result
        .as_ref()
        .and_then(|r| r.column_names.get(index))
        .map_or(ptr::null(), |c| c.as_ptr())
}

/// Zero-based position of result row `row` in its input table; -1 if out
/// of range.
///
/// # Safety
/// `result` must be NULL or valid.
#[no_mangle]
pub unsafe extern "C" fn sky_result_ordinal(result: *const SkyResult, row: usize) -> i64 {
    result
        .as_ref()
        .and_then(|r| r.result.data.rows.get(row))
        .map_or(-1, |r| r.ordinal as i64)
}

/// Dominance tests performed by the query; 0 for NULL.
///
/// # Safety
/// `result` must be NULL or valid.
#[no_mangle]
pub unsafe extern "C" fn sky_result_dominance_tests(result: *const SkyResult) -> u64 {
    result
        .as_ref()
        .map_or(0, |r| r.result.stats.dominance_tests)
}

/// Writes the result as CSV (with header) to `*out_csv`.
///
/// # Safety
/// Pointers must be NULL or valid.
#[no_mangle]
pub unsafe extern "C" fn sky_result_to_csv(
    result: *const SkyResult,
    out_csv: *mut *mut c_char,
) -> SkyStatus {
    guard(|| {
        let r = result
            .as_ref()
            .ok_or_else(|| Failure(SkyStatus::NullArgument, "result is NULL".into()))?;
        if out_csv.is_null() {
            return Err(Failure(SkyStatus::NullArgument, "out_csv is NULL".into()));
        }
        let mut buf = Vec::new();
        write_csv(&r.result.data, &mut buf)?;
        let text = String::from_utf8(buf)
            .map_err(|_| Failure(SkyStatus::EngineDefect, "csv output is not UTF-8".into()))?;
        out_string(out_csv, text)
    })
}

/// Releases a string returned by this library. NULL is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn sky_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message of the last failed call on this thread, or NULL. Valid until the
/// next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn sky_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version, a static string.
#[no_mangle]
pub extern "C" fn sky_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
