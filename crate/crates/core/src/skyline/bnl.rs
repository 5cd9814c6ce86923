// Copyright 2026 The Skyline Authors. Licensed under Apache-2.0.

use rayon::prelude::*;

use crate::dominance::{CheckCounter, DominanceMode, DominanceOutcome};
use crate::error::{Error, Result};
use crate::model::{compare_values, DimKind, Row, SkylineSpec, ValueOrdering};

/// Block-nested-loop over a window of candidates.
///
/// Requires a relation that is transitive on `rows` (complete rows, or rows
/// sharing one null signature). Survivors keep their input order.
pub(crate) fn window_skyline(
    rows: impl IntoIterator<Item = Row>,
    spec: &SkylineSpec,
    mode: DominanceMode,
    distinct: bool,
    counter: &mut CheckCounter,
) -> Result<Vec<Row>> {
    let mut window: Vec<Row> = Vec::new();
    for (i, t) in rows.into_iter().enumerate() {
        counter.poll(i)?;
        let len = window.len();
        let mut write = 0;
        let mut read = 0;
        let mut rejected = false;
        while read < len {
            counter.record();
            match mode.test(&window[read], &t, spec)? {
                DominanceOutcome::LeftDominates => {
                    rejected = true;
                    break;
                }
                DominanceOutcome::Equivalent if distinct => {
                    rejected = true;
                    break;
                }
                // evicted: left behind the write cursor, truncated below
                DominanceOutcome::RightDominates => {}
                DominanceOutcome::Equivalent | DominanceOutcome::Incomparable => {
                    if write != read {
                        window.swap(write, read);
                    }
                    write += 1;
                }
            }
            read += 1;
        }
        if rejected {
            // t dominating a resident and being dominated by another would
            // contradict transitivity, so nothing was evicted.
            debug_assert_eq!(write, read);
            continue;
        }
        window.truncate(write);
        window.push(t);
    }
    Ok(window)
}

/// Skyline of complete rows. With `spec.distinct`, of several rows with equal
/// skyline values only the first one seen is kept.
pub fn bnl_skyline(
    rows: impl IntoIterator<Item = Row>,
    spec: &SkylineSpec,
    counter: &mut CheckCounter,
) -> Result<Vec<Row>> {
    window_skyline(rows, spec, DominanceMode::Complete, spec.distinct, counter)
}

/// Independent [`bnl_skyline`] per partition, run on the current rayon pool.
/// Partition order is preserved in the output.
pub fn local_skylines_complete(
    partitions: Vec<Vec<Row>>,
    spec: &SkylineSpec,
    counter: &mut CheckCounter,
) -> Result<Vec<Vec<Row>>> {
    let results: Vec<Result<(Vec<Row>, CheckCounter)>> = partitions
        .into_par_iter()
        .map(|part| {
            let mut shard = counter.shard();
            let out = bnl_skyline(part, spec, &mut shard)?;
            Ok((out, shard))
        })
        .collect();
    let mut out = Vec::with_capacity(results.len());
    for r in results {
        let (rows, shard) = r?;
        counter.merge(&shard);
        out.push(rows);
    }
    Ok(out)
}

/// Global phase of the complete pipeline: one BNL pass over the union of the
/// local skylines, on a single worker.
pub fn global_skyline_complete(
    local_union: impl IntoIterator<Item = Row>,
    spec: &SkylineSpec,
    counter: &mut CheckCounter,
) -> Result<Vec<Row>> {
    bnl_skyline(local_union, spec, counter)
}

/// Skyline over a single MIN or MAX dimension: find the optimum, then keep the
/// rows equal to it. No pairwise dominance tests.
pub fn single_dim_skyline(rows: Vec<Row>, spec: &SkylineSpec) -> Result<Vec<Row>> {
    let [dim] = spec.dims() else {
        return Err(Error::Defect(
            "single-dimension scan over several dimensions".into(),
        ));
    };
    if dim.kind == DimKind::Diff {
        return Err(Error::Defect(
            "single-dimension scan over a DIFF dimension".into(),
        ));
    }
    let mut best: Option<usize> = None;
    for (i, r) in rows.iter().enumerate() {
        let v = &r.values[dim.column];
        if v.is_null() {
            return Err(Error::Defect(format!(
                "NULL in column #{} reached the single-dimension scan (row {})",
                dim.column, r.ordinal
            )));
        }
        match best {
            None => best = Some(i),
            Some(b) => {
                if compare_values(v, &rows[b].values[dim.column], dim.kind)?
                    == ValueOrdering::Better
                {
                    best = Some(i);
                }
            }
        }
    }
    let Some(b) = best else {
        return Ok(Vec::new());
    };
    let target = rows[b].values[dim.column].clone();
    let mut out = Vec::new();
    for r in rows {
        if compare_values(&r.values[dim.column], &target, dim.kind)? == ValueOrdering::Equal {
            out.push(r);
            if spec.distinct {
                break;
            }
        }
    }
    Ok(out)
}
