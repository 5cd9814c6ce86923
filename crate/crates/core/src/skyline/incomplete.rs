// Copyright 2026 The Skyline Authors. Licensed under Apache-2.0.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;

use super::bnl::window_skyline;
use super::{distinct_by_skyline_values, NullSignature};
use crate::dominance::{CheckCounter, DominanceMode, DominanceOutcome};
use crate::error::Result;
use crate::model::{Row, SkylineSpec};

/// Rows grouped by null signature, in ascending signature order.
pub type SignaturePartitions = BTreeMap<NullSignature, Vec<Row>>;

/// Groups rows by which skyline dimensions are NULL. Within a group every
/// comparison uses the same dimension subset, so dominance is transitive.
pub fn partition_by_null_signature(
    rows: impl IntoIterator<Item = Row>,
    spec: &SkylineSpec,
) -> SignaturePartitions {
    let mut parts = SignaturePartitions::new();
    for row in rows {
        parts
            .entry(NullSignature::of(&row, spec))
            .or_default()
            .push(row);
    }
    parts
}

/// BNL per signature partition on the current rayon pool, in signature order.
pub fn local_skylines_incomplete(
    partitions: SignaturePartitions,
    spec: &SkylineSpec,
    counter: &mut CheckCounter,
) -> Result<Vec<Vec<Row>>> {
    let parts: Vec<Vec<Row>> = partitions.into_values().collect();
    let results: Vec<Result<(Vec<Row>, CheckCounter)>> = parts
        .into_par_iter()
        .map(|part| {
            let mut shard = counter.shard();
            let out = window_skyline(part, spec, DominanceMode::Incomplete, false, &mut shard)?;
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

/// Global phase for incomplete data.
///
/// Dominance may be cyclic across signatures, so every pair is compared and a
/// dominated row stays in play until all comparisons are done: it may be the
/// only witness against another row. Output is in ordinal order; DISTINCT is
/// applied to the final set.
pub fn global_skyline_incomplete(
    local_union: Vec<Row>,
    spec: &SkylineSpec,
    counter: &mut CheckCounter,
) -> Result<Vec<Row>> {
    let n = local_union.len();
    let mut dominated = vec![false; n];
    for i in 0..n {
        counter.poll(i)?;
        for j in (i + 1)..n {
            if dominated[i] && dominated[j] {
                continue;
            }
            counter.record();
            match DominanceMode::Incomplete.test(&local_union[i], &local_union[j], spec)? {
                DominanceOutcome::LeftDominates => dominated[j] = true,
                DominanceOutcome::RightDominates => dominated[i] = true,
                _ => {}
            }
        }
    }
    let mut out: Vec<Row> = local_union
        .into_iter()
        .zip(dominated)
        .filter_map(|(r, d)| (!d).then_some(r))
        .collect();
    out.sort_by_key(|r| r.ordinal);
    if spec.distinct {
        out = distinct_by_skyline_values(out, spec);
    }
    Ok(out)
}

/// Groups rows by null signature, ordering the groups by the first input
/// position at which each signature occurs.
pub fn clusters_by_first_appearance(rows: Vec<Row>, spec: &SkylineSpec) -> Vec<Vec<Row>> {
    let mut index: HashMap<NullSignature, usize> = HashMap::new();
    let mut clusters: Vec<Vec<Row>> = Vec::new();
    for row in rows {
        let sig = NullSignature::of(&row, spec);
        let slot = *index.entry(sig).or_insert_with(|| {
            clusters.push(Vec::new());
            clusters.len() - 1
        });
        clusters[slot].push(row);
    }
    clusters
}

/// Cluster-ordered global phase that eliminates a dominated row as soon as a
/// dominator is seen, marking the current row with a domination flag when a
/// later row dominates it.
///
/// This is incorrect under cyclic dominance: the only row that could have
/// eliminated a survivor may already have been removed. It exists to
/// reproduce that failure and is never reachable from the planner.
pub fn flawed_global_incomplete(clusters: Vec<Vec<Row>>, spec: &SkylineSpec) -> Result<Vec<Row>> {
    let mut counter = CheckCounter::new();
    let locals: Vec<Vec<Row>> = clusters
        .into_iter()
        .map(|c| window_skyline(c, spec, DominanceMode::Incomplete, false, &mut counter))
        .collect::<Result<_>>()?;
    let mut alive: Vec<Vec<bool>> = locals.iter().map(|c| vec![true; c.len()]).collect();

    for ci in 0..locals.len() {
        for pi in 0..locals[ci].len() {
            if !alive[ci][pi] {
                continue;
            }
            let p = &locals[ci][pi];
            let mut flagged = false;
            for cj in (ci + 1)..locals.len() {
                for qj in 0..locals[cj].len() {
                    if !alive[cj][qj] {
                        continue;
                    }
                    match DominanceMode::Incomplete.test(p, &locals[cj][qj], spec)? {
                        DominanceOutcome::LeftDominates => alive[cj][qj] = false,
                        DominanceOutcome::RightDominates => flagged = true,
                        _ => {}
                    }
                }
            }
            if flagged {
                alive[ci][pi] = false;
            }
        }
    }

    let mut out: Vec<Row> = locals
        .into_iter()
        .zip(alive)
        .flat_map(|(c, a)| {
            c.into_iter()
                .zip(a)
                .filter_map(|(r, keep)| keep.then_some(r))
        })
        .collect();
    out.sort_by_key(|r| r.ordinal);
    Ok(out)
}
