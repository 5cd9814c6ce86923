// Copyright 2026 The Skyline Authors. Licensed under Apache-2.0.

use super::distinct_by_skyline_values;
use crate::dominance::{CheckCounter, DominanceMode, DominanceOutcome};
use crate::error::Result;
use crate::model::{Row, SkylineSpec};

/// Nested `NOT EXISTS` evaluation: `r` is kept iff no row of the input
/// dominates it. Each inner scan stops at the first dominator, as an
/// anti-join would. O(n^2) and single-threaded.
pub fn reference_skyline(
    rows: Vec<Row>,
    spec: &SkylineSpec,
    mode: DominanceMode,
    counter: &mut CheckCounter,
) -> Result<Vec<Row>> {
    let mut keep = vec![false; rows.len()];
    for (i, r) in rows.iter().enumerate() {
        counter.poll(i)?;
        let mut dominated = false;
        for s in &rows {
            counter.record();
            if mode.test(s, r, spec)? == DominanceOutcome::LeftDominates {
                dominated = true;
                break;
            }
        }
        keep[i] = !dominated;
    }
    let mut out: Vec<Row> = rows
        .into_iter()
        .zip(keep)
        .filter_map(|(r, k)| k.then_some(r))
        .collect();
    if spec.distinct {
        out = distinct_by_skyline_values(out, spec);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::DimKind::*;
    use crate::skyline::testutil::*;

    #[test]
    fn reference_examples() {
        let mm = spec_with(&[Min, Min], false);
        let out = reference_skyline(
            complete(&[&[1, 1], &[2, 2], &[0, 3]]),
            &mm,
            DominanceMode::Complete,
            &mut CheckCounter::new(),
        )
        .unwrap();
        assert_eq!(ordinals(&out), [0, 2]);

        let s3 = spec_with(&[Min; 3], false);
        let out = reference_skyline(
            cyclic_triple(),
            &s3,
            DominanceMode::Incomplete,
            &mut CheckCounter::new(),
        )
        .unwrap();
        assert!(out.is_empty());

        let out = reference_skyline(
            Vec::new(),
            &mm,
            DominanceMode::Complete,
            &mut CheckCounter::new(),
        )
        .unwrap();
        assert!(out.is_empty());
    }

    #[test]
    fn null_only_row_survives() {
        let m = spec_with(&[Min], false);
        let out = reference_skyline(
            rows(&[&[Some(3)], &[None], &[Some(1)]]),
            &m,
            DominanceMode::Incomplete,
            &mut CheckCounter::new(),
        )
        .unwrap();
        assert_eq!(ordinals(&out), [1, 2]);
    }
}
