// Copyright 2026 The Skyline Authors. Licensed under Apache-2.0.

//! Pairwise dominance tests for complete and incomplete rows.

use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::model::{compare_values, Row, SkylineSpec, ValueOrdering};

/// Result of one pairwise dominance evaluation, from the left row's view.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DominanceOutcome {
    LeftDominates,
    RightDominates,
    Equivalent,
    Incomparable,
}

impl DominanceOutcome {
    pub fn flip(self) -> Self {
        match self {
            DominanceOutcome::LeftDominates => DominanceOutcome::RightDominates,
            DominanceOutcome::RightDominates => DominanceOutcome::LeftDominates,
            other => other,
        }
    }
}

/// Which dominance relation an algorithm evaluates.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DominanceMode {
    Complete,
    Incomplete,
}

impl DominanceMode {
    #[inline]
    pub fn test(self, r: &Row, s: &Row, spec: &SkylineSpec) -> Result<DominanceOutcome> {
        match self {
            DominanceMode::Complete => dominates_complete(r, s, spec),
            DominanceMode::Incomplete => dominates_incomplete(r, s, spec),
        }
    }
}

/// Counts dominance tests for one worker and carries the optional deadline of
/// the query it belongs to.
#[derive(Debug, Clone, Default)]
pub struct CheckCounter {
    pub dominance_tests: u64,
    deadline: Option<(Instant, Duration)>,
}

impl CheckCounter {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn with_deadline(deadline: Option<(Instant, Duration)>) -> Self {
        Self {
            dominance_tests: 0,
            deadline,
        }
    }

    /// A fresh shard sharing this counter's deadline.
    pub fn shard(&self) -> Self {
        Self::with_deadline(self.deadline)
    }

    pub fn merge(&mut self, other: &CheckCounter) {
        self.dominance_tests += other.dominance_tests;
    }

    #[inline]
    pub fn record(&mut self) {
        self.dominance_tests += 1;
    }

    /// Fails with [`Error::Timeout`] once the deadline has passed. Called by
    /// the algorithms' outer loops every few hundred iterations.
    #[inline]
    pub fn poll(&self, iteration: usize) -> Result<()> {
        if iteration % 256 != 0 {
            return Ok(());
        }
        match self.deadline {
            Some((at, budget)) if Instant::now() >= at => Err(Error::Timeout(budget)),
            _ => Ok(()),
        }
    }
}

#[inline]
fn finish(left_better: bool, right_better: bool) -> DominanceOutcome {
    match (left_better, right_better) {
        (true, false) => DominanceOutcome::LeftDominates,
        (false, true) => DominanceOutcome::RightDominates,
        (false, false) => DominanceOutcome::Equivalent,
        (true, true) => DominanceOutcome::Incomparable,
    }
}

/// Dominance over rows without NULLs in any skyline dimension.
///
/// Stops at the first dimension that makes the pair incomparable.
pub fn dominates_complete(r: &Row, s: &Row, spec: &SkylineSpec) -> Result<DominanceOutcome> {
    let mut left_better = false;
    let mut right_better = false;
    for dim in spec.dims() {
        let a = &r.values[dim.column];
        let b = &s.values[dim.column];
        if a.is_null() || b.is_null() {
            return Err(Error::Defect(format!(
                "NULL in skyline column #{} on the complete path (rows {} and {})",
                dim.column, r.ordinal, s.ordinal
            )));
        }
        match compare_values(a, b, dim.kind)? {
            ValueOrdering::Equal => {}
            ValueOrdering::Incomparable => return Ok(DominanceOutcome::Incomparable),
            ValueOrdering::Better => {
                if right_better {
                    return Ok(DominanceOutcome::Incomparable);
                }
                left_better = true;
            }
            ValueOrdering::Worse => {
                if left_better {
                    return Ok(DominanceOutcome::Incomparable);
                }
                right_better = true;
            }
        }
    }
    Ok(finish(left_better, right_better))
}

/// Dominance restricted to the skyline dimensions where both rows are
/// non-NULL. With no such dimension the rows are incomparable.
pub fn dominates_incomplete(r: &Row, s: &Row, spec: &SkylineSpec) -> Result<DominanceOutcome> {
    let mut left_better = false;
    let mut right_better = false;
    let mut common = false;
    for dim in spec.dims() {
        let a = &r.values[dim.column];
        let b = &s.values[dim.column];
        if a.is_null() || b.is_null() {
            continue;
        }
        common = true;
        match compare_values(a, b, dim.kind)? {
            ValueOrdering::Equal => {}
            ValueOrdering::Incomparable => return Ok(DominanceOutcome::Incomparable),
            ValueOrdering::Better => {
                if right_better {
                    return Ok(DominanceOutcome::Incomparable);
                }
                left_better = true;
            }
            ValueOrdering::Worse => {
                if left_better {
                    return Ok(DominanceOutcome::Incomparable);
                }
                right_better = true;
            }
        }
    }
    if !common {
        return Ok(DominanceOutcome::Incomparable);
    }
    Ok(finish(left_better, right_better))
}

#[cfg(test)]
pub(crate) mod tests {
    use super::*;
    use crate::model::{DimKind, SkylineDimension, Value};
    use proptest::prelude::*;
    use DominanceOutcome::*;

    pub(crate) fn spec(kinds: &[DimKind]) -> SkylineSpec {
        SkylineSpec::new(
            kinds
                .iter()
                .enumerate()
                .map(|(i, &k)| SkylineDimension::new(i, k))
                .collect(),
            false,
            false,
        )
        .unwrap()
    }

    pub(crate) fn ints(vals: &[Option<i64>], ordinal: usize) -> Row {
        Row::new(
            vals.iter()
                .map(|v| v.map(Value::Int).unwrap_or(Value::Null))
                .collect(),
            ordinal,
        )
    }

    fn full(vals: &[i64]) -> Row {
        ints(&vals.iter().copied().map(Some).collect::<Vec<_>>(), 0)
    }

    /// Scans every dimension; no early exit. Independent of the kernel above.
    fn dominates_exhaustive(
        r: &Row,
        s: &Row,
        spec: &SkylineSpec,
        skip_nulls: bool,
    ) -> DominanceOutcome {
        let mut diff_ok = true;
        let mut r_geq = true;
        let mut s_geq = true;
        let mut r_strict = false;
        let mut s_strict = false;
        let mut common = 0;
        for d in spec.dims() {
            let (a, b) = (&r.values[d.column], &s.values[d.column]);
            if skip_nulls && (a.is_null() || b.is_null()) {
                continue;
            }
            common += 1;
            let ord = a.partial_cmp_same_kind(b).unwrap();
            match d.kind {
                DimKind::Diff => diff_ok &= ord.is_eq(),
                DimKind::Min => {
                    r_geq &= ord.is_le();
                    s_geq &= ord.is_ge();
                    r_strict |= ord.is_lt();
                    s_strict |= ord.is_gt();
                }
                DimKind::Max => {
                    r_geq &= ord.is_ge();
                    s_geq &= ord.is_le();
                    r_strict |= ord.is_gt();
                    s_strict |= ord.is_lt();
                }
            }
        }
        if common == 0 || !diff_ok {
            return Incomparable;
        }
        match (r_geq && r_strict, s_geq && s_strict) {
            (true, _) => LeftDominates,
            (_, true) => RightDominates,
            _ if r_geq && s_geq => Equivalent,
            _ => Incomparable,
        }
    }

    #[test]
    fn complete_examples() {
        let s = spec(&[DimKind::Min, DimKind::Max]);
        assert_eq!(
            dominates_complete(&full(&[1, 5]), &full(&[3, 2]), &s).unwrap(),
            LeftDominates
        );
        let mm = spec(&[DimKind::Min, DimKind::Min]);
        assert_eq!(
            dominates_complete(&full(&[1, 2]), &full(&[1, 2]), &mm).unwrap(),
            Equivalent
        );
        assert_eq!(
            dominates_complete(&full(&[2, 1]), &full(&[1, 2]), &mm).unwrap(),
            Incomparable
        );

        let md = spec(&[DimKind::Min, DimKind::Diff]);
        let r = Row::new(vec![Value::Int(1), Value::text("A")], 0);
        let t = Row::new(vec![Value::Int(0), Value::text("B")], 1);
        assert_eq!(dominates_complete(&r, &t, &md).unwrap(), Incomparable);
    }

    #[test]
    fn complete_rejects_nulls() {
        let s = spec(&[DimKind::Min, DimKind::Min]);
        let err = dominates_complete(&ints(&[Some(1), None], 0), &full(&[1, 2]), &s).unwrap_err();
        assert!(matches!(err, Error::Defect(_)));
    }

    #[test]
    fn incomplete_examples_and_cycle() {
        let s = spec(&[DimKind::Min; 3]);
        let a = ints(&[Some(1), None, Some(10)], 0);
        let b = ints(&[Some(3), Some(2), None], 1);
        let c = ints(&[None, Some(5), Some(3)], 2);
        assert_eq!(dominates_incomplete(&a, &b, &s).unwrap(), LeftDominates);
        assert_eq!(dominates_incomplete(&b, &c, &s).unwrap(), LeftDominates);
        assert_eq!(dominates_incomplete(&c, &a, &s).unwrap(), LeftDominates);
        assert_eq!(dominates_incomplete(&a, &c, &s).unwrap(), RightDominates);

        let two = spec(&[DimKind::Min; 2]);
        let empty = ints(&[None, None], 0);
        assert_eq!(
            dominates_incomplete(&empty, &full(&[1, 2]), &two).unwrap(),
            Incomparable
        );
    }

    #[test]
    fn counter_deadline() {
        let c = CheckCounter::with_deadline(Some((Instant::now(), Duration::from_millis(1))));
        assert!(c.poll(1).is_ok());
        assert!(matches!(c.poll(0), Err(Error::Timeout(_))));
        assert!(CheckCounter::new().poll(0).is_ok());
    }

    fn kinds() -> impl Strategy<Value = Vec<DimKind>> {
        prop::collection::vec(
            prop_oneof![Just(DimKind::Min), Just(DimKind::Max), Just(DimKind::Diff)],
            1..6,
        )
        .prop_map(|mut k| {
            if k.iter().all(|&d| d == DimKind::Diff) {
                k[0] = DimKind::Min;
            }
            k
        })
    }

    fn rows_for(
        kinds: Vec<DimKind>,
        n: usize,
        nulls: bool,
    ) -> impl Strategy<Value = (Vec<DimKind>, Vec<Row>)> {
        let d = kinds.len();
        let cell = if nulls {
            prop::option::weighted(0.7, 0i64..4).boxed()
        } else {
            (0i64..4).prop_map(Some).boxed()
        };
        prop::collection::vec(prop::collection::vec(cell, d), n).prop_map(move |rows| {
            let rows = rows.iter().enumerate().map(|(i, v)| ints(v, i)).collect();
            (kinds.clone(), rows)
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(512))]

        #[test]
        fn complete_matches_exhaustive((k, rows) in kinds().prop_flat_map(|k| rows_for(k, 2, false))) {
            let s = spec(&k);
            let fast = dominates_complete(&rows[0], &rows[1], &s).unwrap();
            prop_assert_eq!(fast, dominates_exhaustive(&rows[0], &rows[1], &s, false));
            prop_assert_eq!(fast.flip(), dominates_complete(&rows[1], &rows[0], &s).unwrap());
        }

        #[test]
        fn incomplete_matches_exhaustive((k, rows) in kinds().prop_flat_map(|k| rows_for(k, 2, true))) {
            let s = spec(&k);
            let fast = dominates_incomplete(&rows[0], &rows[1], &s).unwrap();
            prop_assert_eq!(fast, dominates_exhaustive(&rows[0], &rows[1], &s, true));
        }

        #[test]
        fn restriction_consistency((k, rows) in kinds().prop_flat_map(|k| rows_for(k, 2, false))) {
            let s = spec(&k);
            prop_assert_eq!(
                dominates_incomplete(&rows[0], &rows[1], &s).unwrap(),
                dominates_complete(&rows[0], &rows[1], &s).unwrap()
            );
        }

        #[test]
        fn transitivity_on_complete_rows((k, rows) in kinds().prop_flat_map(|k| rows_for(k, 3, false))) {
            let s = spec(&k);
            let (x, y, z) = (&rows[0], &rows[1], &rows[2]);
            if dominates_complete(x, y, &s).unwrap() == LeftDominates
                && dominates_complete(y, z, &s).unwrap() == LeftDominates
            {
                prop_assert_eq!(dominates_complete(x, z, &s).unwrap(), LeftDominates);
            }
        }

        #[test]
        fn irreflexive((k, rows) in kinds().prop_flat_map(|k| rows_for(k, 1, true))) {
            let s = spec(&k);
            let r = &rows[0];
            let out = dominates_incomplete(r, r, &s).unwrap();
            let any_value = s.dims().iter().any(|d| !r.values[d.column].is_null());
            prop_assert_eq!(out, if any_value { Equivalent } else { Incomparable });
            if s.dims().iter().all(|d| !r.values[d.column].is_null()) {
                prop_assert_eq!(dominates_complete(r, r, &s).unwrap(), Equivalent);
            }
        }
    }

    /// 10^5 random pairs, short-circuit kernel vs exhaustive scan.
    #[test]
    fn short_circuit_agrees_on_many_pairs() {
        use rand::{RngExt, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..100_000 {
            let d = rng.random_range(1..=6usize);
            let mut k: Vec<DimKind> = (0..d)
                .map(|_| match rng.random_range(0..3) {
                    0 => DimKind::Min,
                    1 => DimKind::Max,
                    _ => DimKind::Diff,
                })
                .collect();
            if k.iter().all(|&x| x == DimKind::Diff) {
                k[0] = DimKind::Max;
            }
            let s = spec(&k);
            let mut row = |o| {
                let v: Vec<Option<i64>> = (0..d)
                    .map(|_| (!rng.random_bool(0.2)).then(|| rng.random_range(0..4)))
                    .collect();
                ints(&v, o)
            };
            let (r, t) = (row(0), row(1));
            assert_eq!(
                dominates_incomplete(&r, &t, &s).unwrap(),
                dominates_exhaustive(&r, &t, &s, true)
            );
        }
    }
}
