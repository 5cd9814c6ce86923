// Copyright 2026 The Skyline Authors. Licensed under Apache-2.0.

//! Skyline strategies.
//!
//! * [`bnl_skyline`]: block-nested-loop over complete rows, used for both the
//!   local and the global phase of the complete pipeline.
//! * [`partition_by_null_signature`] / [`local_skylines_incomplete`] /
//!   [`global_skyline_incomplete`]: the pipeline for rows with NULLs. Local
//!   skylines are computed per null pattern, the global phase compares all
//!   pairs and only deletes after every comparison has been made.
//! * [`reference_skyline`]: the nested `NOT EXISTS` evaluation, used as the
//!   correctness oracle and the performance baseline.
//! * [`flawed_global_incomplete`]: a global phase that deletes dominated rows
//!   immediately. Wrong under cyclic dominance; kept only as a regression
//!   witness and never planned.

mod bnl;
mod incomplete;
mod reference;

use std::collections::HashSet;
use std::fmt;
use std::sync::Arc;

pub use bnl::{bnl_skyline, global_skyline_complete, local_skylines_complete, single_dim_skyline};
pub use incomplete::{
    clusters_by_first_appearance, flawed_global_incomplete, global_skyline_incomplete,
    local_skylines_incomplete, partition_by_null_signature, SignaturePartitions,
};
pub use reference::reference_skyline;

use crate::model::{Row, SkylineSpec, Value};

/// Bit `i` is set iff the row is NULL in skyline dimension `i`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct NullSignature(pub u64);

impl NullSignature {
    pub fn of(row: &Row, spec: &SkylineSpec) -> Self {
        let mut bits = 0u64;
        for (i, d) in spec.dims().iter().enumerate() {
            if row.values[d.column].is_null() {
                bits |= 1 << i;
            }
        }
        NullSignature(bits)
    }

    pub fn is_null_at(self, dim: usize) -> bool {
        self.0 & (1 << dim) != 0
    }

    /// Renders the bits dimension 0 first, e.g. `010` for `(1, NULL, 10)`.
    pub fn to_bit_string(self, dims: usize) -> String {
        (0..dims)
            .map(|i| if self.is_null_at(i) { '1' } else { '0' })
            .collect()
    }
}

impl fmt::Display for NullSignature {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:#b}", self.0)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
enum KeyPart {
    Null,
    Int(i64),
    Float(u64),
    Bool(bool),
    Text(Arc<str>),
}

fn key_of(row: &Row, spec: &SkylineSpec) -> Vec<KeyPart> {
    spec.dims()
        .iter()
        .map(|d| match &row.values[d.column] {
            Value::Null => KeyPart::Null,
            Value::Int(v) => KeyPart::Int(*v),
            // -0.0 and 0.0 compare equal
            Value::Float(v) => KeyPart::Float(if *v == 0.0 { 0 } else { v.to_bits() }),
            Value::Bool(v) => KeyPart::Bool(*v),
            Value::Text(v) => KeyPart::Text(v.clone()),
        })
        .collect()
}

/// Keeps the lowest-ordinal row of every group of rows with identical
/// skyline values (NULL equal to NULL). Input order of survivors is kept.
pub(crate) fn distinct_by_skyline_values(rows: Vec<Row>, spec: &SkylineSpec) -> Vec<Row> {
    let mut order: Vec<usize> = (0..rows.len()).collect();
    order.sort_by_key(|&i| rows[i].ordinal);
    let mut seen = HashSet::with_capacity(rows.len());
    let mut keep = vec![false; rows.len()];
    for i in order {
        if seen.insert(key_of(&rows[i], spec)) {
            keep[i] = true;
        }
    }
    rows.into_iter()
        .zip(keep)
        .filter_map(|(r, k)| k.then_some(r))
        .collect()
}
