// Copyright 2026 The Skyline Authors. Licensed under Apache-2.0.

use std::fmt;
use std::str::FromStr;

use super::logical::{display_spec, LogicalPlan, Predicate};
use crate::dominance::DominanceMode;
use crate::error::{Error, Result};
use crate::model::{Schema, SkylineSpec};

/// How rows are spread over workers for the local skyline phase.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Distribution {
    /// Contiguous chunks of near-equal size.
    Unspecified,
    /// One partition per null signature.
    BySignature,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GlobalVariant {
    Complete,
    Incomplete,
}

/// Skyline strategy to lower to. `Auto` picks the complete pipeline when the
/// query says `COMPLETE` or no skyline column is nullable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum AlgorithmChoice {
    #[default]
    Auto,
    DistributedComplete,
    NondistributedComplete,
    DistributedIncomplete,
    Reference,
}

impl AlgorithmChoice {
    pub const FORCED: [AlgorithmChoice; 4] = [
        AlgorithmChoice::DistributedComplete,
        AlgorithmChoice::NondistributedComplete,
        AlgorithmChoice::DistributedIncomplete,
        AlgorithmChoice::Reference,
    ];

    pub fn name(self) -> &'static str {
        match self {
            AlgorithmChoice::Auto => "auto",
            AlgorithmChoice::DistributedComplete => "distributed-complete",
            AlgorithmChoice::NondistributedComplete => "nondistributed-complete",
            AlgorithmChoice::DistributedIncomplete => "distributed-incomplete",
            AlgorithmChoice::Reference => "reference",
        }
    }
}

impl fmt::Display for AlgorithmChoice {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AlgorithmChoice {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, String> {
        [AlgorithmChoice::Auto]
            .into_iter()
            .chain(AlgorithmChoice::FORCED)
            .find(|a| a.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| {
                format!(
                    "unknown algorithm '{s}' (expected auto, distributed-complete, \
                     nondistributed-complete, distributed-incomplete or reference)"
                )
            })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum PhysicalPlan {
    Scan {
        table: String,
        schema: Schema,
    },
    Filter {
        predicate: Predicate,
        input: Box<PhysicalPlan>,
    },
    Project {
        columns: Vec<usize>,
        input: Box<PhysicalPlan>,
    },
    LocalSkyline {
        spec: SkylineSpec,
        distribution: Distribution,
        input: Box<PhysicalPlan>,
    },
    /// Runs on a single worker over everything its input produces.
    GlobalSkyline {
        spec: SkylineSpec,
        variant: GlobalVariant,
        input: Box<PhysicalPlan>,
    },
    SingleDimScan {
        spec: SkylineSpec,
        input: Box<PhysicalPlan>,
    },
    ReferenceSkyline {
        spec: SkylineSpec,
        mode: DominanceMode,
        input: Box<PhysicalPlan>,
    },
    Sort {
        column: usize,
        descending: bool,
        input: Box<PhysicalPlan>,
    },
}

impl PhysicalPlan {
    pub fn schema(&self) -> Schema {
        match self {
            PhysicalPlan::Scan { schema, .. } => schema.clone(),
            PhysicalPlan::Project { columns, input } => input.schema().project(columns),
            PhysicalPlan::Filter { input, .. }
            | PhysicalPlan::LocalSkyline { input, .. }
            | PhysicalPlan::GlobalSkyline { input, .. }
            | PhysicalPlan::SingleDimScan { input, .. }
            | PhysicalPlan::ReferenceSkyline { input, .. }
            | PhysicalPlan::Sort { input, .. } => input.schema(),
        }
    }

    pub fn input(&self) -> Option<&PhysicalPlan> {
        match self {
            PhysicalPlan::Scan { .. } => None,
            PhysicalPlan::Filter { input, .. }
            | PhysicalPlan::Project { input, .. }
            | PhysicalPlan::LocalSkyline { input, .. }
            | PhysicalPlan::GlobalSkyline { input, .. }
            | PhysicalPlan::SingleDimScan { input, .. }
            | PhysicalPlan::ReferenceSkyline { input, .. }
            | PhysicalPlan::Sort { input, .. } => Some(input),
        }
    }

    /// Pre-order list of node names, e.g. `["ProjectExec", "GlobalSkylineExec", ...]`.
    pub fn node_names(&self) -> Vec<&'static str> {
        let mut out = vec![self.node_name()];
        if let Some(input) = self.input() {
            out.extend(input.node_names());
        }
        out
    }

    pub fn node_name(&self) -> &'static str {
        match self {
            PhysicalPlan::Scan { .. } => "ScanExec",
            PhysicalPlan::Filter { .. } => "FilterExec",
            PhysicalPlan::Project { .. } => "ProjectExec",
            PhysicalPlan::LocalSkyline { .. } => "LocalSkylineExec",
            PhysicalPlan::GlobalSkyline { .. } => "GlobalSkylineExec",
            PhysicalPlan::SingleDimScan { .. } => "SingleDimScanExec",
            PhysicalPlan::ReferenceSkyline { .. } => "ReferenceSkylineExec",
            PhysicalPlan::Sort { .. } => "SortExec",
        }
    }

    fn fmt_indent(&self, f: &mut fmt::Formatter<'_>, depth: usize) -> fmt::Result {
        let pad = "  ".repeat(depth);
        let in_schema = || self.input().map(|i| i.schema()).unwrap_or_default();
        match self {
            PhysicalPlan::Scan { table, .. } => writeln!(f, "{pad}ScanExec: {table}")?,
            PhysicalPlan::Filter { predicate, .. } => {
                writeln!(f, "{pad}FilterExec: {}", predicate.display(&in_schema()))?
            }
            PhysicalPlan::Project { columns, .. } => {
                let s = in_schema();
                let names: Vec<&str> = columns.iter().map(|&c| s.column(c).name.as_str()).collect();
                writeln!(f, "{pad}ProjectExec: {}", names.join(", "))?
            }
            PhysicalPlan::LocalSkyline {
                spec, distribution, ..
            } => writeln!(
                f,
                "{pad}LocalSkylineExec({distribution:?}): {}",
                display_spec(spec, &in_schema())
            )?,
            PhysicalPlan::GlobalSkyline { spec, variant, .. } => writeln!(
                f,
                "{pad}GlobalSkylineExec({variant:?}): {} [all tuples on one worker]",
                display_spec(spec, &in_schema())
            )?,
            PhysicalPlan::SingleDimScan { spec, .. } => writeln!(
                f,
                "{pad}SingleDimScanExec: {}",
                display_spec(spec, &in_schema())
            )?,
            PhysicalPlan::ReferenceSkyline { spec, mode, .. } => writeln!(
                f,
                "{pad}ReferenceSkylineExec({mode:?}): {}",
                display_spec(spec, &in_schema())
            )?,
            PhysicalPlan::Sort {
                column, descending, ..
            } => writeln!(
                f,
                "{pad}SortExec: {} {}",
                in_schema().column(*column).name,
                if *descending { "DESC" } else { "ASC" }
            )?,
        }
        match self.input() {
            Some(input) => input.fmt_indent(f, depth + 1),
            None => Ok(()),
        }
    }
}

impl fmt::Display for PhysicalPlan {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.fmt_indent(f, 0)
    }
}

/// Lowers a logical plan, choosing the skyline strategy.
///
/// In `Auto` mode the complete pipeline is used iff the query says `COMPLETE`
/// or no skyline column is nullable; otherwise the signature-partitioned
/// incomplete pipeline. A forced complete variant on nullable data without
/// `COMPLETE` is rejected. Forced variants also lower single-dimension nodes
/// with the forced strategy, so benchmarks compare like with like.
pub fn select_algorithm(plan: LogicalPlan, choice: AlgorithmChoice) -> Result<PhysicalPlan> {
    Ok(match plan {
        LogicalPlan::Scan { table, schema } => PhysicalPlan::Scan { table, schema },
        LogicalPlan::Filter { predicate, input } => PhysicalPlan::Filter {
            predicate,
            input: Box::new(select_algorithm(*input, choice)?),
        },
        LogicalPlan::Project { columns, input } => PhysicalPlan::Project {
            columns,
            input: Box::new(select_algorithm(*input, choice)?),
        },
        LogicalPlan::Sort {
            column,
            descending,
            input,
        } => PhysicalPlan::Sort {
            column,
            descending,
            input: Box::new(select_algorithm(*input, choice)?),
        },
        LogicalPlan::SingleDim { spec, input } if choice == AlgorithmChoice::Auto => {
            PhysicalPlan::SingleDimScan {
                spec,
                input: Box::new(select_algorithm(*input, choice)?),
            }
        }
        LogicalPlan::Skyline { spec, input } | LogicalPlan::SingleDim { spec, input } => {
            let nullable = spec.is_nullable(&input.schema());
            let complete_ok = spec.complete || !nullable;
            let child = Box::new(select_algorithm(*input, choice)?);
            lower_skyline(spec, child, choice, complete_ok)?
        }
    })
}

fn lower_skyline(
    spec: SkylineSpec,
    child: Box<PhysicalPlan>,
    choice: AlgorithmChoice,
    complete_ok: bool,
) -> Result<PhysicalPlan> {
    let distributed_complete = |spec: SkylineSpec, child| PhysicalPlan::GlobalSkyline {
        spec: spec.clone(),
        variant: GlobalVariant::Complete,
        input: Box::new(PhysicalPlan::LocalSkyline {
            spec,
            distribution: Distribution::Unspecified,
            input: child,
        }),
    };
    let reject = |choice: AlgorithmChoice| {
        Error::Planning(format!(
            "{choice} requires complete data, but a skyline column is nullable and the query \
             does not say COMPLETE"
        ))
    };
    Ok(match choice {
        AlgorithmChoice::Auto if complete_ok => distributed_complete(spec, child),
        AlgorithmChoice::Auto | AlgorithmChoice::DistributedIncomplete => {
            PhysicalPlan::GlobalSkyline {
                spec: spec.clone(),
                variant: GlobalVariant::Incomplete,
                input: Box::new(PhysicalPlan::LocalSkyline {
                    spec,
                    distribution: Distribution::BySignature,
                    input: child,
                }),
            }
        }
        AlgorithmChoice::DistributedComplete if complete_ok => distributed_complete(spec, child),
        AlgorithmChoice::NondistributedComplete if complete_ok => PhysicalPlan::GlobalSkyline {
            spec,
            variant: GlobalVariant::Complete,
            input: child,
        },
        AlgorithmChoice::DistributedComplete | AlgorithmChoice::NondistributedComplete => {
            return Err(reject(choice))
        }
        AlgorithmChoice::Reference => PhysicalPlan::ReferenceSkyline {
            spec,
            mode: if complete_ok {
                DominanceMode::Complete
            } else {
                DominanceMode::Incomplete
            },
            input: child,
        },
    })
}
