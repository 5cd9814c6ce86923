// Copyright 2026 The Skyline Authors. Licensed under Apache-2.0.

use super::logical::LogicalPlan;
use crate::model::DimKind;

pub trait OptimizerRule: Send + Sync {
    fn name(&self) -> &'static str;

    fn rewrite(&self, plan: LogicalPlan) -> LogicalPlan;
}

/// Replaces a skyline over exactly one MIN/MAX dimension by a scan for the
/// optimum, when the data is known complete (non-nullable column or
/// `COMPLETE`). On nullable data a NULL row is incomparable to everything and
/// belongs in the result, which the scan would drop.
#[derive(Debug, Default)]
pub struct SingleDimensionRule;

impl OptimizerRule for SingleDimensionRule {
    fn name(&self) -> &'static str {
        "single_dimension_skyline"
    }

    fn rewrite(&self, plan: LogicalPlan) -> LogicalPlan {
        plan.transform_up(&|node| match node {
            LogicalPlan::Skyline { spec, input } => {
                let fires = match spec.dims() {
                    [dim] => {
                        dim.kind != DimKind::Diff
                            && (spec.complete || !input.schema().column(dim.column).nullable)
                    }
                    _ => false,
                };
                if fires {
                    LogicalPlan::SingleDim { spec, input }
                } else {
                    LogicalPlan::Skyline { spec, input }
                }
            }
            other => other,
        })
    }
}

/// Ordered list of rewrite rules, applied once each.
pub struct Optimizer {
    rules: Vec<Box<dyn OptimizerRule>>,
}

impl Default for Optimizer {
    fn default() -> Self {
        Self {
            rules: vec![Box::new(SingleDimensionRule)],
        }
    }
}

impl Optimizer {
    pub fn new() -> Self {
        Self::default()
    }

    /// An optimizer with no rules registered.
    pub fn empty() -> Self {
        Self { rules: Vec::new() }
    }

    pub fn with_rule(mut self, rule: impl OptimizerRule + 'static) -> Self {
        self.rules.push(Box::new(rule));
        self
    }

    pub fn rule_names(&self) -> Vec<&'static str> {
        self.rules.iter().map(|r| r.name()).collect()
    }

    pub fn optimize(&self, plan: LogicalPlan) -> LogicalPlan {
        self.rules.iter().fold(plan, |p, rule| rule.rewrite(p))
    }
}

/// Applies the default rule set.
pub fn optimize(plan: LogicalPlan) -> LogicalPlan {
    Optimizer::default().optimize(plan)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{ColumnKind, ColumnType, Schema};
    use crate::planner::analyze;
    use crate::sql::parse_query;

    fn plan(sql: &str) -> LogicalPlan {
        let cat = |_: &str| {
            Schema::new(vec![
                ColumnType::new("price", ColumnKind::Int, false),
                ColumnType::new("rating", ColumnKind::Float, false),
                ColumnType::new("maybe", ColumnKind::Int, true),
            ])
            .ok()
        };
        analyze(&parse_query(sql).unwrap(), &cat).unwrap()
    }

    fn has_single_dim(p: &LogicalPlan) -> bool {
        matches!(p, LogicalPlan::SingleDim { .. }) || p.input().is_some_and(has_single_dim)
    }

    #[test]
    fn fires_on_one_non_nullable_dimension() {
        assert!(has_single_dim(&optimize(plan(
            "SELECT * FROM t SKYLINE OF price MIN"
        ))));
        assert!(has_single_dim(&optimize(plan(
            "SELECT * FROM t SKYLINE OF COMPLETE maybe MAX"
        ))));
    }

    #[test]
    fn leaves_other_skylines_alone() {
        for sql in [
            "SELECT * FROM t SKYLINE OF price MIN, rating MAX",
            "SELECT * FROM t SKYLINE OF maybe MIN",
            "SELECT * FROM t SKYLINE OF price MIN, maybe DIFF",
            "SELECT * FROM t",
        ] {
            let p = plan(sql);
            assert_eq!(optimize(p.clone()), p, "{sql}");
        }
    }

    #[test]
    fn empty_optimizer_is_identity() {
        let p = plan("SELECT * FROM t SKYLINE OF price MIN");
        assert_eq!(Optimizer::empty().optimize(p.clone()), p);
        assert_eq!(Optimizer::new().rule_names(), ["single_dimension_skyline"]);
    }
}
