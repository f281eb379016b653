use serde::{Deserialize, Serialize};

/// Size caps for the exact solvers. All are vertex counts of the instance
/// handed to the solver and can be overridden from the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolverCaps {
    /// Exact (distance-k) coloring via branch and bound.
    pub coloring: usize,
    /// Subset-enumeration solvers (domination variants, independence, location).
    pub subset: usize,
    /// Partition solvers (domatic, idomatic).
    pub partition: usize,
    /// Roman full-optimum enumeration (b2max over all minimum-weight functions).
    pub roman_enum: usize,
}

impl Default for SolverCaps {
    fn default() -> Self {
        SolverCaps {
            coloring: 64,
            subset: 20,
            partition: 14,
            roman_enum: 14,
        }
    }
}
