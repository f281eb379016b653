//! Certified exact solvers for the domination-type parameters: plain,
//! connected, independent, k-, distance-k and Roman domination, location
//! parameters, and domatic/idomatic partitions, together with the
//! constructive corona witnesses.

mod construct;
mod location;
mod partition;
pub mod predicates;
mod roman;
mod solvers;

pub use construct::{construct_corona_witness, CoronaWitness, CoronaWitnessKind};
pub use location::{ld_case_classify, location_numbers, LdCase, LocationNumbers};
pub use partition::{domatic_number, idomatic_number, independent_partition_exists};
pub use roman::{roman_domination, roman_domination_number, RomanAssignment};
pub use solvers::{
    connected_domination_number, distance_k_domination_number, domination_number,
    independence_number, independent_domination_number, k_domination_number,
};

use serde::{Deserialize, Serialize};

/// Witness object attached to a certified parameter value.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Witness {
    Set(Vec<usize>),
    Roman(RomanAssignment),
    Partition(Vec<Vec<usize>>),
}

/// A certified parameter value with its witness. `certified` is true when
/// the enumeration that produced the value was exhausted.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DominationResult {
    pub parameter: String,
    pub value: usize,
    pub witness: Witness,
    pub certified: bool,
}

impl DominationResult {
    pub fn set(parameter: &str, set: Vec<usize>) -> Self {
        DominationResult {
            parameter: parameter.to_string(),
            value: set.len(),
            witness: Witness::Set(set),
            certified: true,
        }
    }

    /// Witness JSON per the documented schema.
    pub fn witness_json(&self) -> serde_json::Value {
        match &self.witness {
            Witness::Set(s) => serde_json::json!({
                "parameter": self.parameter,
                "value": self.value,
                "set": s,
            }),
            Witness::Roman(r) => serde_json::json!({
                "parameter": self.parameter,
                "value": self.value,
                "assignment": r.values,
            }),
            Witness::Partition(p) => serde_json::json!({
                "parameter": self.parameter,
                "value": self.value,
                "partition": p,
            }),
        }
    }
}

pub(crate) fn mask_of(set: &[usize]) -> u64 {
    set.iter().fold(0u64, |m, &v| m | (1 << v))
}
