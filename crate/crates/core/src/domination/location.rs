use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::{predicates, DominationResult};
use crate::config::SolverCaps;
use crate::error::{Error, Result};
use crate::graph::{distances, Graph};

/// The three location parameters of a connected graph, each with witness:
/// metric dimension, resolving-dominating number and locating-dominating
/// number. The chain dim <= gamma_ld <= gamma_l_d always holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LocationNumbers {
    pub dim: DominationResult,
    pub gamma_ld: DominationResult,
    pub gamma_l_d: DominationResult,
}

fn check_cap(g: &Graph, caps: &SolverCaps, solver: &'static str) -> Result<()> {
    let cap = caps.subset.min(64);
    if g.n() > cap {
        return Err(Error::SizeCap {
            solver,
            n: g.n(),
            cap,
        });
    }
    Ok(())
}

/// Computes dim, gamma_ld and gamma_l_d by subset enumeration (increasing
/// cardinality, lexicographic). dim(K1) = 0: the empty set resolves a
/// single vertex.
pub fn location_numbers(g: &Graph, caps: &SolverCaps) -> Result<LocationNumbers> {
    check_cap(g, caps, "location")?;
    if !g.is_connected() {
        return Err(Error::Disconnected { op: "location" });
    }
    let dm = distances(g);
    let n = g.n();
    let find = |pred: &dyn Fn(&[usize]) -> bool| -> Vec<usize> {
        for c in 0..=n {
            for set in (0..n).combinations(c) {
                if pred(&set) {
                    return set;
                }
            }
        }
        unreachable!("V satisfies every location predicate");
    };
    let dim = find(&|s: &[usize]| predicates::is_resolving(&dm, n, s));
    let gamma_ld = find(&|s: &[usize]| {
        predicates::is_resolving(&dm, n, s) && predicates::is_dominating(g, s)
    });
    let gamma_l_d = find(&|s: &[usize]| predicates::is_locating_dominating(g, s));
    Ok(LocationNumbers {
        dim: DominationResult::set("dim", dim),
        gamma_ld: DominationResult::set("gamma_ld", gamma_ld),
        gamma_l_d: DominationResult::set("gamma_l_d", gamma_l_d),
    })
}

/// Structural classification of a graph H for the locating-dominating
/// corona formula.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum LdCase {
    /// Some minimum locating-dominating set A has every outside trace a
    /// proper subset of A.
    CaseI { evidence: Vec<usize> },
    /// Every minimum locating-dominating set B has an outside vertex u with
    /// N_B(u) = B; one such u is recorded per set.
    CaseII { evidence: Vec<(Vec<usize>, usize)> },
}

/// Classifies H by enumerating ALL minimum locating-dominating sets. The two
/// cases are exhaustive and mutually exclusive: a trace is always a subset
/// of the set, so "not proper" means equality.
pub fn ld_case_classify(h: &Graph, caps: &SolverCaps) -> Result<LdCase> {
    check_cap(h, caps, "locating-dominating classification")?;
    if !h.is_connected() {
        return Err(Error::Disconnected {
            op: "locating-dominating classification",
        });
    }
    let n = h.n();
    let value = location_numbers(h, caps)?.gamma_l_d.value;
    let mut case2_evidence = Vec::new();
    for set in (0..n).combinations(value) {
        if !predicates::is_locating_dominating(h, &set) {
            continue;
        }
        let in_set: std::collections::BTreeSet<usize> = set.iter().copied().collect();
        let full_trace_vertex = (0..n).filter(|v| !in_set.contains(v)).find(|&v| {
            let trace: std::collections::BTreeSet<usize> =
                h.neighbors(v).filter(|u| in_set.contains(u)).collect();
            trace == in_set
        });
        match full_trace_vertex {
            None => return Ok(LdCase::CaseI { evidence: set }),
            Some(u) => case2_evidence.push((set, u)),
        }
    }
    Ok(LdCase::CaseII {
        evidence: case2_evidence,
    })
}
