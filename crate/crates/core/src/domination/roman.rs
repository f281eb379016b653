use itertools::Itertools;
use serde::{Deserialize, Serialize};

use super::{mask_of, predicates, DominationResult, Witness};
use crate::config::SolverCaps;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// A Roman dominating function: labels in {0,1,2}, every 0-vertex adjacent
/// to a 2-vertex. Weight is 2*b2 + b1.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RomanAssignment {
    pub values: Vec<u8>,
}

impl RomanAssignment {
    pub fn weight(&self) -> usize {
        self.values.iter().map(|&v| v as usize).sum()
    }

    /// Sizes of the induced partition (b0, b1, b2).
    pub fn partition_sizes(&self) -> (usize, usize, usize) {
        let mut b = [0usize; 3];
        for &v in &self.values {
            b[v as usize] += 1;
        }
        (b[0], b[1], b[2])
    }
}

/// Builds the cheapest Roman function with the given B2: vertices outside
/// N[B2] get label 1, the rest of the outside gets 0.
fn completion(g: &Graph, closed: &[u64], b2_mask: u64) -> RomanAssignment {
    let covered = (0..g.n())
        .filter(|&v| b2_mask & (1 << v) != 0)
        .fold(0u64, |m, v| m | closed[v]);
    let values = (0..g.n())
        .map(|v| {
            if b2_mask & (1 << v) != 0 {
                2
            } else if covered & (1 << v) == 0 {
                1
            } else {
                0
            }
        })
        .collect();
    RomanAssignment { values }
}

fn roman_weight(g: &Graph, closed: &[u64], b2_mask: u64) -> usize {
    let covered = (0..g.n())
        .filter(|&v| b2_mask & (1 << v) != 0)
        .fold(0u64, |m, v| m | closed[v]);
    2 * (b2_mask.count_ones() as usize) + g.n() - covered.count_ones() as usize
}

/// Exact Roman domination number with one minimum-weight witness. Enumerates
/// candidate B2 sets by increasing cardinality, lexicographic within; stops
/// once 2|B2| can no longer beat the best weight.
pub fn roman_domination_number(g: &Graph, caps: &SolverCaps) -> Result<DominationResult> {
    let cap = caps.subset.min(64);
    if g.n() > cap {
        return Err(Error::SizeCap {
            solver: "Roman domination",
            n: g.n(),
            cap,
        });
    }
    let closed = g.closed_masks();
    let mut best = g.n(); // B2 empty, all ones
    let mut witness = completion(g, &closed, 0);
    for c in 1..=g.n() {
        if 2 * c >= best {
            break;
        }
        for set in (0..g.n()).combinations(c) {
            let m = mask_of(&set);
            let w = roman_weight(g, &closed, m);
            if w < best {
                best = w;
                witness = completion(g, &closed, m);
            }
        }
    }
    debug_assert!(predicates::is_roman(g, &witness));
    debug_assert_eq!(witness.weight(), best);
    Ok(DominationResult {
        parameter: "gamma_R".into(),
        value: best,
        witness: Witness::Roman(witness),
        certified: true,
    })
}

/// Exact Roman domination with the maximum b2 over ALL minimum-weight Roman
/// functions (full enumeration at the optimum). The returned witness
/// realizes b2max.
pub fn roman_domination(g: &Graph, caps: &SolverCaps) -> Result<(DominationResult, usize)> {
    let cap = caps.roman_enum.min(63);
    if g.n() > cap {
        return Err(Error::SizeCap {
            solver: "Roman full-optimum enumeration",
            n: g.n(),
            cap,
        });
    }
    let closed = g.closed_masks();
    let mut best = usize::MAX;
    for m in 0u64..(1u64 << g.n()) {
        best = best.min(roman_weight(g, &closed, m));
    }
    // Second pass: largest B2 among the optima, lexicographically first
    // within that cardinality.
    let mut b2max = 0usize;
    let mut witness_mask = None;
    for c in (0..=g.n()).rev() {
        if witness_mask.is_some() {
            break;
        }
        for set in (0..g.n()).combinations(c) {
            let m = mask_of(&set);
            if roman_weight(g, &closed, m) == best {
                b2max = c;
                witness_mask = Some(m);
                break;
            }
        }
    }
    let witness = completion(g, &closed, witness_mask.expect("optimum exists"));
    debug_assert!(predicates::is_roman(g, &witness));
    debug_assert_eq!(witness.weight(), best);
    Ok((
        DominationResult {
            parameter: "gamma_R".into(),
            value: best,
            witness: Witness::Roman(witness),
            certified: true,
        },
        b2max,
    ))
}
