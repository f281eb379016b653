//! Defining predicates for the domination-type parameters. These are the
//! independent validators used to re-check every witness; they never share
//! code with the solvers' search loops.

use std::collections::BTreeSet;

use crate::graph::{distances, DistanceMatrix, Graph, INF};

use super::RomanAssignment;

/// Every vertex outside the set has a neighbor inside.
pub fn is_dominating(g: &Graph, set: &[usize]) -> bool {
    let in_set: BTreeSet<usize> = set.iter().copied().collect();
    g.vertices()
        .filter(|v| !in_set.contains(v))
        .all(|v| g.neighbors(v).any(|u| in_set.contains(&u)))
}

/// The set induces a connected subgraph (empty and singleton sets count).
pub fn induces_connected(g: &Graph, set: &[usize]) -> bool {
    if set.len() <= 1 {
        return true;
    }
    let in_set: BTreeSet<usize> = set.iter().copied().collect();
    let mut seen = BTreeSet::new();
    let mut stack = vec![set[0]];
    seen.insert(set[0]);
    while let Some(u) = stack.pop() {
        for v in g.neighbors(u) {
            if in_set.contains(&v) && seen.insert(v) {
                stack.push(v);
            }
        }
    }
    seen.len() == set.len()
}

/// No two set members are adjacent.
pub fn is_independent(g: &Graph, set: &[usize]) -> bool {
    let in_set: BTreeSet<usize> = set.iter().copied().collect();
    set.iter().all(|&v| g.neighbors(v).all(|u| !in_set.contains(&u)))
}

/// Every vertex outside the set has at least `k` neighbors inside.
pub fn is_k_dominating(g: &Graph, set: &[usize], k: usize) -> bool {
    let in_set: BTreeSet<usize> = set.iter().copied().collect();
    g.vertices()
        .filter(|v| !in_set.contains(v))
        .all(|v| g.neighbors(v).filter(|u| in_set.contains(u)).count() >= k)
}

/// Every vertex is within distance `k` of the set.
pub fn is_distance_k_dominating(g: &Graph, set: &[usize], k: usize) -> bool {
    let dm = distances(g);
    g.vertices().all(|v| {
        set.iter().any(|&s| {
            let d = dm.get(v, s);
            d != INF && d as usize <= k
        })
    })
}

/// Roman condition: every vertex labelled 0 has a neighbor labelled 2.
pub fn is_roman(g: &Graph, f: &RomanAssignment) -> bool {
    f.values.len() == g.n()
        && g.vertices()
            .filter(|&v| f.values[v] == 0)
            .all(|v| g.neighbors(v).any(|u| f.values[u] == 2))
}

/// The set resolves the graph: all distance vectors are pairwise distinct.
/// Requires precomputed distances; `INF` entries never resolve a pair.
pub fn is_resolving(dm: &DistanceMatrix, n: usize, set: &[usize]) -> bool {
    for u in 0..n {
        for v in u + 1..n {
            if set.iter().all(|&s| dm.get(u, s) == dm.get(v, s)) {
                return false;
            }
        }
    }
    true
}

/// Locating-dominating: dominating, and vertices outside the set have
/// pairwise distinct traces N(u) ∩ D.
pub fn is_locating_dominating(g: &Graph, set: &[usize]) -> bool {
    if !is_dominating(g, set) {
        return false;
    }
    let in_set: BTreeSet<usize> = set.iter().copied().collect();
    let outside: Vec<usize> = g.vertices().filter(|v| !in_set.contains(v)).collect();
    let traces: Vec<BTreeSet<usize>> = outside
        .iter()
        .map(|&v| g.neighbors(v).filter(|u| in_set.contains(u)).collect())
        .collect();
    for i in 0..traces.len() {
        for j in i + 1..traces.len() {
            if traces[i] == traces[j] {
                return false;
            }
        }
    }
    true
}

/// The classes partition the vertex set and every class is dominating.
pub fn is_domatic_partition(g: &Graph, classes: &[Vec<usize>]) -> bool {
    is_partition(g, classes) && classes.iter().all(|c| is_dominating(g, c))
}

/// The classes partition the vertex set into independent dominating sets.
pub fn is_idomatic_partition(g: &Graph, classes: &[Vec<usize>]) -> bool {
    is_domatic_partition(g, classes) && classes.iter().all(|c| is_independent(g, c))
}

fn is_partition(g: &Graph, classes: &[Vec<usize>]) -> bool {
    let mut seen = vec![false; g.n()];
    for class in classes {
        if class.is_empty() {
            return false;
        }
        for &v in class {
            if v >= g.n() || seen[v] {
                return false;
            }
            seen[v] = true;
        }
    }
    seen.iter().all(|&s| s)
}
