use super::{validate_coloring, ChromaticResult, ColorAssignment};
use crate::config::SolverCaps;
use crate::error::{Error, Result};
use crate::graph::{power, Graph};

/// Exact chromatic number by branch and bound: greedy clique lower bound,
/// DSATUR greedy upper bound, then feasibility search with saturation-ordered
/// branching and lowest-id tie-breaking.
pub fn chromatic_number(g: &Graph, caps: &SolverCaps) -> Result<ChromaticResult> {
    if g.n() > caps.coloring {
        return Err(Error::SizeCap {
            solver: "exact coloring",
            n: g.n(),
            cap: caps.coloring,
        });
    }
    if g.n() == 0 {
        return Ok(ChromaticResult {
            value: 0,
            k: 1,
            witness: ColorAssignment::new(vec![]),
            nodes: 0,
        });
    }
    let masks = g.adjacency_masks();
    let clique = greedy_clique(&masks);
    let mut upper = greedy_dsatur(&masks);
    upper.canonicalize();
    let lb = clique.len();
    let ub = upper.palette;
    let mut nodes = 0u64;
    let mut best = None;
    for t in lb..ub {
        if let Some(colors) = try_color(&masks, &clique, t, &mut nodes) {
            best = Some((t, ColorAssignment::new(colors)));
            break;
        }
    }
    let (value, mut witness) = best.unwrap_or((ub, upper));
    witness.canonicalize();
    debug_assert!(validate_coloring(g, 1, &witness)?);
    debug_assert_eq!(witness.colors_used(), value);
    Ok(ChromaticResult {
        value,
        k: 1,
        witness,
        nodes,
    })
}

/// Exact distance-k chromatic number via proper coloring of the k-th power.
pub fn distance_k_chromatic(g: &Graph, k: usize, caps: &SolverCaps) -> Result<ChromaticResult> {
    assert!(k >= 1, "distance_k_chromatic requires k >= 1");
    let pk = power(g, k);
    let mut res = chromatic_number(&pk, caps)?;
    res.k = k;
    debug_assert!(validate_coloring(g, k, &res.witness)?);
    Ok(res)
}

/// Greedy clique: seed with the max-degree vertex, repeatedly add the common
/// neighbor with most candidates left. Lowest-id tie-break throughout.
fn greedy_clique(masks: &[u64]) -> Vec<usize> {
    let n = masks.len();
    let start = (0..n)
        .max_by_key(|&v| (masks[v].count_ones(), std::cmp::Reverse(v)))
        .expect("n >= 1");
    let mut clique = vec![start];
    let mut cand = masks[start];
    while cand != 0 {
        let next = (0..n)
            .filter(|&v| cand & (1 << v) != 0)
            .max_by_key(|&v| ((masks[v] & cand).count_ones(), std::cmp::Reverse(v)))
            .expect("cand nonempty");
        clique.push(next);
        cand &= masks[next];
    }
    clique
}

/// Greedy DSATUR coloring, used as the upper bound and fallback witness.
fn greedy_dsatur(masks: &[u64]) -> ColorAssignment {
    let n = masks.len();
    let mut colors: Vec<Option<usize>> = vec![None; n];
    for _ in 0..n {
        let v = pick_branch_vertex(masks, &colors).expect("uncolored vertex exists");
        let used = neighbor_colors(masks, &colors, v);
        let c = (0..).find(|&c| used & (1u128 << c) == 0).expect("free color");
        colors[v] = Some(c);
    }
    ColorAssignment::new(colors.into_iter().map(|c| c.unwrap()).collect())
}

/// Uncolored vertex of maximum saturation; ties by degree among uncolored
/// neighbors, then lowest id.
fn pick_branch_vertex(masks: &[u64], colors: &[Option<usize>]) -> Option<usize> {
    let n = masks.len();
    (0..n)
        .filter(|&v| colors[v].is_none())
        .max_by_key(|&v| {
            let sat = neighbor_colors(masks, colors, v).count_ones();
            let uncolored_deg = (0..n)
                .filter(|&u| masks[v] & (1 << u) != 0 && colors[u].is_none())
                .count();
            (sat, uncolored_deg, std::cmp::Reverse(v))
        })
}

fn neighbor_colors(masks: &[u64], colors: &[Option<usize>], v: usize) -> u128 {
    let mut used = 0u128;
    for (u, c) in colors.iter().enumerate() {
        if masks[v] & (1 << u) != 0 {
            if let Some(c) = c {
                used |= 1 << c;
            }
        }
    }
    used
}

/// Feasibility search for a proper coloring with exactly `t` colors. The
/// greedy clique is pre-colored with distinct colors as a symmetry break.
fn try_color(masks: &[u64], clique: &[usize], t: usize, nodes: &mut u64) -> Option<Vec<usize>> {
    if clique.len() > t {
        return None;
    }
    let n = masks.len();
    let mut colors: Vec<Option<usize>> = vec![None; n];
    for (c, &v) in clique.iter().enumerate() {
        colors[v] = Some(c);
    }
    let max_used = clique.len().saturating_sub(1);
    if search(masks, &mut colors, t, max_used, nodes) {
        Some(colors.into_iter().map(|c| c.unwrap()).collect())
    } else {
        None
    }
}

fn search(
    masks: &[u64],
    colors: &mut Vec<Option<usize>>,
    t: usize,
    max_used: usize,
    nodes: &mut u64,
) -> bool {
    let v = match pick_branch_vertex(masks, colors) {
        Some(v) => v,
        None => return true,
    };
    *nodes += 1;
    let used = neighbor_colors(masks, colors, v);
    let limit = (max_used + 2).min(t);
    for c in 0..limit {
        if used & (1u128 << c) != 0 {
            continue;
        }
        colors[v] = Some(c);
        if search(masks, colors, t, max_used.max(c), nodes) {
            return true;
        }
        colors[v] = None;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{corona, FamilySpec};

    fn caps() -> SolverCaps {
        SolverCaps::default()
    }

    fn gen(spec: FamilySpec) -> Graph {
        spec.generate().unwrap()
    }

    #[test]
    fn chromatic_basics() {
        assert_eq!(chromatic_number(&gen(FamilySpec::path(4)), &caps()).unwrap().value, 2);
        assert_eq!(chromatic_number(&gen(FamilySpec::complete(5)), &caps()).unwrap().value, 5);
        assert_eq!(chromatic_number(&gen(FamilySpec::cycle(5)), &caps()).unwrap().value, 3);
        assert_eq!(chromatic_number(&gen(FamilySpec::empty(4)), &caps()).unwrap().value, 1);
    }

    #[test]
    fn chromatic_of_corona() {
        // max{chi(P3), chi(K2)+1} = 3
        let (c, _) = corona(&gen(FamilySpec::path(3)), &gen(FamilySpec::complete(2)));
        assert_eq!(chromatic_number(&c, &caps()).unwrap().value, 3);
    }

    #[test]
    fn distance_k_values() {
        // D(P4) = 3 <= 3, so every pair needs a distinct color
        let p4 = gen(FamilySpec::path(4));
        assert_eq!(distance_k_chromatic(&p4, 3, &caps()).unwrap().value, 4);
        let c6 = gen(FamilySpec::cycle(6));
        assert_eq!(distance_k_chromatic(&c6, 2, &caps()).unwrap().value, 3);
        // k = 1 is the ordinary chromatic number
        assert_eq!(
            distance_k_chromatic(&c6, 1, &caps()).unwrap().value,
            chromatic_number(&c6, &caps()).unwrap().value
        );
    }

    #[test]
    fn witness_is_canonical_and_valid() {
        let g = gen(FamilySpec::cycle(7));
        let res = distance_k_chromatic(&g, 2, &caps()).unwrap();
        let mut canon = res.witness.clone();
        canon.canonicalize();
        assert_eq!(canon, res.witness);
        assert!(validate_coloring(&g, 2, &res.witness).unwrap());
        assert_eq!(res.witness.colors_used(), res.value);
    }

    #[test]
    fn size_cap_enforced() {
        let small = SolverCaps {
            coloring: 4,
            ..SolverCaps::default()
        };
        assert!(matches!(
            chromatic_number(&gen(FamilySpec::cycle(5)), &small),
            Err(Error::SizeCap { .. })
        ));
    }
}
