use itertools::Itertools;

use super::{mask_of, predicates, DominationResult};
use crate::config::SolverCaps;
use crate::error::{Error, Result};
use crate::graph::{distances, Graph, INF};

/// Subset solvers share one enumeration discipline: increasing cardinality,
/// lexicographic within cardinality. The first feasible subset is the
/// witness, which pins witness identity across runs.
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

fn min_subset<F: FnMut(&[usize]) -> bool>(n: usize, mut feasible: F) -> Option<Vec<usize>> {
    for c in 0..=n {
        for set in (0..n).combinations(c) {
            if feasible(&set) {
                return Some(set);
            }
        }
    }
    None
}

fn max_subset<F: FnMut(&[usize]) -> bool>(n: usize, mut feasible: F) -> Option<Vec<usize>> {
    for c in (0..=n).rev() {
        for set in (0..n).combinations(c) {
            if feasible(&set) {
                return Some(set);
            }
        }
    }
    None
}

/// Minimum dominating set.
pub fn domination_number(g: &Graph, caps: &SolverCaps) -> Result<DominationResult> {
    check_cap(g, caps, "domination")?;
    let open = g.adjacency_masks();
    let set = min_subset(g.n(), |s| {
        let m = mask_of(s);
        (0..g.n()).all(|v| m & (1 << v) != 0 || open[v] & m != 0)
    })
    .expect("V is dominating");
    debug_assert!(predicates::is_dominating(g, &set));
    Ok(DominationResult::set("gamma", set))
}

/// Minimum dominating set inducing a connected subgraph. Requires a
/// connected input.
pub fn connected_domination_number(g: &Graph, caps: &SolverCaps) -> Result<DominationResult> {
    check_cap(g, caps, "connected domination")?;
    if !g.is_connected() {
        return Err(Error::Disconnected {
            op: "connected domination",
        });
    }
    let set = min_subset(g.n(), |s| {
        predicates::is_dominating(g, s) && predicates::induces_connected(g, s)
    })
    .expect("V is connected dominating");
    Ok(DominationResult::set("gamma_c", set))
}

/// Maximum independent set size (beta_0).
pub fn independence_number(g: &Graph, caps: &SolverCaps) -> Result<DominationResult> {
    check_cap(g, caps, "independence")?;
    let masks = g.adjacency_masks();
    let set = max_subset(g.n(), |s| {
        let m = mask_of(s);
        s.iter().all(|&v| masks[v] & m == 0)
    })
    .expect("empty set is independent");
    debug_assert!(predicates::is_independent(g, &set));
    Ok(DominationResult::set("beta0", set))
}

/// Minimum independent dominating set (i).
pub fn independent_domination_number(g: &Graph, caps: &SolverCaps) -> Result<DominationResult> {
    check_cap(g, caps, "independent domination")?;
    let masks = g.adjacency_masks();
    let set = min_subset(g.n(), |s| {
        let m = mask_of(s);
        s.iter().all(|&v| masks[v] & m == 0)
            && (0..g.n()).all(|v| m & (1 << v) != 0 || masks[v] & m != 0)
    })
    .expect("a maximal independent set is dominating");
    debug_assert!(predicates::is_independent(g, &set) && predicates::is_dominating(g, &set));
    Ok(DominationResult::set("i", set))
}

/// Minimum k-dominating set: every outside vertex has at least k neighbors
/// inside. V itself is always feasible.
pub fn k_domination_number(g: &Graph, k: usize, caps: &SolverCaps) -> Result<DominationResult> {
    assert!(k >= 1, "k_domination_number requires k >= 1");
    check_cap(g, caps, "k-domination")?;
    let masks = g.adjacency_masks();
    let set = min_subset(g.n(), |s| {
        let m = mask_of(s);
        (0..g.n())
            .all(|v| m & (1 << v) != 0 || (masks[v] & m).count_ones() as usize >= k)
    })
    .expect("V is k-dominating");
    debug_assert!(predicates::is_k_dominating(g, &set, k));
    Ok(DominationResult::set(&format!("gamma_{k}"), set))
}

/// Minimum distance-k dominating set. Requires a connected input.
pub fn distance_k_domination_number(
    g: &Graph,
    k: usize,
    caps: &SolverCaps,
) -> Result<DominationResult> {
    assert!(k >= 1, "distance_k_domination_number requires k >= 1");
    check_cap(g, caps, "distance-k domination")?;
    if !g.is_connected() {
        return Err(Error::Disconnected {
            op: "distance-k domination",
        });
    }
    let dm = distances(g);
    let set = min_subset(g.n(), |s| {
        (0..g.n()).all(|v| {
            s.iter().any(|&x| {
                let d = dm.get(v, x);
                d != INF && d as usize <= k
            })
        })
    })
    .expect("V is distance-k dominating");
    debug_assert!(predicates::is_distance_k_dominating(g, &set, k));
    Ok(DominationResult::set(&format!("gamma_dist_{k}"), set))
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
    fn gamma_examples() {
        assert_eq!(domination_number(&gen(FamilySpec::path(5)), &caps()).unwrap().value, 2);
        assert_eq!(domination_number(&gen(FamilySpec::complete(1)), &caps()).unwrap().value, 1);
        let (c, _) = corona(&gen(FamilySpec::cycle(4)), &gen(FamilySpec::complete(2)));
        assert_eq!(domination_number(&c, &caps()).unwrap().value, 4);
    }

    #[test]
    fn gamma_c_examples() {
        assert_eq!(
            connected_domination_number(&gen(FamilySpec::path(5)), &caps()).unwrap().value,
            3
        );
        assert_eq!(
            connected_domination_number(&gen(FamilySpec::complete(4)), &caps()).unwrap().value,
            1
        );
        let (c, _) = corona(&gen(FamilySpec::path(3)), &gen(FamilySpec::complete(1)));
        assert_eq!(connected_domination_number(&c, &caps()).unwrap().value, 3);
        let disc = gen(FamilySpec::empty(3));
        assert!(matches!(
            connected_domination_number(&disc, &caps()),
            Err(Error::Disconnected { .. })
        ));
    }

    #[test]
    fn beta0_examples() {
        assert_eq!(independence_number(&gen(FamilySpec::cycle(5)), &caps()).unwrap().value, 2);
        assert_eq!(independence_number(&gen(FamilySpec::empty(4)), &caps()).unwrap().value, 4);
        let (c, _) = corona(&gen(FamilySpec::cycle(4)), &gen(FamilySpec::complete(2)));
        assert_eq!(independence_number(&c, &caps()).unwrap().value, 4);
    }

    #[test]
    fn i_examples() {
        assert_eq!(
            independent_domination_number(&gen(FamilySpec::path(3)), &caps()).unwrap().value,
            1
        );
        assert_eq!(
            independent_domination_number(&gen(FamilySpec::complete(5)), &caps()).unwrap().value,
            1
        );
        // i(P3 . N2) = 3*2 - 2*(2-1) = 4
        let (c, _) = corona(&gen(FamilySpec::path(3)), &gen(FamilySpec::empty(2)));
        assert_eq!(independent_domination_number(&c, &caps()).unwrap().value, 4);
    }

    #[test]
    fn gamma_k_examples() {
        assert_eq!(k_domination_number(&gen(FamilySpec::cycle(4)), 2, &caps()).unwrap().value, 2);
        // gamma_1 = gamma
        let p5 = gen(FamilySpec::path(5));
        assert_eq!(
            k_domination_number(&p5, 1, &caps()).unwrap().value,
            domination_number(&p5, &caps()).unwrap().value
        );
        // gamma_2(P2 . C4) = 2 * min{gamma_2(C4), gamma_1(C4)+1} = 4
        let (c, _) = corona(&gen(FamilySpec::path(2)), &gen(FamilySpec::cycle(4)));
        assert_eq!(k_domination_number(&c, 2, &caps()).unwrap().value, 4);
    }

    #[test]
    fn gamma_dist_k_examples() {
        let p5 = gen(FamilySpec::path(5));
        assert_eq!(distance_k_domination_number(&p5, 2, &caps()).unwrap().value, 1);
        assert_eq!(
            distance_k_domination_number(&p5, 1, &caps()).unwrap().value,
            domination_number(&p5, &caps()).unwrap().value
        );
        // gamma_{<=2}(P5 . K1) = gamma_{<=1}(P5) = 2
        let (c, _) = corona(&p5, &gen(FamilySpec::complete(1)));
        assert_eq!(distance_k_domination_number(&c, 2, &caps()).unwrap().value, 2);
    }

    #[test]
    fn witness_is_lexicographic_first() {
        let p5 = gen(FamilySpec::path(5));
        let res = domination_number(&p5, &caps()).unwrap();
        // {0, 3} is the lexicographically first dominating pair of P5
        assert_eq!(res.witness, super::super::Witness::Set(vec![0, 3]));
    }

    #[test]
    fn cap_enforced() {
        let small = SolverCaps {
            subset: 4,
            ..SolverCaps::default()
        };
        assert!(matches!(
            domination_number(&gen(FamilySpec::path(5)), &small),
            Err(Error::SizeCap { .. })
        ));
    }
}
