use super::{predicates, DominationResult, Witness};
use crate::coloring::chromatic_number;
use crate::config::SolverCaps;
use crate::error::{Error, Result};
use crate::graph::Graph;

fn check_cap(g: &Graph, caps: &SolverCaps, solver: &'static str) -> Result<()> {
    let cap = caps.partition.min(64);
    if g.n() > cap {
        return Err(Error::SizeCap {
            solver,
            n: g.n(),
            cap,
        });
    }
    Ok(())
}

/// Backtracking search for a partition of V into exactly `t` dominating
/// classes (independent classes too when `independent` is set). Vertices are
/// assigned in id order; a class index may exceed the opened range by at
/// most one, which breaks class-permutation symmetry.
fn find_partition(g: &Graph, t: usize, independent: bool) -> Option<Vec<Vec<usize>>> {
    let n = g.n();
    if t == 0 || t > n {
        return None;
    }
    let open = g.adjacency_masks();
    let closed = g.closed_masks();
    // Vertex u's domination by each class is decided once all of N[u] is
    // assigned; checking right then prunes hard.
    let last_assigned: Vec<usize> = (0..n)
        .map(|u| std::iter::once(u).chain(g.neighbors(u)).max().unwrap())
        .collect();
    let mut class_of = vec![usize::MAX; n];
    let mut class_masks = vec![0u64; t];

    fn rec(
        v: usize,
        n: usize,
        t: usize,
        opened: usize,
        independent: bool,
        open: &[u64],
        closed: &[u64],
        last_assigned: &[usize],
        class_of: &mut Vec<usize>,
        class_masks: &mut Vec<u64>,
    ) -> bool {
        if v == n {
            return opened == t;
        }
        // Not enough vertices left to open the remaining classes.
        if t - opened > n - v {
            return false;
        }
        let limit = (opened + 1).min(t);
        for c in 0..limit {
            if independent && open[v] & class_masks[c] != 0 {
                continue;
            }
            class_of[v] = c;
            class_masks[c] |= 1 << v;
            let now_opened = opened.max(c + 1);
            let mut ok = true;
            for u in 0..n {
                if last_assigned[u] == v {
                    // All future classes stay disjoint from N[u]; every one
                    // of the t classes must already hit it.
                    if (0..t).any(|cc| closed[u] & class_masks[cc] == 0) {
                        ok = false;
                        break;
                    }
                }
            }
            if ok
                && rec(
                    v + 1,
                    n,
                    t,
                    now_opened,
                    independent,
                    open,
                    closed,
                    last_assigned,
                    class_of,
                    class_masks,
                )
            {
                return true;
            }
            class_masks[c] &= !(1 << v);
            class_of[v] = usize::MAX;
        }
        false
    }

    if rec(
        0,
        n,
        t,
        0,
        independent,
        &open,
        &closed,
        &last_assigned,
        &mut class_of,
        &mut class_masks,
    ) {
        let mut classes = vec![Vec::new(); t];
        for v in 0..n {
            classes[class_of[v]].push(v);
        }
        Some(classes)
    } else {
        None
    }
}

/// Maximum number of classes in a partition into dominating sets. Bounded
/// above by min degree + 1; the trivial partition {V} always exists.
pub fn domatic_number(g: &Graph, caps: &SolverCaps) -> Result<DominationResult> {
    check_cap(g, caps, "domatic")?;
    let upper = (g.min_degree() + 1).min(g.n());
    for t in (1..=upper).rev() {
        if let Some(classes) = find_partition(g, t, false) {
            debug_assert!(predicates::is_domatic_partition(g, &classes));
            return Ok(DominationResult {
                parameter: "domatic".into(),
                value: t,
                witness: Witness::Partition(classes),
                certified: true,
            });
        }
    }
    unreachable!("{{V}} is always a domatic partition");
}

/// Maximum number of classes in a partition into independent dominating
/// sets, or `None` when the graph is not idomatic. Feasibility is not
/// monotone in the class count, so every candidate below the first success
/// need not be checked but absence requires exhausting all of them.
pub fn idomatic_number(g: &Graph, caps: &SolverCaps) -> Result<Option<DominationResult>> {
    check_cap(g, caps, "idomatic")?;
    let upper = (g.min_degree() + 1).min(g.n());
    for t in (1..=upper).rev() {
        if let Some(classes) = find_partition(g, t, true) {
            debug_assert!(predicates::is_idomatic_partition(g, &classes));
            return Ok(Some(DominationResult {
                parameter: "idomatic".into(),
                value: t,
                witness: Witness::Partition(classes),
                certified: true,
            }));
        }
    }
    Ok(None)
}

/// True iff G splits into `t` independent sets with empty classes permitted,
/// i.e. chi(G) <= t.
pub fn independent_partition_exists(g: &Graph, t: usize, caps: &SolverCaps) -> Result<bool> {
    assert!(t >= 1);
    Ok(chromatic_number(g, caps)?.value <= t)
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
    fn domatic_examples() {
        assert_eq!(domatic_number(&gen(FamilySpec::cycle(4)), &caps()).unwrap().value, 2);
        // d(P3 . C4) = d(C4) + 1 = 3; 15 vertices needs a raised cap
        let wide = SolverCaps {
            partition: 16,
            ..SolverCaps::default()
        };
        let (c, _) = corona(&gen(FamilySpec::path(3)), &gen(FamilySpec::cycle(4)));
        assert_eq!(domatic_number(&c, &wide).unwrap().value, 3);
        // d(G . K1) = 2 for connected G
        let (c, _) = corona(&gen(FamilySpec::cycle(5)), &gen(FamilySpec::complete(1)));
        assert_eq!(domatic_number(&c, &caps()).unwrap().value, 2);
    }

    #[test]
    fn idomatic_examples() {
        assert_eq!(
            idomatic_number(&gen(FamilySpec::complete(2)), &caps()).unwrap().unwrap().value,
            2
        );
        // C5 has no idomatic partition
        assert!(idomatic_number(&gen(FamilySpec::cycle(5)), &caps()).unwrap().is_none());
        // d_i(P4 . K2) = 3
        let (c, _) = corona(&gen(FamilySpec::path(4)), &gen(FamilySpec::complete(2)));
        assert_eq!(idomatic_number(&c, &caps()).unwrap().unwrap().value, 3);
    }

    #[test]
    fn k2_corona_k2_idomatic_is_three() {
        // Regression: d_i(K2 . K2) = 3 even though K2 has no 3-part
        // partition into nonempty independent sets.
        let (c, _) = corona(&gen(FamilySpec::complete(2)), &gen(FamilySpec::complete(2)));
        assert_eq!(idomatic_number(&c, &caps()).unwrap().unwrap().value, 3);
    }

    #[test]
    fn empty_graph_partitions() {
        let n3 = gen(FamilySpec::empty(3));
        assert_eq!(domatic_number(&n3, &caps()).unwrap().value, 1);
        assert_eq!(idomatic_number(&n3, &caps()).unwrap().unwrap().value, 1);
    }

    #[test]
    fn partition_exists_is_chromatic_test() {
        assert!(independent_partition_exists(&gen(FamilySpec::path(4)), 3, &caps()).unwrap());
        assert!(!independent_partition_exists(&gen(FamilySpec::complete(4)), 3, &caps()).unwrap());
        assert!(independent_partition_exists(&gen(FamilySpec::complete(2)), 3, &caps()).unwrap());
    }
}
