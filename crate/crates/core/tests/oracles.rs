//! Independent brute-force oracles: every solver value is re-derived here by
//! the dumbest possible enumeration (all assignments, all subsets, all set
//! partitions) on every default-family graph small enough to afford it.

use corona_lab::coloring::{chromatic_number, distance_k_chromatic};
use corona_lab::domination::{
    connected_domination_number, distance_k_domination_number, domatic_number, domination_number,
    idomatic_number, independence_number, independent_domination_number, k_domination_number,
    location_numbers, roman_domination_number,
};
use corona_lab::graph::{corona, distances, power, FamilySpec, Graph};
use corona_lab::SolverCaps;

fn caps() -> SolverCaps {
    SolverCaps::default()
}

/// Default families with n <= 9, plus a few small coronas.
fn small_instances() -> Vec<(String, Graph)> {
    let mut specs: Vec<FamilySpec> = Vec::new();
    specs.extend((2..=6).map(FamilySpec::path));
    specs.extend((3..=8).map(FamilySpec::cycle));
    specs.extend((1..=4).map(FamilySpec::complete));
    specs.push(FamilySpec::star(3));
    specs.push(FamilySpec::complete_bipartite(2, 3));
    specs.push(FamilySpec::complete_bipartite(3, 3));
    specs.push(FamilySpec::empty(2));
    specs.push(FamilySpec::path(3));
    specs.push(FamilySpec::cycle(4));
    specs.push(FamilySpec::random_tree(5, 0));
    specs.push(FamilySpec::random_tree(6, 1));
    let mut out: Vec<(String, Graph)> = specs
        .iter()
        .map(|s| (s.name(), s.generate().unwrap()))
        .collect();
    for (gs, hs) in [
        (FamilySpec::path(2), FamilySpec::complete(1)),
        (FamilySpec::path(2), FamilySpec::complete(2)),
        (FamilySpec::path(2), FamilySpec::path(3)),
        (FamilySpec::path(3), FamilySpec::complete(1)),
        (FamilySpec::path(4), FamilySpec::complete(1)),
        (FamilySpec::complete(1), FamilySpec::complete(3)),
        (FamilySpec::complete(2), FamilySpec::complete(2)),
        (FamilySpec::cycle(3), FamilySpec::complete(1)),
    ] {
        let (c, _) = corona(&gs.generate().unwrap(), &hs.generate().unwrap());
        out.push((format!("corona({},{})", gs.name(), hs.name()), c));
    }
    out
}

fn naive_colorable(g: &Graph, t: usize) -> bool {
    fn rec(g: &Graph, colors: &mut Vec<usize>, v: usize, t: usize) -> bool {
        if v == g.n() {
            return true;
        }
        for c in 0..t {
            if g.neighbors(v).all(|u| u >= v || colors[u] != c) {
                colors[v] = c;
                if rec(g, colors, v + 1, t) {
                    return true;
                }
            }
        }
        false
    }
    let mut colors = vec![0; g.n()];
    rec(g, &mut colors, 0, t)
}

fn naive_chromatic(g: &Graph) -> usize {
    if g.n() == 0 {
        return 0;
    }
    (1..=g.n()).find(|&t| naive_colorable(g, t)).unwrap()
}

fn set_of(mask: u32, n: usize) -> Vec<usize> {
    (0..n).filter(|&v| mask & (1 << v) != 0).collect()
}

fn dominates(g: &Graph, mask: u32) -> bool {
    (0..g.n()).all(|v| mask & (1 << v) != 0 || g.neighbors(v).any(|u| mask & (1 << u) != 0))
}

fn independent(g: &Graph, mask: u32) -> bool {
    g.edges()
        .iter()
        .all(|&(u, v)| mask & (1 << u) == 0 || mask & (1 << v) == 0)
}

fn connected_induced(g: &Graph, mask: u32) -> bool {
    let verts = set_of(mask, g.n());
    if verts.is_empty() {
        return false;
    }
    let mut seen = 1u32 << verts[0];
    let mut frontier = vec![verts[0]];
    while let Some(v) = frontier.pop() {
        for u in g.neighbors(v) {
            if mask & (1 << u) != 0 && seen & (1 << u) == 0 {
                seen |= 1 << u;
                frontier.push(u);
            }
        }
    }
    seen == mask
}

fn min_mask(n: usize, pred: impl Fn(u32) -> bool) -> Option<usize> {
    (0u32..1 << n)
        .filter(|&m| pred(m))
        .map(|m| m.count_ones() as usize)
        .min()
}

fn max_mask(n: usize, pred: impl Fn(u32) -> bool) -> Option<usize> {
    (0u32..1 << n)
        .filter(|&m| pred(m))
        .map(|m| m.count_ones() as usize)
        .max()
}

#[test]
fn chromatic_matches_naive() {
    for (name, g) in small_instances() {
        assert_eq!(
            chromatic_number(&g, &caps()).unwrap().value,
            naive_chromatic(&g),
            "chi oracle mismatch on {name}"
        );
    }
}

#[test]
fn distance_k_chromatic_matches_naive_power_coloring() {
    for (name, g) in small_instances() {
        for k in 2..=3 {
            assert_eq!(
                distance_k_chromatic(&g, k, &caps()).unwrap().value,
                naive_chromatic(&power(&g, k)),
                "chi_<={k} oracle mismatch on {name}"
            );
        }
    }
}

#[test]
fn chi_k_is_monotone_in_k() {
    for (name, g) in small_instances() {
        let mut prev = chromatic_number(&g, &caps()).unwrap().value;
        for k in 2..=4 {
            let cur = distance_k_chromatic(&g, k, &caps()).unwrap().value;
            assert!(prev <= cur, "chi_<=k not monotone at k={k} on {name}");
            prev = cur;
        }
    }
}

#[test]
fn domination_solvers_match_subset_oracles() {
    for (name, g) in small_instances() {
        let n = g.n();
        assert_eq!(
            domination_number(&g, &caps()).unwrap().value,
            min_mask(n, |m| dominates(&g, m)).unwrap(),
            "gamma mismatch on {name}"
        );
        assert_eq!(
            independence_number(&g, &caps()).unwrap().value,
            max_mask(n, |m| independent(&g, m)).unwrap(),
            "beta0 mismatch on {name}"
        );
        assert_eq!(
            independent_domination_number(&g, &caps()).unwrap().value,
            min_mask(n, |m| dominates(&g, m) && independent(&g, m)).unwrap(),
            "i mismatch on {name}"
        );
        if g.is_connected() {
            assert_eq!(
                connected_domination_number(&g, &caps()).unwrap().value,
                min_mask(n, |m| dominates(&g, m) && connected_induced(&g, m)).unwrap(),
                "gamma_c mismatch on {name}"
            );
        }
    }
}

#[test]
fn k_domination_matches_subset_oracle() {
    for (name, g) in small_instances() {
        for k in 1..=3usize {
            let naive = min_mask(g.n(), |m| {
                (0..g.n()).all(|v| {
                    m & (1 << v) != 0
                        || g.neighbors(v).filter(|&u| m & (1 << u) != 0).count() >= k
                })
            })
            .unwrap();
            assert_eq!(
                k_domination_number(&g, k, &caps()).unwrap().value,
                naive,
                "gamma_{k} mismatch on {name}"
            );
        }
    }
}

#[test]
fn distance_k_domination_matches_subset_oracle() {
    for (name, g) in small_instances() {
        if !g.is_connected() {
            continue;
        }
        let dm = distances(&g);
        for k in 1..=3usize {
            let naive = min_mask(g.n(), |m| {
                (0..g.n()).all(|v| {
                    (0..g.n()).any(|x| m & (1 << x) != 0 && (dm.get(v, x) as usize) <= k)
                })
            })
            .unwrap();
            assert_eq!(
                distance_k_domination_number(&g, k, &caps()).unwrap().value,
                naive,
                "gamma_dist_{k} mismatch on {name}"
            );
        }
    }
}

#[test]
fn roman_matches_full_assignment_enumeration() {
    for (name, g) in small_instances() {
        let n = g.n();
        if n > 9 {
            continue;
        }
        let mut best = usize::MAX;
        let mut labels = vec![0u8; n];
        loop {
            let valid = (0..n).all(|v| {
                labels[v] != 0 || g.neighbors(v).any(|u| labels[u] == 2)
            });
            if valid {
                best = best.min(labels.iter().map(|&x| x as usize).sum());
            }
            // Odometer over {0,1,2}^n.
            let mut i = 0;
            while i < n && labels[i] == 2 {
                labels[i] = 0;
                i += 1;
            }
            if i == n {
                break;
            }
            labels[i] += 1;
        }
        assert_eq!(
            roman_domination_number(&g, &caps()).unwrap().value,
            best,
            "gamma_R mismatch on {name}"
        );
    }
}

#[test]
fn location_matches_subset_oracles() {
    for (name, g) in small_instances() {
        if !g.is_connected() {
            continue;
        }
        let n = g.n();
        let dm = distances(&g);
        let resolving = |m: u32| {
            let landmarks = set_of(m, n);
            for u in 0..n {
                for v in u + 1..n {
                    if landmarks.iter().all(|&x| dm.get(u, x) == dm.get(v, x)) {
                        return false;
                    }
                }
            }
            true
        };
        let ld = |m: u32| {
            if !dominates(&g, m) {
                return false;
            }
            let outside: Vec<usize> = (0..n).filter(|&v| m & (1 << v) == 0).collect();
            let traces: Vec<u32> = outside
                .iter()
                .map(|&v| g.neighbors(v).fold(0u32, |t, u| t | (m & (1 << u))))
                .collect();
            for a in 0..traces.len() {
                for b in a + 1..traces.len() {
                    if traces[a] == traces[b] {
                        return false;
                    }
                }
            }
            true
        };
        let loc = location_numbers(&g, &caps()).unwrap();
        assert_eq!(loc.dim.value, min_mask(n, resolving).unwrap(), "dim mismatch on {name}");
        assert_eq!(
            loc.gamma_ld.value,
            min_mask(n, |m| resolving(m) && dominates(&g, m)).unwrap(),
            "gamma_ld mismatch on {name}"
        );
        assert_eq!(loc.gamma_l_d.value, min_mask(n, ld).unwrap(), "gamma_l_d mismatch on {name}");
    }
}

/// All set partitions of 0..n as restricted-growth strings.
fn for_each_partition(n: usize, f: &mut impl FnMut(&[usize], usize)) {
    fn rec(v: usize, n: usize, assign: &mut Vec<usize>, classes: usize, f: &mut impl FnMut(&[usize], usize)) {
        if v == n {
            f(assign, classes);
            return;
        }
        for c in 0..=classes {
            assign.push(c);
            rec(v + 1, n, assign, classes.max(c + 1), f);
            assign.pop();
        }
    }
    rec(0, n, &mut Vec::new(), 0, f);
}

#[test]
fn domatic_matches_partition_oracle() {
    for (name, g) in small_instances() {
        let n = g.n();
        if n > 8 {
            continue;
        }
        let mut best_dom = 0usize;
        let mut best_idom: Option<usize> = None;
        for_each_partition(n, &mut |assign, classes| {
            let masks: Vec<u32> = (0..classes)
                .map(|c| {
                    (0..n)
                        .filter(|&v| assign[v] == c)
                        .fold(0u32, |m, v| m | (1 << v))
                })
                .collect();
            if masks.iter().all(|&m| dominates(&g, m)) {
                best_dom = best_dom.max(classes);
                if masks.iter().all(|&m| independent(&g, m)) {
                    best_idom = Some(best_idom.map_or(classes, |b: usize| b.max(classes)));
                }
            }
        });
        assert_eq!(
            domatic_number(&g, &caps()).unwrap().value,
            best_dom,
            "domatic mismatch on {name}"
        );
        assert_eq!(
            idomatic_number(&g, &caps()).unwrap().map(|r| r.value),
            best_idom,
            "idomatic mismatch on {name}"
        );
    }
}

#[test]
fn gamma_monotonicity_in_k() {
    for (name, g) in small_instances() {
        if !g.is_connected() {
            continue;
        }
        for k in 1..=2usize {
            let dist_k = distance_k_domination_number(&g, k, &caps()).unwrap().value;
            let dist_k1 = distance_k_domination_number(&g, k + 1, &caps()).unwrap().value;
            assert!(dist_k1 <= dist_k, "gamma_<=k monotonicity fails on {name}");
            let gk = k_domination_number(&g, k, &caps()).unwrap().value;
            let gk1 = k_domination_number(&g, k + 1, &caps()).unwrap().value;
            assert!(gk <= gk1, "gamma_k monotonicity fails on {name}");
        }
    }
}
