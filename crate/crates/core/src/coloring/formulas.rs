use super::distance_k_chromatic;
use crate::config::SolverCaps;
use crate::error::{Error, Result};
use crate::graph::Graph;

/// Closed-form cases for the distance-k chromatic number of a corona.
#[derive(Debug, Clone, Copy)]
pub enum FormulaCase<'a> {
    /// chi_{<=2}(P_{n1} . H) = n2 + 3, requires n1 >= 3.
    Chi2Path { n1: usize, n2: usize },
    /// chi_{<=2}(C_{3t} . H) = n2 + 3, requires cycle length divisible by 3.
    Chi2Cycle3t { len: usize, n2: usize },
    /// chi_{<=2}(T . H) = n2 + Delta1 + 1 for a tree T.
    Chi2Tree { tree: &'a Graph, n2: usize },
    /// chi_{<=3}(T . H) = 2 n2 + Delta_ij(T) for a tree T with an edge.
    Chi3Tree { tree: &'a Graph, n2: usize },
    /// chi_{<=k}(P_{n1} . H): n2(k-1)+k+1 if k <= n1-1, n2(k-1)+k if k = n1.
    ChikPath { n1: usize, k: usize, n2: usize },
}

/// Evaluates a closed-form corona chromatic value, rejecting instances that
/// violate the case hypothesis.
pub fn corona_chromatic_formula(case: FormulaCase<'_>) -> Result<usize> {
    match case {
        FormulaCase::Chi2Path { n1, n2 } => {
            if n1 < 3 {
                return Err(Error::Inapplicable(format!(
                    "chi2-path requires n1 >= 3, got {n1}"
                )));
            }
            Ok(n2 + 3)
        }
        FormulaCase::Chi2Cycle3t { len, n2 } => {
            if len < 3 || len % 3 != 0 {
                return Err(Error::Inapplicable(format!(
                    "chi2-cycle3t requires a cycle length divisible by 3, got {len}"
                )));
            }
            Ok(n2 + 3)
        }
        FormulaCase::Chi2Tree { tree, n2 } => {
            require_tree(tree, "chi2-tree")?;
            Ok(n2 + tree.max_degree() + 1)
        }
        FormulaCase::Chi3Tree { tree, n2 } => {
            require_tree(tree, "chi3-tree")?;
            Ok(2 * n2 + delta_ij(tree)?)
        }
        FormulaCase::ChikPath { n1, k, n2 } => {
            if n1 < 2 || k < 2 || k > n1 {
                return Err(Error::Inapplicable(format!(
                    "chik-path requires 2 <= k <= n1, got k={k}, n1={n1}"
                )));
            }
            if k <= n1 - 1 {
                Ok(n2 * (k - 1) + k + 1)
            } else {
                Ok(n2 * (k - 1) + k)
            }
        }
    }
}

fn require_tree(g: &Graph, case: &str) -> Result<()> {
    if g.n() == 0 || !g.is_connected() || g.m() != g.n() - 1 {
        return Err(Error::Inapplicable(format!("{case} requires a tree")));
    }
    Ok(())
}

/// Maximum degree sum over adjacent pairs: max{deg(u) + deg(v) : uv edge}.
pub fn delta_ij(t: &Graph) -> Result<usize> {
    t.edges()
        .iter()
        .map(|&(u, v)| t.degree(u) + t.degree(v))
        .max()
        .ok_or_else(|| Error::Inapplicable("delta_ij requires at least one edge".into()))
}

/// A bound together with the reason it does not apply, when it doesn't.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Applicability {
    Applicable(usize),
    Inapplicable(String),
}

impl Applicability {
    pub fn value(&self) -> Option<usize> {
        match self {
            Applicability::Applicable(v) => Some(*v),
            Applicability::Inapplicable(_) => None,
        }
    }
}

/// Lower and upper bounds on chi_{<=k}(G . H) for k in {2, 3}.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundPair {
    pub lower: Applicability,
    pub upper: Applicability,
}

/// Theorem bounds for the distance-k chromatic number of a corona:
///
/// * k=2: Delta1 + n2 + 1 <= chi_{<=2}(G.H) <= chi_{<=2}(G) + n2,
/// * k=3: chi_{<=3}(G.H) <= chi_{<=3}(G) + n2(Delta1+1), and when G is
///   triangle free additionally chi_{<=3}(G.H) >= 2 n2 + Delta1 + delta1.
pub fn corona_dist_bounds(g: &Graph, h: &Graph, k: usize, caps: &SolverCaps) -> Result<BoundPair> {
    let delta1 = g.max_degree();
    let n2 = h.n();
    match k {
        2 => {
            let upper = distance_k_chromatic(g, 2, caps)?.value + n2;
            Ok(BoundPair {
                lower: Applicability::Applicable(delta1 + n2 + 1),
                upper: Applicability::Applicable(upper),
            })
        }
        3 => {
            let upper = distance_k_chromatic(g, 3, caps)?.value + n2 * (delta1 + 1);
            let lower = if g.girth() == Some(3) {
                Applicability::Inapplicable("G has a triangle".into())
            } else {
                Applicability::Applicable(2 * n2 + delta1 + g.min_degree())
            };
            Ok(BoundPair {
                lower,
                upper: Applicability::Applicable(upper),
            })
        }
        _ => Err(Error::Inapplicable(format!(
            "corona distance bounds are stated for k in {{2,3}}, got {k}"
        ))),
    }
}

fn geometric_sum(base: usize, from: usize, to_inclusive: usize, step: usize) -> usize {
    // sum of base^i for i = from, from+step, ..., <= to_inclusive
    let mut total = 0usize;
    let mut i = from;
    while i <= to_inclusive {
        total += base.pow(i as u32);
        i += step;
    }
    total
}

/// Lower bound on the ball size |M_t[v]|: 1 + deg(v) * sum_{i=0}^{t-1} (delta-1)^i,
/// valid when the girth is at least 2t+1.
pub fn appendix_ball_bound(deg_v: usize, delta: usize, t: usize) -> usize {
    assert!(t >= 1 && delta >= 1);
    1 + deg_v * geometric_sum(delta - 1, 0, t - 1, 1)
}

/// Lower bound on |M_t[u] u M_t[v]| for an edge uv, valid when the girth is
/// at least 2t+2. Even t: 2 + 2 delta sum_{i=1}^{t/2} (delta-1)^{2i-1};
/// odd t: 2 delta sum_{i=0}^{(t-1)/2} (delta-1)^{2i}.
pub fn appendix_edge_ball_bound(delta: usize, t: usize) -> usize {
    assert!(t >= 1);
    if t % 2 == 0 {
        let mut total = 0usize;
        for i in 1..=t / 2 {
            total += (delta.saturating_sub(1)).pow((2 * i - 1) as u32);
        }
        2 + 2 * delta * total
    } else {
        let mut total = 0usize;
        for i in 0..=(t - 1) / 2 {
            total += (delta.saturating_sub(1)).pow((2 * i) as u32);
        }
        2 * delta * total
    }
}

/// Girth-based lower bound on chi_{<=k}(g), `None` when the hypothesis
/// g(G) >= k+1 fails. Forests have infinite girth and always qualify.
pub fn girth_chromatic_lower_bound(g: &Graph, k: usize) -> Option<usize> {
    assert!(k >= 2);
    if let Some(girth) = g.girth() {
        if girth < k + 1 {
            return None;
        }
    }
    let delta = g.min_degree();
    let big_delta = g.max_degree();
    if k % 2 == 0 {
        Some(1 + big_delta * geometric_sum(delta.saturating_sub(1), 0, k / 2 - 1, 1))
    } else {
        let r = (k - 1) / 2;
        Some(appendix_edge_ball_bound(delta, r))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{ball, FamilySpec};

    fn gen(spec: FamilySpec) -> Graph {
        spec.generate().unwrap()
    }

    #[test]
    fn formula_cases() {
        assert_eq!(
            corona_chromatic_formula(FormulaCase::Chi2Path { n1: 4, n2: 1 }).unwrap(),
            4
        );
        let star = gen(FamilySpec::star(3));
        assert_eq!(
            corona_chromatic_formula(FormulaCase::Chi3Tree { tree: &star, n2: 1 }).unwrap(),
            6
        );
        assert_eq!(
            corona_chromatic_formula(FormulaCase::ChikPath { n1: 4, k: 4, n2: 1 }).unwrap(),
            7
        );
        assert!(corona_chromatic_formula(FormulaCase::Chi2Path { n1: 2, n2: 1 }).is_err());
        assert!(corona_chromatic_formula(FormulaCase::Chi2Cycle3t { len: 4, n2: 1 }).is_err());
    }

    #[test]
    fn delta_ij_values() {
        assert_eq!(delta_ij(&gen(FamilySpec::star(3))).unwrap(), 4);
        assert_eq!(delta_ij(&gen(FamilySpec::path(4))).unwrap(), 4);
        assert_eq!(delta_ij(&gen(FamilySpec::complete(2))).unwrap(), 2);
        assert!(delta_ij(&gen(FamilySpec::empty(3))).is_err());
    }

    #[test]
    fn ball_bounds() {
        assert_eq!(appendix_ball_bound(2, 2, 2), 5);
        let c7 = gen(FamilySpec::cycle(7));
        assert_eq!(ball(&c7, 0, 2).len(), 5);
        assert_eq!(appendix_ball_bound(3, 3, 1), 4);
        assert_eq!(appendix_ball_bound(3, 3, 2), 10);
    }

    #[test]
    fn edge_ball_bounds() {
        assert_eq!(appendix_edge_ball_bound(2, 3), 8);
        let c8 = gen(FamilySpec::cycle(8));
        let union: std::collections::BTreeSet<_> =
            ball(&c8, 0, 3).union(&ball(&c8, 1, 3)).copied().collect();
        assert_eq!(union.len(), 8);
        assert_eq!(appendix_edge_ball_bound(3, 1), 6);
        assert_eq!(appendix_edge_ball_bound(2, 2), 6);
        let c6 = gen(FamilySpec::cycle(6));
        let union6: std::collections::BTreeSet<_> =
            ball(&c6, 0, 2).union(&ball(&c6, 1, 2)).copied().collect();
        assert_eq!(union6.len(), 6);
    }

    #[test]
    fn girth_lower_bounds() {
        let caps = SolverCaps::default();
        let c6 = gen(FamilySpec::cycle(6));
        assert_eq!(girth_chromatic_lower_bound(&c6, 2), Some(3));
        assert_eq!(distance_k_chromatic(&c6, 2, &caps).unwrap().value, 3);
        let c8 = gen(FamilySpec::cycle(8));
        assert_eq!(girth_chromatic_lower_bound(&c8, 3), Some(4));
        assert_eq!(distance_k_chromatic(&c8, 3, &caps).unwrap().value, 4);
        let k4 = gen(FamilySpec::complete(4));
        assert_eq!(girth_chromatic_lower_bound(&k4, 3), None);
    }
}
