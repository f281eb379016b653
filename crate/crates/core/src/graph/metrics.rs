use std::collections::{BTreeSet, VecDeque};

use super::Graph;

/// Sentinel distance for disconnected pairs.
pub const INF: u32 = u32::MAX;

/// All-pairs hop distances, BFS-exact. `INF` marks disconnected pairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    /// Maximum finite distance if the graph is connected, `None` otherwise.
    pub fn diameter(&self) -> Option<usize> {
        let mut max = 0u32;
        for &d in &self.d {
            if d == INF {
                return None;
            }
            max = max.max(d);
        }
        Some(max as usize)
    }

    /// Eccentricity of `v`, or `None` if some vertex is unreachable from `v`.
    pub fn eccentricity(&self, v: usize) -> Option<usize> {
        let mut max = 0u32;
        for u in 0..self.n {
            let d = self.get(v, u);
            if d == INF {
                return None;
            }
            max = max.max(d);
        }
        Some(max as usize)
    }
}

pub fn distances(g: &Graph) -> DistanceMatrix {
    let n = g.n();
    let mut d = vec![INF; n * n];
    for src in 0..n {
        let row = &mut d[src * n..(src + 1) * n];
        row[src] = 0;
        let mut queue = VecDeque::new();
        queue.push_back(src);
        while let Some(u) = queue.pop_front() {
            for v in g.neighbors(u) {
                if row[v] == INF {
                    row[v] = row[u] + 1;
                    queue.push_back(v);
                }
            }
        }
    }
    DistanceMatrix { n, d }
}

/// Diameter of `g`: `None` for disconnected graphs.
pub fn diameter(g: &Graph) -> Option<usize> {
    distances(g).diameter()
}

/// The ball `M_t[v]`: all vertices within distance `t` of `v`.
pub fn ball(g: &Graph, v: usize, t: usize) -> BTreeSet<usize> {
    let mut dist = vec![usize::MAX; g.n()];
    let mut out = BTreeSet::new();
    dist[v] = 0;
    out.insert(v);
    let mut queue = VecDeque::new();
    queue.push_back(v);
    while let Some(u) = queue.pop_front() {
        if dist[u] == t {
            continue;
        }
        for w in g.neighbors(u) {
            if dist[w] == usize::MAX {
                dist[w] = dist[u] + 1;
                out.insert(w);
                queue.push_back(w);
            }
        }
    }
    out
}

/// k-th power of `g`: edges between pairs at distance 1..k.
pub fn power(g: &Graph, k: usize) -> Graph {
    assert!(k >= 1, "power requires k >= 1");
    let dm = distances(g);
    let mut out = Graph::empty(g.n());
    for u in 0..g.n() {
        for v in u + 1..g.n() {
            let d = dm.get(u, v);
            if d != INF && d as usize <= k {
                out.add_edge(u, v).expect("in-range, non-loop");
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::FamilySpec;

    #[test]
    fn path_distances() {
        let p4 = FamilySpec::path(4).generate().unwrap();
        let d = distances(&p4);
        assert_eq!(d.get(0, 3), 3);
        assert_eq!(d.diameter(), Some(3));
    }

    #[test]
    fn cycle_distances() {
        let c6 = FamilySpec::cycle(6).generate().unwrap();
        let d = distances(&c6);
        assert_eq!(d.get(0, 3), 3);
        assert_eq!(d.get(0, 2), 2);
    }

    #[test]
    fn disconnected_sentinel() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        let d = distances(&g);
        assert_eq!(d.get(0, 2), INF);
        assert_eq!(d.diameter(), None);
    }

    #[test]
    fn complete_diameter() {
        let k5 = FamilySpec::complete(5).generate().unwrap();
        assert_eq!(diameter(&k5), Some(1));
    }

    #[test]
    fn ball_examples() {
        let c7 = FamilySpec::cycle(7).generate().unwrap();
        let b = ball(&c7, 0, 2);
        assert_eq!(b, [5, 6, 0, 1, 2].into_iter().collect());
        assert_eq!(ball(&c7, 3, 0), [3].into_iter().collect());
        let p4 = FamilySpec::path(4).generate().unwrap();
        assert_eq!(ball(&p4, 0, 3).len(), 4);
    }

    #[test]
    fn power_examples() {
        let p4 = FamilySpec::path(4).generate().unwrap();
        let sq = power(&p4, 2);
        assert_eq!(
            sq.edges(),
            vec![(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]
        );
        assert_eq!(power(&p4, 1), p4);
        let c6 = FamilySpec::cycle(6).generate().unwrap();
        let cube = power(&c6, 3);
        assert_eq!(cube.m(), 15); // K6
    }

    #[test]
    fn ball_monotone_in_radius() {
        let g = FamilySpec::cycle(8).generate().unwrap();
        for v in g.vertices() {
            let mut prev = 0;
            for t in 0..=5 {
                let size = ball(&g, v, t).len();
                assert!(size >= prev);
                prev = size;
            }
            let ecc = distances(&g).eccentricity(v).unwrap();
            assert_eq!(ball(&g, v, ecc).len(), g.n());
        }
    }
}
