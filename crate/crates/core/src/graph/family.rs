use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

/// Deterministic instance generator. Identical spec (and seed, for random
/// families) always yields identical adjacency.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "kebab-case")]
pub enum FamilySpec {
    Path { n: usize },
    Cycle { n: usize },
    Complete { n: usize },
    Empty { n: usize },
    /// Star S_{1,leaves} = K_{1,leaves}; vertex 0 is the center.
    Star { leaves: usize },
    CompleteBipartite { s: usize, t: usize },
    RandomTree { n: usize, seed: u64 },
    RandomGnp { n: usize, p: f64, seed: u64 },
}

impl FamilySpec {
    pub fn path(n: usize) -> Self {
        FamilySpec::Path { n }
    }
    pub fn cycle(n: usize) -> Self {
        FamilySpec::Cycle { n }
    }
    pub fn complete(n: usize) -> Self {
        FamilySpec::Complete { n }
    }
    pub fn empty(n: usize) -> Self {
        FamilySpec::Empty { n }
    }
    pub fn star(leaves: usize) -> Self {
        FamilySpec::Star { leaves }
    }
    pub fn complete_bipartite(s: usize, t: usize) -> Self {
        FamilySpec::CompleteBipartite { s, t }
    }
    pub fn random_tree(n: usize, seed: u64) -> Self {
        FamilySpec::RandomTree { n, seed }
    }

    /// Short name used in reports, e.g. `P4`, `C6`, `K_{3,3}`.
    pub fn name(&self) -> String {
        match self {
            FamilySpec::Path { n } => format!("P{n}"),
            FamilySpec::Cycle { n } => format!("C{n}"),
            FamilySpec::Complete { n } => format!("K{n}"),
            FamilySpec::Empty { n } => format!("N{n}"),
            FamilySpec::Star { leaves } => format!("S_{{1,{leaves}}}"),
            FamilySpec::CompleteBipartite { s, t } => format!("K_{{{s},{t}}}"),
            FamilySpec::RandomTree { n, seed } => format!("T{n}#{seed}"),
            FamilySpec::RandomGnp { n, p, seed } => format!("G({n},{p})#{seed}"),
        }
    }

    pub fn generate(&self) -> Result<Graph> {
        match *self {
            FamilySpec::Path { n } => {
                if n == 0 {
                    return Err(Error::InvalidFamily("path requires n >= 1".into()));
                }
                let edges: Vec<_> = (0..n.saturating_sub(1)).map(|i| (i, i + 1)).collect();
                Graph::from_edges(n, &edges)
            }
            FamilySpec::Cycle { n } => {
                if n < 3 {
                    return Err(Error::InvalidFamily("cycle requires n >= 3".into()));
                }
                let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
                Graph::from_edges(n, &edges)
            }
            FamilySpec::Complete { n } => {
                if n == 0 {
                    return Err(Error::InvalidFamily("complete requires n >= 1".into()));
                }
                let mut edges = Vec::new();
                for u in 0..n {
                    for v in u + 1..n {
                        edges.push((u, v));
                    }
                }
                Graph::from_edges(n, &edges)
            }
            FamilySpec::Empty { n } => {
                if n == 0 {
                    return Err(Error::InvalidFamily("empty requires n >= 1".into()));
                }
                Ok(Graph::empty(n))
            }
            FamilySpec::Star { leaves } => {
                if leaves == 0 {
                    return Err(Error::InvalidFamily("star requires at least one leaf".into()));
                }
                let edges: Vec<_> = (1..=leaves).map(|i| (0, i)).collect();
                Graph::from_edges(leaves + 1, &edges)
            }
            FamilySpec::CompleteBipartite { s, t } => {
                if s == 0 || t == 0 {
                    return Err(Error::InvalidFamily(
                        "complete bipartite requires s,t >= 1".into(),
                    ));
                }
                let mut edges = Vec::new();
                for u in 0..s {
                    for v in 0..t {
                        edges.push((u, s + v));
                    }
                }
                Graph::from_edges(s + t, &edges)
            }
            FamilySpec::RandomTree { n, seed } => {
                if n == 0 {
                    return Err(Error::InvalidFamily("random tree requires n >= 1".into()));
                }
                Ok(random_tree(n, seed))
            }
            FamilySpec::RandomGnp { n, p, seed } => {
                if !(0.0..=1.0).contains(&p) {
                    return Err(Error::InvalidFamily("gnp requires p in [0,1]".into()));
                }
                if n == 0 {
                    return Err(Error::InvalidFamily("gnp requires n >= 1".into()));
                }
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                let mut g = Graph::empty(n);
                for u in 0..n {
                    for v in u + 1..n {
                        if rng.gen_bool(p) {
                            g.add_edge(u, v).expect("in-range");
                        }
                    }
                }
                Ok(g)
            }
        }
    }
}

/// Uniform random labelled tree via a random Pruefer sequence.
fn random_tree(n: usize, seed: u64) -> Graph {
    if n == 1 {
        return Graph::empty(1);
    }
    if n == 2 {
        return Graph::from_edges(2, &[(0, 1)]).expect("valid");
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let seq: Vec<usize> = (0..n - 2).map(|_| rng.gen_range(0..n)).collect();
    let mut degree = vec![1usize; n];
    for &v in &seq {
        degree[v] += 1;
    }
    let mut g = Graph::empty(n);
    let mut leaves: std::collections::BTreeSet<usize> = (0..n).filter(|&v| degree[v] == 1).collect();
    for &v in &seq {
        let leaf = *leaves.iter().next().expect("leaf exists");
        leaves.remove(&leaf);
        g.add_edge(leaf, v).expect("valid");
        degree[v] -= 1;
        if degree[v] == 1 {
            leaves.insert(v);
        }
    }
    let mut it = leaves.into_iter();
    let (a, b) = (it.next().unwrap(), it.next().unwrap());
    g.add_edge(a, b).expect("valid");
    g
}
