use serde::{Deserialize, Serialize};

use super::Graph;

/// Role of a vertex of the corona product G ⊙ H.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum CoronaVertex {
    /// The i-th vertex of G.
    Center { i: usize },
    /// Vertex `j` of H in the copy attached to center `i`.
    CopyVertex { i: usize, j: usize },
}

/// Fixed vertex layout of the corona: centers occupy ids `0..n1`, copy `i`
/// occupies `n1 + i*n2 .. n1 + (i+1)*n2`. The layout is part of the contract
/// so that witnesses are byte-for-byte reproducible.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoronaLabeling {
    pub n1: usize,
    pub n2: usize,
}

impl CoronaLabeling {
    pub fn order(&self) -> usize {
        self.n1 + self.n1 * self.n2
    }

    pub fn center(&self, i: usize) -> usize {
        debug_assert!(i < self.n1);
        i
    }

    pub fn copy_vertex(&self, i: usize, j: usize) -> usize {
        debug_assert!(i < self.n1 && j < self.n2);
        self.n1 + i * self.n2 + j
    }

    pub fn label(&self, id: usize) -> CoronaVertex {
        if id < self.n1 {
            CoronaVertex::Center { i: id }
        } else {
            let off = id - self.n1;
            CoronaVertex::CopyVertex {
                i: off / self.n2,
                j: off % self.n2,
            }
        }
    }

    /// Ids of the copy attached to center `i`.
    pub fn copy_ids(&self, i: usize) -> std::ops::Range<usize> {
        self.copy_vertex(i, 0)..self.copy_vertex(i, 0) + self.n2
    }
}

/// Corona product G ⊙ H: one copy of H per vertex of G, each center joined
/// to every vertex of its copy. H may be edgeless; G may be K1.
pub fn corona(g: &Graph, h: &Graph) -> (Graph, CoronaLabeling) {
    let lab = CoronaLabeling {
        n1: g.n(),
        n2: h.n(),
    };
    let mut out = Graph::empty(lab.order());
    for (u, v) in g.edges() {
        out.add_edge(u, v).expect("valid");
    }
    for i in 0..lab.n1 {
        for (u, v) in h.edges() {
            out.add_edge(lab.copy_vertex(i, u), lab.copy_vertex(i, v))
                .expect("valid");
        }
        for j in 0..lab.n2 {
            out.add_edge(lab.center(i), lab.copy_vertex(i, j))
                .expect("valid");
        }
    }
    (out, lab)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{diameter, FamilySpec};

    fn gen(spec: FamilySpec) -> Graph {
        spec.generate().unwrap()
    }

    #[test]
    fn corona_p2_k1_is_p4() {
        let (c, lab) = corona(&gen(FamilySpec::path(2)), &gen(FamilySpec::complete(1)));
        assert_eq!((c.n(), c.m()), (4, 3));
        assert_eq!(lab.order(), 4);
        assert_eq!(diameter(&c), Some(3)); // D(P2)+2
    }

    #[test]
    fn corona_c4_k2_counts() {
        let (c, _) = corona(&gen(FamilySpec::cycle(4)), &gen(FamilySpec::complete(2)));
        assert_eq!((c.n(), c.m()), (12, 16));
    }

    #[test]
    fn corona_k1_k3_is_k4() {
        let (c, _) = corona(&gen(FamilySpec::complete(1)), &gen(FamilySpec::complete(3)));
        assert_eq!((c.n(), c.m()), (4, 6));
        assert_eq!(diameter(&c), Some(1));
    }

    #[test]
    fn corona_c4_k3_diameter() {
        let (c, _) = corona(&gen(FamilySpec::cycle(4)), &gen(FamilySpec::complete(3)));
        assert_eq!(diameter(&c), Some(4)); // D(C4)+2
    }

    #[test]
    fn degrees_match_formula() {
        let g = gen(FamilySpec::cycle(5));
        let h = gen(FamilySpec::path(3));
        let (c, lab) = corona(&g, &h);
        for i in 0..g.n() {
            assert_eq!(c.degree(lab.center(i)), g.degree(i) + h.n());
            for j in 0..h.n() {
                assert_eq!(c.degree(lab.copy_vertex(i, j)), h.degree(j) + 1);
            }
        }
    }

    #[test]
    fn labeling_roundtrip() {
        let lab = CoronaLabeling { n1: 3, n2: 4 };
        for id in 0..lab.order() {
            let v = lab.label(id);
            let back = match v {
                CoronaVertex::Center { i } => lab.center(i),
                CoronaVertex::CopyVertex { i, j } => lab.copy_vertex(i, j),
            };
            assert_eq!(back, id);
        }
    }
}
