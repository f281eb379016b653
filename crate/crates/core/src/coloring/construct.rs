use super::{chromatic_number, distance_k_chromatic, validate_coloring, ColorAssignment};
use crate::config::SolverCaps;
use crate::error::{Error, Result};
use crate::graph::{corona, Graph};

/// Builds a valid distance-k coloring of `corona(g, h)` for k in {1, 2, 3}
/// following the constructive upper-bound arguments:
///
/// * k=1 uses at most `max{chi(G), chi(H)+1}` colors,
/// * k=2 at most `chi_{<=2}(G) + n2`,
/// * k=3 at most `chi_{<=3}(G) + n2 * (Delta1 + 1)`.
///
/// The result is re-validated before return; a validation failure is a bug
/// in the construction, never a property of the input.
pub fn construct_corona_coloring(
    g: &Graph,
    h: &Graph,
    k: usize,
    caps: &SolverCaps,
) -> Result<ColorAssignment> {
    let (cg, lab) = corona(g, h);
    let mut out = match k {
        1 => construct_k1(g, h, caps)?,
        2 => construct_k2(g, h, caps)?,
        3 => construct_k3(g, h, caps)?,
        _ => {
            return Err(Error::Inapplicable(format!(
                "corona coloring construction supports k in {{1,2,3}}, got {k}"
            )))
        }
    };
    debug_assert_eq!(out.colors.len(), lab.order());
    if !validate_coloring(&cg, k, &out)? {
        return Err(Error::ConstructionBug(format!(
            "constructed distance-{k} coloring of {}-vertex corona is invalid",
            cg.n()
        )));
    }
    out.canonicalize();
    Ok(out)
}

fn construct_k1(g: &Graph, h: &Graph, caps: &SolverCaps) -> Result<ColorAssignment> {
    let cg = chromatic_number(g, caps)?;
    let ch = chromatic_number(h, caps)?;
    let t = cg.value.max(ch.value + 1);
    let n1 = g.n();
    let n2 = h.n();
    let mut colors = vec![0usize; n1 + n1 * n2];
    colors[..n1].copy_from_slice(&cg.witness.colors);
    for i in 0..n1 {
        // H's palette mapped into the colors distinct from the center's.
        let free: Vec<usize> = (0..t).filter(|&c| c != colors[i]).collect();
        for j in 0..n2 {
            colors[n1 + i * n2 + j] = free[ch.witness.colors[j]];
        }
    }
    Ok(ColorAssignment::new(colors))
}

fn construct_k2(g: &Graph, h: &Graph, caps: &SolverCaps) -> Result<ColorAssignment> {
    let c2 = distance_k_chromatic(g, 2, caps)?;
    let n1 = g.n();
    let n2 = h.n();
    let t = c2.value + n2;
    let mut colors = vec![0usize; n1 + n1 * n2];
    colors[..n1].copy_from_slice(&c2.witness.colors);
    for i in 0..n1 {
        // Colors seen on the closed neighborhood of the center are forbidden
        // for its copy; a distance-2 coloring makes them pairwise distinct,
        // so at least n2 colors remain.
        let mut taken: Vec<bool> = vec![false; t];
        taken[colors[i]] = true;
        for u in g.neighbors(i) {
            taken[colors[u]] = true;
        }
        let mut free = (0..t).filter(|&c| !taken[c]);
        for j in 0..n2 {
            colors[n1 + i * n2 + j] = free.next().expect("chi_2(G) >= deg+1 leaves n2 free colors");
        }
    }
    Ok(ColorAssignment::new(colors))
}

fn construct_k3(g: &Graph, h: &Graph, caps: &SolverCaps) -> Result<ColorAssignment> {
    let c3 = distance_k_chromatic(g, 3, caps)?;
    let n1 = g.n();
    let n2 = h.n();
    let delta1 = g.max_degree();
    let q = c3.value;
    let mut colors = vec![0usize; n1 + n1 * n2];
    colors[..n1].copy_from_slice(&c3.witness.colors);
    // Copies of adjacent centers must use disjoint color blocks; a greedy
    // proper coloring of G hands each center a block index < Delta1 + 1.
    let mut block = vec![usize::MAX; n1];
    for v in 0..n1 {
        let used: std::collections::BTreeSet<usize> =
            g.neighbors(v).filter_map(|u| (block[u] != usize::MAX).then(|| block[u])).collect();
        block[v] = (0..=delta1).find(|b| !used.contains(b)).expect("greedy fits in Delta+1");
    }
    for i in 0..n1 {
        let base = q + block[i] * n2;
        for j in 0..n2 {
            colors[n1 + i * n2 + j] = base + j;
        }
    }
    Ok(ColorAssignment::new(colors))
}
