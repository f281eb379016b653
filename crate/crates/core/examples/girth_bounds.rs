//! Girth-based ball bounds and the chromatic lower bounds they imply.
//!
//! When the girth exceeds 2t, the ball M_t[v] contains a full tree layer by
//! layer, giving |M_t[v]| >= 1 + deg(v) sum (delta-1)^i; balls are cliques
//! in G^k, so these sizes lower-bound chi_<=k.

use corona_lab::coloring::{
    appendix_ball_bound, appendix_edge_ball_bound, distance_k_chromatic,
    girth_chromatic_lower_bound,
};
use corona_lab::graph::{ball, FamilySpec};
use corona_lab::SolverCaps;

fn main() {
    let caps = SolverCaps::default();

    let c7 = FamilySpec::cycle(7).generate().unwrap();
    println!(
        "C7: |M_2[0]| = {} >= ball bound {}",
        ball(&c7, 0, 2).len(),
        appendix_ball_bound(2, 2, 2)
    );
    println!("edge-ball bound for delta = 2, t = 3: {}", appendix_edge_ball_bound(2, 3));

    for (spec, k) in [(FamilySpec::cycle(6), 2usize), (FamilySpec::cycle(8), 3)] {
        let g = spec.generate().unwrap();
        let lb = girth_chromatic_lower_bound(&g, k).unwrap();
        let exact = distance_k_chromatic(&g, k, &caps).unwrap().value;
        println!(
            "{}: chi_<={k} lower bound {lb}, exact {exact} (tight)",
            spec.name()
        );
    }

    let k4 = FamilySpec::complete(4).generate().unwrap();
    println!(
        "K4 at k = 3: girth bound applicable? {}",
        girth_chromatic_lower_bound(&k4, 3).is_some()
    );
}
