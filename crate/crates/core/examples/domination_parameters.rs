//! Exact domination-type parameters of corona products.
//!
//! On G.H with G connected the centers dominate everything, which pins
//! gamma = gamma_c = n1; k-domination and distance-k domination follow the
//! closed formulas of the paper trail encoded in the harness.

use corona_lab::domination::{
    connected_domination_number, distance_k_domination_number, domination_number,
    independence_number, independent_domination_number, k_domination_number,
};
use corona_lab::graph::{corona, FamilySpec};
use corona_lab::SolverCaps;

fn main() {
    let caps = SolverCaps::default();
    let g = FamilySpec::cycle(4).generate().unwrap();
    let h = FamilySpec::complete(2).generate().unwrap();
    let (c, _) = corona(&g, &h);
    println!("parameters of C4 . K2 (12 vertices):");
    for res in [
        domination_number(&c, &caps).unwrap(),
        connected_domination_number(&c, &caps).unwrap(),
        independent_domination_number(&c, &caps).unwrap(),
        independence_number(&c, &caps).unwrap(),
        k_domination_number(&c, 2, &caps).unwrap(),
        distance_k_domination_number(&c, 2, &caps).unwrap(),
    ] {
        println!(
            "  {:12} = {}  witness {:?}",
            res.parameter,
            res.value,
            res.witness
        );
    }
}
