//! Roman domination: exact weights, the b2max statistic, and the G.K1
//! pendant construction.
//!
//! A Roman dominating function labels vertices 0/1/2 with every 0 adjacent
//! to a 2. For coronas with n2 >= 2 the weight is always 2 n1; for H = K1
//! the formula gamma_R(G) + n - b2max(G) is realized by relabeling the
//! pendants of an optimal function with the most 2s.

use corona_lab::domination::{
    construct_corona_witness, roman_domination, roman_domination_number, CoronaWitnessKind,
};
use corona_lab::graph::{corona, FamilySpec};
use corona_lab::SolverCaps;

fn main() {
    let caps = SolverCaps::default();

    let g = FamilySpec::cycle(4).generate().unwrap();
    let h = FamilySpec::complete(2).generate().unwrap();
    let (c, _) = corona(&g, &h);
    let res = roman_domination_number(&c, &caps).unwrap();
    println!("gamma_R(C4 . K2) = {} (2 n1 = 8)", res.value);

    let p4 = FamilySpec::path(4).generate().unwrap();
    let (base, b2max) = roman_domination(&p4, &caps).unwrap();
    println!("gamma_R(P4) = {}, b2max = {b2max}", base.value);
    let built = construct_corona_witness(
        CoronaWitnessKind::RomanK1,
        &p4,
        &FamilySpec::complete(1).generate().unwrap(),
        None,
        &caps,
    )
    .unwrap();
    let (p4k1, _) = corona(&p4, &FamilySpec::complete(1).generate().unwrap());
    let exact = roman_domination_number(&p4k1, &caps).unwrap().value;
    println!(
        "gamma_R(P4 . K1): construction weight {} = gamma_R + n - b2max, exact {exact}",
        built.value
    );
}
