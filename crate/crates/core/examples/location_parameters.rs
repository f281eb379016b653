//! Metric dimension and the two location-domination parameters, with the
//! structural case split that drives the corona formula.
//!
//! CaseI: some minimum locating-dominating set A of H has every outside
//! trace a proper subset of A, and gamma_l_d(G.H) = n gamma_l_d(H).
//! CaseII: every minimum set is "seen in full" by some outside vertex, and
//! the formula picks up an extra gamma(G).

use corona_lab::domination::{ld_case_classify, location_numbers, LdCase};
use corona_lab::graph::{corona, FamilySpec};
use corona_lab::SolverCaps;

fn main() {
    let caps = SolverCaps::default();

    for hs in [FamilySpec::path(3), FamilySpec::complete(2)] {
        let h = hs.generate().unwrap();
        let case = ld_case_classify(&h, &caps).unwrap();
        let label = match case {
            LdCase::CaseI { .. } => "CaseI",
            LdCase::CaseII { .. } => "CaseII",
        };
        let g = FamilySpec::path(3).generate().unwrap();
        let (c, _) = corona(&g, &h);
        let loc = location_numbers(&c, &caps).unwrap();
        println!(
            "H = {}: {label}; P3 . H has dim = {}, gamma_ld = {}, gamma_l_d = {}",
            hs.name(),
            loc.dim.value,
            loc.gamma_ld.value,
            loc.gamma_l_d.value
        );
    }

    // The chain dim <= gamma_ld <= gamma_l_d on a plain graph.
    let p4 = FamilySpec::path(4).generate().unwrap();
    let loc = location_numbers(&p4, &caps).unwrap();
    println!(
        "P4: dim = {} <= gamma_ld = {} <= gamma_l_d = {}",
        loc.dim.value, loc.gamma_ld.value, loc.gamma_l_d.value
    );
}
