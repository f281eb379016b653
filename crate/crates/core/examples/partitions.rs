//! Domatic and idomatic numbers: partitions of the vertex set into
//! dominating (and independent dominating) classes.
//!
//! The corona identity d(G.H) = d(H)+1 always holds; the idomatic analogue
//! depends on how "G partitions into t independent sets" is read. K2 . K2
//! is the instructive instance: its idomatic number is 3 even though K2 has
//! no partition into 3 nonempty independent sets.

use corona_lab::domination::{domatic_number, idomatic_number};
use corona_lab::graph::{corona, FamilySpec};
use corona_lab::SolverCaps;

fn main() {
    let caps = SolverCaps::default();

    let g = FamilySpec::path(3).generate().unwrap();
    let h = FamilySpec::complete(2).generate().unwrap();
    let (c, _) = corona(&g, &h);
    let d = domatic_number(&c, &caps).unwrap();
    println!("d(P3 . K2) = {} (d(K2) + 1 = 3)", d.value);

    let c5 = FamilySpec::cycle(5).generate().unwrap();
    println!(
        "C5 idomatic? {:?} (C5 admits no idomatic partition)",
        idomatic_number(&c5, &caps).unwrap().map(|r| r.value)
    );

    let k2 = FamilySpec::complete(2).generate().unwrap();
    let (k2k2, _) = corona(&k2, &k2);
    let di = idomatic_number(&k2k2, &caps).unwrap().unwrap();
    println!("d_i(K2 . K2) = {} with classes {:?}", di.value, di.witness);
}
