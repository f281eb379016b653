//! Builds corona products and shows the fixed vertex layout.
//!
//! The corona G.H takes one copy of G (the "centers") and, for each center,
//! a fresh copy of H joined completely to it. Centers occupy ids 0..n1 and
//! copy i occupies n1 + i*n2 .. n1 + (i+1)*n2, so witnesses are reproducible
//! byte for byte.

use corona_lab::graph::{corona, diameter, FamilySpec};

fn main() {
    let pairs = [
        (FamilySpec::path(2), FamilySpec::complete(1)), // P2 . K1 = P4
        (FamilySpec::cycle(4), FamilySpec::complete(2)),
        (FamilySpec::complete(1), FamilySpec::complete(3)), // K1 . K3 = K4
    ];
    for (gs, hs) in pairs {
        let g = gs.generate().unwrap();
        let h = hs.generate().unwrap();
        let (c, lab) = corona(&g, &h);
        println!(
            "{} . {}: n = {}, m = {}, diameter = {:?}",
            gs.name(),
            hs.name(),
            c.n(),
            c.m(),
            diameter(&c)
        );
        for id in 0..lab.order() {
            println!("  vertex {id:2} is {:?}", lab.label(id));
        }
        println!();
    }
}
