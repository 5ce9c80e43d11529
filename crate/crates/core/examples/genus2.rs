//! The Dehn twist about the first loop of the genus-2 dumbbell spine, in the
//! basis of admissible labellings.
//!
//! Run with `cargo run --example genus2`.

use a2skein::repdata::{
    diagonal_power_trace, enumerate_labellings, genus2_twist_matrix, ModularDatum, Theory,
};
use a2skein::surface::SpineGraph;

fn main() {
    let ising = ModularDatum::builtin(Theory::Ising);
    let su2 = ModularDatum::builtin(Theory::Su2Level2);
    let basis = enumerate_labellings(&SpineGraph::dumbbell(), &ising);
    println!("basis (a, b, c) = (loop1, bridge, loop2):");
    for (i, l) in basis.iter().enumerate() {
        println!("  v{:<2} = ({}, {}, {})", i + 1, l[0], l[1], l[2]);
    }
    let m = genus2_twist_matrix(&ising);
    let m2 = genus2_twist_matrix(&su2);
    let show = |d: &[a2skein::cyclotomic::Residue]| {
        d.iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(", ")
    };
    println!("M  = diag[{}]", show(&m));
    println!("M' = diag[{}]   (A = e^(2πi/16))", show(&m2));
    for p in [2, 6, 10, -2] {
        let a = diagonal_power_trace(&m, p).eval().norm();
        let b = diagonal_power_trace(&m2, p).eval().norm();
        println!("|Tr(M^{p})| = {a:.9}   |Tr(M'^{p})| = {b:.9}");
    }
}
