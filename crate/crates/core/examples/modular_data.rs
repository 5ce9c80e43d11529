//! The built-in modular data, written out as JSON and read back, with the
//! projective phase of the torus representation.
//!
//! Run with `cargo run --example modular_data [FILE.json]`.

use a2skein::repdata::{central_phase, pow, projective_phase, ModularDatum, Theory};

fn main() -> a2skein::Result<()> {
    let data = match std::env::args().nth(1) {
        Some(path) => vec![ModularDatum::from_json(&std::fs::read_to_string(path)?)?],
        None => vec![
            ModularDatum::builtin(Theory::Ising),
            ModularDatum::builtin(Theory::Su2Level2),
        ],
    };
    for md in data {
        let json = md.to_json();
        let back = ModularDatum::from_json(&json)?;
        println!(
            "{} (c = {}/{}), JSON round trip {}",
            md.name,
            md.central_charge.0,
            md.central_charge.1,
            back == md
        );
        let dims: Vec<String> = md
            .quantum_dimensions()
            .iter()
            .map(|d| format!("{:.6}", d.eval().re))
            .collect();
        println!("  quantum dimensions {}", dims.join(", "));
        match projective_phase(&md) {
            Some(l) => {
                let z = l.eval();
                let e = central_phase(&md);
                println!(
                    "  ((S/D)T)^3 = λ (S/D)^2 with λ = {l} ≈ {:.6}{:+.6}i",
                    z.re, z.im
                );
                println!(
                    "  λ^8 = e^(2πic): {}",
                    (pow(&l, 8).eval() - e).norm() < 1e-9
                );
            }
            None => println!("  ((S/D)T)^3 is not a multiple of (S/D)^2"),
        }
    }
    Ok(())
}
