//! Dimensions of SU(3)_k state spaces of handlebodies, counted over
//! admissible labellings of a spine.
//!
//! Run with `cargo run --example state_space`.

use a2skein::surface::{admissible_labellings, state_space_dim, SpineGraph};

fn main() -> a2skein::Result<()> {
    let torus = SpineGraph::torus();
    for k in 0..=6u64 {
        println!(
            "torus, k = {k}: {} (closed count {})",
            state_space_dim(&torus, k as u32)?,
            (k + 1) * (k + 2) / 2
        );
    }
    for (name, spine) in [
        ("dumbbell", SpineGraph::dumbbell()),
        ("theta", SpineGraph::theta()),
    ] {
        println!("\n{name}, genus {}:", spine.genus());
        for l in admissible_labellings(&spine, 1)? {
            let labels: Vec<String> = l.edges.iter().map(|c| c.to_string()).collect();
            println!("  {} × {:?}", labels.join(" "), l.vertex_dims);
        }
        println!("  k = 1: {}", state_space_dim(&spine, 1)?);
        match state_space_dim(&spine, 2) {
            Ok(d) => println!("  k = 2: {d}"),
            Err(e) => println!("  k = 2: {e}"),
        }
    }
    Ok(())
}
