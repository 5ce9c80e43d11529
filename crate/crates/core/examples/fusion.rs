//! Triangle spaces of three clasp labels: dimensions, admissible 6-tuples and
//! the basis webs they index.
//!
//! Run with `cargo run --example fusion ["(m1,n1),(m2,n2),(m3,n3)"]`.

use a2skein::fusion::{
    build_triangle_basis_web, ell_reduce, enumerate_six_tuples, p_values, triangle_dim,
    triangle_dim_at_level, TripleLabel,
};

fn main() -> a2skein::Result<()> {
    let labels = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "(1,1),(1,1),(1,1)".into());
    let t = TripleLabel::parse(&labels)?;
    println!("labels {t}: dimension {}", triangle_dim(&t)?);
    match ell_reduce(&t)? {
        None => println!("Σm - Σn is not a multiple of 3; the space is zero"),
        Some((base, ell, side)) => {
            println!(
                "ℓ = {ell} ({side:?}), balanced part {base}, p = {:?}",
                p_values(&base).1
            );
            for st in enumerate_six_tuples(&base) {
                let w = build_triangle_basis_web(&t, &st)?;
                println!(
                    "  {st:?}: {} vertices, non-elliptic {}",
                    w.vertex_count(),
                    w.is_non_elliptic()
                );
            }
        }
    }
    for k in 1..=4 {
        match triangle_dim_at_level(&t, k) {
            Ok(d) => println!("level {k}: {d}"),
            Err(e) => println!("level {k}: {e}"),
        }
    }

    println!("\nsome dimensions:");
    for text in [
        "(1,0),(0,1),(0,0)",
        "(1,0),(1,0),(1,0)",
        "(2,1),(1,2),(1,1)",
        "(3,0),(0,3),(2,2)",
        "(2,0),(2,0),(0,1)",
    ] {
        let t = TripleLabel::parse(text)?;
        match triangle_dim(&t) {
            Ok(d) => println!("  {t}: {d}"),
            Err(e) => println!("  {t}: {e}"),
        }
    }
    Ok(())
}
