//! Edge weights, complexity and level of curves on handlebody spines, and the
//! triangle spaces at the vertices under the leading labelling.
//!
//! Run with `cargo run --example certificate`.

use a2skein::surface::{detection_certificate, is_graph_geodesic, CurveWord, SpineGraph};

fn report(name: &str, spine: &SpineGraph, curve: &CurveWord) -> a2skein::Result<()> {
    println!("{name}:");
    match detection_certificate(spine, curve) {
        Ok(c) => {
            println!("  complexity {}, level {}", c.complexity, c.min_level);
            for (e, l) in &c.leading_labelling {
                println!("  {e} ↦ {l}");
            }
            for v in &c.vertices {
                println!("  {}: {} has dimension {}", v.vertex, v.triple, v.dim);
            }
            println!(
                "  flux balanced {}, leading term non-zero {}",
                c.flux_balanced, c.leading_term_nonzero
            );
        }
        Err(e) => println!("  rejected: {e}"),
    }
    Ok(())
}

fn main() -> a2skein::Result<()> {
    let torus = SpineGraph::from_json(include_str!("data/torus.json"))?;
    let dumbbell = SpineGraph::from_json(include_str!("data/dumbbell.json"))?;
    report(
        "torus, one crossing",
        &torus,
        &CurveWord::from_json(include_str!("data/torus_curve.json"))?,
    )?;
    let alternating = CurveWord::new([("loop1", 1), ("bridge", 1), ("loop2", 1), ("bridge", 1)]);
    report("dumbbell, alternating", &dumbbell, &alternating)?;
    report(
        "dumbbell, balanced",
        &dumbbell,
        &CurveWord::from_json(include_str!("data/dumbbell_curve.json"))?,
    )?;
    let back_and_forth = CurveWord::new([("e", 1), ("e", -1)]);
    println!("geodesic: {}", is_graph_geodesic(&torus, &back_and_forth)?);
    report("torus, back and forth", &torus, &back_and_forth)?;
    Ok(())
}
