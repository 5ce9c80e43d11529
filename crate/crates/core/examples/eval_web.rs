//! Evaluates closed webs with the spider relations and reduces an open web
//! to non-elliptic ones.
//!
//! Run with `cargo run --example eval_web`.

use a2skein::web::{
    evaluate_closed, evaluate_closed_with, reduce, ReductionOrder, Sign, Web, WebSum,
};
use a2skein::{Context, Scalar};

const THETA: &str = include_str!("data/theta.json");

fn main() -> a2skein::Result<()> {
    let g = Context::generic();
    let theta = Web::from_json(THETA)?;
    println!("theta: {}", evaluate_closed(&theta, &g)?);
    println!("two circles: {}", evaluate_closed(&Web::circles(2), &g)?);

    // a square of H's closed against its mirror is the cube
    let square = Web::identity(&[Sign::Out, Sign::In])
        .attach_h(0)?
        .attach_h(0)?;
    let cube = square.pair(&square)?;
    let value = evaluate_closed(&cube, &g)?;
    println!("cube ({} vertices): {value}", cube.vertex_count());
    for seed in [1, 2, 3] {
        let other = evaluate_closed_with(&cube, &g, ReductionOrder::Shuffled(seed))?;
        println!("  shuffled order {seed} agrees: {}", other == value);
    }
    for k in [1, 2, 3] {
        let ctx = Context::level(k);
        let v = evaluate_closed(&cube, &ctx)?;
        println!("  level {k}: {:.9}", ctx.to_complex(&v, None)?.re);
    }

    // the square face of the open web reduces to two terms
    println!(
        "\nreduced square:\n{}",
        reduce(&WebSum::single(&square, Scalar::one()), &g)?
    );
    println!("web JSON of the square:\n{}", square.to_json());
    Ok(())
}
