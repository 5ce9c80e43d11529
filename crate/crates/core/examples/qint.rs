//! Quantum integers over Q(A) and at a root of unity.
//!
//! At level k the parameter A is a primitive 6r-th root of unity, r = k + 3,
//! and [n] becomes periodic: [3r] = 0, [3r - n] = [n], [3r + n] = -[n].
//!
//! Run with `cargo run --example qint [LEVEL]`.

use a2skein::Context;

fn main() {
    let k: u32 = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("level must be an integer"))
        .unwrap_or(2);
    let g = Context::generic();
    for n in 0..=4 {
        println!("[{n}] = {}", g.qint(n));
    }

    let ctx = Context::level(k);
    let r = i64::from(k) + 3;
    println!("\n{ctx}");
    for n in 0..=3 * r {
        let v = ctx.qint(n);
        let z = ctx.to_complex(&v, None).unwrap();
        println!("[{n:>2}] = {:>10.6}   {v}", z.re);
    }
    let three_r = 3 * r;
    println!("\n[3r] = 0: {}", ctx.qint(three_r).is_zero());
    let periodic = (0..=three_r).all(|n| {
        ctx.qint(three_r - n) == ctx.qint(n)
            && ctx.qint(three_r + n) == -ctx.qint(n)
            && ctx.qint(n + 6 * r) == ctx.qint(n)
    });
    println!("reflection and periodicity hold: {periodic}");
}
