//! Builds the clasps of size up to three, checks their defining properties
//! and prints each one with its trace.
//!
//! Run with `cargo run --example clasp [LEVEL]`.

use std::time::Instant;

use a2skein::clasp::{build_clasp, check_clasp, clasp_trace, ClaspLabel, DEFAULT_MAX_SIZE};
use a2skein::Context;

fn main() -> a2skein::Result<()> {
    let ctx = match std::env::args().nth(1) {
        Some(k) => Context::level(k.parse().expect("level must be an integer")),
        None => Context::generic(),
    };
    println!("coefficients: {ctx}");
    for size in 0..=3u32 {
        for m in (0..=size).rev() {
            let c = ClaspLabel::new(m, size - m);
            let start = Instant::now();
            let p = match build_clasp(c, &ctx, DEFAULT_MAX_SIZE) {
                Ok(p) => p,
                Err(e) => {
                    println!("{c}: {e}");
                    continue;
                }
            };
            let check = check_clasp(&p, c, &ctx)?;
            println!(
                "{c}: {} webs, trace {}, checks {} ({:.2?})",
                p.len(),
                clasp_trace(c, &ctx),
                if check.all() { "pass" } else { "FAIL" },
                start.elapsed()
            );
            if size <= 2 {
                println!("{p}");
            }
        }
    }
    Ok(())
}
