//! Sweeps every word s^a1 t^b1 ... s^an t^bn with n ≤ 3 blocks, exponents in
//! [-8, 8], Σa even and Σb ≡ 2 mod 4, comparing |Tr| between Ising and
//! SU(2)_2.
//!
//! Run with `cargo run --release --example word_sweep [BLOCKS]`.

use std::time::Instant;

use a2skein::repdata::sweep_words;

fn main() {
    let blocks = std::env::args()
        .nth(1)
        .map(|s| s.parse().expect("block count must be an integer"))
        .unwrap_or(3);
    let start = Instant::now();
    let r = sweep_words(blocks, 8, 1e-6);
    println!(
        "{} words, {} with |Tr| gap ≤ 1e-6, smallest gap {:e} ({:.2?})",
        r.words_checked,
        r.failures,
        r.min_gap,
        start.elapsed()
    );
    for w in &r.examples {
        println!("  {w}");
    }
}
