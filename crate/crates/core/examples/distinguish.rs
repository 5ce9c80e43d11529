//! Compares |Tr| of mapping class words in the Ising and SU(2)_2
//! representations of the torus, which share S but not T.
//!
//! Run with `cargo run --example distinguish ["s^2 t^6"]`.

use a2skein::repdata::{trace_distinguish, MCGWord};

fn main() -> a2skein::Result<()> {
    if let Some(w) = std::env::args().nth(1) {
        let r = trace_distinguish(&w.parse()?);
        println!("{}", serde_json::to_string_pretty(&r)?);
        return Ok(());
    }
    println!("powers of t (5 ± 2√2 under the square root):");
    let plus = (5.0 + 2.0 * 2f64.sqrt()).sqrt();
    for m in [2, 6, 10, 14, -2, -6] {
        let r = trace_distinguish(&MCGWord::t_power(m));
        let tag = |x: f64| if (x - plus).abs() < 1e-9 { "+" } else { "-" };
        println!(
            "  t^{m:<3} Ising {:.9} ({})  SU(2)_2 {:.9} ({})",
            r.tr_ising,
            tag(r.tr_ising),
            r.tr_su2,
            tag(r.tr_su2)
        );
    }
    println!("\nwords with Σa even and Σb ≡ 2 mod 4:");
    for w in [
        "s^2 t^6",
        "s^-2 t^2 s^4 t^4",
        "s t s t",
        "s t^3 s^-1 t^-1",
        "s^3 t^2 s t^4",
    ] {
        let r = trace_distinguish(&w.parse()?);
        println!(
            "  {:<18} {:.9} vs {:.9}  distinct {}",
            r.word.to_string(),
            r.tr_ising,
            r.tr_su2,
            r.distinct
        );
    }
    Ok(())
}
