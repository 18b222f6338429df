//! Closed-form minimal dilatations, by intersection number and by surface.
//!
//! `cargo run --example min_dilatation -- 3 2` prints the minimum on Σ_{3,2}.

use thurston::thurston::{min_dilatation, min_dilatation_for_surface};

fn main() -> thurston::Result<()> {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    if let [g, n] = args[..] {
        let best = min_dilatation_for_surface(g, n)?;
        println!(
            "Σ_{{{g},{n}}}: i = {}, λ = {} ≈ {}",
            best.intersection,
            best.dilatation,
            best.dilatation.decimal()
        );
        return Ok(());
    }

    println!("{:>3}  {:<18} {:>18}  witness", "i", "λ", "decimal");
    for i in 1..=10 {
        match min_dilatation(i) {
            Ok(m) => println!(
                "{i:>3}  {:<18} {:>18}  {}",
                m.dilatation.to_string(),
                m.dilatation.decimal(),
                m.witness
            ),
            Err(e) => println!("{i:>3}  {e}"),
        }
    }
    println!();
    for (g, n) in [(2, 0), (3, 0), (1, 3), (0, 5), (0, 3), (0, 4)] {
        match min_dilatation_for_surface(g, n) {
            Ok(s) => println!(
                "Σ_{{{g},{n}}}  i = {:<2} λ = {}",
                s.intersection, s.dilatation
            ),
            Err(e) => println!("Σ_{{{g},{n}}}  {e}"),
        }
    }
    Ok(())
}
