//! Search for filling permutations and validate them.
//!
//! `cargo run --release --example filling_search -- 2 3 5`

use thurston::filling::{search_filling, validate_filling, Perm, SearchOutcome};

fn main() -> thurston::Result<()> {
    let args: Vec<usize> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let (g, n, m) = match args[..] {
        [g, n, m] => (g, n, m),
        _ => (2, 0, 4),
    };

    let torus: Perm = "(1,2,3,4)".parse()?;
    println!(
        "{torus} on Σ_{{1,0}}:\n{}\n",
        validate_filling(&torus, 1, 0)
    );

    match search_filling(g, n, m, 10_000_000)? {
        SearchOutcome::Found(sigma) => {
            println!("Σ_{{{g},{n}}} with i = {m}: σ = {sigma}");
            println!("{}", validate_filling(&sigma, g, n));
        }
        SearchOutcome::Exhausted { nodes } => println!("no filling permutation ({nodes} nodes)"),
        SearchOutcome::Inconclusive { nodes } => println!("inconclusive after {nodes} nodes"),
    }

    let caption = "(1,2,19,14)(3,8,15,16,9,17,18,5,10,11,12)(6,13,20,7)";
    if let Err(e) = caption.parse::<Perm>() {
        println!("\n{caption}\n  {e}");
    }
    Ok(())
}
