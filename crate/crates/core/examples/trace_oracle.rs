//! Breadth-first enumeration of Λₙ as an independent check on the minimal
//! hyperbolic trace.
//!
//! `cargo run --release --example trace_oracle -- 5 8`

use thurston::search::{search_report, SearchConfig, SearchReport};

fn main() -> thurston::Result<()> {
    let mut args = std::env::args().skip(1).map(|a| a.parse::<u64>());
    let n = args.next().and_then(|r| r.ok()).unwrap_or(4);
    let max_len = args.next().and_then(|r| r.ok()).unwrap_or(6) as usize;

    let report = search_report(n, max_len, &SearchConfig::default())?;
    println!(
        "Λ_{n} to length {max_len}: {} distinct elements",
        report.distinct
    );
    if let Some(t) = &report.min_trace {
        println!(
            "min |trace| = {t} (closed form {:?})",
            SearchReport::expected_min_trace(n).map(|t| t.to_string())
        );
    }
    for w in report.witnesses.iter().take(4) {
        println!("  {:<10} {:?}", w.word.to_string(), w.matrix.rows());
    }
    println!("confirms closed form: {}", report.confirms_closed_form());
    Ok(())
}
