//! Exact quadratic irrationals: canonical form, ordering, decimals.

use thurston::QuadraticSurd;

fn main() -> thurston::Result<()> {
    for t in [3, 7, 14, 23, 34] {
        let lambda = QuadraticSurd::from_trace(&t.into())?;
        println!(
            "trace {t:>2}: λ = {:<16} (p, q, D) = ({}, {}, {})  ≈ {}",
            lambda.to_string(),
            lambda.p(),
            lambda.q(),
            lambda.radicand(),
            lambda.decimal()
        );
    }

    // (0 + 2√12)/2 reduces to 2√3
    let x = QuadraticSurd::new(0, 2, 12)?;
    println!("√12 = {x}");

    let a = QuadraticSurd::new(6, 2, 2)?; // 3 + √2
    let b = QuadraticSurd::new(0, 2, 19)?; // √19
    println!("3 + √2 {:?} √19", a.cmp(&b));
    println!("{}", serde_json::to_string(&a)?);
    Ok(())
}
