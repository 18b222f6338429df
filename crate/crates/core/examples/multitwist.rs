//! Multitwists: μ from the intersection matrix and trace classification.
//!
//! `cargo run --example multitwist -- fixtures/two_by_two.csv "a b^-1"`

use thurston::multitwist::{mu, multitwist_classify, IntersectionMatrix};
use thurston::TwistWord;

fn main() -> thurston::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    if let [path, word] = &args[..] {
        let n = IntersectionMatrix::from_path(path)?;
        println!("{}", multitwist_classify(&word.parse()?, &n)?);
        return Ok(());
    }

    let ab = TwistWord::alpha_beta();
    let cases = [
        vec![vec![4]],
        vec![vec![1, 1], vec![1, 1]],
        vec![vec![2, 1], vec![1, 2]],
        vec![vec![1, 2, 0], vec![0, 1, 3], vec![2, 0, 1]],
    ];
    for entries in cases {
        let n = IntersectionMatrix::new(entries)?;
        let r = multitwist_classify(&ab, &n)?;
        println!(
            "{:?}: μ = {:.6}, tr(ab) = {:.6}, {}{}",
            n.entries(),
            mu(&n)?,
            r.trace,
            r.kind,
            r.dilatation
                .map(|l| format!(", λ ≈ {l:.10}"))
                .unwrap_or_default()
        );
    }
    Ok(())
}
