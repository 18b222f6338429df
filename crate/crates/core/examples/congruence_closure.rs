//! Every element of Λₙ has the shape [[1 + k₁n², k₂n], [k₃n, 1 + k₄n²]].

use thurston::search::{enumerate, SearchConfig};
use thurston::thurston::congruence_decompose;
use thurston::TwistWord;

fn main() -> thurston::Result<()> {
    let w: TwistWord = "a b^-2 a^3".parse()?;
    let rep = thurston::thurston::ThurstonRep::new(3)?;
    let x = rep.matrix(&w);
    let form = congruence_decompose(&x, 3)?;
    println!("{w} ↦\n{x}");
    println!(
        "k = ({}, {}, {}, {}), determinant condition {}",
        form.k1,
        form.k2,
        form.k3,
        form.k4,
        form.determinant_condition_holds()
    );

    for n in 3..=5 {
        let e = enumerate(n, 6, &SearchConfig::default())?;
        let failures = e
            .elements
            .iter()
            .filter(|(x, _)| congruence_decompose(x.representative(), n).is_err())
            .count();
        println!(
            "n = {n}: {} elements, {failures} outside the congruence shape",
            e.len()
        );
    }
    Ok(())
}
