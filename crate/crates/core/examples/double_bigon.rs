//! Grow a filling pair on the torus by repeatedly adding two punctured bigons.

use thurston::filling::{double_bigon, i_min, validate_filling, Perm};

fn main() -> thurston::Result<()> {
    let mut sigma: Perm = "(1,2,3,4)".parse()?;
    let mut n = 1;
    println!("Σ_{{1,{n}}}  m = {}  σ = {sigma}", sigma.m());
    for _ in 0..3 {
        sigma = double_bigon(&sigma, 1, n)?;
        n += 2;
        let v = validate_filling(&sigma, 1, n);
        println!(
            "Σ_{{1,{n}}}  m = {} (i_min {})  2-cycles {}  valid {}  σ = {sigma}",
            sigma.m(),
            i_min(1, n as u64)?,
            v.two_cycle_count,
            v.is_valid()
        );
    }
    Ok(())
}
