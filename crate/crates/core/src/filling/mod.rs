//! Filling pairs as polygon gluings.
//!
//! Cut a surface along a filling pair α ∪ β with `m` intersection points.
//! Each curve breaks into `m` arcs, and each arc appears twice among the
//! polygon sides, once per orientation. Symbols `1..=4m` name these oriented
//! arcs in the order `α₁, β₁, …, αₘ, βₘ, α₁⁻¹, β₁⁻¹, …, αₘ⁻¹, βₘ⁻¹`: odd
//! symbols are α-arcs, even symbols β-arcs, and `j + 2m` reverses `j`.
//!
//! The filling permutation σ sends a side to the side that follows it
//! clockwise around its polygon, so the cycles of σ are the complementary
//! polygons. With `Q` the orientation reversal and `τ` the successor along
//! each curve, every filling permutation satisfies `σQσ = τ`; conversely a
//! parity-reversing σ with that property, `m + 2 − 2g` cycles and at most
//! `n` 2-cycles (punctured bigons) describes a filling pair on Σ_{g,n}.

mod bigon;
mod perm;
mod search;

use std::fmt;

use num_integer::Integer;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub use bigon::{crossings, double_bigon, from_crossings, Crossing};
pub use perm::Perm;
pub use search::{for_each_filling, search_filling, FillingSearch, SearchOutcome};

/// `Q = (1, 2, …, 4m)^{2m}`, swapping `j ↔ j + 2m`.
pub fn make_q(m: usize) -> Perm {
    let degree = 4 * m;
    Perm::from_zero_based((0..degree).map(|j| (j + 2 * m) % degree).collect())
}

/// `τ = (1,3,…,2m−1)(2,4,…,2m)(4m−1,4m−3,…,2m+1)(4m,4m−2,…,2m+2)`.
pub fn make_tau(m: usize) -> Perm {
    let degree = 4 * m;
    let images = (0..degree)
        .map(|j| {
            if j < 2 * m {
                (j + 2) % (2 * m)
            } else {
                // descending on the reversed arcs
                2 * m + (j - 2 * m + 2 * m - 2) % (2 * m)
            }
        })
        .collect();
    Perm::from_zero_based(images)
}

/// Whether `σ(Q(σ(j))) = τ(j)` for every symbol.
pub fn satisfies_relation(sigma: &Perm) -> bool {
    let m = sigma.m();
    sigma.compose(&make_q(m)).compose(sigma) == make_tau(m)
}

/// `(2 + m − cycles) / 2` when that is a nonnegative integer.
fn euler_genus(m: usize, cycles: usize) -> Option<usize> {
    let twice = (2 + m).checked_sub(cycles)?;
    twice.is_even().then_some(twice / 2)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FillingValidation {
    pub m: usize,
    pub parity_reversing: bool,
    pub relation_ok: bool,
    pub cycle_count: usize,
    pub expected_cycles: Option<usize>,
    pub two_cycle_count: usize,
    pub genus: Option<usize>,
    pub valid_for: Option<(usize, usize, usize)>,
}

impl FillingValidation {
    pub fn is_valid(&self) -> bool {
        self.valid_for.is_some()
    }
}

impl fmt::Display for FillingValidation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let yes_no = |b: bool| if b { "yes" } else { "no" };
        let opt = |o: Option<usize>| o.map_or("-".to_string(), |v| v.to_string());
        writeln!(f, "{:<18} {}", "m", self.m)?;
        writeln!(
            f,
            "{:<18} {}",
            "parity reversing",
            yes_no(self.parity_reversing)
        )?;
        writeln!(f, "{:<18} {}", "σQσ = τ", yes_no(self.relation_ok))?;
        writeln!(
            f,
            "{:<18} {} (expected {})",
            "cycles",
            self.cycle_count,
            opt(self.expected_cycles)
        )?;
        writeln!(f, "{:<18} {}", "2-cycles", self.two_cycle_count)?;
        writeln!(f, "{:<18} {}", "genus", opt(self.genus))?;
        match self.valid_for {
            Some((g, n, m)) => write!(f, "{:<18} Σ_{{{g},{n}}} with i = {m}", "valid for"),
            None => write!(f, "{:<18} no", "valid"),
        }
    }
}

/// Checks σ against the filling conditions for Σ_{g,n}.
pub fn validate_filling(sigma: &Perm, genus: usize, punctures: usize) -> FillingValidation {
    let m = sigma.m();
    let parity_reversing = sigma.is_parity_reversing();
    let relation_ok = satisfies_relation(sigma);
    let cycles = sigma.cycles();
    let cycle_count = cycles.len();
    let two_cycle_count = cycles.iter().filter(|c| c.len() == 2).count();
    let expected_cycles = (m + 2).checked_sub(2 * genus);
    let valid = parity_reversing
        && relation_ok
        && expected_cycles == Some(cycle_count)
        && two_cycle_count <= punctures;
    FillingValidation {
        m,
        parity_reversing,
        relation_ok,
        cycle_count,
        expected_cycles,
        two_cycle_count,
        genus: euler_genus(m, cycle_count),
        valid_for: valid.then_some((genus, punctures, m)),
    }
}

/// Genus of the surface glued from σ, from `V − E + F = m − 2m + cycles`.
pub fn genus_of(sigma: &Perm) -> Result<Option<usize>> {
    if !satisfies_relation(sigma) {
        return Err(Error::NotFilling("σQσ ≠ τ".into()));
    }
    Ok(euler_genus(sigma.m(), sigma.cycle_count()))
}

/// Intersection number of the `(p, q)` and `(r, s)` curves on the torus.
pub fn torus_intersection(p: i64, q: i64, r: i64, s: i64) -> Result<u64> {
    if p.gcd(&q) != 1 {
        return Err(Error::NotSimple(p, q));
    }
    if r.gcd(&s) != 1 {
        return Err(Error::NotSimple(r, s));
    }
    Ok((i128::from(p) * i128::from(s) - i128::from(q) * i128::from(r)).unsigned_abs() as u64)
}

/// Minimal intersection number of a filling pair on Σ_{g,n}.
pub fn i_min(genus: u64, punctures: u64) -> Result<u64> {
    let (g, n) = (genus, punctures);
    match g {
        0 if n < 4 => Err(Error::NoIntersectingPair { punctures: n }),
        0 if n % 2 == 0 => Ok(n - 2),
        0 => Ok(n - 1),
        2 if n <= 2 => Ok(4),
        _ if n == 0 => Ok(2 * g - 1),
        _ => Ok(2 * g + n - 2),
    }
}
