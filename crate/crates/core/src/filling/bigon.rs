//! Crossing data and the double bigon move.
//!
//! A filling permutation is determined by its crossings. Call the crossing
//! where αᵢ ends (and αᵢ₊₁ starts) crossing `i`; β enters it along some βⱼ
//! and leaves along βⱼ₊₁, crossing α from one side or the other. Writing
//! `ai, ao, bi, bo` for the incoming and outgoing arcs and `x⁻` for `Q(x)`,
//! the four polygon corners at the crossing are
//!
//! ```text
//! positive:  σ(ai) = bo    σ(bi) = ai⁻   σ(ao⁻) = bi⁻   σ(bo⁻) = ao
//! negative:  σ(ai) = bi⁻   σ(bi) = ao    σ(ao⁻) = bo    σ(bo⁻) = ai⁻
//! ```
//!
//! The double bigon move isotopes α across β near one crossing and back,
//! so that crossing `x` of sign `s` becomes three consecutive crossings
//! `x₁, x₂, x₃` (in the same order along both curves) with signs
//! `s, −s, s`. Two new bigons appear between them, the two polygons at the
//! corners `σ(ai)` and `σ(ao⁻)` (positive case) gain two sides each, and
//! the genus is unchanged. Puncturing the bigons gives a filling pair on
//! Σ_{g,n+2} with two more intersections.

use super::{validate_filling, Perm};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Crossing {
    /// Zero-based index of the β-arc entering this crossing.
    pub beta_in: usize,
    pub positive: bool,
}

struct Labels {
    m: usize,
}

impl Labels {
    fn alpha(&self, i: usize) -> usize {
        2 * (i % self.m)
    }
    fn beta(&self, j: usize) -> usize {
        2 * (j % self.m) + 1
    }
    fn rev(&self, x: usize) -> usize {
        (x + 2 * self.m) % (4 * self.m)
    }
}

/// Rebuilds σ from crossing data, indexed by the α-arc entering each crossing.
pub fn from_crossings(crossings: &[Crossing]) -> Result<Perm> {
    let m = crossings.len();
    if m == 0 {
        return Err(Error::InvalidArgument("no crossings".into()));
    }
    let mut entered = vec![false; m];
    for c in crossings {
        if c.beta_in >= m || std::mem::replace(&mut entered[c.beta_in], true) {
            return Err(Error::NotFilling(format!(
                "β-arc {} ends at two crossings",
                c.beta_in + 1
            )));
        }
    }
    let l = Labels { m };
    let mut images = vec![usize::MAX; 4 * m];
    for (i, c) in crossings.iter().enumerate() {
        let (ai, ao) = (l.alpha(i), l.alpha(i + 1));
        let (bi, bo) = (l.beta(c.beta_in), l.beta(c.beta_in + 1));
        let corners = if c.positive {
            [
                (ai, bo),
                (bi, l.rev(ai)),
                (l.rev(ao), l.rev(bi)),
                (l.rev(bo), ao),
            ]
        } else {
            [
                (ai, l.rev(bi)),
                (bi, ao),
                (l.rev(ao), bo),
                (l.rev(bo), l.rev(ai)),
            ]
        };
        for (from, to) in corners {
            images[from] = to;
        }
    }
    Ok(Perm::from_zero_based(images))
}

/// Reads the crossing data off a filling permutation.
pub fn crossings(sigma: &Perm) -> Result<Vec<Crossing>> {
    let m = sigma.m();
    let l = Labels { m };
    let mut out = Vec::with_capacity(m);
    for i in 0..m {
        let image = sigma.at(l.alpha(i));
        if image.is_multiple_of(2) {
            return Err(Error::NotFilling(format!(
                "σ sends α-arc {} to an α-arc",
                i + 1
            )));
        }
        let crossing = if image < 2 * m {
            Crossing {
                beta_in: (image / 2 + m - 1) % m,
                positive: true,
            }
        } else {
            Crossing {
                beta_in: (image - 2 * m) / 2,
                positive: false,
            }
        };
        out.push(crossing);
    }
    if from_crossings(&out)? != *sigma {
        return Err(Error::NotFilling(
            "corners do not match any crossing pattern".into(),
        ));
    }
    Ok(out)
}

/// Splits crossing `at` into three, returning the new crossing list.
fn zigzag(crossings: &[Crossing], at: usize) -> Vec<Crossing> {
    let x = crossings[at];
    let j = x.beta_in;
    let shift = |k: usize, pivot: usize| if k <= pivot { k } else { k + 2 };
    let mut out = Vec::with_capacity(crossings.len() + 2);
    for (i, c) in crossings.iter().enumerate() {
        out.push(Crossing {
            beta_in: shift(c.beta_in, j),
            positive: c.positive,
        });
        if i == at {
            out.push(Crossing {
                beta_in: j + 1,
                positive: !x.positive,
            });
            out.push(Crossing {
                beta_in: j + 2,
                positive: x.positive,
            });
        }
    }
    out
}

/// Applies the double bigon move at the first crossing (in α order) where
/// it adds exactly two punctured bigons, and checks the result against
/// Σ_{g,n+2}.
pub fn double_bigon(sigma: &Perm, genus: usize, punctures: usize) -> Result<Perm> {
    let before = validate_filling(sigma, genus, punctures);
    if !before.is_valid() {
        return Err(Error::NotFilling(format!(
            "σ is not a filling permutation for Σ_{{{genus},{punctures}}}"
        )));
    }
    let data = crossings(sigma)?;
    for at in 0..data.len() {
        let candidate = from_crossings(&zigzag(&data, at))?;
        let after = validate_filling(&candidate, genus, punctures + 2);
        if after.is_valid() && after.two_cycle_count == before.two_cycle_count + 2 {
            return Ok(candidate);
        }
    }
    Err(Error::NoBigonSite)
}
