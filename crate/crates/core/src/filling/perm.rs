use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A permutation of `{1, …, 4m}`. Stored zero-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "PermJson", into = "PermJson")]
pub struct Perm {
    images: Vec<usize>,
}

impl Perm {
    /// From one-based images `σ(1), …, σ(4m)`.
    pub fn from_images(images: &[usize]) -> Result<Self> {
        let degree = images.len();
        if degree == 0 || !degree.is_multiple_of(4) {
            return Err(Error::NotPermutation(format!(
                "degree {degree} is not a positive multiple of 4"
            )));
        }
        let mut hit = vec![false; degree];
        for (j, &k) in images.iter().enumerate() {
            if k == 0 || k > degree {
                return Err(Error::NotPermutation(format!(
                    "image {k} of symbol {} outside 1..={degree}",
                    j + 1
                )));
            }
            if std::mem::replace(&mut hit[k - 1], true) {
                return Err(Error::NotPermutation(format!("symbol {k} is hit twice")));
            }
        }
        Ok(Perm {
            images: images.iter().map(|k| k - 1).collect(),
        })
    }

    pub(crate) fn from_zero_based(images: Vec<usize>) -> Self {
        debug_assert!(images.len().is_multiple_of(4));
        Perm { images }
    }

    pub fn identity(m: usize) -> Self {
        Perm {
            images: (0..4 * m).collect(),
        }
    }

    /// Builds a permutation of degree `4m` from disjoint cycles (one-based).
    /// Symbols not mentioned are fixed.
    pub fn from_cycles(m: usize, cycles: &[&[usize]]) -> Result<Self> {
        let degree = 4 * m;
        let mut images: Vec<Option<usize>> = vec![None; degree];
        for cycle in cycles {
            for (i, &s) in cycle.iter().enumerate() {
                let t = cycle[(i + 1) % cycle.len()];
                for v in [s, t] {
                    if v == 0 || v > degree {
                        return Err(Error::NotPermutation(format!(
                            "symbol {v} outside 1..={degree}"
                        )));
                    }
                }
                if images[s - 1].replace(t - 1).is_some() {
                    return Err(Error::NotPermutation(format!("symbol {s} appears twice")));
                }
            }
        }
        let images: Vec<usize> = images
            .into_iter()
            .enumerate()
            .map(|(j, k)| k.unwrap_or(j))
            .collect();
        Self::from_images(&images.iter().map(|k| k + 1).collect::<Vec<_>>())
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    /// Intersection number encoded by the permutation.
    pub fn m(&self) -> usize {
        self.images.len() / 4
    }

    /// `σ(j)` for one-based `j`.
    pub fn apply(&self, j: usize) -> usize {
        self.images[j - 1] + 1
    }

    pub(crate) fn at(&self, j: usize) -> usize {
        self.images[j]
    }

    /// One-based images.
    pub fn images(&self) -> Vec<usize> {
        self.images.iter().map(|k| k + 1).collect()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Perm) -> Perm {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Perm {
            images: other.images.iter().map(|&k| self.images[k]).collect(),
        }
    }

    pub fn inverse(&self) -> Perm {
        let mut inv = vec![0; self.degree()];
        for (j, &k) in self.images.iter().enumerate() {
            inv[k] = j;
        }
        Perm { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(j, &k)| j == k)
    }

    /// Odd symbols go to even ones and vice versa.
    pub fn is_parity_reversing(&self) -> bool {
        self.images.iter().enumerate().all(|(j, &k)| j % 2 != k % 2)
    }

    pub fn is_parity_respecting(&self) -> bool {
        self.images.iter().enumerate().all(|(j, &k)| j % 2 == k % 2)
    }

    /// Disjoint cycles, each starting at its least symbol, ordered by that
    /// symbol. Fixed points are included as 1-cycles.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.degree()];
        let mut out = Vec::new();
        for start in 0..self.degree() {
            if seen[start] {
                continue;
            }
            let mut cycle = Vec::new();
            let mut j = start;
            while !seen[j] {
                seen[j] = true;
                cycle.push(j + 1);
                j = self.images[j];
            }
            out.push(cycle);
        }
        out
    }

    pub fn cycle_count(&self) -> usize {
        self.cycles().len()
    }

    pub fn count_cycles_of_len(&self, len: usize) -> usize {
        self.cycles().iter().filter(|c| c.len() == len).count()
    }
}

impl fmt::Display for Perm {
    /// Cycle notation listing every symbol, e.g. `(1,2,3,4)` or `(1,3)(2)(4)`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for cycle in self.cycles() {
            let body: Vec<String> = cycle.iter().map(usize::to_string).collect();
            write!(f, "({})", body.join(","))?;
        }
        Ok(())
    }
}

impl FromStr for Perm {
    type Err = Error;

    /// Strict cycle notation: every symbol of `{1, …, 4m}` must appear
    /// exactly once, fixed points written as 1-cycles. The degree is the
    /// largest symbol present.
    fn from_str(s: &str) -> Result<Self> {
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(Error::Parse("empty cycle notation".into()));
        }
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        let mut rest = compact.as_str();
        while !rest.is_empty() {
            let body = rest
                .strip_prefix('(')
                .and_then(|r| r.split_once(')'))
                .ok_or_else(|| Error::Parse(format!("expected `(...)` at `{rest}`")))?;
            let cycle = body
                .0
                .split(',')
                .map(|tok| {
                    tok.parse::<usize>()
                        .map_err(|_| Error::Parse(format!("bad symbol `{tok}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            if cycle.contains(&0) {
                return Err(Error::Parse(
                    "symbol 0 is not allowed; symbols start at 1".into(),
                ));
            }
            cycles.push(cycle);
            rest = body.1;
        }
        let max = cycles.iter().flatten().copied().max().unwrap_or(0);
        if max % 4 != 0 {
            return Err(Error::NotPermutation(format!(
                "largest symbol {max} is not a multiple of 4"
            )));
        }
        let mut count = vec![0usize; max];
        for &s in cycles.iter().flatten() {
            count[s - 1] += 1;
        }
        if let Some(s) = count.iter().position(|&c| c > 1) {
            return Err(Error::NotPermutation(format!(
                "symbol {} appears twice",
                s + 1
            )));
        }
        if let Some(s) = count.iter().position(|&c| c == 0) {
            return Err(Error::NotPermutation(format!(
                "symbol {} unassigned",
                s + 1
            )));
        }
        let refs: Vec<&[usize]> = cycles.iter().map(Vec::as_slice).collect();
        Perm::from_cycles(max / 4, &refs)
    }
}

#[derive(Serialize, Deserialize)]
struct PermJson {
    m: usize,
    images: Vec<usize>,
}

impl From<Perm> for PermJson {
    fn from(p: Perm) -> Self {
        PermJson {
            m: p.m(),
            images: p.images(),
        }
    }
}

impl TryFrom<PermJson> for Perm {
    type Error = Error;

    fn try_from(raw: PermJson) -> Result<Self> {
        if raw.images.len() != 4 * raw.m {
            return Err(Error::NotPermutation(format!(
                "m = {} needs {} images, got {}",
                raw.m,
                4 * raw.m,
                raw.images.len()
            )));
        }
        Perm::from_images(&raw.images)
    }
}
