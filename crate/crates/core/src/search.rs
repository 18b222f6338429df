//! Breadth-first enumeration of Λₙ by letter length.
//!
//! This is the independent check on the closed-form minimum: it never uses
//! the trace formula, only exact matrix products over the alphabet
//! `a, a⁻¹, b, b⁻¹`, deduplicated in PSL₂(ℤ).

use std::collections::{BTreeMap, HashSet};
use std::io::Write;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::json;
use crate::matrix::{ElementKind, Mat2, ProjMat2};
use crate::thurston::{congruence_decompose, ThurstonRep};
use crate::word::{Generator, TwistWord};

pub const DEFAULT_MAX_NODES: usize = 5_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchConfig {
    /// Cap on distinct elements discovered.
    pub max_nodes: usize,
    /// Worker threads for frontier expansion; `None` uses the global pool.
    pub jobs: Option<usize>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_nodes: DEFAULT_MAX_NODES,
            jobs: None,
        }
    }
}

const LETTERS: [(Generator, i64); 4] = [
    (Generator::Alpha, 1),
    (Generator::Alpha, -1),
    (Generator::Beta, 1),
    (Generator::Beta, -1),
];

#[derive(Clone, Debug)]
pub struct Enumeration {
    pub n: u64,
    pub max_len: usize,
    /// Distinct elements with a shortest word, sorted by normal form.
    pub elements: Vec<(ProjMat2, TwistWord)>,
}

impl Enumeration {
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn contains(&self, x: &ProjMat2) -> bool {
        self.elements.binary_search_by(|(k, _)| k.cmp(x)).is_ok()
    }

    pub fn word_for(&self, x: &ProjMat2) -> Option<&TwistWord> {
        self.elements
            .binary_search_by(|(k, _)| k.cmp(x))
            .ok()
            .map(|i| &self.elements[i].1)
    }

    /// Multiplicity of each `|trace|` among the enumerated elements.
    pub fn trace_histogram(&self) -> BTreeMap<BigInt, usize> {
        let mut hist = BTreeMap::new();
        for (x, _) in &self.elements {
            *hist.entry(x.trace_abs()).or_insert(0) += 1;
        }
        hist
    }

    pub fn write_histogram_csv<W: Write>(&self, out: W) -> Result<()> {
        let mut w = csv::Writer::from_writer(out);
        w.write_record(["abs_trace", "multiplicity"])?;
        for (t, count) in self.trace_histogram() {
            w.write_record([t.to_string(), count.to_string()])?;
        }
        w.flush()?;
        Ok(())
    }
}

fn with_pool<T: Send>(jobs: Option<usize>, f: impl FnOnce() -> T + Send) -> Result<T> {
    match jobs {
        None => Ok(f()),
        Some(j) => {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(j.max(1))
                .build()
                .map_err(|e| Error::InvalidArgument(e.to_string()))?;
            Ok(pool.install(f))
        }
    }
}

/// All elements of Λₙ reachable within `max_len` letters, each with the
/// first shortest word found in the canonical letter order.
pub fn enumerate(n: u64, max_len: usize, config: &SearchConfig) -> Result<Enumeration> {
    let rep = ThurstonRep::new(n)?;
    let letters: Vec<(Mat2, Generator, i64)> = LETTERS
        .iter()
        .map(|&(g, e)| (rep.matrix(&TwistWord::syllable(g, e)), g, e))
        .collect();

    with_pool(config.jobs, || {
        let mut seen: HashSet<ProjMat2> = HashSet::new();
        let mut found = vec![(ProjMat2::identity(), TwistWord::identity())];
        seen.insert(ProjMat2::identity());
        let mut frontier: Vec<(Mat2, TwistWord)> = vec![(Mat2::identity(), TwistWord::identity())];

        for depth in 1..=max_len {
            // order-preserving parallel map, sequential merge
            let children: Vec<(ProjMat2, Mat2, TwistWord)> = frontier
                .par_iter()
                .flat_map_iter(|(x, w)| {
                    letters.iter().map(move |(l, g, e)| {
                        let product = x * l;
                        let mut word = w.clone();
                        word.push(*g, *e);
                        (ProjMat2::from(product.clone()), product, word)
                    })
                })
                .collect();
            let mut next = Vec::new();
            for (key, x, w) in children {
                if seen.insert(key.clone()) {
                    if seen.len() > config.max_nodes {
                        return Err(Error::BudgetExceeded {
                            limit: config.max_nodes,
                            explored: seen.len(),
                            depth: depth - 1,
                        });
                    }
                    found.push((key, w.clone()));
                    next.push((x, w));
                }
            }
            frontier = next;
            if frontier.is_empty() {
                break;
            }
        }
        found.sort_by(|a, b| a.0.cmp(&b.0));
        Ok(Enumeration {
            n,
            max_len,
            elements: found,
        })
    })?
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    #[serde(with = "word_text")]
    pub word: TwistWord,
    #[serde(with = "matrix_rows")]
    pub matrix: Mat2,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    pub n: u64,
    pub max_len: usize,
    pub distinct: usize,
    #[serde(with = "json::opt_bigint")]
    pub min_trace: Option<BigInt>,
    pub witnesses: Vec<Witness>,
    /// Congruence closure over the enumeration; `None` when `n < 3`.
    pub congruence_ok: Option<bool>,
}

impl SearchReport {
    pub fn from_enumeration(e: &Enumeration) -> Self {
        let hyperbolic = e
            .elements
            .iter()
            .filter(|(x, _)| x.classify() == ElementKind::Hyperbolic);
        let min_trace = hyperbolic.clone().map(|(x, _)| x.trace_abs()).min();
        let mut witnesses: Vec<Witness> = match &min_trace {
            None => Vec::new(),
            Some(t) => hyperbolic
                .filter(|(x, _)| &x.trace_abs() == t)
                .map(|(x, w)| Witness {
                    word: w.clone(),
                    matrix: x.representative().clone(),
                })
                .collect(),
        };
        witnesses.sort_by(|a, b| {
            (a.word.letter_len(), &a.matrix).cmp(&(b.word.letter_len(), &b.matrix))
        });
        let congruence_ok = (e.n >= 3).then(|| congruence_closed(e));
        SearchReport {
            n: e.n,
            max_len: e.max_len,
            distinct: e.len(),
            min_trace,
            witnesses,
            congruence_ok,
        }
    }

    /// Some witness is `T_α T_β` up to cyclic rotation and inversion.
    pub fn has_product_witness(&self) -> bool {
        let forms: Vec<TwistWord> = ["a b", "b a", "a^-1 b^-1", "b^-1 a^-1"]
            .iter()
            .map(|s| s.parse().expect("literal word"))
            .collect();
        self.witnesses.iter().any(|w| forms.contains(&w.word))
    }

    /// The closed-form minimum `|trace|` for Λₙ, where one is known.
    pub fn expected_min_trace(n: u64) -> Option<BigInt> {
        match n {
            1 => Some(BigInt::from(3)),
            n if n >= 3 => Some(BigInt::from(n) * n - 2),
            _ => None,
        }
    }

    /// Minimum matches the closed form, a product witness exists, and (for
    /// `n ≥ 3`) the enumeration is congruence-closed.
    pub fn confirms_closed_form(&self) -> bool {
        let Some(expected) = Self::expected_min_trace(self.n) else {
            return false;
        };
        let product_ok = self.n == 1 || self.has_product_witness();
        self.min_trace.as_ref() == Some(&expected)
            && product_ok
            && self.congruence_ok.unwrap_or(true)
    }
}

fn congruence_closed(e: &Enumeration) -> bool {
    e.elements
        .par_iter()
        .all(|(x, _)| congruence_decompose(x.representative(), e.n).is_ok())
}

/// Enumerate and summarize, for any `n ≥ 1`.
pub fn search_report(n: u64, max_len: usize, config: &SearchConfig) -> Result<SearchReport> {
    Ok(SearchReport::from_enumeration(&enumerate(
        n, max_len, config,
    )?))
}

pub fn verify_min_trace(n: u64, max_len: usize, config: &SearchConfig) -> Result<SearchReport> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "minimal-trace check needs n ≥ 3, got {n}"
        )));
    }
    search_report(n, max_len, config)
}

pub fn verify_congruence_closure(n: u64, max_len: usize, config: &SearchConfig) -> Result<bool> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "congruence closure needs n ≥ 3, got {n}"
        )));
    }
    Ok(congruence_closed(&enumerate(n, max_len, config)?))
}

mod word_text {
    use crate::word::TwistWord;
    use serde::{Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(w: &TwistWord, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(w)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<TwistWord, D::Error> {
        String::deserialize(d)?
            .parse()
            .map_err(serde::de::Error::custom)
    }
}

mod matrix_rows {
    use crate::json::JsonInt;
    use crate::matrix::Mat2;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    pub fn serialize<S: Serializer>(m: &Mat2, s: S) -> Result<S::Ok, S::Error> {
        let [[a, b], [c, d]] = m.rows();
        [[JsonInt(a), JsonInt(b)], [JsonInt(c), JsonInt(d)]].serialize(s)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Mat2, D::Error> {
        let [[a, b], [c, dd]] = <[[JsonInt; 2]; 2]>::deserialize(d)?;
        Mat2::new(a.0, b.0, c.0, dd.0).map_err(serde::de::Error::custom)
    }
}
