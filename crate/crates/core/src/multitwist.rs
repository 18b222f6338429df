//! Multitwists along multicurves.
//!
//! For multicurves `A = {α₁…α_k}` and `B = {β₁…β_ℓ}` with intersection
//! matrix `N[i][j] = i(αᵢ, βⱼ)`, the products of twists along all of `A`
//! and all of `B` map into `SL₂(ℝ)` with off-diagonal entries `∓√μ`, where
//! `μ` is the Perron–Frobenius eigenvalue of `NᵀN`. A single pair of curves
//! meeting `n` times has `N = [n]`, recovering `Λₙ`.
//!
//! Everything here is floating point and classification uses an explicit
//! tolerance band around `|tr| = 2`. Only row and column positivity of `N`
//! is checked; whether `A ∪ B` actually fills is assumed, as is
//! disjointness of the curves within each multicurve.

use std::fmt;
use std::ops::Mul;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matrix::ElementKind;
use crate::word::{Generator, TwistWord};

/// Half-width of the parabolic band around `|tr| = 2`.
pub const TRACE_BAND: f64 = 1e-9;
/// Relative convergence tolerance for power iteration.
pub const MU_TOLERANCE: f64 = 1e-12;
const MAX_ITERATIONS: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "MatrixJson", into = "MatrixJson")]
pub struct IntersectionMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<u64>>,
}

#[derive(Serialize, Deserialize)]
struct MatrixJson {
    rows: usize,
    cols: usize,
    entries: Vec<Vec<u64>>,
}

impl From<IntersectionMatrix> for MatrixJson {
    fn from(m: IntersectionMatrix) -> Self {
        MatrixJson {
            rows: m.rows,
            cols: m.cols,
            entries: m.entries,
        }
    }
}

impl TryFrom<MatrixJson> for IntersectionMatrix {
    type Error = Error;

    fn try_from(raw: MatrixJson) -> Result<Self> {
        if raw.entries.len() != raw.rows || raw.entries.iter().any(|r| r.len() != raw.cols) {
            return Err(Error::Parse(format!(
                "entries do not form a {}×{} matrix",
                raw.rows, raw.cols
            )));
        }
        IntersectionMatrix::new(raw.entries)
    }
}

impl IntersectionMatrix {
    pub fn new(entries: Vec<Vec<u64>>) -> Result<Self> {
        let rows = entries.len();
        let cols = entries.first().map_or(0, Vec::len);
        if rows == 0 || cols == 0 {
            return Err(Error::Parse("intersection matrix is empty".into()));
        }
        if let Some(i) = entries.iter().position(|r| r.len() != cols) {
            return Err(Error::Parse(format!(
                "row {} has {} entries, expected {cols}",
                i + 1,
                entries[i].len()
            )));
        }
        if let Some(i) = entries.iter().position(|r| r.iter().all(|&x| x == 0)) {
            return Err(Error::CannotFill(format!("α{} meets no curve of B", i + 1)));
        }
        if let Some(j) = (0..cols).find(|&j| entries.iter().all(|r| r[j] == 0)) {
            return Err(Error::CannotFill(format!("β{} meets no curve of A", j + 1)));
        }
        Ok(IntersectionMatrix {
            rows,
            cols,
            entries,
        })
    }

    /// The 1×1 matrix of a single pair meeting `n` times.
    pub fn single(n: u64) -> Result<Self> {
        Self::new(vec![vec![n]])
    }

    /// Comma-separated rows, one per line; blank lines and `#` comments skipped.
    pub fn from_csv_str(s: &str) -> Result<Self> {
        let mut reader = csv::ReaderBuilder::new()
            .has_headers(false)
            .comment(Some(b'#'))
            .trim(csv::Trim::All)
            .flexible(true)
            .from_reader(s.as_bytes());
        let mut entries = Vec::new();
        for record in reader.records() {
            let record = record?;
            let row = record
                .iter()
                .map(|tok| {
                    tok.parse::<u64>()
                        .map_err(|_| Error::Parse(format!("bad matrix entry `{tok}`")))
                })
                .collect::<Result<Vec<_>>>()?;
            entries.push(row);
        }
        Self::new(entries)
    }

    pub fn from_json_str(s: &str) -> Result<Self> {
        Ok(serde_json::from_str(s)?)
    }

    /// JSON if the text starts with `{`, CSV otherwise.
    pub fn parse(s: &str) -> Result<Self> {
        if s.trim_start().starts_with('{') {
            Self::from_json_str(s)
        } else {
            Self::from_csv_str(s)
        }
    }

    pub fn from_path(path: impl AsRef<Path>) -> Result<Self> {
        Self::parse(&std::fs::read_to_string(path)?)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entries(&self) -> &[Vec<u64>] {
        &self.entries
    }

    pub fn transpose(&self) -> Self {
        let entries = (0..self.cols)
            .map(|j| self.entries.iter().map(|r| r[j]).collect())
            .collect();
        IntersectionMatrix {
            rows: self.cols,
            cols: self.rows,
            entries,
        }
    }

    pub fn max_entry(&self) -> u64 {
        self.entries.iter().flatten().copied().max().unwrap_or(0)
    }

    /// `NᵀN`, or `NNᵀ` when that is smaller; both have the same top eigenvalue.
    fn gram(&self) -> Vec<Vec<f64>> {
        if self.rows < self.cols {
            return self.transpose().gram();
        }
        (0..self.cols)
            .map(|i| {
                (0..self.cols)
                    .map(|j| self.entries.iter().map(|r| (r[i] * r[j]) as f64).sum())
                    .collect()
            })
            .collect()
    }
}

/// Largest eigenvalue of `NᵀN`.
pub fn mu(n: &IntersectionMatrix) -> Result<f64> {
    let g = n.gram();
    match g.len() {
        1 => Ok(g[0][0]),
        2 => {
            let (a, b, d) = (g[0][0], g[0][1], g[1][1]);
            Ok((a + d + ((a - d).powi(2) + 4.0 * b * b).sqrt()) / 2.0)
        }
        _ => power_iteration(&g),
    }
}

fn power_iteration(g: &[Vec<f64>]) -> Result<f64> {
    let apply = |v: &[f64]| -> Vec<f64> {
        g.iter()
            .map(|row| row.iter().zip(v).map(|(x, y)| x * y).sum())
            .collect()
    };
    let norm = |v: &[f64]| v.iter().map(|x| x * x).sum::<f64>().sqrt();
    let mut v = vec![1.0 / (g.len() as f64).sqrt(); g.len()];
    let mut lambda = 0.0;
    let mut residual = f64::INFINITY;
    for _ in 0..MAX_ITERATIONS {
        let w = apply(&v);
        let next: f64 = w.iter().zip(&v).map(|(x, y)| x * y).sum();
        residual = w
            .iter()
            .zip(&v)
            .map(|(x, y)| (x - next * y).powi(2))
            .sum::<f64>()
            .sqrt();
        let settled = (next - lambda).abs() <= MU_TOLERANCE * next;
        lambda = next;
        // for symmetric matrices the residual bounds the eigenvalue error
        if settled && residual <= MU_TOLERANCE * lambda {
            return Ok(lambda);
        }
        let len = norm(&w);
        v = w.into_iter().map(|x| x / len).collect();
    }
    Err(Error::NoConvergence { residual })
}

/// A real 2×2 matrix, row-major.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct RealMat2 {
    pub m: [[f64; 2]; 2],
}

impl RealMat2 {
    pub fn identity() -> Self {
        RealMat2 {
            m: [[1.0, 0.0], [0.0, 1.0]],
        }
    }

    pub fn trace(&self) -> f64 {
        self.m[0][0] + self.m[1][1]
    }

    pub fn determinant(&self) -> f64 {
        self.m[0][0] * self.m[1][1] - self.m[0][1] * self.m[1][0]
    }

    /// `|det − 1|`.
    pub fn det_residual(&self) -> f64 {
        (self.determinant() - 1.0).abs()
    }

    /// Inverse of a determinant-one matrix.
    pub fn inverse(&self) -> Self {
        let [[a, b], [c, d]] = self.m;
        RealMat2 {
            m: [[d, -b], [-c, a]],
        }
    }

    fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inverse() } else { *self };
        (0..e.unsigned_abs()).fold(RealMat2::identity(), |acc, _| &acc * &base)
    }

    fn near_plus_minus_identity(&self, tol: f64) -> bool {
        let [[a, b], [c, d]] = self.m;
        b.abs() <= tol && c.abs() <= tol && (a - d).abs() <= tol && (a.abs() - 1.0).abs() <= tol
    }
}

impl Mul for &RealMat2 {
    type Output = RealMat2;

    fn mul(self, o: &RealMat2) -> RealMat2 {
        let (x, y) = (self.m, o.m);
        let e = |i: usize, j: usize| x[i][0] * y[0][j] + x[i][1] * y[1][j];
        RealMat2 {
            m: [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]],
        }
    }
}

impl fmt::Display for RealMat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let [[a, b], [c, d]] = self.m;
        writeln!(f, "[ {a:>12.6} {b:>12.6} ]")?;
        write!(f, "[ {c:>12.6} {d:>12.6} ]")
    }
}

/// Images of the twists `T_A` and `T_B`.
pub fn rep_generators(n: &IntersectionMatrix) -> Result<(RealMat2, RealMat2)> {
    let s = mu(n)?.sqrt();
    Ok((
        RealMat2 {
            m: [[1.0, -s], [0.0, 1.0]],
        },
        RealMat2 {
            m: [[1.0, 0.0], [s, 1.0]],
        },
    ))
}

/// Evaluates a word with `a ↦ T_A`, `b ↦ T_B`.
pub fn evaluate(w: &TwistWord, n: &IntersectionMatrix) -> Result<RealMat2> {
    let (ta, tb) = rep_generators(n)?;
    Ok(w.syllables()
        .iter()
        .fold(RealMat2::identity(), |acc, &(g, e)| {
            let base = match g {
                Generator::Alpha => &ta,
                Generator::Beta => &tb,
            };
            &acc * &base.pow(e)
        }))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MultitwistReport {
    pub word: String,
    pub mu: f64,
    pub sqrt_mu: f64,
    pub matrix: RealMat2,
    pub trace: f64,
    pub kind: ElementKind,
    pub dilatation: Option<f64>,
    pub det_residual: f64,
    /// `|tr|` fell inside the parabolic band while `√μ` is not close to an
    /// integer, so the label rests on the tolerance alone.
    pub tolerance_classified: bool,
}

impl fmt::Display for MultitwistReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "word            {}", self.word)?;
        writeln!(f, "mu              {:.12}", self.mu)?;
        writeln!(f, "sqrt(mu)        {:.12}", self.sqrt_mu)?;
        writeln!(f, "trace           {:.12}", self.trace)?;
        writeln!(f, "classification  {}", self.kind)?;
        match self.dilatation {
            Some(l) => writeln!(f, "dilatation      {l:.12}")?,
            None => writeln!(f, "dilatation      -")?,
        }
        writeln!(f, "det residual    {:.3e}", self.det_residual)?;
        write!(
            f,
            "tolerance flag  {}",
            if self.tolerance_classified {
                "tolerance-classified"
            } else {
                "-"
            }
        )
    }
}

/// Classifies the image of `w` by its trace.
pub fn multitwist_classify(w: &TwistWord, n: &IntersectionMatrix) -> Result<MultitwistReport> {
    let mu = mu(n)?;
    let sqrt_mu = mu.sqrt();
    let matrix = evaluate(w, n)?;
    let (kind, tolerance_classified) = classify_real(&matrix, sqrt_mu);
    let t = matrix.trace().abs();
    let dilatation = (kind == ElementKind::Hyperbolic).then(|| (t + (t * t - 4.0).sqrt()) / 2.0);
    Ok(MultitwistReport {
        word: w.to_string(),
        mu,
        sqrt_mu,
        matrix,
        trace: matrix.trace(),
        kind,
        dilatation,
        det_residual: matrix.det_residual(),
        tolerance_classified,
    })
}

/// Trace classification of a real matrix built from `±√μ` entries, with
/// the band scaled by the largest entry so long words are not misread.
fn classify_real(matrix: &RealMat2, sqrt_mu: f64) -> (ElementKind, bool) {
    let t = matrix.trace().abs();
    let scale = matrix
        .m
        .iter()
        .flatten()
        .fold(1.0_f64, |acc, x| acc.max(x.abs()));
    let band = TRACE_BAND * scale;
    let in_band = (t - 2.0).abs() <= band;
    let kind = if matrix.near_plus_minus_identity(band) {
        ElementKind::Identity
    } else if in_band {
        ElementKind::Parabolic
    } else if t < 2.0 {
        ElementKind::Elliptic
    } else {
        ElementKind::Hyperbolic
    };
    let integral = (sqrt_mu - sqrt_mu.round()).abs() <= 1e-9 * sqrt_mu.max(1.0);
    (kind, in_band && !integral)
}
