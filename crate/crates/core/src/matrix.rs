//! Exact SL₂(ℤ) / PSL₂(ℤ) arithmetic.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::json::JsonInt;
use crate::surd::QuadraticSurd;

/// A 2×2 integer matrix of determinant 1, entries in row-major order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Mat2 {
    a: BigInt,
    b: BigInt,
    c: BigInt,
    d: BigInt,
}

impl Mat2 {
    pub fn new(
        a: impl Into<BigInt>,
        b: impl Into<BigInt>,
        c: impl Into<BigInt>,
        d: impl Into<BigInt>,
    ) -> Result<Self> {
        let m = Mat2 {
            a: a.into(),
            b: b.into(),
            c: c.into(),
            d: d.into(),
        };
        let det = m.determinant();
        if !det.is_one() {
            return Err(Error::Determinant(det));
        }
        Ok(m)
    }

    pub(crate) fn new_unchecked(a: BigInt, b: BigInt, c: BigInt, d: BigInt) -> Self {
        Mat2 { a, b, c, d }
    }

    pub fn identity() -> Self {
        Self::new_unchecked(BigInt::one(), BigInt::zero(), BigInt::zero(), BigInt::one())
    }

    /// `[[1, x], [0, 1]]`
    pub fn upper(x: impl Into<BigInt>) -> Self {
        Self::new_unchecked(BigInt::one(), x.into(), BigInt::zero(), BigInt::one())
    }

    /// `[[1, 0], [x, 1]]`
    pub fn lower(x: impl Into<BigInt>) -> Self {
        Self::new_unchecked(BigInt::one(), BigInt::zero(), x.into(), BigInt::one())
    }

    pub fn a(&self) -> &BigInt {
        &self.a
    }
    pub fn b(&self) -> &BigInt {
        &self.b
    }
    pub fn c(&self) -> &BigInt {
        &self.c
    }
    pub fn d(&self) -> &BigInt {
        &self.d
    }

    pub fn entries(&self) -> [&BigInt; 4] {
        [&self.a, &self.b, &self.c, &self.d]
    }

    pub fn rows(&self) -> [[BigInt; 2]; 2] {
        [
            [self.a.clone(), self.b.clone()],
            [self.c.clone(), self.d.clone()],
        ]
    }

    pub fn determinant(&self) -> BigInt {
        &self.a * &self.d - &self.b * &self.c
    }

    pub fn trace(&self) -> BigInt {
        &self.a + &self.d
    }

    pub fn inverse(&self) -> Self {
        Self::new_unchecked(self.d.clone(), -&self.b, -&self.c, self.a.clone())
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_one() && self.b.is_zero() && self.c.is_zero() && self.d.is_one()
    }
}

impl Mul for &Mat2 {
    type Output = Mat2;

    fn mul(self, y: &Mat2) -> Mat2 {
        Mat2::new_unchecked(
            &self.a * &y.a + &self.b * &y.c,
            &self.a * &y.b + &self.b * &y.d,
            &self.c * &y.a + &self.d * &y.c,
            &self.c * &y.b + &self.d * &y.d,
        )
    }
}

impl Mul for Mat2 {
    type Output = Mat2;

    fn mul(self, y: Mat2) -> Mat2 {
        &self * &y
    }
}

impl std::ops::Neg for &Mat2 {
    type Output = Mat2;

    fn neg(self) -> Mat2 {
        Mat2::new_unchecked(-&self.a, -&self.b, -&self.c, -&self.d)
    }
}

impl fmt::Display for Mat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.entries().iter().map(|e| e.to_string()).collect();
        let left = cells[0].len().max(cells[2].len());
        let right = cells[1].len().max(cells[3].len());
        writeln!(f, "[ {:>left$}  {:>right$} ]", cells[0], cells[1])?;
        write!(f, "[ {:>left$}  {:>right$} ]", cells[2], cells[3])
    }
}

#[derive(Serialize, Deserialize)]
struct MatJson {
    m: [[JsonInt; 2]; 2],
}

impl Serialize for Mat2 {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let [[a, b], [c, d]] = self.rows();
        MatJson {
            m: [[JsonInt(a), JsonInt(b)], [JsonInt(c), JsonInt(d)]],
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Mat2 {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let MatJson {
            m: [[a, b], [c, dd]],
        } = MatJson::deserialize(d)?;
        Mat2::new(a.0, b.0, c.0, dd.0).map_err(serde::de::Error::custom)
    }
}

/// Conjugacy-free classification of a PSL₂ element.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ElementKind {
    Identity,
    Elliptic,
    Parabolic,
    Hyperbolic,
}

impl fmt::Display for ElementKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ElementKind::Identity => "identity",
            ElementKind::Elliptic => "elliptic",
            ElementKind::Parabolic => "parabolic",
            ElementKind::Hyperbolic => "hyperbolic",
        })
    }
}

/// The class of `±M` in PSL₂(ℤ), stored as the representative whose first
/// nonzero entry (in the order a, b, c, d) is positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "Mat2", into = "Mat2")]
pub struct ProjMat2(Mat2);

impl From<Mat2> for ProjMat2 {
    fn from(m: Mat2) -> Self {
        let leading = m.entries().into_iter().find(|e| !e.is_zero()).cloned();
        match leading {
            Some(e) if e.is_negative() => ProjMat2(-&m),
            _ => ProjMat2(m),
        }
    }
}

impl From<ProjMat2> for Mat2 {
    fn from(p: ProjMat2) -> Self {
        p.0
    }
}

impl ProjMat2 {
    pub fn identity() -> Self {
        ProjMat2(Mat2::identity())
    }

    pub fn representative(&self) -> &Mat2 {
        &self.0
    }

    pub fn trace_abs(&self) -> BigInt {
        self.0.trace().abs()
    }

    pub fn inverse(&self) -> Self {
        self.0.inverse().into()
    }

    pub fn is_identity(&self) -> bool {
        self.0.is_identity()
    }

    pub fn classify(&self) -> ElementKind {
        if self.is_identity() {
            return ElementKind::Identity;
        }
        let t = self.trace_abs();
        let two = BigInt::from(2);
        match t.cmp(&two) {
            std::cmp::Ordering::Less => ElementKind::Elliptic,
            std::cmp::Ordering::Equal => ElementKind::Parabolic,
            std::cmp::Ordering::Greater => ElementKind::Hyperbolic,
        }
    }

    /// Largest eigenvalue magnitude; exactly 1 unless hyperbolic.
    pub fn spectral_radius(&self) -> QuadraticSurd {
        match self.classify() {
            ElementKind::Hyperbolic => {
                QuadraticSurd::from_trace(&self.trace_abs()).expect("hyperbolic trace exceeds 2")
            }
            _ => QuadraticSurd::one(),
        }
    }
}

impl Mul for &ProjMat2 {
    type Output = ProjMat2;

    fn mul(self, y: &ProjMat2) -> ProjMat2 {
        (&self.0 * &y.0).into()
    }
}

impl fmt::Display for ProjMat2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
