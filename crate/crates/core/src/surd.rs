//! Exact real quadratic surds `(p + q√D) / 2`.
//!
//! Every spectral radius of a hyperbolic element of SL₂(ℤ) with trace `t`
//! is `(|t| + √(t² − 4)) / 2`, so this one shape is all the number field
//! machinery the crate needs. Values are kept canonical: `D` is squarefree
//! (square factors are pulled into `q`), and a rational value always has
//! `q = D = 0`. Canonical form makes structural equality value equality.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::json::JsonInt;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadraticSurd {
    p: BigInt,
    q: BigInt,
    d: BigInt,
}

impl QuadraticSurd {
    /// Builds `(p + q√d) / 2`, reducing `d` to its squarefree part.
    pub fn new(p: impl Into<BigInt>, q: impl Into<BigInt>, d: impl Into<BigInt>) -> Result<Self> {
        let (p, q, d) = (p.into(), q.into(), d.into());
        if q.is_negative() {
            return Err(Error::InvalidArgument(format!(
                "surd coefficient q = {q} is negative"
            )));
        }
        if d.is_negative() {
            return Err(Error::InvalidArgument(format!(
                "radicand D = {d} is negative"
            )));
        }
        Ok(Self::canonical(p, q, d))
    }

    /// The rational number `p / 2`.
    pub fn rational(p: impl Into<BigInt>) -> Self {
        QuadraticSurd {
            p: p.into(),
            q: BigInt::zero(),
            d: BigInt::zero(),
        }
    }

    pub fn one() -> Self {
        Self::rational(2)
    }

    /// Larger root of `x² − t x + 1`, i.e. `(t + √(t² − 4)) / 2`.
    pub fn from_trace(t: &BigInt) -> Result<Self> {
        if *t < BigInt::from(3) {
            return Err(Error::NotHyperbolic(t.clone()));
        }
        let d = t * t - 4;
        Ok(Self::canonical(t.clone(), BigInt::one(), d))
    }

    fn canonical(p: BigInt, q: BigInt, d: BigInt) -> Self {
        if q.is_zero() || d.is_zero() {
            return Self::rational(p);
        }
        let (square, core) = square_part(d.magnitude());
        let q = q * BigInt::from(square);
        if core.is_one() {
            return Self::rational(p + q);
        }
        QuadraticSurd {
            p,
            q,
            d: BigInt::from(core),
        }
    }

    pub fn p(&self) -> &BigInt {
        &self.p
    }

    pub fn q(&self) -> &BigInt {
        &self.q
    }

    pub fn radicand(&self) -> &BigInt {
        &self.d
    }

    pub fn is_rational(&self) -> bool {
        self.q.is_zero()
    }

    /// Floating approximation. Opposite-sign terms are combined through the
    /// conjugate so that cancellation does not cost relative accuracy.
    pub fn to_f64(&self) -> f64 {
        let p = self.p.to_f64().unwrap_or(f64::NAN);
        if self.is_rational() {
            return p / 2.0;
        }
        let root = self.d.to_f64().unwrap_or(f64::NAN).sqrt();
        let q = self.q.to_f64().unwrap_or(f64::NAN);
        if !self.p.is_negative() {
            return (p + q * root) / 2.0;
        }
        // p < 0 < q√D: p + q√D = (q²D − p²) / (q√D − p)
        let num = (&self.q * &self.q * &self.d - &self.p * &self.p)
            .to_f64()
            .unwrap_or(f64::NAN);
        num / (2.0 * (q * root - p))
    }

    /// Decimal rendering with 15 significant digits.
    pub fn decimal(&self) -> String {
        format_significant(self.to_f64(), 15)
    }

    /// Whether this value is a root of `x² + b x + c`, decided exactly.
    pub fn is_root_of_monic(&self, b: &BigInt, c: &BigInt) -> bool {
        // 4(x² + bx + c) = (p² + q²D + 2bp + 4c) + (2pq + 2bq)√D
        let rational: BigInt =
            &self.p * &self.p + &self.q * &self.q * &self.d + 2 * b * &self.p + 4 * c;
        let irrational: BigInt = 2 * &self.p * &self.q + 2 * b * &self.q;
        rational.is_zero() && irrational.is_zero()
    }
}

/// Splits `n` as `square² · core` with `core` squarefree.
fn square_part(n: &BigUint) -> (BigUint, BigUint) {
    if n.is_zero() {
        return (BigUint::one(), BigUint::zero());
    }
    let factors: BTreeMap<BigUint, usize> = match n.to_u64() {
        Some(small) => num_prime::nt_funcs::factorize64(small)
            .into_iter()
            .map(|(p, e)| (BigUint::from(p), e))
            .collect(),
        None => num_prime::nt_funcs::factorize(n.clone()),
    };
    let mut square = BigUint::one();
    let mut core = BigUint::one();
    for (prime, exp) in factors {
        square *= prime.pow((exp / 2) as u32);
        if exp % 2 == 1 {
            core *= prime;
        }
    }
    (square, core)
}

fn sign_of(x: &BigInt) -> Ordering {
    x.sign().cmp(&Sign::NoSign)
}

/// Exact sign of `a + b√x` for `x ≥ 0`.
fn sign_linear(a: &BigInt, b: &BigInt, x: &BigInt) -> Ordering {
    let sb = if x.is_zero() {
        Ordering::Equal
    } else {
        sign_of(b)
    };
    let sa = sign_of(a);
    if sb == Ordering::Equal || sa == sb {
        return sa;
    }
    if sa == Ordering::Equal {
        return sb;
    }
    match (a * a).cmp(&(b * b * x)) {
        Ordering::Greater => sa,
        Ordering::Less => sb,
        Ordering::Equal => Ordering::Equal,
    }
}

/// Exact sign of `a + b√x + c√y` for `x, y ≥ 0`.
fn sign_two_radicals(a: &BigInt, b: &BigInt, x: &BigInt, c: &BigInt, y: &BigInt) -> Ordering {
    // sign of w = b√x + c√y
    let zero = BigInt::zero();
    let sw = match (sign_linear(&zero, b, x), sign_linear(&zero, c, y)) {
        (Ordering::Equal, s) | (s, Ordering::Equal) => s,
        (s, t) if s == t => s,
        (s, t) => match (b * b * x).cmp(&(c * c * y)) {
            Ordering::Greater => s,
            Ordering::Less => t,
            Ordering::Equal => Ordering::Equal,
        },
    };
    let sa = sign_of(a);
    if sw == Ordering::Equal || sa == sw {
        return sa;
    }
    if sa == Ordering::Equal {
        return sw;
    }
    // opposite signs: compare a² with w² = b²x + c²y + 2bc√(xy)
    let rest = a * a - b * b * x - c * c * y;
    match sign_linear(&rest, &(-2 * b * c), &(x * y)) {
        Ordering::Greater => sa,
        Ordering::Less => sw,
        Ordering::Equal => Ordering::Equal,
    }
}

impl Ord for QuadraticSurd {
    fn cmp(&self, other: &Self) -> Ordering {
        // sign of (p₁ − p₂) + q₁√D₁ − q₂√D₂
        let a = &self.p - &other.p;
        let c = -&other.q;
        sign_two_radicals(&a, &self.q, &self.d, &c, &other.d)
    }
}

impl PartialOrd for QuadraticSurd {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for QuadraticSurd {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let two = BigInt::from(2);
        if self.is_rational() {
            let (half, rem) = self.p.div_rem(&two);
            return if rem.is_zero() {
                write!(f, "{half}")
            } else {
                write!(f, "{}/2", self.p)
            };
        }
        let radical = |f: &mut fmt::Formatter<'_>, q: &BigInt| {
            if q.is_one() {
                write!(f, "√{}", self.d)
            } else {
                write!(f, "{q}√{}", self.d)
            }
        };
        if self.p.is_even() && self.q.is_even() {
            let (p, q) = (&self.p / &two, &self.q / &two);
            if !p.is_zero() {
                write!(f, "{p} + ")?;
            }
            radical(f, &q)
        } else {
            write!(f, "({} + ", self.p)?;
            radical(f, &self.q)?;
            write!(f, ")/2")
        }
    }
}

#[derive(Serialize, Deserialize)]
struct SurdJson {
    p: JsonInt,
    q: JsonInt,
    #[serde(rename = "D")]
    d: JsonInt,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    decimal: Option<String>,
}

impl Serialize for QuadraticSurd {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        SurdJson {
            p: JsonInt(self.p.clone()),
            q: JsonInt(self.q.clone()),
            d: JsonInt(self.d.clone()),
            decimal: Some(self.decimal()),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for QuadraticSurd {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = SurdJson::deserialize(d)?;
        QuadraticSurd::new(raw.p.0, raw.q.0, raw.d.0).map_err(serde::de::Error::custom)
    }
}

/// Formats `x` with `digits` significant digits, switching to scientific
/// notation once the integer part alone needs more than that.
pub(crate) fn format_significant(x: f64, digits: usize) -> String {
    if x == 0.0 || !x.is_finite() {
        return format!("{x}");
    }
    let magnitude = x.abs().log10().floor() as i64 + 1;
    if magnitude > digits as i64 {
        return format!("{:.*e}", digits - 1, x);
    }
    let decimals = (digits as i64 - magnitude).max(0) as usize;
    format!("{x:.decimals$}")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn surd(p: i64, q: i64, d: i64) -> QuadraticSurd {
        QuadraticSurd::new(p, q, d).unwrap()
    }

    fn parts(s: &QuadraticSurd) -> (i64, i64, i64) {
        (
            s.p.to_i64().unwrap(),
            s.q.to_i64().unwrap(),
            s.d.to_i64().unwrap(),
        )
    }

    #[test]
    fn from_trace_examples() {
        assert_eq!(
            parts(&QuadraticSurd::from_trace(&3.into()).unwrap()),
            (3, 1, 5)
        );
        assert_eq!(
            parts(&QuadraticSurd::from_trace(&7.into()).unwrap()),
            (7, 3, 5)
        );
        assert_eq!(
            parts(&QuadraticSurd::from_trace(&14.into()).unwrap()),
            (14, 8, 3)
        );
    }

    #[test]
    fn seven_plus_three_root_five_squares_to_forty_five() {
        // (3√5)² = 45 = 7² − 4, so both spellings agree.
        assert_eq!(surd(7, 1, 45), surd(7, 3, 5));
        assert_eq!(9 * 5, 7 * 7 - 4);
    }

    #[test]
    fn non_hyperbolic_traces_rejected() {
        for t in [-5, 0, 1, 2] {
            assert!(matches!(
                QuadraticSurd::from_trace(&t.into()),
                Err(Error::NotHyperbolic(_))
            ));
        }
    }

    #[test]
    fn canonical_form() {
        assert_eq!(parts(&surd(5, 0, 7)), (5, 0, 0));
        assert_eq!(parts(&surd(5, 3, 0)), (5, 0, 0));
        // √16 is rational
        assert_eq!(parts(&surd(1, 1, 16)), (5, 0, 0));
        assert_eq!(parts(&surd(0, 1, 72)), (0, 6, 2));
        assert!(QuadraticSurd::new(1, -1, 5).is_err());
        assert!(QuadraticSurd::new(1, 1, -5).is_err());
    }

    #[test]
    fn float_values() {
        assert!((surd(3, 1, 5).to_f64() - 2.618033988749895).abs() < 1e-15);
        assert_eq!(surd(2, 0, 0).to_f64(), 1.0);
        assert!((surd(14, 8, 3).to_f64() - 13.928203230275509).abs() < 1e-14);
        // conjugate route: (−3 + √5)/2
        let small = surd(-3, 1, 5);
        assert!((small.to_f64() - -0.3819660112501051).abs() < 1e-16);
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(surd(14, 8, 3).decimal(), "13.9282032302755");
        assert_eq!(surd(3, 1, 5).decimal(), "2.61803398874989");
        assert_eq!(QuadraticSurd::one().decimal(), "1.00000000000000");
    }

    #[test]
    fn comparison_examples() {
        assert_eq!(surd(3, 1, 5).cmp(&surd(7, 3, 5)), Ordering::Less);
        assert_eq!(surd(14, 8, 3).cmp(&surd(14, 8, 3)), Ordering::Equal);
        assert_eq!(surd(7, 3, 5).cmp(&surd(14, 8, 3)), Ordering::Less);
        assert_eq!(surd(14, 8, 3).cmp(&surd(7, 3, 5)), Ordering::Greater);
    }

    #[test]
    fn comparison_mixed_radicands() {
        assert_eq!(
            surd(0, 1, 2).cmp(&QuadraticSurd::rational(3)),
            Ordering::Less
        );
        assert_eq!(
            surd(0, 2, 2).cmp(&QuadraticSurd::rational(2)),
            Ordering::Greater
        );
        assert_eq!(
            surd(-2, 2, 2).cmp(&QuadraticSurd::rational(0)),
            Ordering::Greater
        );
        assert_eq!(surd(0, 1, 2).cmp(&surd(0, 1, 3)), Ordering::Less);
        // 3 + √2 ≈ 4.414 sits between √19 ≈ 4.359 and 2√5 ≈ 4.472
        assert_eq!(surd(6, 2, 2).cmp(&surd(0, 2, 19)), Ordering::Greater);
        assert_eq!(surd(6, 2, 2).cmp(&surd(0, 4, 5)), Ordering::Less);
    }

    #[test]
    fn display() {
        assert_eq!(surd(14, 8, 3).to_string(), "7 + 4√3");
        assert_eq!(surd(3, 1, 5).to_string(), "(3 + √5)/2");
        assert_eq!(surd(7, 3, 5).to_string(), "(7 + 3√5)/2");
        assert_eq!(QuadraticSurd::one().to_string(), "1");
        assert_eq!(QuadraticSurd::rational(3).to_string(), "3/2");
    }

    #[test]
    fn json_shape() {
        let v = serde_json::to_value(surd(14, 8, 3)).unwrap();
        assert_eq!(
            v,
            serde_json::json!({"p": 14, "q": 8, "D": 3, "decimal": "13.9282032302755"})
        );
        let back: QuadraticSurd = serde_json::from_str(r#"{"p": 7, "q": 1, "D": 45}"#).unwrap();
        assert_eq!(back, surd(7, 3, 5));
    }

    #[test]
    fn large_radicand_reduction() {
        let t: BigInt = "123456789012345".parse().unwrap();
        let s = QuadraticSurd::from_trace(&t).unwrap();
        assert!(s.is_root_of_monic(&-&t, &BigInt::one()));
    }
}
