//! Thurston's representation of the twist group of a filling pair.
//!
//! For curves α, β filling a surface with `i(α, β) = n`, the twists map to
//! `T_α ↦ [[1, −n], [0, 1]]` and `T_β ↦ [[1, 0], [n, 1]]` in PSL₂(ℤ). The
//! image is the group Λₙ. Periodic, reducible and pseudo-Anosov classes
//! correspond to elliptic, parabolic and hyperbolic images, and the
//! dilatation of a pseudo-Anosov class is the spectral radius of its image.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::filling::i_min;
use crate::json;
use crate::matrix::{ElementKind, Mat2, ProjMat2};
use crate::surd::QuadraticSurd;
use crate::word::{Generator, TwistWord};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum MappingClassKind {
    Identity,
    Periodic,
    /// Parabolic image: a power of `T_α` or `T_β` up to conjugacy.
    Reducible,
    PseudoAnosov,
}

impl fmt::Display for MappingClassKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MappingClassKind::Identity => "identity",
            MappingClassKind::Periodic => "periodic",
            MappingClassKind::Reducible => "twist-power (reducible)",
            MappingClassKind::PseudoAnosov => "pseudo-Anosov",
        })
    }
}

impl From<ElementKind> for MappingClassKind {
    fn from(kind: ElementKind) -> Self {
        match kind {
            ElementKind::Identity => MappingClassKind::Identity,
            ElementKind::Elliptic => MappingClassKind::Periodic,
            ElementKind::Parabolic => MappingClassKind::Reducible,
            ElementKind::Hyperbolic => MappingClassKind::PseudoAnosov,
        }
    }
}

/// `T_α ↦ [[1, −n], [0, 1]]`, `T_β ↦ [[1, 0], [n, 1]]`.
pub fn generators(n: u64) -> Result<(Mat2, Mat2)> {
    let rep = ThurstonRep::new(n)?;
    Ok((rep.alpha.clone(), rep.beta.clone()))
}

#[derive(Clone, Debug)]
pub struct ThurstonRep {
    n: u64,
    alpha: Mat2,
    beta: Mat2,
}

impl ThurstonRep {
    pub fn new(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::NonPositiveIntersection(0));
        }
        let n_big = BigInt::from(n);
        Ok(ThurstonRep {
            n,
            alpha: Mat2::upper(-&n_big),
            beta: Mat2::lower(n_big),
        })
    }

    pub fn intersection(&self) -> u64 {
        self.n
    }

    pub fn generators(&self) -> (&Mat2, &Mat2) {
        (&self.alpha, &self.beta)
    }

    fn power(&self, generator: Generator, exponent: i64) -> Mat2 {
        let entry = BigInt::from(self.n) * exponent;
        match generator {
            Generator::Alpha => Mat2::upper(-entry),
            Generator::Beta => Mat2::lower(entry),
        }
    }

    /// Exact image of `w` as an SL₂ matrix (before projectivizing).
    pub fn matrix(&self, w: &TwistWord) -> Mat2 {
        w.syllables()
            .iter()
            .fold(Mat2::identity(), |acc, &(g, e)| &acc * &self.power(g, e))
    }

    pub fn evaluate(&self, w: &TwistWord) -> ProjMat2 {
        self.matrix(w).into()
    }

    pub fn classify(&self, w: &TwistWord) -> MappingClassKind {
        self.evaluate(w).classify().into()
    }

    pub fn dilatation(&self, w: &TwistWord) -> Result<QuadraticSurd> {
        let image = self.evaluate(w);
        match image.classify() {
            ElementKind::Hyperbolic => Ok(image.spectral_radius()),
            other => Err(Error::NotPseudoAnosov(
                MappingClassKind::from(other).to_string(),
            )),
        }
    }
}

pub fn evaluate(w: &TwistWord, n: u64) -> Result<ProjMat2> {
    Ok(ThurstonRep::new(n)?.evaluate(w))
}

pub fn classify_mapping_class(w: &TwistWord, n: u64) -> Result<MappingClassKind> {
    Ok(ThurstonRep::new(n)?.classify(w))
}

pub fn dilatation(w: &TwistWord, n: u64) -> Result<QuadraticSurd> {
    ThurstonRep::new(n)?.dilatation(w)
}

/// Coefficients with `x = [[1 + k1·n², k2·n], [k3·n, 1 + k4·n²]]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CongruenceForm {
    pub n: u64,
    #[serde(with = "json::bigint")]
    pub k1: BigInt,
    #[serde(with = "json::bigint")]
    pub k2: BigInt,
    #[serde(with = "json::bigint")]
    pub k3: BigInt,
    #[serde(with = "json::bigint")]
    pub k4: BigInt,
}

impl CongruenceForm {
    pub fn to_matrix(&self) -> Result<Mat2> {
        let n = BigInt::from(self.n);
        let n2 = &n * &n;
        Mat2::new(
            BigInt::one() + &self.k1 * &n2,
            &self.k2 * &n,
            &self.k3 * &n,
            BigInt::one() + &self.k4 * &n2,
        )
    }

    /// `k2·k3 = k1·k4·n² + k1 + k4`, the determinant condition after dividing by n².
    pub fn determinant_condition_holds(&self) -> bool {
        let n2 = BigInt::from(self.n).pow(2);
        &self.k2 * &self.k3 == &self.k1 * &self.k4 * n2 + &self.k1 + &self.k4
    }

    fn try_match(x: &Mat2, n: u64) -> Option<Self> {
        let n_big = BigInt::from(n);
        let n2 = &n_big * &n_big;
        let (k1, r1) = (x.a() - BigInt::one()).div_rem(&n2);
        let (k2, r2) = x.b().div_rem(&n_big);
        let (k3, r3) = x.c().div_rem(&n_big);
        let (k4, r4) = (x.d() - BigInt::one()).div_rem(&n2);
        [r1, r2, r3, r4]
            .iter()
            .all(Zero::is_zero)
            .then_some(CongruenceForm { n, k1, k2, k3, k4 })
    }
}

/// Writes `x` (up to sign) in the congruence shape of Λₙ. Failure certifies
/// that `±x` lies outside the congruence group containing Λₙ.
pub fn congruence_decompose(x: &Mat2, n: u64) -> Result<CongruenceForm> {
    if n < 3 {
        return Err(Error::InvalidArgument(format!(
            "congruence shape needs n ≥ 3, got {n}"
        )));
    }
    let normalized = ProjMat2::from(x.clone());
    let rep = normalized.representative();
    CongruenceForm::try_match(rep, n)
        .or_else(|| CongruenceForm::try_match(&-rep, n))
        .ok_or(Error::NotCongruence { n })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinDilatation {
    pub intersection: u64,
    pub dilatation: QuadraticSurd,
    pub witness: TwistWord,
}

/// Minimal spectral radius over hyperbolic elements of Λₙ.
///
/// For `n ≥ 3` this is `(n² − 2 + n√(n² − 4)) / 2`, realized by `T_α T_β`.
/// For `n = 1` the group is all of SL₂(ℤ), the least hyperbolic trace is 3
/// and `T_α T_β⁻¹` realizes it.
pub fn min_dilatation(n: u64) -> Result<MinDilatation> {
    match n {
        0 => Err(Error::NonPositiveIntersection(0)),
        1 => Ok(MinDilatation {
            intersection: 1,
            dilatation: QuadraticSurd::from_trace(&BigInt::from(3))?,
            witness: TwistWord::from_syllables([(Generator::Alpha, 1), (Generator::Beta, -1)]),
        }),
        2 => Err(Error::ExcludedTwo),
        _ => {
            let n_big = BigInt::from(n);
            let n2 = &n_big * &n_big;
            Ok(MinDilatation {
                intersection: n,
                dilatation: QuadraticSurd::new(&n2 - 2, n_big, &n2 - 4)?,
                witness: TwistWord::alpha_beta(),
            })
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SurfaceMinimum {
    pub genus: u64,
    pub punctures: u64,
    pub intersection: u64,
    pub dilatation: QuadraticSurd,
    pub witness: TwistWord,
    /// False when `(g, n)` lies outside `g ∉ {0, 2}, n > 2`, the range the
    /// closed-form statement is phrased for; the value still follows from
    /// the minimal intersection number.
    pub theorem_hypotheses_hold: bool,
}

/// Minimal Thurston dilatation over all filling pairs on Σ_{g,n}.
pub fn min_dilatation_for_surface(genus: u64, punctures: u64) -> Result<SurfaceMinimum> {
    let i = i_min(genus, punctures)?;
    if i == 2 {
        return Err(Error::TheoremInapplicable { intersection: i });
    }
    let best = min_dilatation(i)?;
    Ok(SurfaceMinimum {
        genus,
        punctures,
        intersection: i,
        dilatation: best.dilatation,
        witness: best.witness,
        theorem_hypotheses_hold: genus != 0 && genus != 2 && punctures > 2,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use Generator::*;

    fn m(a: i64, b: i64, c: i64, d: i64) -> Mat2 {
        Mat2::new(a, b, c, d).unwrap()
    }

    fn surd(p: i64, q: i64, d: i64) -> QuadraticSurd {
        QuadraticSurd::new(p, q, d).unwrap()
    }

    #[test]
    fn generator_examples() {
        assert_eq!(generators(1).unwrap(), (m(1, -1, 0, 1), m(1, 0, 1, 1)));
        assert_eq!(generators(3).unwrap(), (m(1, -3, 0, 1), m(1, 0, 3, 1)));
        assert_eq!(generators(4).unwrap(), (m(1, -4, 0, 1), m(1, 0, 4, 1)));
        assert!(matches!(
            generators(0),
            Err(Error::NonPositiveIntersection(0))
        ));
    }

    #[test]
    fn evaluate_examples() {
        let ab = TwistWord::alpha_beta();
        assert_eq!(evaluate(&ab, 3).unwrap(), m(-8, -3, 3, 1).into());
        assert!(evaluate(&TwistWord::identity(), 5).unwrap().is_identity());
        let a2 = TwistWord::syllable(Alpha, 2);
        assert_eq!(evaluate(&a2, 3).unwrap(), m(1, -6, 0, 1).into());
    }

    #[test]
    fn classification_examples() {
        let ab = TwistWord::alpha_beta();
        assert_eq!(
            classify_mapping_class(&TwistWord::syllable(Alpha, 7), 3).unwrap(),
            MappingClassKind::Reducible
        );
        assert_eq!(
            classify_mapping_class(&ab, 3).unwrap(),
            MappingClassKind::PseudoAnosov
        );
        assert_eq!(
            classify_mapping_class(&ab, 1).unwrap(),
            MappingClassKind::Periodic
        );
        assert_eq!(
            classify_mapping_class(&TwistWord::identity(), 4).unwrap(),
            MappingClassKind::Identity
        );
    }

    #[test]
    fn periodic_at_one_has_order_six() {
        // [[0,-1],[1,1]] has trace 1; its sixth power is the identity
        let rep = ThurstonRep::new(1).unwrap();
        let x = rep.matrix(&TwistWord::alpha_beta());
        assert_eq!(x, m(0, -1, 1, 1));
        let mut power = Mat2::identity();
        for k in 1..=6 {
            power = &power * &x;
            assert_eq!(
                ProjMat2::from(power.clone()).is_identity(),
                k == 3 || k == 6
            );
        }
        assert!(power.is_identity());
    }

    #[test]
    fn dilatation_examples() {
        let ab = TwistWord::alpha_beta();
        assert_eq!(dilatation(&ab, 4).unwrap(), surd(14, 8, 3));
        assert_eq!(dilatation(&ab, 3).unwrap(), surd(7, 3, 5));
        // (n² + n√(n² − 4) − 2)/2 at n = 3 is (7 + 3√5)/2
        assert_eq!(surd(9 - 2, 3, 5), surd(7, 1, 45));
        let err = dilatation(&TwistWord::syllable(Alpha, 2), 3).unwrap_err();
        assert!(err.to_string().contains("not pseudo-Anosov"));
    }

    #[test]
    fn congruence_examples() {
        let form = congruence_decompose(&m(-8, -3, 3, 1), 3).unwrap();
        assert_eq!(
            (
                form.k1.clone(),
                form.k2.clone(),
                form.k3.clone(),
                form.k4.clone()
            ),
            (
                BigInt::from(-1),
                BigInt::from(-1),
                BigInt::from(1),
                BigInt::from(0)
            )
        );
        assert!(form.determinant_condition_holds());
        assert_eq!(form.to_matrix().unwrap(), m(-8, -3, 3, 1));

        let id = congruence_decompose(&Mat2::identity(), 5).unwrap();
        assert!(id.k1.is_zero() && id.k2.is_zero() && id.k3.is_zero() && id.k4.is_zero());

        // 2 ≢ 1 and −2 ≢ 1 (mod 9)
        assert!(matches!(
            congruence_decompose(&m(2, 1, 1, 1), 3),
            Err(Error::NotCongruence { n: 3 })
        ));
        assert!(congruence_decompose(&Mat2::identity(), 2).is_err());
    }

    #[test]
    fn congruence_handles_sign() {
        // −(AB) at n = 3 normalizes to [[8,3],[-3,-1]]; only its negation matches
        let neg = -&m(-8, -3, 3, 1);
        assert!(congruence_decompose(&neg, 3).is_ok());
    }

    #[test]
    fn min_dilatation_examples() {
        let one = min_dilatation(1).unwrap();
        assert_eq!(one.dilatation, surd(3, 1, 5));
        assert_eq!(
            evaluate(&one.witness, 1).unwrap().trace_abs(),
            BigInt::from(3)
        );
        let four = min_dilatation(4).unwrap();
        assert_eq!(four.dilatation, surd(14, 8, 3));
        assert_eq!(four.witness, TwistWord::alpha_beta());
        assert_eq!(min_dilatation(3).unwrap().dilatation, surd(7, 3, 5));
        assert!(matches!(min_dilatation(2), Err(Error::ExcludedTwo)));
        assert!(matches!(
            min_dilatation(0),
            Err(Error::NonPositiveIntersection(0))
        ));
    }

    #[test]
    fn formula_agrees_with_witness_spectral_radius() {
        for n in 3..40u64 {
            let best = min_dilatation(n).unwrap();
            assert_eq!(dilatation(&best.witness, n).unwrap(), best.dilatation);
            let t = BigInt::from(n * n - 2);
            assert!(best.dilatation.is_root_of_monic(&-t, &BigInt::one()));
        }
    }

    #[test]
    fn surface_examples() {
        let g2 = min_dilatation_for_surface(2, 0).unwrap();
        assert_eq!(
            (g2.intersection, g2.dilatation.clone()),
            (4, surd(14, 8, 3))
        );
        assert!(!g2.theorem_hypotheses_hold);
        let g3 = min_dilatation_for_surface(3, 0).unwrap();
        assert_eq!((g3.intersection, g3.dilatation), (5, surd(23, 5, 21)));
        let g1 = min_dilatation_for_surface(1, 3).unwrap();
        assert_eq!((g1.intersection, g1.dilatation), (3, surd(7, 3, 5)));
        assert_eq!(min_dilatation_for_surface(1, 4).unwrap().intersection, 4);
        assert!(g1.theorem_hypotheses_hold);
        assert!(matches!(
            min_dilatation_for_surface(0, 3),
            Err(Error::NoIntersectingPair { .. })
        ));
        assert!(matches!(
            min_dilatation_for_surface(0, 4),
            Err(Error::TheoremInapplicable { intersection: 2 })
        ));
        assert!(matches!(
            min_dilatation_for_surface(1, 2),
            Err(Error::TheoremInapplicable { intersection: 2 })
        ));
    }

    #[test]
    fn torus_with_single_intersection_uses_full_modular_group() {
        let t = min_dilatation_for_surface(1, 0).unwrap();
        assert_eq!(t.intersection, 1);
        assert_eq!(t.dilatation, surd(3, 1, 5));
    }

    #[test]
    fn monotone_in_intersection_number() {
        for n in 3..100u64 {
            assert!(
                min_dilatation(n).unwrap().dilatation < min_dilatation(n + 1).unwrap().dilatation
            );
        }
    }

    #[test]
    fn product_and_reverse_product_share_trace() {
        for n in 1..30u64 {
            let ab = evaluate(&TwistWord::alpha_beta(), n).unwrap();
            let ba = evaluate(&"b a".parse().unwrap(), n).unwrap();
            assert_eq!(ab.trace_abs(), ba.trace_abs());
        }
    }

    fn random_word() -> impl Strategy<Value = TwistWord> {
        prop::collection::vec((prop::bool::ANY, -4i64..=4), 0..8).prop_map(|s| {
            TwistWord::from_syllables(
                s.into_iter()
                    .map(|(alpha, e)| (if alpha { Alpha } else { Beta }, e)),
            )
        })
    }

    proptest! {
        #[test]
        fn evaluation_is_a_homomorphism(w1 in random_word(), w2 in random_word(), n in 1u64..8) {
            let rep = ThurstonRep::new(n).unwrap();
            let lhs = rep.evaluate(&(&w1 * &w2));
            let rhs = &rep.evaluate(&w1) * &rep.evaluate(&w2);
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn image_is_congruence_shaped(w in random_word(), n in 3u64..9) {
            let x = ThurstonRep::new(n).unwrap().matrix(&w);
            let form = congruence_decompose(&x, n).unwrap();
            prop_assert!(form.determinant_condition_holds());
        }

        #[test]
        fn hyperbolic_traces_are_at_least_the_minimum(w in random_word(), n in 3u64..9) {
            let image = evaluate(&w, n).unwrap();
            if image.classify() == ElementKind::Hyperbolic {
                prop_assert!(image.trace_abs() >= BigInt::from(n * n - 2));
            }
        }
    }
}
