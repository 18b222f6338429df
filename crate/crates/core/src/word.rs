//! Words in the Dehn twists `T_α` (`a`) and `T_β` (`b`).

use std::fmt;
use std::ops::Mul;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Generator {
    #[serde(rename = "a")]
    Alpha,
    #[serde(rename = "b")]
    Beta,
}

impl Generator {
    pub fn symbol(self) -> char {
        match self {
            Generator::Alpha => 'a',
            Generator::Beta => 'b',
        }
    }
}

/// An element of the free group on the two twists, in syllable form: no
/// zero exponents and no two adjacent syllables on the same generator.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "WordJson", into = "WordJson")]
pub struct TwistWord {
    syllables: Vec<(Generator, i64)>,
}

impl TwistWord {
    pub fn identity() -> Self {
        Self::default()
    }

    pub fn syllable(generator: Generator, exponent: i64) -> Self {
        let mut w = Self::default();
        w.push(generator, exponent);
        w
    }

    /// `T_α T_β`, the word realizing the minimal dilatation for `i ≥ 3`.
    pub fn alpha_beta() -> Self {
        Self::from_syllables([(Generator::Alpha, 1), (Generator::Beta, 1)])
    }

    pub fn from_syllables(syllables: impl IntoIterator<Item = (Generator, i64)>) -> Self {
        let mut w = Self::default();
        for (g, e) in syllables {
            w.push(g, e);
        }
        w
    }

    /// Appends `g^e`, merging with the last syllable and cancelling to zero.
    pub fn push(&mut self, generator: Generator, exponent: i64) {
        if exponent == 0 {
            return;
        }
        match self.syllables.last_mut() {
            Some((g, e)) if *g == generator => {
                *e += exponent;
                if *e == 0 {
                    self.syllables.pop();
                }
            }
            _ => self.syllables.push((generator, exponent)),
        }
    }

    pub fn syllables(&self) -> &[(Generator, i64)] {
        &self.syllables
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    /// Length in letters `a^{±1}`, `b^{±1}`.
    pub fn letter_len(&self) -> u64 {
        self.syllables.iter().map(|(_, e)| e.unsigned_abs()).sum()
    }

    pub fn inverse(&self) -> Self {
        Self::from_syllables(self.syllables.iter().rev().map(|&(g, e)| (g, -e)))
    }
}

impl Mul for &TwistWord {
    type Output = TwistWord;

    fn mul(self, rhs: &TwistWord) -> TwistWord {
        let mut out = self.clone();
        for &(g, e) in &rhs.syllables {
            out.push(g, e);
        }
        out
    }
}

impl fmt::Display for TwistWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.syllables.is_empty() {
            return f.write_str("1");
        }
        for (i, (g, e)) in self.syllables.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            if *e == 1 {
                write!(f, "{}", g.symbol())?;
            } else {
                write!(f, "{}^{}", g.symbol(), e)?;
            }
        }
        Ok(())
    }
}

impl FromStr for TwistWord {
    type Err = Error;

    /// Parses `a^e b^f …`; a bare letter has exponent 1 and `1` (or an empty
    /// string) is the identity.
    fn from_str(s: &str) -> Result<Self> {
        let mut w = TwistWord::identity();
        for token in s.split_whitespace() {
            if token == "1" {
                continue;
            }
            let (letter, exponent) = match token.split_once('^') {
                Some((l, e)) => {
                    let e: i64 = e
                        .parse()
                        .map_err(|_| Error::Parse(format!("bad exponent in syllable `{token}`")))?;
                    if e == 0 {
                        return Err(Error::Parse(format!("zero exponent in syllable `{token}`")));
                    }
                    (l, e)
                }
                None => (token, 1),
            };
            let generator = match letter {
                "a" => Generator::Alpha,
                "b" => Generator::Beta,
                other => return Err(Error::Parse(format!("unknown generator `{other}`"))),
            };
            w.push(generator, exponent);
        }
        Ok(w)
    }
}

#[derive(Serialize, Deserialize)]
struct WordJson {
    syllables: Vec<(Generator, i64)>,
}

impl From<TwistWord> for WordJson {
    fn from(w: TwistWord) -> Self {
        WordJson {
            syllables: w.syllables,
        }
    }
}

impl TryFrom<WordJson> for TwistWord {
    type Error = Error;

    fn try_from(raw: WordJson) -> Result<Self> {
        if raw.syllables.iter().any(|&(_, e)| e == 0) {
            return Err(Error::Parse("zero exponent in syllable list".into()));
        }
        Ok(TwistWord::from_syllables(raw.syllables))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use Generator::*;

    #[test]
    fn merging() {
        let w =
            TwistWord::from_syllables([(Alpha, 2), (Alpha, -1), (Beta, 3), (Beta, -3), (Alpha, 4)]);
        assert_eq!(w.syllables(), &[(Alpha, 5)]);
        let w = TwistWord::from_syllables([(Alpha, 1), (Alpha, -1)]);
        assert!(w.is_identity());
    }

    #[test]
    fn parse_and_display() {
        let w: TwistWord = "a b^-2 a^3".parse().unwrap();
        assert_eq!(w.syllables(), &[(Alpha, 1), (Beta, -2), (Alpha, 3)]);
        assert_eq!(w.to_string(), "a b^-2 a^3");
        assert_eq!(w.letter_len(), 6);
        assert_eq!("a b".parse::<TwistWord>().unwrap(), TwistWord::alpha_beta());
        assert!("".parse::<TwistWord>().unwrap().is_identity());
        assert!("1".parse::<TwistWord>().unwrap().is_identity());
        assert_eq!(TwistWord::identity().to_string(), "1");
        assert!("a^0".parse::<TwistWord>().is_err());
        assert!("c".parse::<TwistWord>().is_err());
        assert!("a^x".parse::<TwistWord>().is_err());
    }

    #[test]
    fn inverse_and_product() {
        let w: TwistWord = "a b^-2".parse().unwrap();
        assert_eq!(w.inverse().to_string(), "b^2 a^-1");
        assert!((&w * &w.inverse()).is_identity());
    }

    #[test]
    fn json_mirror() {
        let v = serde_json::to_value(TwistWord::alpha_beta()).unwrap();
        assert_eq!(v, serde_json::json!({"syllables": [["a", 1], ["b", 1]]}));
        let w: TwistWord = serde_json::from_str(r#"{"syllables": [["a", 1], ["a", 2]]}"#).unwrap();
        assert_eq!(w.to_string(), "a^3");
        assert!(serde_json::from_str::<TwistWord>(r#"{"syllables": [["a", 0]]}"#).is_err());
    }
}
