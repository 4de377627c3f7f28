//! Reduced words over a finite free alphabet.
//!
//! A letter is a nonzero signed integer: `i` stands for the generator with
//! index `i` and `-i` for its inverse. Words are always kept freely reduced.

use std::fmt;
use std::ops::Mul;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("letter {letter} is outside the alphabet of rank {rank}")]
    IndexOutOfRange { letter: i32, rank: usize },
    #[error("expected {expected} substitution images, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("cannot parse word {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

/// A freely reduced word.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    letters: Vec<i32>,
}

/// Signed occurrence counts of each generator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExponentVector(pub Vec<i64>);

impl Word {
    pub fn identity() -> Self {
        Word {
            letters: Vec::new(),
        }
    }

    /// Single generator `i` (1-based), or its inverse when `i < 0`.
    pub fn letter(i: i32) -> Self {
        assert!(i != 0, "letter 0 does not exist");
        Word { letters: vec![i] }
    }

    /// Freely reduces `raw`, rejecting letters outside `1..=rank`.
    pub fn reduce(raw: &[i32], rank: usize) -> Result<Self, WordError> {
        if let Some(&bad) = raw
            .iter()
            .find(|&&l| l == 0 || l.unsigned_abs() as usize > rank)
        {
            return Err(WordError::IndexOutOfRange { letter: bad, rank });
        }
        Ok(Self::from_letters(raw.iter().copied()))
    }

    /// Freely reduces an arbitrary letter sequence (no rank check).
    ///
    /// Panics on the letter 0.
    pub fn from_letters<I: IntoIterator<Item = i32>>(raw: I) -> Self {
        let mut stack: Vec<i32> = Vec::new();
        for l in raw {
            assert!(l != 0, "letter 0 does not exist");
            if stack.last() == Some(&-l) {
                stack.pop();
            } else {
                stack.push(l);
            }
        }
        Word { letters: stack }
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty()
    }

    /// Largest generator index used (0 for the identity).
    pub fn max_index(&self) -> usize {
        self.letters
            .iter()
            .map(|l| l.unsigned_abs() as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn inverse(&self) -> Self {
        Word {
            letters: self.letters.iter().rev().map(|l| -l).collect(),
        }
    }

    pub fn concat(&self, other: &Word) -> Self {
        Self::from_letters(self.letters.iter().chain(other.letters.iter()).copied())
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 { self.inverse() } else { self.clone() };
        let mut out = Word::identity();
        for _ in 0..e.unsigned_abs() {
            out = out.concat(&base);
        }
        out
    }

    /// `c⁻¹ · self · c`.
    pub fn conjugate_by(&self, c: &Word) -> Self {
        c.inverse().concat(self).concat(c)
    }

    /// Homomorphic image: generator `i` is sent to `images[i-1]`.
    pub fn substitute(&self, images: &[Word]) -> Result<Self, WordError> {
        let p = images.len();
        if self.max_index() > p {
            return Err(WordError::ArityMismatch {
                expected: self.max_index(),
                got: p,
            });
        }
        let mut out: Vec<i32> = Vec::new();
        for &l in &self.letters {
            let img = &images[l.unsigned_abs() as usize - 1];
            if l > 0 {
                out.extend_from_slice(&img.letters);
            } else {
                out.extend(img.letters.iter().rev().map(|x| -x));
            }
        }
        Ok(Self::from_letters(out))
    }

    /// Signed count of every symbol `1..=symbols`.
    pub fn exponent_vector(&self, symbols: usize) -> ExponentVector {
        let mut v = vec![0i64; symbols];
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            assert!(i < symbols, "letter {l} outside {symbols} symbols");
            v[i] += l.signum() as i64;
        }
        ExponentVector(v)
    }

    /// Drops every occurrence of the listed generators (both signs) and reduces.
    pub fn delete_generators(&self, gens: &[i32]) -> Self {
        Self::from_letters(
            self.letters
                .iter()
                .copied()
                .filter(|l| !gens.contains(&l.abs())),
        )
    }

    /// Parses the `xyX` text syntax for an alphabet of the given rank.
    ///
    /// Lowercase letters are generators and uppercase their inverses; `1` or
    /// the empty string is the identity. For rank ≤ 3 the letters `x, y, z`
    /// name generators 1, 2, 3 (and `a, b, c` are accepted as aliases);
    /// otherwise `a..z` name generators 1..26.
    pub fn parse(s: &str, rank: usize) -> Result<Self, WordError> {
        let s = s.trim();
        if s.is_empty() || s == "1" {
            return Ok(Word::identity());
        }
        let mut raw = Vec::with_capacity(s.len());
        for ch in s.chars() {
            if ch.is_whitespace() || ch == '*' || ch == '.' {
                continue;
            }
            let idx =
                letter_index(ch.to_ascii_lowercase(), rank).ok_or_else(|| WordError::Parse {
                    input: s.to_string(),
                    reason: format!("unknown letter {ch:?} for rank {rank}"),
                })?;
            raw.push(if ch.is_ascii_uppercase() { -idx } else { idx });
        }
        Self::reduce(&raw, rank)
    }

    /// Text rendering (uppercase = inverse). Panics if the rank exceeds 26.
    pub fn to_text(&self, rank: usize) -> String {
        if self.is_identity() {
            return "1".to_string();
        }
        self.letters
            .iter()
            .map(|&l| {
                let c = letter_char(l.unsigned_abs() as usize, rank);
                if l < 0 {
                    c.to_ascii_uppercase()
                } else {
                    c
                }
            })
            .collect()
    }
}

fn letter_index(ch: char, rank: usize) -> Option<i32> {
    if !ch.is_ascii_lowercase() {
        return None;
    }
    let idx = if rank <= 3 {
        match ch {
            'x' => 1,
            'y' => 2,
            'z' => 3,
            _ => ch as i32 - 'a' as i32 + 1,
        }
    } else {
        ch as i32 - 'a' as i32 + 1
    };
    (idx as usize <= rank).then_some(idx)
}

fn letter_char(i: usize, rank: usize) -> char {
    assert!(
        rank <= 26 && (1..=26).contains(&i),
        "text syntax supports at most 26 generators"
    );
    if rank <= 3 {
        ['x', 'y', 'z'][i - 1]
    } else {
        (b'a' + (i - 1) as u8) as char
    }
}

impl Mul for &Word {
    type Output = Word;
    fn mul(self, rhs: &Word) -> Word {
        self.concat(rhs)
    }
}

impl fmt::Display for Word {
    /// Debug-style rendering with signed indices, e.g. `[1, -2]`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.letters)
    }
}

impl ExponentVector {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        Word::parse(s, 2).unwrap()
    }

    #[test]
    fn cancellation() {
        assert_eq!(w("xX"), Word::identity());
        assert_eq!(w("xyYx"), w("xx"));
        assert_eq!(Word::reduce(&[-2, -1, 1, 2, 1], 2).unwrap(), w("x"));
    }

    #[test]
    fn reduce_rejects_out_of_range() {
        assert_eq!(
            Word::reduce(&[1, 3], 2),
            Err(WordError::IndexOutOfRange { letter: 3, rank: 2 })
        );
        assert!(Word::reduce(&[0], 2).is_err());
    }

    #[test]
    fn substitute_examples() {
        let g = Word::from_letters([1, 2]);
        let images = [w("x"), w("Yxy")];
        assert_eq!(g.substitute(&images).unwrap(), w("xYxy"));

        let g = Word::from_letters([1, -1]);
        assert_eq!(g.substitute(&[w("xyx")]).unwrap(), Word::identity());

        let g = Word::from_letters([1, 1]);
        assert_eq!(g.substitute(&[w("Yxy")]).unwrap(), w("Yxxy"));
    }

    #[test]
    fn substitute_arity() {
        let g = Word::from_letters([1, 2]);
        assert!(matches!(
            g.substitute(&[w("x")]),
            Err(WordError::ArityMismatch { .. })
        ));
    }

    #[test]
    fn exponent_vectors() {
        assert_eq!(w("xyX").exponent_vector(2).0, vec![0, 1]);
        assert_eq!(Word::identity().exponent_vector(2).0, vec![0, 0]);
        assert_eq!(w("xxxxyy").exponent_vector(2).0, vec![4, 2]);
    }

    #[test]
    fn text_round_trip() {
        let u = Word::from_letters([2, -1, 2]);
        assert_eq!(u.to_text(2), "yXy");
        assert_eq!(Word::parse("yXy", 2).unwrap(), u);
        assert_eq!(Word::parse("1", 2).unwrap(), Word::identity());
        assert_eq!(Word::parse("bAb", 2).unwrap(), u);
        let big = Word::from_letters([5, -26]);
        assert_eq!(big.to_text(26), "eZ");
        assert_eq!(Word::parse("eZ", 26).unwrap(), big);
        assert!(Word::parse("q", 2).is_err());
    }
}
