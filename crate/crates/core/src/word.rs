//! Free-group words over `{a, a^-1, b, b^-1}`.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::fmt::Write as _;
use core::str::FromStr;

use thiserror::Error;

/// Largest exponent magnitude accepted by [`parse_word`].
pub const MAX_EXPONENT: u64 = 1_000_000;

/// One of the four generator letters.
///
/// The derived ordering (`a < a^-1 < b < b^-1`) is the canonical letter order
/// used for reports.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    A,
    AInv,
    B,
    BInv,
}

/// Which generator a letter (or its inverse) belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Axis {
    A,
    B,
}

impl Letter {
    pub const ALL: [Letter; 4] = [Letter::A, Letter::AInv, Letter::B, Letter::BInv];

    pub const fn inverse(self) -> Letter {
        match self {
            Letter::A => Letter::AInv,
            Letter::AInv => Letter::A,
            Letter::B => Letter::BInv,
            Letter::BInv => Letter::B,
        }
    }

    pub const fn axis(self) -> Axis {
        match self {
            Letter::A | Letter::AInv => Axis::A,
            Letter::B | Letter::BInv => Axis::B,
        }
    }

    /// `+1` for `a`, `b`; `-1` for the inverses.
    pub const fn sign(self) -> i64 {
        match self {
            Letter::A | Letter::B => 1,
            Letter::AInv | Letter::BInv => -1,
        }
    }

    pub const fn is_a(self) -> bool {
        matches!(self, Letter::A | Letter::AInv)
    }

    pub const fn is_b(self) -> bool {
        matches!(self, Letter::B | Letter::BInv)
    }

    const fn base_char(self) -> char {
        match self.axis() {
            Axis::A => 'a',
            Axis::B => 'b',
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.sign() > 0 {
            write!(f, "{}", self.base_char())
        } else {
            write!(f, "{}^-1", self.base_char())
        }
    }
}

/// Letterwise substitutions inducing the two Cayley-graph isometries.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum LetterMap {
    /// `a -> a^-1`, `b -> b`.
    FlipA,
    /// `a -> a^-1`, `b -> b^-1`.
    FlipBoth,
}

impl LetterMap {
    pub const fn apply(self, letter: Letter) -> Letter {
        match (self, letter.axis()) {
            (_, Axis::A) => letter.inverse(),
            (LetterMap::FlipA, Axis::B) => letter,
            (LetterMap::FlipBoth, Axis::B) => letter.inverse(),
        }
    }
}

/// A finite sequence of letters. Not reduced unless [`Word::free_reduce`] has
/// been applied.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Letter>);

impl Word {
    pub const fn empty() -> Self {
        Word(Vec::new())
    }

    pub fn from_letters(letters: Vec<Letter>) -> Self {
        Word(letters)
    }

    /// `letter^exponent`, expanded.
    pub fn power(letter: Letter, exponent: i64) -> Self {
        let mut w = Word::empty();
        w.push_power(letter, exponent);
        w
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn into_letters(self) -> Vec<Letter> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn last(&self) -> Option<Letter> {
        self.0.last().copied()
    }

    pub fn push(&mut self, letter: Letter) {
        self.0.push(letter);
    }

    /// Appends `letter^exponent`; a negative exponent appends the inverse letter.
    pub fn push_power(&mut self, letter: Letter, exponent: i64) {
        let (l, count) = if exponent >= 0 {
            (letter, exponent.unsigned_abs())
        } else {
            (letter.inverse(), exponent.unsigned_abs())
        };
        for _ in 0..count {
            self.0.push(l);
        }
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn prefix(&self, len: usize) -> Word {
        Word(self.0[..len].to_vec())
    }

    /// All prefixes, shortest (empty) first, the word itself last.
    pub fn prefixes(&self) -> impl Iterator<Item = Word> + '_ {
        (0..=self.len()).map(move |i| self.prefix(i))
    }

    pub fn is_reduced(&self) -> bool {
        self.0.windows(2).all(|p| p[0] != p[1].inverse())
    }

    /// The unique freely reduced word equal to `self` in the free group.
    pub fn free_reduce(&self) -> Word {
        let mut out: Vec<Letter> = Vec::with_capacity(self.0.len());
        for &l in &self.0 {
            if out.last() == Some(&l.inverse()) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Word(out)
    }

    pub fn inverse(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.inverse()).collect())
    }

    pub fn map_letters(&self, map: LetterMap) -> Word {
        Word(self.0.iter().map(|&l| map.apply(l)).collect())
    }

    /// All `|w|` rotations (rotation by 0 first), each freely reduced.
    /// The empty word has the single rotation `[empty]`.
    pub fn cyclic_shifts(&self) -> Vec<Word> {
        if self.is_empty() {
            return alloc::vec![Word::empty()];
        }
        (0..self.len())
            .map(|i| {
                let mut letters = self.0[i..].to_vec();
                letters.extend_from_slice(&self.0[..i]);
                Word(letters).free_reduce()
            })
            .collect()
    }

    /// Run-length view: maximal runs of one identical letter, as
    /// `(letter, run length)`.
    pub fn runs(&self) -> Vec<(Letter, usize)> {
        let mut out: Vec<(Letter, usize)> = Vec::new();
        for &l in &self.0 {
            match out.last_mut() {
                Some((prev, count)) if *prev == l => *count += 1,
                _ => out.push((l, 1)),
            }
        }
        out
    }
}

impl From<Vec<Letter>> for Word {
    fn from(letters: Vec<Letter>) -> Self {
        Word(letters)
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

/// Compact syllable form, e.g. `b^3 a b^2 a^3` or `a^-2`.
impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, (letter, count)) in self.runs().into_iter().enumerate() {
            if i > 0 {
                f.write_char(' ')?;
            }
            f.write_char(letter.base_char())?;
            let exp = letter.sign() * count as i64;
            if exp != 1 {
                write!(f, "^{exp}")?;
            }
        }
        Ok(())
    }
}

pub fn format_word(w: &Word) -> String {
    let mut s = String::new();
    let _ = write!(s, "{w}");
    s
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseWordError {
    #[error("unexpected character {found:?} at position {position}")]
    UnexpectedChar { position: usize, found: char },
    #[error("malformed exponent at position {position}")]
    MalformedExponent { position: usize },
    #[error("exponent at position {position} exceeds {MAX_EXPONENT} in magnitude")]
    ExponentTooLarge { position: usize },
}

impl ParseWordError {
    /// 1-based character position of the offending input.
    pub fn position(&self) -> usize {
        match *self {
            ParseWordError::UnexpectedChar { position, .. }
            | ParseWordError::MalformedExponent { position }
            | ParseWordError::ExponentTooLarge { position } => position,
        }
    }
}

/// Parses the compact grammar: `a`, `A`, `b`, `B` (uppercase = inverse), each
/// optionally followed by `^` and a signed decimal exponent. Whitespace between
/// tokens is ignored. The result is not reduced.
pub fn parse_word(text: &str) -> Result<Word, ParseWordError> {
    let chars: Vec<char> = text.chars().collect();
    let mut word = Word::empty();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let letter = match c {
            'a' => Letter::A,
            'A' => Letter::AInv,
            'b' => Letter::B,
            'B' => Letter::BInv,
            found => {
                return Err(ParseWordError::UnexpectedChar {
                    position: i + 1,
                    found,
                })
            }
        };
        i += 1;
        let mut exponent: i64 = 1;
        if i < chars.len() && chars[i] == '^' {
            let caret = i + 1;
            i += 1;
            let mut negative = false;
            if i < chars.len() && (chars[i] == '-' || chars[i] == '+') {
                negative = chars[i] == '-';
                i += 1;
            }
            let digits_start = i;
            let mut magnitude: u64 = 0;
            while i < chars.len() && chars[i].is_ascii_digit() {
                magnitude = magnitude * 10 + chars[i].to_digit(10).unwrap_or(0) as u64;
                if magnitude > MAX_EXPONENT {
                    return Err(ParseWordError::ExponentTooLarge { position: caret });
                }
                i += 1;
            }
            if i == digits_start {
                return Err(ParseWordError::MalformedExponent { position: caret });
            }
            exponent = if negative {
                -(magnitude as i64)
            } else {
                magnitude as i64
            };
        }
        word.push_power(letter, exponent);
    }
    Ok(word)
}

impl FromStr for Word {
    type Err = ParseWordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_word(s)
    }
}
