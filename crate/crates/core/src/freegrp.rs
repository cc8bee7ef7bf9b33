//! Reduced words in the free group on generators `x1, x2, ...`.
//!
//! Commutators follow the convention `[a, b] = a^-1 b^-1 a b` throughout the
//! crate; the Magnus and Fox computations only rely on it being fixed.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::text::{Cursor, Token};

/// A freely reduced word, stored as syllables `(generator, exponent)` with
/// distinct adjacent generators and nonzero exponents. Generators are 1-based.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct Word {
    syllables: Vec<(u32, i64)>,
}

fn push_syllable(syllables: &mut Vec<(u32, i64)>, gen: u32, exp: i64) {
    if exp == 0 {
        return;
    }
    if let Some(last) = syllables.last_mut() {
        if last.0 == gen {
            last.1 += exp;
            if last.1 == 0 {
                syllables.pop();
            }
            return;
        }
    }
    syllables.push((gen, exp));
}

impl Word {
    pub fn identity() -> Word {
        Word::default()
    }

    pub fn generator(index: u32) -> Word {
        Word::power(index, 1)
    }

    /// `x_index^exp`.
    pub fn power(index: u32, exp: i64) -> Word {
        assert!(index >= 1, "generator indices start at 1");
        let mut syllables = Vec::new();
        push_syllable(&mut syllables, index, exp);
        Word { syllables }
    }

    /// Freely reduces an arbitrary syllable sequence.
    pub fn from_syllables<I: IntoIterator<Item = (u32, i64)>>(syllables: I) -> Result<Word> {
        let mut out = Vec::new();
        for (g, e) in syllables {
            if g == 0 {
                return Err(Error::invalid("generator indices start at 1"));
            }
            push_syllable(&mut out, g, e);
        }
        Ok(Word { syllables: out })
    }

    /// Builds a word from signed letters: `3` is `x3`, `-3` is `x3^-1`.
    pub fn from_letters(letters: &[i32]) -> Result<Word> {
        Word::from_syllables(letters.iter().map(|&l| (l.unsigned_abs(), if l < 0 { -1 } else { 1 })))
    }

    pub fn syllables(&self) -> &[(u32, i64)] {
        &self.syllables
    }

    /// Letters in order as `(generator, +1 | -1)`.
    pub fn letters(&self) -> impl Iterator<Item = (u32, i64)> + '_ {
        self.syllables
            .iter()
            .flat_map(|&(g, e)| std::iter::repeat_n((g, e.signum()), e.unsigned_abs() as usize))
    }

    pub fn len(&self) -> u64 {
        self.syllables.iter().map(|&(_, e)| e.unsigned_abs()).sum()
    }

    pub fn is_identity(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.is_identity()
    }

    /// Largest generator index occurring, 0 for the identity.
    pub fn max_generator(&self) -> u32 {
        self.syllables.iter().map(|&(g, _)| g).max().unwrap_or(0)
    }

    /// Exponent sum of one generator: the word's image in the abelianization.
    pub fn exponent_sum(&self, gen: u32) -> i64 {
        self.syllables.iter().filter(|&&(g, _)| g == gen).map(|&(_, e)| e).sum()
    }

    pub fn multiply(&self, other: &Word) -> Word {
        let mut syllables = self.syllables.clone();
        for &(g, e) in &other.syllables {
            push_syllable(&mut syllables, g, e);
        }
        Word { syllables }
    }

    pub fn inverse(&self) -> Word {
        Word {
            syllables: self.syllables.iter().rev().map(|&(g, e)| (g, -e)).collect(),
        }
    }

    pub fn pow(&self, exp: i64) -> Word {
        let base = if exp < 0 { self.inverse() } else { self.clone() };
        let mut acc = Word::identity();
        for _ in 0..exp.unsigned_abs() {
            acc = acc.multiply(&base);
        }
        acc
    }
}

pub fn multiply(a: &Word, b: &Word) -> Word {
    a.multiply(b)
}

pub fn inverse(a: &Word) -> Word {
    a.inverse()
}

/// `[a, b] = a^-1 b^-1 a b`.
pub fn commutator(a: &Word, b: &Word) -> Word {
    a.inverse().multiply(&b.inverse()).multiply(a).multiply(b)
}

/// `[[..[w1, w2], w3].., wk]`.
pub fn left_normed_commutator(words: &[Word]) -> Result<Word> {
    let (first, rest) = words
        .split_first()
        .ok_or_else(|| Error::invalid("left-normed commutator of an empty list"))?;
    Ok(rest.iter().fold(first.clone(), |acc, w| commutator(&acc, w)))
}

/// Image of `w` under the endomorphism sending `x_g` to `images[g]`.
pub fn substitute(w: &Word, images: &BTreeMap<u32, Word>) -> Result<Word> {
    let mut out = Word::identity();
    for &(g, e) in &w.syllables {
        let img = images.get(&g).ok_or(Error::MissingImage(g))?;
        out = out.multiply(&img.pow(e));
    }
    Ok(out)
}

fn letter_key((g, s): (u32, i64)) -> (u32, bool) {
    (g, s < 0)
}

/// Shortlex: shorter words first, then letter by letter with
/// `x1 < x1^-1 < x2 < x2^-1 < ...`.
impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len()
            .cmp(&other.len())
            .then_with(|| self.letters().map(letter_key).cmp(other.letters().map(letter_key)))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Word {
    /// Compact form without spaces (`x1x2^-1`), used inside group-algebra
    /// elements.
    pub fn compact(&self) -> String {
        if self.is_identity() {
            return "1".to_string();
        }
        let mut s = String::new();
        for &(g, e) in &self.syllables {
            if e == 1 {
                s.push_str(&format!("x{g}"));
            } else {
                s.push_str(&format!("x{g}^{e}"));
            }
        }
        s
    }
}

impl fmt::Display for Word {
    /// `x1 x2^-1`; the identity prints as `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "1");
        }
        for (i, &(g, e)) in self.syllables.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if e == 1 {
                write!(f, "x{g}")?;
            } else {
                write!(f, "x{g}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Parses a word atom sequence: generators `x<i>` (or `y<i>`) with optional
/// `^<int>`, `comm(w1, w2)`, and `1` for the identity. Stops before any
/// token that cannot continue a word.
pub(crate) fn parse_word_tokens(cur: &mut Cursor) -> Result<Word> {
    let mut w = Word::identity();
    loop {
        match cur.peek() {
            Some(Token::Var('x' | 'y', _)) => {
                let Some(Token::Var(_, g)) = cur.next() else {
                    unreachable!()
                };
                let e = cur.exponent()?;
                w = w.multiply(&Word::power(g, e));
            }
            Some(Token::Ident(name)) if name == "comm" => {
                cur.next();
                cur.expect(&Token::LParen)?;
                let a = parse_word_tokens(cur)?;
                cur.expect(&Token::Comma)?;
                let b = parse_word_tokens(cur)?;
                cur.expect(&Token::RParen)?;
                let c = commutator(&a, &b);
                let e = cur.exponent()?;
                w = w.multiply(&c.pow(e));
            }
            _ => return Ok(w),
        }
    }
}

impl FromStr for Word {
    type Err = Error;

    fn from_str(s: &str) -> Result<Word> {
        let mut cur = Cursor::new(s)?;
        if cur.at_end() {
            return Ok(Word::identity());
        }
        if matches!(cur.peek(), Some(Token::Num(n)) if *n == 1.into()) {
            cur.next();
            cur.finish()?;
            return Ok(Word::identity());
        }
        let w = parse_word_tokens(&mut cur)?;
        cur.finish()?;
        Ok(w)
    }
}
