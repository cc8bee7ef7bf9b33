//! Finitely supported elements of the group algebra `K F` of a free group.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::exact::{Domain, Scalar};
use crate::freegrp::{parse_word_tokens, Word};
use crate::text::{tokenize, Cursor, Token};

/// A `K`-linear combination of reduced words. Zero coefficients are never
/// stored, so structural equality is equality of elements. The support is
/// kept in shortlex order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupAlgebraElement {
    domain: Domain,
    support: BTreeMap<Word, Scalar>,
}

impl GroupAlgebraElement {
    pub fn zero(domain: Domain) -> Self {
        GroupAlgebraElement {
            domain,
            support: BTreeMap::new(),
        }
    }

    pub fn one(domain: Domain) -> Self {
        GroupAlgebraElement::from_word(domain, Word::identity())
    }

    pub fn from_word(domain: Domain, w: Word) -> Self {
        let mut support = BTreeMap::new();
        support.insert(w, domain.one());
        GroupAlgebraElement { domain, support }
    }

    /// `x_i - 1`.
    pub fn generator_minus_one(domain: Domain, i: u32) -> Self {
        let mut e = GroupAlgebraElement::from_word(domain, Word::generator(i));
        e.add_term(Word::identity(), -domain.one());
        e
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, Scalar)>>(domain: Domain, terms: I) -> Result<Self> {
        let mut e = GroupAlgebraElement::zero(domain);
        for (w, c) in terms {
            domain.require_same(c.domain())?;
            e.add_term(w, c);
        }
        Ok(e)
    }

    fn add_term(&mut self, w: Word, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.support.entry(w) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.support.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.support.len()
    }

    pub fn coefficient(&self, w: &Word) -> Scalar {
        self.support.get(w).cloned().unwrap_or_else(|| self.domain.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.support.is_empty()
    }

    /// Largest generator index in the support.
    pub fn max_generator(&self) -> u32 {
        self.support.keys().map(Word::max_generator).max().unwrap_or(0)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.domain.require_same(other.domain)?;
        let mut out = self.clone();
        for (w, c) in &other.support {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        GroupAlgebraElement {
            domain: self.domain,
            support: self.support.iter().map(|(w, c)| (w.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Result<Self> {
        self.domain.require_same(c.domain())?;
        let mut out = GroupAlgebraElement::zero(self.domain);
        for (w, a) in &self.support {
            out.add_term(w.clone(), a * c);
        }
        Ok(out)
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.domain.require_same(other.domain)?;
        let mut out = GroupAlgebraElement::zero(self.domain);
        for (u, a) in &self.support {
            for (v, b) in &other.support {
                out.add_term(u.multiply(v), a * b);
            }
        }
        Ok(out)
    }

    /// Left multiplication by a single word.
    pub fn left_word_multiply(&self, w: &Word) -> Self {
        let mut out = GroupAlgebraElement::zero(self.domain);
        for (v, c) in &self.support {
            out.add_term(w.multiply(v), c.clone());
        }
        out
    }

    pub fn augmentation(&self) -> Scalar {
        self.support.values().fold(self.domain.zero(), |acc, c| &acc + c)
    }

    pub fn coerce(&self, domain: Domain) -> Result<Self> {
        let mut out = GroupAlgebraElement::zero(domain);
        for (w, c) in &self.support {
            out.add_term(w.clone(), c.coerce(domain)?);
        }
        Ok(out)
    }

    /// Parses the element grammar with coefficients placed in `domain`.
    pub fn parse_in(text: &str, domain: Domain) -> Result<Self> {
        let mut cur = Cursor::new(text)?;
        let e = parse_expr(&mut cur, domain)?;
        cur.finish()?;
        Ok(e)
    }
}

pub fn augmentation(u: &GroupAlgebraElement) -> Scalar {
    u.augmentation()
}

/// The expanded product `(x1 - 1)(x2 - 1)...(xn - 1)` over the integers.
pub fn s_n_identity_element(n: u32) -> Result<GroupAlgebraElement> {
    if n == 0 {
        return Err(Error::invalid("s_n identity needs n >= 1"));
    }
    let z = Domain::Integer;
    let mut acc = GroupAlgebraElement::one(z);
    for i in 1..=n {
        acc = acc.multiply(&GroupAlgebraElement::generator_minus_one(z, i))?;
    }
    Ok(acc)
}

/// Left Fox derivative `dw/dx_i` over the integers, normalized so that
/// `w - 1 = sum_i (dw/dx_i)(x_i - 1)`.
pub fn fox_derivative(w: &Word, i: u32) -> GroupAlgebraElement {
    let z = Domain::Integer;
    let mut out = GroupAlgebraElement::zero(z);
    let mut prefix = Word::identity();
    for (g, s) in w.letters() {
        let letter = Word::power(g, s);
        if g == i {
            if s > 0 {
                out.add_term(prefix.clone(), z.one());
            } else {
                out.add_term(prefix.multiply(&letter), -z.one());
            }
        }
        prefix = prefix.multiply(&letter);
    }
    out
}

fn starts_factor(t: Option<&Token>) -> bool {
    matches!(t, Some(Token::Num(_) | Token::Var('x' | 'y', _) | Token::LParen))
        || matches!(t, Some(Token::Ident(n)) if n == "comm")
}

fn parse_expr(cur: &mut Cursor, domain: Domain) -> Result<GroupAlgebraElement> {
    let mut acc = GroupAlgebraElement::zero(domain);
    let mut negative = cur.eat(&Token::Minus);
    if !negative {
        cur.eat(&Token::Plus);
    }
    loop {
        let t = parse_term(cur, domain)?;
        acc = if negative { acc.sub(&t)? } else { acc.add(&t)? };
        if cur.eat(&Token::Plus) {
            negative = false;
        } else if cur.eat(&Token::Minus) {
            negative = true;
        } else {
            return Ok(acc);
        }
    }
}

fn parse_term(cur: &mut Cursor, domain: Domain) -> Result<GroupAlgebraElement> {
    let mut acc = parse_factor(cur, domain)?;
    loop {
        let star = cur.eat(&Token::Star);
        if !starts_factor(cur.peek()) {
            if star {
                return Err(Error::parse("dangling `*`"));
            }
            return Ok(acc);
        }
        acc = acc.multiply(&parse_factor(cur, domain)?)?;
    }
}

fn parse_factor(cur: &mut Cursor, domain: Domain) -> Result<GroupAlgebraElement> {
    if !starts_factor(cur.peek()) {
        return Err(Error::parse(format!("expected a term, found {:?}", cur.peek())));
    }
    match cur.peek() {
        Some(Token::Num(_)) => {
            let Some(Token::Num(n)) = cur.next() else {
                unreachable!()
            };
            let c = if cur.eat(&Token::Slash) {
                match cur.next() {
                    Some(Token::Num(d)) => Scalar::parse_in(&format!("{n}/{d}"), Some(domain))?,
                    other => return Err(Error::parse(format!("expected denominator, found {other:?}"))),
                }
            } else {
                domain.from_bigint(&n)
            };
            GroupAlgebraElement::one(domain).scale(&c)
        }
        Some(Token::LParen) => {
            cur.next();
            let inner = parse_expr(cur, domain)?;
            cur.expect(&Token::RParen)?;
            let e = cur.exponent()?;
            if e < 0 {
                return Err(Error::parse(
                    "negative powers of sums are not elements of the group algebra",
                ));
            }
            let mut acc = GroupAlgebraElement::one(domain);
            for _ in 0..e {
                acc = acc.multiply(&inner)?;
            }
            Ok(acc)
        }
        _ => {
            let w = parse_word_tokens(cur)?;
            Ok(GroupAlgebraElement::from_word(domain, w))
        }
    }
}

impl FromStr for GroupAlgebraElement {
    type Err = Error;

    /// Integer coefficients unless a fraction appears, then rational.
    fn from_str(s: &str) -> Result<Self> {
        let domain = if tokenize(s)?.contains(&Token::Slash) {
            Domain::Rational
        } else {
            Domain::Integer
        };
        GroupAlgebraElement::parse_in(s, domain)
    }
}

impl fmt::Display for GroupAlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (w, c)) in self.support.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let coeff = abs.to_plain_string();
            if w.is_identity() {
                write!(f, "{coeff}")?;
            } else if abs.is_one() {
                write!(f, "{}", w.compact())?;
            } else {
                write!(f, "{coeff}*{}", w.compact())?;
            }
        }
        Ok(())
    }
}
