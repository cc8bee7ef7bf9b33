use std::cmp::Ordering;
use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;

use crate::error::{Error, Result};
use crate::exact::{DenseMatrix, Domain, Scalar};
use crate::text::{Cursor, Token};

/// A word in the free monoid on `x1, x2, ...`, ordered by degree and then
/// lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, "*")?;
            }
            write!(f, "x{v}")?;
        }
        Ok(())
    }
}

/// An element of the free associative algebra `K<x1, x2, ...>`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct NCPolynomial {
    domain: Domain,
    terms: BTreeMap<Monomial, Scalar>,
}

impl NCPolynomial {
    pub fn zero(domain: Domain) -> Self {
        NCPolynomial {
            domain,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Scalar) -> Self {
        let mut p = NCPolynomial::zero(c.domain());
        p.add_term(Monomial(Vec::new()), c);
        p
    }

    pub fn variable(domain: Domain, i: u32) -> Self {
        NCPolynomial::monomial(domain, vec![i], domain.one())
    }

    pub fn monomial(domain: Domain, vars: Vec<u32>, c: Scalar) -> Self {
        assert!(vars.iter().all(|&v| v >= 1), "variable indices start at 1");
        let mut p = NCPolynomial::zero(domain);
        p.add_term(Monomial(vars), c);
        p
    }

    pub fn from_terms<I: IntoIterator<Item = (Vec<u32>, Scalar)>>(domain: Domain, terms: I) -> Result<Self> {
        let mut p = NCPolynomial::zero(domain);
        for (m, c) in terms {
            domain.require_same(c.domain())?;
            if m.contains(&0) {
                return Err(Error::invalid("variable indices start at 1"));
            }
            p.add_term(Monomial(m), c);
        }
        Ok(p)
    }

    pub(crate) fn add_term(&mut self, m: Monomial, c: Scalar) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
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

    pub fn terms(&self) -> impl Iterator<Item = (&[u32], &Scalar)> {
        self.terms.iter().map(|(m, c)| (m.0.as_slice(), c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, m: &[u32]) -> Scalar {
        self.terms
            .get(&Monomial(m.to_vec()))
            .cloned()
            .unwrap_or_else(|| self.domain.zero())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Total degree; 0 for constants and for the zero polynomial.
    pub fn degree(&self) -> usize {
        self.terms.keys().map(|m| m.0.len()).max().unwrap_or(0)
    }

    pub fn variables(&self) -> BTreeSet<u32> {
        self.terms.keys().flat_map(|m| m.0.iter().copied()).collect()
    }

    pub fn max_variable(&self) -> u32 {
        self.variables().into_iter().next_back().unwrap_or(0)
    }

    /// Every monomial uses each variable of one common set exactly once.
    /// The zero polynomial counts as multilinear.
    pub fn is_multilinear(&self) -> bool {
        let vars = self.variables();
        self.terms
            .keys()
            .all(|m| m.0.len() == vars.len() && m.0.iter().copied().collect::<BTreeSet<_>>() == vars)
    }

    pub(crate) fn require_multilinear(&self) -> Result<()> {
        if self.is_multilinear() {
            Ok(())
        } else {
            Err(Error::NotMultilinear(self.to_string()))
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.domain.require_same(other.domain)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        NCPolynomial {
            domain: self.domain,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Scalar) -> Result<Self> {
        self.domain.require_same(c.domain())?;
        let mut out = NCPolynomial::zero(self.domain);
        for (m, a) in &self.terms {
            out.add_term(m.clone(), a * c);
        }
        Ok(out)
    }

    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.domain.require_same(other.domain)?;
        let mut out = NCPolynomial::zero(self.domain);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                let mut m = u.0.clone();
                m.extend_from_slice(&v.0);
                out.add_term(Monomial(m), a * b);
            }
        }
        Ok(out)
    }

    /// Renames variables through `f`.
    pub fn rename(&self, f: impl Fn(u32) -> u32) -> Self {
        let mut out = NCPolynomial::zero(self.domain);
        for (m, c) in &self.terms {
            out.add_term(Monomial(m.0.iter().map(|&v| f(v)).collect()), c.clone());
        }
        out
    }

    pub fn coerce(&self, domain: Domain) -> Result<Self> {
        let mut out = NCPolynomial::zero(domain);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.coerce(domain)?);
        }
        Ok(out)
    }

    /// Parses `x1*x2 - 1/2*x2*x1 + 3`; `*` is required between factors.
    pub fn parse_in(text: &str, domain: Domain) -> Result<Self> {
        let mut cur = Cursor::new(text)?;
        let p = parse_expr(&mut cur, domain)?;
        cur.finish()?;
        Ok(p)
    }
}

fn parse_expr(cur: &mut Cursor, domain: Domain) -> Result<NCPolynomial> {
    let mut acc = NCPolynomial::zero(domain);
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

fn parse_term(cur: &mut Cursor, domain: Domain) -> Result<NCPolynomial> {
    let mut acc = parse_factor(cur, domain)?;
    while cur.eat(&Token::Star) {
        acc = acc.multiply(&parse_factor(cur, domain)?)?;
    }
    Ok(acc)
}

fn parse_power(cur: &mut Cursor) -> Result<u32> {
    let e = cur.exponent()?;
    u32::try_from(e).map_err(|_| Error::parse("negative powers are not polynomials"))
}

fn parse_factor(cur: &mut Cursor, domain: Domain) -> Result<NCPolynomial> {
    match cur.next() {
        Some(Token::Num(n)) => {
            let c = if cur.eat(&Token::Slash) {
                match cur.next() {
                    Some(Token::Num(d)) => ratio(&n, &d, domain)?,
                    other => return Err(Error::parse(format!("expected denominator, found {other:?}"))),
                }
            } else {
                domain.from_bigint(&n)
            };
            Ok(NCPolynomial::constant(c))
        }
        Some(Token::Var('x', i)) => {
            let e = parse_power(cur)?;
            Ok(NCPolynomial::monomial(domain, vec![i; e as usize], domain.one()))
        }
        Some(Token::LParen) => {
            let inner = parse_expr(cur, domain)?;
            cur.expect(&Token::RParen)?;
            let e = parse_power(cur)?;
            let mut acc = NCPolynomial::constant(domain.one());
            for _ in 0..e {
                acc = acc.multiply(&inner)?;
            }
            Ok(acc)
        }
        other => Err(Error::parse(format!("expected a polynomial term, found {other:?}"))),
    }
}

fn ratio(n: &BigInt, d: &BigInt, domain: Domain) -> Result<Scalar> {
    Scalar::parse_in(&format!("{n}/{d}"), Some(domain))
}

impl FromStr for NCPolynomial {
    type Err = Error;

    /// Parses over the rationals.
    fn from_str(s: &str) -> Result<Self> {
        NCPolynomial::parse_in(s, Domain::Rational)
    }
}

impl fmt::Display for NCPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let coeff = abs.to_plain_string();
            if m.0.is_empty() {
                write!(f, "{coeff}")?;
            } else if abs.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{coeff}*{m}")?;
            }
        }
        Ok(())
    }
}

/// Value of `f` with each variable replaced by a square matrix.
pub fn evaluate(f: &NCPolynomial, assignment: &BTreeMap<u32, DenseMatrix>) -> Result<DenseMatrix> {
    let (size, domain) = match assignment.values().next() {
        Some(m) => (m.rows(), m.domain()),
        None if f.is_zero() || f.variables().is_empty() => {
            return Err(Error::invalid("cannot infer the matrix size from an empty assignment"));
        }
        None => return Err(Error::UnassignedVariable(*f.variables().iter().next().unwrap())),
    };
    for m in assignment.values() {
        if !m.is_square() || m.rows() != size {
            return Err(Error::DimensionMismatch {
                expected: size,
                found: m.rows(),
            });
        }
        domain.require_same(m.domain())?;
    }
    let f = f.coerce(domain)?;
    let mut out = DenseMatrix::zeros(domain, size, size);
    for (m, c) in f.terms() {
        let mut prod = DenseMatrix::identity(domain, size);
        for v in m {
            let x = assignment.get(v).ok_or(Error::UnassignedVariable(*v))?;
            prod = &prod * x;
        }
        out.add_scaled(c, &prod);
    }
    Ok(out)
}

/// Sign of a permutation given as a sequence of distinct values.
pub(crate) fn permutation_sign(perm: &[u32]) -> i64 {
    let mut inversions = 0usize;
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            if perm[i] > perm[j] {
                inversions += 1;
            }
        }
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// All permutations of `1..=n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut p: Vec<u32> = (1..=n as u32).collect();
    loop {
        out.push(p.clone());
        // next permutation
        let Some(i) = (0..p.len().saturating_sub(1)).rev().find(|&i| p[i] < p[i + 1]) else {
            return out;
        };
        let j = (i + 1..p.len()).rev().find(|&j| p[j] > p[i]).unwrap();
        p.swap(i, j);
        p[i + 1..].reverse();
    }
}

/// `s_m = sum over sigma in S_m of sgn(sigma) x_sigma(1) ... x_sigma(m)`, over Q.
pub fn standard_polynomial(m: usize) -> Result<NCPolynomial> {
    standard_polynomial_in(m, Domain::Rational)
}

pub fn standard_polynomial_in(m: usize, domain: Domain) -> Result<NCPolynomial> {
    if m == 0 {
        return Err(Error::invalid("standard polynomial needs m >= 1"));
    }
    let mut p = NCPolynomial::zero(domain);
    for perm in permutations(m) {
        let s = domain.from_i64(permutation_sign(&perm));
        p.add_term(Monomial(perm), s);
    }
    Ok(p)
}

/// Full polarization of each multihomogeneous component of `f`.
///
/// A variable of degree `d > 1` is split into itself and `d - 1` fresh
/// variables numbered after the largest variable of `f`; the multilinear
/// part in the copies is kept. In characteristic zero the outputs generate
/// the same T-ideal as `f`.
pub fn multilinearize(f: &NCPolynomial) -> Result<Vec<NCPolynomial>> {
    if f.domain().characteristic() != 0 {
        return Err(Error::UnsupportedDomain(format!(
            "multilinearization is only complete in characteristic 0, not over {}",
            f.domain()
        )));
    }
    if f.is_zero() {
        return Ok(Vec::new());
    }
    if f.is_multilinear() {
        return Ok(vec![f.clone()]);
    }
    // multidegree -> terms of that multidegree
    type Components<'a> = BTreeMap<BTreeMap<u32, usize>, Vec<(&'a [u32], &'a Scalar)>>;
    let mut components: Components = BTreeMap::new();
    for (m, c) in f.terms() {
        let mut degs = BTreeMap::new();
        for &v in m {
            *degs.entry(v).or_insert(0usize) += 1;
        }
        components.entry(degs).or_default().push((m, c));
    }
    let first_fresh = f.max_variable() + 1;
    let mut out = Vec::new();
    for (degs, terms) in components {
        // copies[v] = [v, fresh...]
        let mut next = first_fresh;
        let mut copies: BTreeMap<u32, Vec<u32>> = BTreeMap::new();
        for (&v, &d) in &degs {
            let mut c = vec![v];
            for _ in 1..d {
                c.push(next);
                next += 1;
            }
            copies.insert(v, c);
        }
        let mut lin = NCPolynomial::zero(f.domain());
        for (m, c) in terms {
            let mut partial: Vec<Vec<u32>> = vec![Vec::with_capacity(m.len())];
            let mut used: Vec<BTreeMap<u32, usize>> = vec![BTreeMap::new()];
            // Assign each occurrence of v a distinct copy, over all bijections.
            for &v in m {
                let mut next_partial = Vec::new();
                let mut next_used = Vec::new();
                for (p, u) in partial.iter().zip(&used) {
                    for &copy in &copies[&v] {
                        if p.contains(&copy) {
                            continue;
                        }
                        let mut p2 = p.clone();
                        p2.push(copy);
                        next_partial.push(p2);
                        next_used.push(u.clone());
                    }
                }
                partial = next_partial;
                used = next_used;
            }
            for p in partial {
                lin.add_term(Monomial(p), c.clone());
            }
        }
        if !lin.is_zero() {
            out.push(lin);
        }
    }
    Ok(out)
}
