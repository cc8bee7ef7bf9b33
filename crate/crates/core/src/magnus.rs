//! Magnus embedding of a free group into truncated noncommutative power
//! series, `x_i -> 1 + a_i`, and the dimension-subgroup tests it decides.
//!
//! A word lies in the n-th integral dimension subgroup of the free group,
//! which equals the n-th lower central term, exactly when its expansion minus
//! one has no nonzero term of degree below n.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::exact::{Domain, Scalar};
use crate::freegrp::Word;

/// Power series in noncommuting letters `a1..ak` with every monomial of
/// degree above `cutoff` discarded.
///
/// Coefficients are stored densely: monomials of degree `j` occupy a block
/// of `k^j` slots, ordered lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncatedSeries {
    letters: u32,
    cutoff: u32,
    domain: Domain,
    coeffs: Vec<Scalar>,
}

fn block_offsets(k: u32, d: u32) -> Vec<usize> {
    let mut offsets = Vec::with_capacity(d as usize + 2);
    let mut total = 0usize;
    let mut block = 1usize;
    for _ in 0..=d {
        offsets.push(total);
        total += block;
        block *= k as usize;
    }
    offsets.push(total);
    offsets
}

impl TruncatedSeries {
    pub fn zero(letters: u32, cutoff: u32, domain: Domain) -> Result<Self> {
        if letters == 0 || cutoff == 0 {
            return Err(Error::invalid("series need at least one letter and cutoff >= 1"));
        }
        if matches!(domain, Domain::Prime(_)) {
            return Err(Error::UnsupportedDomain("Magnus series are over Z or Q".into()));
        }
        let len = *block_offsets(letters, cutoff).last().unwrap();
        Ok(TruncatedSeries {
            letters,
            cutoff,
            domain,
            coeffs: vec![domain.zero(); len],
        })
    }

    pub fn one(letters: u32, cutoff: u32, domain: Domain) -> Result<Self> {
        let mut s = TruncatedSeries::zero(letters, cutoff, domain)?;
        s.coeffs[0] = domain.one();
        Ok(s)
    }

    /// The series of a single letter `a_i`.
    pub fn letter(letters: u32, cutoff: u32, domain: Domain, i: u32) -> Result<Self> {
        TruncatedSeries::from_terms(letters, cutoff, domain, [(vec![i], domain.one())])
    }

    /// Sums the given terms; monomials longer than the cutoff are dropped.
    pub fn from_terms<I: IntoIterator<Item = (Vec<u32>, Scalar)>>(
        letters: u32,
        cutoff: u32,
        domain: Domain,
        terms: I,
    ) -> Result<Self> {
        let mut s = TruncatedSeries::zero(letters, cutoff, domain)?;
        for (m, c) in terms {
            domain.require_same(c.domain())?;
            if m.len() > cutoff as usize {
                continue;
            }
            let idx = s.index_of(&m)?;
            s.coeffs[idx] = &s.coeffs[idx] + &c;
        }
        Ok(s)
    }

    pub fn letters(&self) -> u32 {
        self.letters
    }

    pub fn cutoff(&self) -> u32 {
        self.cutoff
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    fn offsets(&self) -> Vec<usize> {
        block_offsets(self.letters, self.cutoff)
    }

    fn index_of(&self, monomial: &[u32]) -> Result<usize> {
        let k = self.letters as usize;
        let mut idx = 0usize;
        for &l in monomial {
            if l == 0 || l > self.letters {
                return Err(Error::GeneratorOutOfRange {
                    index: l,
                    letters: self.letters,
                });
            }
            idx = idx * k + (l as usize - 1);
        }
        Ok(self.offsets()[monomial.len()] + idx)
    }

    fn monomial_at(&self, degree: usize, mut idx: usize) -> Vec<u32> {
        let k = self.letters as usize;
        let mut m = vec![0u32; degree];
        for slot in m.iter_mut().rev() {
            *slot = (idx % k) as u32 + 1;
            idx /= k;
        }
        m
    }

    /// Coefficient of a monomial; zero beyond the cutoff.
    pub fn coefficient(&self, monomial: &[u32]) -> Result<Scalar> {
        if monomial.len() > self.cutoff as usize {
            return Ok(self.domain.zero());
        }
        Ok(self.coeffs[self.index_of(monomial)?].clone())
    }

    /// Nonzero terms by degree, then lexicographically.
    pub fn terms(&self) -> Vec<(Vec<u32>, Scalar)> {
        let offsets = self.offsets();
        let mut out = Vec::new();
        for deg in 0..=self.cutoff as usize {
            for (j, c) in self.coeffs[offsets[deg]..offsets[deg + 1]].iter().enumerate() {
                if !c.is_zero() {
                    out.push((self.monomial_at(deg, j), c.clone()));
                }
            }
        }
        out
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(Scalar::is_zero)
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        self.domain.require_same(other.domain)?;
        if (self.letters, self.cutoff) != (other.letters, other.cutoff) {
            return Err(Error::invalid(format!(
                "series parameters differ: {} letters / cutoff {} vs {} letters / cutoff {}",
                self.letters, self.cutoff, other.letters, other.cutoff
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *a = &*a + b;
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (a, b) in out.coeffs.iter_mut().zip(&other.coeffs) {
            *a = &*a - b;
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        let mut out = self.clone();
        for a in &mut out.coeffs {
            *a = &*a * c;
        }
        out
    }

    /// Truncated convolution product.
    pub fn multiply(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let offsets = self.offsets();
        let k = self.letters as usize;
        let d = self.cutoff as usize;
        let mut out = TruncatedSeries::zero(self.letters, self.cutoff, self.domain)?;
        let mut pow = vec![1usize; d + 1];
        for j in 1..=d {
            pow[j] = pow[j - 1] * k;
        }
        for p in 0..=d {
            for (i, a) in self.coeffs[offsets[p]..offsets[p + 1]].iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for q in 0..=(d - p) {
                    for (j, b) in other.coeffs[offsets[q]..offsets[q + 1]].iter().enumerate() {
                        if b.is_zero() {
                            continue;
                        }
                        let idx = offsets[p + q] + i * pow[q] + j;
                        out.coeffs[idx] = &out.coeffs[idx] + &(a * b);
                    }
                }
            }
        }
        Ok(out)
    }

    /// Right multiplication by the letter `a_i`.
    fn times_letter(&self, i: u32) -> Self {
        let offsets = self.offsets();
        let k = self.letters as usize;
        let mut out = TruncatedSeries {
            coeffs: vec![self.domain.zero(); self.coeffs.len()],
            ..self.clone()
        };
        for deg in 0..self.cutoff as usize {
            for (j, c) in self.coeffs[offsets[deg]..offsets[deg + 1]].iter().enumerate() {
                if !c.is_zero() {
                    out.coeffs[offsets[deg + 1] + j * k + (i as usize - 1)] = c.clone();
                }
            }
        }
        out
    }

    /// Right multiplication by `(1 + a_i)^e` for any integer `e`, expanded
    /// with generalized binomial coefficients.
    fn times_generator_power(&self, i: u32, e: i64) -> Self {
        let mut result = self.clone();
        let mut shifted = self.clone();
        let mut binom = BigInt::one();
        let e_big = BigInt::from(e);
        for j in 1..=self.cutoff as i64 {
            binom = binom * (&e_big - BigInt::from(j - 1)) / BigInt::from(j);
            shifted = shifted.times_letter(i);
            if binom.is_zero() {
                break;
            }
            let c = self.domain.from_bigint(&binom);
            for (r, s) in result.coeffs.iter_mut().zip(&shifted.coeffs) {
                if !s.is_zero() {
                    *r = &*r + &(&c * s);
                }
            }
        }
        result
    }

    /// Smallest degree `>= 1` carrying a nonzero coefficient.
    fn lowest_positive_degree(&self) -> Option<u32> {
        let offsets = self.offsets();
        (1..=self.cutoff as usize)
            .find(|&deg| self.coeffs[offsets[deg]..offsets[deg + 1]].iter().any(|c| !c.is_zero()))
            .map(|d| d as u32)
    }
}

pub fn series_multiply(a: &TruncatedSeries, b: &TruncatedSeries) -> Result<TruncatedSeries> {
    a.multiply(b)
}

impl fmt::Display for TruncatedSeries {
    /// `1 + a1a2 - a2a1`, degree-sorted.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms();
        if terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (m, c)) in terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c } else { c.clone() };
            match (n, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mono = monomial_string(m);
            if m.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{abs}*{mono}")?;
            }
        }
        Ok(())
    }
}

/// `a1a2a1`; the empty monomial prints as `1`.
pub fn monomial_string(m: &[u32]) -> String {
    if m.is_empty() {
        return "1".into();
    }
    m.iter().map(|l| format!("a{l}")).collect()
}

fn check_cutoff(letters: u32, cutoff: u32, limits: &Limits) -> Result<()> {
    if cutoff == 0 {
        return Err(Error::invalid("cutoff must be >= 1"));
    }
    let cap = limits.magnus_cutoff_cap(letters);
    if cutoff > cap {
        return Err(Error::cap("Magnus cutoff", cutoff, cap));
    }
    Ok(())
}

/// Image of `w` under `x_i -> 1 + a_i`, truncated at degree `cutoff`, with
/// integer coefficients.
pub fn magnus_embed(w: &Word, letters: u32, cutoff: u32, limits: &Limits) -> Result<TruncatedSeries> {
    check_cutoff(letters, cutoff, limits)?;
    if w.max_generator() > letters {
        return Err(Error::GeneratorOutOfRange {
            index: w.max_generator(),
            letters,
        });
    }
    let mut s = TruncatedSeries::one(letters, cutoff, Domain::Integer)?;
    for &(g, e) in w.syllables() {
        s = s.times_generator_power(g, e);
    }
    Ok(s)
}

/// Lowest positive degree carrying a nonzero coefficient, or the sentinel
/// when nothing survives up to the cutoff.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DimensionDegree {
    Exact(u32),
    /// All terms of degree `1..=cutoff` vanish; the degree is at least this.
    AtLeast(u32),
}

impl DimensionDegree {
    /// Whether the degree is known to be at least `n`.
    pub fn at_least(self, n: u32) -> bool {
        match self {
            DimensionDegree::Exact(d) => d >= n,
            DimensionDegree::AtLeast(d) => d >= n,
        }
    }
}

impl fmt::Display for DimensionDegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DimensionDegree::Exact(d) => write!(f, "{d}"),
            DimensionDegree::AtLeast(d) => write!(f, ">={d}"),
        }
    }
}

pub fn dimension_degree(w: &Word, letters: u32, cutoff: u32, limits: &Limits) -> Result<DimensionDegree> {
    let s = magnus_embed(w, letters, cutoff, limits)?;
    Ok(match s.lowest_positive_degree() {
        Some(d) => DimensionDegree::Exact(d),
        None => DimensionDegree::AtLeast(cutoff + 1),
    })
}

/// Whether `w` lies in `D_n(Z, F) = gamma_n(F)`, decided at cutoff `n`.
pub fn in_free_dimension_subgroup(w: &Word, n: u32, letters: u32, limits: &Limits) -> Result<bool> {
    if n == 0 {
        return Err(Error::invalid("dimension subgroups are indexed from 1"));
    }
    Ok(dimension_degree(w, letters, n, limits)?.at_least(n))
}
