//! Canonical row spaces (over fields) and lattices (over the integers).
//!
//! Over a field a subspace is stored by its reduced row-echelon basis with
//! the first nonzero entry of each row chosen as pivot. Over the integers a
//! lattice is stored by its row-style Hermite normal form: echelon profile,
//! positive pivots, and entries above each pivot reduced into `0..pivot`.
//! Both forms are unique, so equality of subspaces is equality of bases.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::config;
use crate::error::{Error, Result};

use super::matrix::DenseMatrix;
use super::scalar::{Domain, Scalar};

/// Incrementally maintained canonical basis.
#[derive(Debug, Clone)]
pub struct SpanBuilder {
    domain: Domain,
    ambient: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl SpanBuilder {
    pub fn new(domain: Domain, ambient: usize) -> Result<Self> {
        let cap = config::max_ambient();
        if ambient > cap {
            return Err(Error::cap("ambient dimension", ambient as u128, cap as u128));
        }
        Ok(SpanBuilder {
            domain,
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        })
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn is_full(&self) -> bool {
        self.domain.is_field() && self.rows.len() == self.ambient
    }

    fn check_vector(&self, v: &[Scalar]) -> Result<()> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: v.len(),
            });
        }
        if let Some(bad) = v.iter().find(|e| e.domain() != self.domain) {
            return Err(Error::DomainMismatch(self.domain, bad.domain()));
        }
        Ok(())
    }

    /// Adds a vector to the span. Returns whether the span grew.
    pub fn insert(&mut self, v: Vec<Scalar>) -> Result<bool> {
        self.check_vector(&v)?;
        Ok(if self.domain.is_field() {
            self.insert_field(v)
        } else {
            self.insert_lattice(v)
        })
    }

    pub fn insert_all<I: IntoIterator<Item = Vec<Scalar>>>(&mut self, vs: I) -> Result<()> {
        for v in vs {
            self.insert(v)?;
        }
        Ok(())
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        self.check_vector(v)?;
        Ok(if self.domain.is_field() {
            self.reduce_field(v.to_vec()).iter().all(Scalar::is_zero)
        } else {
            self.lattice_contains(v)
        })
    }

    fn reduce_field(&self, v: Vec<Scalar>) -> Vec<Scalar> {
        reduce_field(self.rows.iter().map(Vec::as_slice), &self.pivots, v)
    }

    fn insert_field(&mut self, v: Vec<Scalar>) -> bool {
        if self.is_full() {
            return false;
        }
        let mut v = self.reduce_field(v);
        let Some(c) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[c].inverse().expect("nonzero field element");
        for x in v.iter_mut().skip(c) {
            if !x.is_zero() {
                *x = &*x * &inv;
            }
        }
        for row in &mut self.rows {
            if row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&v).skip(c) {
                if !y.is_zero() {
                    *x = &*x - &(&f * y);
                }
            }
        }
        let at = self.pivots.partition_point(|&p| p < c);
        self.pivots.insert(at, c);
        self.rows.insert(at, v);
        true
    }

    fn lattice_contains(&self, v: &[Scalar]) -> bool {
        lattice_contains(self.rows.iter().map(Vec::as_slice), &self.pivots, self.ambient, v)
    }

    fn insert_lattice(&mut self, v: Vec<Scalar>) -> bool {
        let mut v: Vec<BigInt> = v.into_iter().map(|x| x.as_bigint().clone()).collect();
        let mut changed = false;
        let mut c = 0;
        loop {
            while c < self.ambient && v[c].is_zero() {
                c += 1;
            }
            if c == self.ambient {
                break;
            }
            let at = self.pivots.partition_point(|&p| p < c);
            if at < self.pivots.len() && self.pivots[at] == c {
                let row: Vec<BigInt> = self.rows[at].iter().map(|x| x.as_bigint().clone()).collect();
                let p = row[c].clone();
                let (q, r) = v[c].div_rem(&p);
                if r.is_zero() {
                    for (x, y) in v.iter_mut().zip(&row).skip(c) {
                        *x -= &q * y;
                    }
                } else {
                    // Replace (row, v) by a unimodular combination putting
                    // gcd(p, v[c]) in the pivot and zero in v.
                    let e = p.extended_gcd(&v[c]);
                    let (g, s, t) = (e.gcd, e.x, e.y);
                    let a = &p / &g;
                    let b = &v[c] / &g;
                    let mut new_row = row.clone();
                    for j in c..self.ambient {
                        new_row[j] = &s * &row[j] + &t * &v[j];
                        v[j] = &a * &v[j] - &b * &row[j];
                    }
                    self.rows[at] = new_row.into_iter().map(Scalar::Int).collect();
                    changed = true;
                }
                c += 1;
            } else {
                self.pivots.insert(at, c);
                self.rows.insert(at, v.into_iter().map(Scalar::Int).collect());
                changed = true;
                break;
            }
        }
        if changed {
            self.normalize_hnf();
        }
        changed
    }

    /// Positive pivots and entries above pivots reduced into `0..pivot`.
    fn normalize_hnf(&mut self) {
        let mut rows: Vec<Vec<BigInt>> = self
            .rows
            .iter()
            .map(|r| r.iter().map(|x| x.as_bigint().clone()).collect())
            .collect();
        for (row, &p) in rows.iter_mut().zip(&self.pivots) {
            if row[p].is_negative() {
                for x in row.iter_mut() {
                    *x = -&*x;
                }
            }
        }
        for k in 0..rows.len() {
            let p = self.pivots[k];
            let (above, rest) = rows.split_at_mut(k);
            let pivot_row = &rest[0];
            let pv = &pivot_row[p];
            for row in above.iter_mut() {
                let q = row[p].div_floor(pv);
                if q.is_zero() {
                    continue;
                }
                for (x, y) in row.iter_mut().zip(pivot_row).skip(p) {
                    *x -= &q * y;
                }
            }
        }
        self.rows = rows
            .into_iter()
            .map(|r| r.into_iter().map(Scalar::Int).collect())
            .collect();
    }

    pub fn finish(self) -> Subspace {
        let basis = if self.rows.is_empty() {
            DenseMatrix::zeros(self.domain, 0, self.ambient)
        } else {
            DenseMatrix::new(
                self.domain,
                self.rows.len(),
                self.ambient,
                self.rows.into_iter().flatten().collect(),
            )
            .expect("rows have ambient length")
        };
        Subspace {
            domain: self.domain,
            ambient: self.ambient,
            basis,
            pivots: self.pivots,
        }
    }

    pub fn to_subspace(&self) -> Subspace {
        self.clone().finish()
    }
}

/// A canonical row space or lattice inside `domain^ambient`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    domain: Domain,
    ambient: usize,
    basis: DenseMatrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(domain: Domain, ambient: usize) -> Result<Subspace> {
        Ok(SpanBuilder::new(domain, ambient)?.finish())
    }

    pub fn full(domain: Domain, ambient: usize) -> Result<Subspace> {
        let mut b = SpanBuilder::new(domain, ambient)?;
        for i in 0..ambient {
            let mut v = vec![domain.zero(); ambient];
            v[i] = domain.one();
            b.insert(v)?;
        }
        Ok(b.finish())
    }

    pub fn span<I: IntoIterator<Item = Vec<Scalar>>>(domain: Domain, ambient: usize, vectors: I) -> Result<Subspace> {
        let mut b = SpanBuilder::new(domain, ambient)?;
        b.insert_all(vectors)?;
        Ok(b.finish())
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn rank(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.rank() == 0
    }

    pub fn basis(&self) -> &DenseMatrix {
        &self.basis
    }

    pub fn basis_rows(&self) -> impl Iterator<Item = &[Scalar]> {
        (0..self.rank()).map(move |i| self.basis.row(i))
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn to_builder(&self) -> SpanBuilder {
        SpanBuilder {
            domain: self.domain,
            ambient: self.ambient,
            rows: self.basis.row_vecs(),
            pivots: self.pivots.clone(),
        }
    }

    pub fn contains(&self, v: &[Scalar]) -> Result<bool> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch {
                expected: self.ambient,
                found: v.len(),
            });
        }
        if let Some(bad) = v.iter().find(|e| e.domain() != self.domain) {
            return Err(Error::DomainMismatch(self.domain, bad.domain()));
        }
        Ok(if self.domain.is_field() {
            reduce_field(self.basis_rows(), &self.pivots, v.to_vec())
                .iter()
                .all(Scalar::is_zero)
        } else {
            lattice_contains(self.basis_rows(), &self.pivots, self.ambient, v)
        })
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> Result<bool> {
        self.domain.require_same(other.domain)?;
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                expected: other.ambient,
                found: self.ambient,
            });
        }
        let b = other.to_builder();
        for row in self.basis_rows() {
            if !b.contains(row)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.domain.require_same(other.domain)?;
        let mut b = self.to_builder();
        b.insert_all(other.basis.row_vecs())?;
        Ok(b.finish())
    }

    /// Over a field, `{x : <w, x> = 0 for all w in self}`.
    pub fn annihilator(&self) -> Result<Subspace> {
        self.domain.require_field()?;
        let n = self.ambient;
        let d = self.domain;
        let mut is_pivot = vec![false; n];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        let mut vectors = Vec::new();
        for free in (0..n).filter(|&c| !is_pivot[c]) {
            let mut v = vec![d.zero(); n];
            v[free] = d.one();
            for (k, &p) in self.pivots.iter().enumerate() {
                v[p] = -self.basis.get(k, free);
            }
            vectors.push(v);
        }
        Subspace::span(d, n, vectors)
    }
}

/// Reduced row-echelon basis of the row space of `m` over a field.
pub fn rref(m: &DenseMatrix) -> Result<Subspace> {
    m.domain().require_field()?;
    Subspace::span(m.domain(), m.cols(), m.row_vecs())
}

/// Hermite normal form of the lattice spanned by the integer rows of `m`.
pub fn hnf(m: &DenseMatrix) -> Result<Subspace> {
    if m.domain() != Domain::Integer {
        return Err(Error::WrongDomain {
            expected: "the integers",
            found: m.domain(),
        });
    }
    Subspace::span(Domain::Integer, m.cols(), m.row_vecs())
}

/// Whether `v` lies in the row space (fields) or lattice (integers) `s`.
pub fn member(v: &[Scalar], s: &Subspace) -> Result<bool> {
    s.contains(v)
}

fn reduce_field<'a>(rows: impl Iterator<Item = &'a [Scalar]>, pivots: &[usize], mut v: Vec<Scalar>) -> Vec<Scalar> {
    for (row, &p) in rows.zip(pivots) {
        if v[p].is_zero() {
            continue;
        }
        let f = v[p].clone();
        for (x, r) in v.iter_mut().zip(row).skip(p) {
            if !r.is_zero() {
                *x = &*x - &(&f * r);
            }
        }
    }
    v
}

fn lattice_contains<'a>(
    rows: impl Iterator<Item = &'a [Scalar]>,
    pivots: &[usize],
    ambient: usize,
    v: &[Scalar],
) -> bool {
    let rows: Vec<&[Scalar]> = rows.collect();
    let mut v: Vec<BigInt> = v.iter().map(|x| x.as_bigint().clone()).collect();
    let mut k = 0;
    for c in 0..ambient {
        if v[c].is_zero() {
            continue;
        }
        while k < pivots.len() && pivots[k] < c {
            k += 1;
        }
        if k == pivots.len() || pivots[k] != c {
            return false;
        }
        let row = rows[k];
        let (q, r) = v[c].div_rem(row[c].as_bigint());
        if !r.is_zero() {
            return false;
        }
        for (x, y) in v.iter_mut().zip(row).skip(c) {
            *x -= &q * y.as_bigint();
        }
    }
    true
}
