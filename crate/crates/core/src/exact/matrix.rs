use std::fmt;
use std::ops::{Add, Mul, Sub};

use crate::error::{Error, Result};

use super::scalar::{Domain, Scalar};

/// A dense row-major matrix whose entries all live in one domain.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DenseMatrix {
    rows: usize,
    cols: usize,
    domain: Domain,
    entries: Vec<Scalar>,
}

impl DenseMatrix {
    pub fn new(domain: Domain, rows: usize, cols: usize, entries: Vec<Scalar>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::DimensionMismatch {
                expected: rows * cols,
                found: entries.len(),
            });
        }
        if let Some(bad) = entries.iter().find(|e| e.domain() != domain) {
            return Err(Error::DomainMismatch(domain, bad.domain()));
        }
        Ok(DenseMatrix {
            rows,
            cols,
            domain,
            entries,
        })
    }

    /// Builds a matrix from rows of equal length. An empty row list gives a
    /// `0 x cols` matrix only through [`DenseMatrix::zeros`].
    pub fn from_rows(domain: Domain, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        let n = rows.len();
        let mut entries = Vec::with_capacity(n * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    expected: cols,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        DenseMatrix::new(domain, n, cols, entries)
    }

    pub fn from_i64_rows(domain: Domain, rows: &[&[i64]]) -> Result<Self> {
        DenseMatrix::from_rows(
            domain,
            rows.iter()
                .map(|r| r.iter().map(|&x| domain.from_i64(x)).collect())
                .collect(),
        )
    }

    pub fn zeros(domain: Domain, rows: usize, cols: usize) -> Self {
        DenseMatrix {
            rows,
            cols,
            domain,
            entries: vec![domain.zero(); rows * cols],
        }
    }

    pub fn identity(domain: Domain, n: usize) -> Self {
        let mut m = DenseMatrix::zeros(domain, n, n);
        for i in 0..n {
            m.entries[i * n + i] = domain.one();
        }
        m
    }

    /// The matrix unit `E_{ij}` (0-based indices).
    pub fn unit(domain: Domain, n: usize, i: usize, j: usize) -> Self {
        let mut m = DenseMatrix::zeros(domain, n, n);
        m.entries[i * n + j] = domain.one();
        m
    }

    pub fn scalar_identity(n: usize, value: &Scalar) -> Self {
        let d = value.domain();
        let mut m = DenseMatrix::zeros(d, n, n);
        for i in 0..n {
            m.entries[i * n + i] = value.clone();
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        assert_eq!(value.domain(), self.domain, "entry domain differs from matrix domain");
        self.entries[i * self.cols + j] = value;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.entries[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Scalar>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Row-major entries; the coordinate vector of the matrix in the
    /// matrix-unit basis.
    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Scalar> {
        self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| {
                (0..self.cols).all(|j| {
                    let e = self.get(i, j);
                    if i == j {
                        e.is_one()
                    } else {
                        e.is_zero()
                    }
                })
            })
    }

    pub fn transpose(&self) -> DenseMatrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for j in 0..self.cols {
            for i in 0..self.rows {
                entries.push(self.get(i, j).clone());
            }
        }
        DenseMatrix {
            rows: self.cols,
            cols: self.rows,
            domain: self.domain,
            entries,
        }
    }

    pub fn scale(&self, c: &Scalar) -> DenseMatrix {
        DenseMatrix {
            rows: self.rows,
            cols: self.cols,
            domain: self.domain,
            entries: self.entries.iter().map(|e| e * c).collect(),
        }
    }

    /// `self += c * other`, entrywise.
    pub fn add_scaled(&mut self, c: &Scalar, other: &DenseMatrix) {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        if c.is_zero() {
            return;
        }
        for (a, b) in self.entries.iter_mut().zip(&other.entries) {
            if !b.is_zero() {
                *a = &*a + &(c * b);
            }
        }
    }

    pub fn checked_mul(&self, rhs: &DenseMatrix) -> Result<DenseMatrix> {
        self.domain.require_same(rhs.domain)?;
        if self.cols != rhs.rows {
            return Err(Error::DimensionMismatch {
                expected: self.cols,
                found: rhs.rows,
            });
        }
        let mut out = DenseMatrix::zeros(self.domain, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.get(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = i * rhs.cols + j;
                    out.entries[idx] = &out.entries[idx] + &(a * b);
                }
            }
        }
        Ok(out)
    }

    fn checked_zip(&self, rhs: &DenseMatrix, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Result<DenseMatrix> {
        self.domain.require_same(rhs.domain)?;
        if (self.rows, self.cols) != (rhs.rows, rhs.cols) {
            return Err(Error::DimensionMismatch {
                expected: self.rows * self.cols,
                found: rhs.rows * rhs.cols,
            });
        }
        Ok(DenseMatrix {
            rows: self.rows,
            cols: self.cols,
            domain: self.domain,
            entries: self.entries.iter().zip(&rhs.entries).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn checked_add(&self, rhs: &DenseMatrix) -> Result<DenseMatrix> {
        self.checked_zip(rhs, |a, b| a + b)
    }

    pub fn checked_sub(&self, rhs: &DenseMatrix) -> Result<DenseMatrix> {
        self.checked_zip(rhs, |a, b| a - b)
    }

    /// Row vector times matrix, `v * self`.
    pub fn apply_right(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.rows);
        (0..self.cols)
            .map(|j| {
                let mut acc = self.domain.zero();
                for (i, vi) in v.iter().enumerate() {
                    if !vi.is_zero() {
                        acc = &acc + &(vi * self.get(i, j));
                    }
                }
                acc
            })
            .collect()
    }

    /// Inverse over a field by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<DenseMatrix> {
        self.domain.require_field()?;
        if !self.is_square() {
            return Err(Error::NotInvertible);
        }
        let n = self.rows;
        let mut a = self.clone();
        let mut inv = DenseMatrix::identity(self.domain, n);
        for col in 0..n {
            let pivot = (col..n)
                .find(|&r| !a.get(r, col).is_zero())
                .ok_or(Error::NotInvertible)?;
            a.swap_rows(pivot, col);
            inv.swap_rows(pivot, col);
            let p_inv = a.get(col, col).inverse().ok_or(Error::NotInvertible)?;
            a.scale_row(col, &p_inv);
            inv.scale_row(col, &p_inv);
            for r in 0..n {
                if r != col && !a.get(r, col).is_zero() {
                    let f = -a.get(r, col);
                    a.add_row_multiple(r, col, &f);
                    inv.add_row_multiple(r, col, &f);
                }
            }
        }
        Ok(inv)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.entries.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, r: usize, c: &Scalar) {
        for j in 0..self.cols {
            let idx = r * self.cols + j;
            self.entries[idx] = &self.entries[idx] * c;
        }
    }

    /// row[dst] += c * row[src]
    fn add_row_multiple(&mut self, dst: usize, src: usize, c: &Scalar) {
        for j in 0..self.cols {
            let s = &self.entries[src * self.cols + j];
            if s.is_zero() {
                continue;
            }
            let v = c * s;
            let idx = dst * self.cols + j;
            self.entries[idx] = &self.entries[idx] + &v;
        }
    }

    /// Block upper-triangular matrix `[[a, b], [0, d]]`.
    pub fn block_upper(a: &DenseMatrix, b: &DenseMatrix, d: &DenseMatrix) -> Result<DenseMatrix> {
        a.domain.require_same(b.domain)?;
        a.domain.require_same(d.domain)?;
        if !a.is_square() || !d.is_square() || b.rows != a.rows || b.cols != d.cols {
            return Err(Error::DimensionMismatch {
                expected: a.rows * d.cols,
                found: b.rows * b.cols,
            });
        }
        let (m1, m2) = (a.rows, d.rows);
        let n = m1 + m2;
        let mut out = DenseMatrix::zeros(a.domain, n, n);
        for i in 0..m1 {
            for j in 0..m1 {
                out.entries[i * n + j] = a.get(i, j).clone();
            }
            for j in 0..m2 {
                out.entries[i * n + m1 + j] = b.get(i, j).clone();
            }
        }
        for i in 0..m2 {
            for j in 0..m2 {
                out.entries[(m1 + i) * n + m1 + j] = d.get(i, j).clone();
            }
        }
        Ok(out)
    }

    /// The square sub-block with rows and columns in `range`.
    pub fn sub_block(&self, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> DenseMatrix {
        let mut entries = Vec::new();
        for i in rows.clone() {
            for j in cols.clone() {
                entries.push(self.get(i, j).clone());
            }
        }
        DenseMatrix {
            rows: rows.len(),
            cols: cols.len(),
            domain: self.domain,
            entries,
        }
    }

    /// Maps every entry into another domain.
    pub fn coerce(&self, domain: Domain) -> Result<DenseMatrix> {
        let entries = self
            .entries
            .iter()
            .map(|e| e.coerce(domain))
            .collect::<Result<Vec<_>>>()?;
        DenseMatrix::new(domain, self.rows, self.cols, entries)
    }
}

impl Mul for &DenseMatrix {
    type Output = DenseMatrix;

    fn mul(self, rhs: &DenseMatrix) -> DenseMatrix {
        self.checked_mul(rhs).expect("incompatible matrix product")
    }
}

impl Add for &DenseMatrix {
    type Output = DenseMatrix;

    fn add(self, rhs: &DenseMatrix) -> DenseMatrix {
        self.checked_add(rhs).expect("incompatible matrix sum")
    }
}

impl Sub for &DenseMatrix {
    type Output = DenseMatrix;

    fn sub(self, rhs: &DenseMatrix) -> DenseMatrix {
        self.checked_sub(rhs).expect("incompatible matrix difference")
    }
}

impl fmt::Display for DenseMatrix {
    /// Row-list form `[[a,b],[c,d]]` with entries in field-free syntax.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "[")?;
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ",")?;
                }
                write!(f, "{}", self.get(i, j).to_plain_string())?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}
