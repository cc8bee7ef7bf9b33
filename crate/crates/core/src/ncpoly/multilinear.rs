use std::collections::{BTreeMap, HashSet};

use rayon::prelude::*;

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::exact::{DenseMatrix, Domain, Scalar, SpanBuilder, Subspace};

use super::poly::{permutations, Monomial, NCPolynomial};

pub(crate) fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// Position of the permutation `perm` of `1..=n` in lexicographic order.
pub fn permutation_rank(perm: &[u32]) -> usize {
    let n = perm.len();
    let mut rank = 0;
    for i in 0..n {
        let smaller_later = perm[i + 1..].iter().filter(|&&v| v < perm[i]).count();
        rank += smaller_later * factorial(n - 1 - i);
    }
    rank
}

/// Inverse of [`permutation_rank`].
pub fn permutation_unrank(n: usize, mut rank: usize) -> Vec<u32> {
    let mut pool: Vec<u32> = (1..=n as u32).collect();
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        let f = factorial(n - 1 - i);
        out.push(pool.remove(rank / f));
        rank %= f;
    }
    out
}

/// A subspace of the multilinear polynomials of degree `n` in `x1..xn`.
/// Coordinate `r` is the coefficient of the monomial indexed by the `r`-th
/// permutation in lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultilinearSpace {
    degree: usize,
    space: Subspace,
}

impl MultilinearSpace {
    pub fn from_subspace(degree: usize, space: Subspace) -> Result<Self> {
        space.domain().require_field()?;
        if space.ambient() != factorial(degree) {
            return Err(Error::DimensionMismatch {
                expected: factorial(degree),
                found: space.ambient(),
            });
        }
        Ok(MultilinearSpace { degree, space })
    }

    pub fn zero(domain: Domain, degree: usize) -> Result<Self> {
        MultilinearSpace::from_subspace(degree, Subspace::zero(domain, factorial(degree))?)
    }

    pub fn full(domain: Domain, degree: usize) -> Result<Self> {
        MultilinearSpace::from_subspace(degree, Subspace::full(domain, factorial(degree))?)
    }

    /// Span of multilinear polynomials in `x1..xn`.
    pub fn span(domain: Domain, degree: usize, polys: &[NCPolynomial]) -> Result<Self> {
        let mut b = SpanBuilder::new(domain, factorial(degree))?;
        for f in polys {
            b.insert(coordinates(f, degree, domain)?)?;
        }
        MultilinearSpace::from_subspace(degree, b.finish())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.space.rank()
    }

    pub fn domain(&self) -> Domain {
        self.space.domain()
    }

    pub fn subspace(&self) -> &Subspace {
        &self.space
    }

    pub fn contains(&self, f: &NCPolynomial) -> Result<bool> {
        self.space.contains(&coordinates(f, self.degree, self.domain())?)
    }

    pub fn is_subspace_of(&self, other: &MultilinearSpace) -> Result<bool> {
        self.space.is_subspace_of(&other.space)
    }

    /// Canonical basis as polynomials.
    pub fn basis_polynomials(&self) -> Vec<NCPolynomial> {
        self.space
            .basis_rows()
            .map(|row| from_coordinates(self.degree, self.domain(), row))
            .collect()
    }

    /// Closed under renaming variables by every adjacent transposition.
    pub fn is_sn_invariant(&self) -> Result<bool> {
        for i in 1..self.degree as u32 {
            let swap = |v: u32| {
                if v == i {
                    i + 1
                } else if v == i + 1 {
                    i
                } else {
                    v
                }
            };
            for f in self.basis_polynomials() {
                if !self.contains(&f.rename(swap))? {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Coordinates of a multilinear `f` in `x1..xn`.
pub fn coordinates(f: &NCPolynomial, n: usize, domain: Domain) -> Result<Vec<Scalar>> {
    f.require_multilinear()?;
    let f = f.coerce(domain)?;
    let mut v = vec![domain.zero(); factorial(n)];
    for (m, c) in f.terms() {
        if m.len() != n || m.iter().any(|&x| x as usize > n) {
            return Err(Error::invalid(format!("`{f}` is not multilinear in x1..x{n}")));
        }
        v[permutation_rank(m)] = c.clone();
    }
    Ok(v)
}

fn from_coordinates(n: usize, domain: Domain, row: &[Scalar]) -> NCPolynomial {
    let mut p = NCPolynomial::zero(domain);
    for (r, c) in row.iter().enumerate() {
        p.add_term(Monomial(permutation_unrank(n, r)), c.clone());
    }
    p
}

/// Products `b[j[sigma(1)]] ... b[j[sigma(n)]]` for every permutation in
/// lexicographic order; `None` where a prefix already vanishes.
fn permuted_products(mats: &[&DenseMatrix]) -> Vec<Option<DenseMatrix>> {
    fn dfs(
        mats: &[&DenseMatrix],
        prefix: &DenseMatrix,
        used: &mut Vec<bool>,
        depth: usize,
        out: &mut Vec<Option<DenseMatrix>>,
    ) {
        let n = mats.len();
        if depth == n {
            out.push(Some(prefix.clone()));
            return;
        }
        for i in 0..n {
            if used[i] {
                continue;
            }
            let next = prefix * mats[i];
            if next.is_zero() {
                out.extend(std::iter::repeat_n(None, factorial(n - depth - 1)));
                continue;
            }
            used[i] = true;
            dfs(mats, &next, used, depth + 1, out);
            used[i] = false;
        }
    }
    let size = mats[0].rows();
    let mut out = Vec::with_capacity(factorial(mats.len()));
    let id = DenseMatrix::identity(mats[0].domain(), size);
    dfs(mats, &id, &mut vec![false; mats.len()], 0, &mut out);
    out
}

/// Linear constraints on the coordinates of P_n from one basis tuple: one row
/// per matrix entry.
fn tuple_constraints(basis: &[DenseMatrix], tuple: &[usize], domain: Domain) -> Vec<Vec<Scalar>> {
    let mats: Vec<&DenseMatrix> = tuple.iter().map(|&j| &basis[j]).collect();
    let products = permuted_products(&mats);
    let size = basis[0].rows();
    let mut rows = Vec::new();
    for r in 0..size {
        for c in 0..size {
            let row: Vec<Scalar> = products
                .iter()
                .map(|p| p.as_ref().map_or_else(|| domain.zero(), |m| m.get(r, c).clone()))
                .collect();
            if row.iter().any(|e| !e.is_zero()) {
                rows.push(row);
            }
        }
    }
    rows
}

fn decode_tuple(mut index: u128, base: usize, n: usize) -> Vec<usize> {
    let mut t = vec![0; n];
    for slot in t.iter_mut().rev() {
        *slot = (index % base as u128) as usize;
        index /= base as u128;
    }
    t
}

/// Multilinear identities of degree `n` of the algebra spanned by `basis`.
///
/// By multilinearity it suffices to substitute basis elements; tuples are
/// processed in lexicographic order so the result does not depend on
/// scheduling.
pub fn multilinear_identities(basis: &[DenseMatrix], n: usize, limits: &Limits) -> Result<MultilinearSpace> {
    let first = basis
        .first()
        .ok_or_else(|| Error::invalid("the algebra basis is empty"))?;
    let domain = first.domain();
    domain.require_field()?;
    if n == 0 {
        return Err(Error::invalid("degree must be at least 1"));
    }
    limits.check_degree(n)?;
    for b in basis {
        if !b.is_square() || b.rows() != first.rows() {
            return Err(Error::DimensionMismatch {
                expected: first.rows(),
                found: b.rows(),
            });
        }
        domain.require_same(b.domain())?;
    }
    let count = (basis.len() as u128)
        .checked_pow(n as u32)
        .ok_or_else(|| Error::cap("variable assignments", u128::MAX, limits.max_assign as u128))?;
    limits.check_assignments(count)?;

    let mut constraints = SpanBuilder::new(domain, factorial(n))?;
    const CHUNK: u128 = 64;
    let mut start = 0u128;
    while start < count && !constraints.is_full() {
        let end = (start + CHUNK).min(count);
        let batch: Vec<Vec<Vec<Scalar>>> = (start..end)
            .into_par_iter()
            .map(|t| tuple_constraints(basis, &decode_tuple(t, basis.len(), n), domain))
            .collect();
        for row in batch.into_iter().flatten() {
            constraints.insert(row)?;
            if constraints.is_full() {
                break;
            }
        }
        start = end;
    }
    MultilinearSpace::from_subspace(n, constraints.finish().annihilator()?)
}

fn common_domain(gens: &[NCPolynomial]) -> Result<Domain> {
    let domain = gens.first().map_or(Domain::Rational, NCPolynomial::domain);
    domain.require_field()?;
    for g in gens {
        domain.require_same(g.domain())?;
        g.require_multilinear()?;
    }
    Ok(domain)
}

/// Terms of a multilinear generator rewritten over argument positions
/// `0..k` (its variables in increasing order).
fn argument_terms(f: &NCPolynomial) -> (usize, Vec<(Vec<usize>, Scalar)>) {
    let vars: Vec<u32> = f.variables().into_iter().collect();
    let terms = f
        .terms()
        .map(|(m, c)| {
            let pos = m.iter().map(|v| vars.binary_search(v).unwrap()).collect();
            (pos, c.clone())
        })
        .collect();
    (vars.len(), terms)
}

/// Calls `visit` with every nondecreasing sequence of `k` cut points in `0..=n`.
fn for_each_cut(n: usize, k: usize, visit: &mut dyn FnMut(&[usize])) {
    fn go(n: usize, k: usize, cuts: &mut Vec<usize>, visit: &mut dyn FnMut(&[usize])) {
        if cuts.len() == k {
            visit(cuts);
            return;
        }
        let lo = cuts.last().copied().unwrap_or(0);
        for c in lo..=n {
            cuts.push(c);
            go(n, k, cuts, visit);
            cuts.pop();
        }
    }
    go(n, k, &mut Vec::with_capacity(k), visit);
}

/// Degree-`n` multilinear component of the T-ideal generated by `gens`:
/// the span of `m0 f(m1, ..., mk) m(k+1)` over generators `f` and ordered
/// partitions of `x1..xn` into possibly empty monomials.
pub fn t_consequences(gens: &[NCPolynomial], n: usize, limits: &Limits) -> Result<MultilinearSpace> {
    let domain = common_domain(gens)?;
    if n == 0 {
        return Err(Error::invalid("degree must be at least 1"));
    }
    limits.check_degree(n)?;
    let mut builder = SpanBuilder::new(domain, factorial(n))?;
    let mut seen: HashSet<Vec<(usize, Scalar)>> = HashSet::new();
    let perms = permutations(n);
    for g in gens.iter().filter(|g| !g.is_zero()) {
        let (k, terms) = argument_terms(g);
        for pi in &perms {
            let mut failure = None;
            for_each_cut(n, k + 1, &mut |cuts| {
                if failure.is_some() || builder.is_full() {
                    return;
                }
                let block = |j: usize| -> &[u32] {
                    let lo = if j == 0 { 0 } else { cuts[j - 1] };
                    let hi = if j == k + 1 { n } else { cuts[j] };
                    &pi[lo..hi]
                };
                let mut sparse: BTreeMap<usize, Scalar> = BTreeMap::new();
                for (args, c) in &terms {
                    let mut word = block(0).to_vec();
                    for &a in args {
                        word.extend_from_slice(block(a + 1));
                    }
                    word.extend_from_slice(block(k + 1));
                    let slot = sparse.entry(permutation_rank(&word)).or_insert_with(|| domain.zero());
                    *slot = &*slot + c;
                }
                let key: Vec<(usize, Scalar)> = sparse.into_iter().filter(|(_, c)| !c.is_zero()).collect();
                if key.is_empty() || !seen.insert(key.clone()) {
                    return;
                }
                let mut v = vec![domain.zero(); factorial(n)];
                for (r, c) in key {
                    v[r] = c;
                }
                if let Err(e) = builder.insert(v) {
                    failure = Some(e);
                }
            });
            if let Some(e) = failure {
                return Err(e);
            }
        }
    }
    MultilinearSpace::from_subspace(n, builder.finish())
}

/// Degree-`n` multilinear component of the product `I2 * I1` of the T-ideals
/// generated by `gens2` and `gens1`: products `u * v` with `u` a consequence
/// of `gens2` in one nonempty block of variables and `v` a consequence of
/// `gens1` in the complementary nonempty block.
pub fn tideal_product_component(
    gens2: &[NCPolynomial],
    gens1: &[NCPolynomial],
    n: usize,
    limits: &Limits,
) -> Result<MultilinearSpace> {
    let domain = common_domain(gens2)?;
    common_domain(gens1)?.require_same(domain).or_else(|e| {
        if gens1.is_empty() || gens2.is_empty() {
            Ok(())
        } else {
            Err(e)
        }
    })?;
    if n == 0 {
        return Err(Error::invalid("degree must be at least 1"));
    }
    limits.check_degree(n)?;
    let mut left: BTreeMap<usize, Vec<NCPolynomial>> = BTreeMap::new();
    let mut right: BTreeMap<usize, Vec<NCPolynomial>> = BTreeMap::new();
    for d in 1..n {
        left.insert(d, t_consequences(gens2, d, limits)?.basis_polynomials());
        right.insert(d, t_consequences(gens1, d, limits)?.basis_polynomials());
    }
    let mut builder = SpanBuilder::new(domain, factorial(n))?;
    for mask in 1u32..(1 << n) - 1 {
        let block: Vec<u32> = (1..=n as u32).filter(|i| mask & (1 << (i - 1)) != 0).collect();
        let rest: Vec<u32> = (1..=n as u32).filter(|i| mask & (1 << (i - 1)) == 0).collect();
        for u in &left[&block.len()] {
            let u = u.rename(|v| block[v as usize - 1]);
            for v in &right[&rest.len()] {
                let v = v.rename(|x| rest[x as usize - 1]);
                builder.insert(coordinates(&u.multiply(&v)?, n, domain)?)?;
                if builder.is_full() {
                    return MultilinearSpace::from_subspace(n, builder.finish());
                }
            }
        }
    }
    MultilinearSpace::from_subspace(n, builder.finish())
}
