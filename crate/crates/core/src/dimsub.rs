//! Dimension subgroups of finite groups.
//!
//! Over `Z` every span is a lattice in Hermite normal form and membership is
//! lattice membership. This is what separates `D_n(Z, G)` from `D_n(Q, G)`:
//! for `C2`, `(g - 1)^2 = -2(g - 1)` so `g - 1` lies in the rational square
//! of the augmentation ideal but not in the integral one.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use rayon::prelude::*;

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::exact::{Domain, Scalar, SpanBuilder, Subspace};
use crate::matrep::FiniteGroupTable;
use crate::ncpoly::NCPolynomial;

/// The group ring `KG` with elements stored as coordinate vectors indexed by
/// group-element index.
#[derive(Debug, Clone)]
pub struct FiniteGroupAlgebra {
    table: FiniteGroupTable,
    domain: Domain,
}

impl FiniteGroupAlgebra {
    pub fn new(table: FiniteGroupTable, domain: Domain) -> Self {
        FiniteGroupAlgebra { table, domain }
    }

    pub fn table(&self) -> &FiniteGroupTable {
        &self.table
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn order(&self) -> usize {
        self.table.order()
    }

    pub fn zero(&self) -> Vec<Scalar> {
        vec![self.domain.zero(); self.order()]
    }

    pub fn basis_element(&self, g: usize) -> Vec<Scalar> {
        let mut v = self.zero();
        v[g] = self.domain.one();
        v
    }

    /// `g - 1`.
    pub fn minus_one(&self, g: usize) -> Vec<Scalar> {
        let mut v = self.basis_element(g);
        v[0] = &v[0] - &self.domain.one();
        v
    }

    pub fn multiply(&self, u: &[Scalar], v: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.zero();
        for (a, x) in u.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (b, y) in v.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                let c = self.table.multiply(a, b);
                out[c] = &out[c] + &(x * y);
            }
        }
        out
    }

    /// `u * g`.
    pub fn right_translate(&self, u: &[Scalar], g: usize) -> Vec<Scalar> {
        let mut out = self.zero();
        for (a, x) in u.iter().enumerate() {
            out[self.table.multiply(a, g)] = x.clone();
        }
        out
    }

    /// `g * u`.
    pub fn left_translate(&self, g: usize, u: &[Scalar]) -> Vec<Scalar> {
        let mut out = self.zero();
        for (a, x) in u.iter().enumerate() {
            out[self.table.multiply(g, a)] = x.clone();
        }
        out
    }

    pub fn augmentation(&self, u: &[Scalar]) -> Scalar {
        u.iter().fold(self.domain.zero(), |acc, x| &acc + x)
    }
}

/// A normal subgroup, as sorted element indices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SubgroupSet {
    elements: Vec<usize>,
}

impl SubgroupSet {
    /// Checks that `elements` form a normal subgroup of `table`.
    pub fn new(table: &FiniteGroupTable, elements: impl IntoIterator<Item = usize>) -> Result<Self> {
        let set: BTreeSet<usize> = elements.into_iter().collect();
        if !set.contains(&table.identity()) {
            return Err(Error::invalid("subgroup must contain the identity"));
        }
        for &a in &set {
            if !set.contains(&table.inverse(a)) {
                return Err(Error::invalid("subgroup is not closed under inverses"));
            }
            for &b in &set {
                if !set.contains(&table.multiply(a, b)) {
                    return Err(Error::invalid("subgroup is not closed under products"));
                }
            }
            for g in 0..table.order() {
                if !set.contains(&table.conjugate(a, g)) {
                    return Err(Error::invalid("subgroup is not normal"));
                }
            }
        }
        Ok(SubgroupSet {
            elements: set.into_iter().collect(),
        })
    }

    pub fn elements(&self) -> &[usize] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.elements.binary_search(&g).is_ok()
    }

    pub fn is_subset_of(&self, other: &SubgroupSet) -> bool {
        self.elements.iter().all(|&g| other.contains(g))
    }

    /// Whether `G / self` is abelian, i.e. every commutator lies in `self`.
    pub fn has_abelian_quotient(&self, table: &FiniteGroupTable) -> bool {
        (0..table.order()).all(|a| (0..table.order()).all(|b| self.contains(table.commutator(a, b))))
    }
}

/// Subgroup generated by all conjugates of `seeds`.
pub fn normal_closure(table: &FiniteGroupTable, seeds: impl IntoIterator<Item = usize>) -> Result<SubgroupSet> {
    let conjugates: BTreeSet<usize> = seeds
        .into_iter()
        .flat_map(|s| (0..table.order()).map(move |g| (s, g)))
        .map(|(s, g)| table.conjugate(s, g))
        .collect();
    let mut found = BTreeSet::from([table.identity()]);
    let mut queue = VecDeque::from([table.identity()]);
    while let Some(x) = queue.pop_front() {
        for &c in &conjugates {
            let y = table.multiply(x, c);
            if found.insert(y) {
                queue.push_back(y);
            }
        }
    }
    SubgroupSet::new(table, found)
}

/// `gamma_1 = G`, `gamma_(k+1) = [gamma_k, G]`, for `k < n_max`.
pub fn lower_central_series(table: &FiniteGroupTable, n_max: usize) -> Result<Vec<SubgroupSet>> {
    let mut out = Vec::with_capacity(n_max);
    if n_max == 0 {
        return Ok(out);
    }
    out.push(SubgroupSet::new(table, 0..table.order())?);
    while out.len() < n_max {
        let last = out.last().unwrap();
        let comms: BTreeSet<usize> = last
            .elements()
            .iter()
            .flat_map(|&g| (0..table.order()).map(move |h| (g, h)))
            .map(|(g, h)| table.commutator(g, h))
            .collect();
        out.push(normal_closure(table, comms)?);
    }
    Ok(out)
}

/// `Delta^n`, the `n`-th power of the augmentation ideal.
pub fn augmentation_ideal_power(alg: &FiniteGroupAlgebra, n: usize) -> Result<Subspace> {
    if n == 0 {
        return Err(Error::invalid("power must be at least 1"));
    }
    Ok(augmentation_powers(alg, n)?.pop().expect("n >= 1"))
}

/// `[Delta^1, ..., Delta^n]`.
fn augmentation_powers(alg: &FiniteGroupAlgebra, n: usize) -> Result<Vec<Subspace>> {
    let d = alg.domain;
    let deltas: Vec<Vec<Scalar>> = (1..alg.order()).map(|g| alg.minus_one(g)).collect();
    let mut powers = vec![Subspace::span(d, alg.order(), deltas.clone())?];
    while powers.len() < n {
        let prev = powers.last().unwrap();
        let mut next = SpanBuilder::new(d, alg.order())?;
        for b in prev.basis_rows() {
            for g in 1..alg.order() {
                // b (g - 1) = b g - b
                let mut v = alg.right_translate(b, g);
                for (x, y) in v.iter_mut().zip(b) {
                    *x = &*x - y;
                }
                next.insert(v)?;
            }
        }
        powers.push(next.finish());
    }
    Ok(powers)
}

fn subgroup_from_ideal(alg: &FiniteGroupAlgebra, ideal: &Subspace) -> Result<SubgroupSet> {
    let mut members = Vec::new();
    for g in 0..alg.order() {
        if ideal.contains(&alg.minus_one(g))? {
            members.push(g);
        }
    }
    SubgroupSet::new(&alg.table, members)
}

/// `D_n = {g : g - 1 in Delta^n}` for `n = 1..=n_max`.
pub fn dimension_series(alg: &FiniteGroupAlgebra, n_max: usize) -> Result<Vec<SubgroupSet>> {
    if n_max == 0 {
        return Err(Error::invalid("n_max must be at least 1"));
    }
    augmentation_powers(alg, n_max)?
        .iter()
        .map(|p| subgroup_from_ideal(alg, p))
        .collect()
}

/// Whether a verbal ideal is known to be complete.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Completeness {
    Exact,
    /// Multilinear generators need not generate the whole T-ideal in
    /// positive characteristic, so the ideal may be too small.
    LowerBound,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerbalIdeal {
    pub ideal: Subspace,
    pub completeness: Completeness,
}

/// Smallest two-sided ideal of `KG` containing `values`.
pub fn ideal_from_values(alg: &FiniteGroupAlgebra, values: impl IntoIterator<Item = Vec<Scalar>>) -> Result<Subspace> {
    let mut span = SpanBuilder::new(alg.domain, alg.order())?;
    let mut queue = VecDeque::new();
    for v in values {
        if span.insert(v.clone())? {
            queue.push_back(v);
        }
    }
    let gens = alg.table.generators().to_vec();
    while let Some(v) = queue.pop_front() {
        if span.is_full() {
            break;
        }
        for &g in &gens {
            for w in [alg.left_translate(g, &v), alg.right_translate(&v, g)] {
                if span.insert(w.clone())? {
                    queue.push_back(w);
                }
            }
        }
    }
    Ok(span.finish())
}

fn decode(mut index: u64, base: usize, k: usize) -> Vec<usize> {
    let mut out = vec![0; k];
    for slot in out.iter_mut().rev() {
        *slot = (index % base as u64) as usize;
        index /= base as u64;
    }
    out
}

/// Value of a multilinear `f` with its variables, in increasing order, sent
/// to the elements `args` of `KG`.
fn evaluate_in(alg: &FiniteGroupAlgebra, f: &NCPolynomial, vars: &[u32], args: &[&[Scalar]]) -> Vec<Scalar> {
    let mut out = alg.zero();
    for (m, c) in f.terms() {
        let mut prod = alg.basis_element(0);
        for v in m {
            let i = vars.binary_search(v).expect("variable of f");
            prod = alg.multiply(&prod, args[i]);
        }
        for (o, p) in out.iter_mut().zip(prod) {
            *o = &*o + &(c * &p);
        }
    }
    out
}

/// Ideal generated by the values of `gens` on tuples drawn from `elements`.
pub fn verbal_ideal_on(
    alg: &FiniteGroupAlgebra,
    gens: &[NCPolynomial],
    elements: &[Vec<Scalar>],
    limits: &Limits,
) -> Result<VerbalIdeal> {
    let d = alg.domain;
    let gens = gens
        .iter()
        .map(|f| {
            f.require_multilinear()?;
            f.coerce(d)
        })
        .collect::<Result<Vec<_>>>()?;
    let mut values: Vec<Vec<Scalar>> = Vec::new();
    for f in gens.iter().filter(|f| !f.is_zero()) {
        let vars: Vec<u32> = f.variables().into_iter().collect();
        let count = (elements.len() as u128)
            .checked_pow(vars.len() as u32)
            .unwrap_or(u128::MAX);
        limits.check_assignments(count)?;
        let batch: Vec<Vec<Scalar>> = (0..count as u64)
            .into_par_iter()
            .map(|i| {
                let t = decode(i, elements.len(), vars.len());
                let args: Vec<&[Scalar]> = t.iter().map(|&j| elements[j].as_slice()).collect();
                evaluate_in(alg, f, &vars, &args)
            })
            .filter(|v| v.iter().any(|x| !x.is_zero()))
            .collect();
        values.extend(batch);
    }
    Ok(VerbalIdeal {
        ideal: ideal_from_values(alg, values)?,
        completeness: if d.characteristic() == 0 {
            Completeness::Exact
        } else {
            Completeness::LowerBound
        },
    })
}

/// The verbal ideal `I_Sigma(KG)` of the variety of algebras defined by the
/// multilinear identities `gens`.
pub fn verbal_ideal(alg: &FiniteGroupAlgebra, gens: &[NCPolynomial], limits: &Limits) -> Result<VerbalIdeal> {
    let elements: Vec<Vec<Scalar>> = (0..alg.order()).map(|g| alg.basis_element(g)).collect();
    verbal_ideal_on(alg, gens, &elements, limits)
}

/// `D_Sigma(G) = {g : g - 1 in I_Sigma(KG)}`.
pub fn dimension_subgroup_sigma(
    alg: &FiniteGroupAlgebra,
    gens: &[NCPolynomial],
    limits: &Limits,
) -> Result<SubgroupSet> {
    subgroup_from_ideal(alg, &verbal_ideal(alg, gens, limits)?.ideal)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesRow {
    pub n: usize,
    pub gamma_order: usize,
    pub d_order: usize,
    pub contained: bool,
    pub equal: bool,
}

/// Side-by-side comparison of a dimension series and a lower central series.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeriesReport {
    pub rows: Vec<SeriesRow>,
}

impl SeriesReport {
    pub fn all_contained(&self) -> bool {
        self.rows.iter().all(|r| r.contained)
    }

    /// Indices where `gamma_n` is strictly smaller than `D_n`.
    pub fn findings(&self) -> Vec<usize> {
        self.rows.iter().filter(|r| !r.equal).map(|r| r.n).collect()
    }
}

impl fmt::Display for SeriesReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "# n\tgamma_n\tD_n\tcontained\tequal")?;
        for r in &self.rows {
            writeln!(
                f,
                "{}\t{}\t{}\t{}\t{}",
                r.n, r.gamma_order, r.d_order, r.contained, r.equal
            )?;
        }
        Ok(())
    }
}

pub fn compare_series(ds: &[SubgroupSet], gs: &[SubgroupSet]) -> Result<SeriesReport> {
    if ds.len() != gs.len() {
        return Err(Error::DimensionMismatch {
            expected: ds.len(),
            found: gs.len(),
        });
    }
    Ok(SeriesReport {
        rows: ds
            .iter()
            .zip(gs)
            .enumerate()
            .map(|(i, (d, g))| SeriesRow {
                n: i + 1,
                gamma_order: g.order(),
                d_order: d.order(),
                contained: g.is_subset_of(d),
                equal: g == d,
            })
            .collect(),
    })
}
