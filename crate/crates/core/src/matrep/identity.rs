use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;

use crate::config::Limits;
use crate::error::Result;
use crate::exact::{DenseMatrix, Domain, Scalar, SpanBuilder};
use crate::grpalg::GroupAlgebraElement;
use crate::ncpoly::{evaluate, NCPolynomial};

use super::group::{element_images, FiniteGroupTable};
use super::rep::MatrixRepresentation;

/// An assignment of group elements to variables under which an identity
/// fails, with a basis row vector `e_row` that it does not annihilate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub assignment: BTreeMap<u32, usize>,
    pub value: DenseMatrix,
    pub row: usize,
}

fn assignment_count(choices: usize, vars: usize, limits: &Limits) -> Result<u64> {
    let count = (choices as u128).checked_pow(vars as u32).unwrap_or(u128::MAX);
    limits.check_assignments(count)?;
    Ok(count as u64)
}

fn decode(mut index: u64, choices: &[usize], vars: usize) -> Vec<usize> {
    let mut out = vec![0; vars];
    for slot in out.iter_mut().rev() {
        *slot = choices[(index % choices.len() as u64) as usize];
        index /= choices.len() as u64;
    }
    out
}

fn first_nonzero_row(m: &DenseMatrix) -> Option<usize> {
    (0..m.rows()).find(|&r| m.row(r).iter().any(|e| !e.is_zero()))
}

/// Searches assignments in lexicographic order (by element index) and
/// returns the first one under which `eval` is nonzero.
fn search(
    vars: &[u32],
    choices: &[usize],
    limits: &Limits,
    eval: impl Fn(&BTreeMap<u32, usize>) -> Result<Option<DenseMatrix>> + Sync,
) -> Result<Option<Witness>> {
    let count = assignment_count(choices.len(), vars.len(), limits)?;
    let found = (0..count).into_par_iter().find_map_first(|i| {
        let tuple = decode(i, choices, vars.len());
        let assignment: BTreeMap<u32, usize> = vars.iter().copied().zip(tuple).collect();
        match eval(&assignment) {
            Ok(Some(value)) => {
                let row = first_nonzero_row(&value).expect("nonzero value");
                Some(Ok(Witness { assignment, value, row }))
            }
            Ok(None) => None,
            Err(e) => Some(Err(e)),
        }
    });
    found.transpose()
}

/// First assignment of group elements to the variables `y_i` of `u` under
/// which `u` does not act as zero, if any.
pub fn find_action_witness(
    rep: &MatrixRepresentation,
    u: &GroupAlgebraElement,
    table: &FiniteGroupTable,
    limits: &Limits,
) -> Result<Option<Witness>> {
    let u = u.coerce(rep.domain())?;
    if u.is_zero() {
        return Ok(None);
    }
    let images = element_images(rep, table)?;
    let vars: Vec<u32> = u
        .terms()
        .flat_map(|(w, _)| w.syllables().iter().map(|&(g, _)| g))
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect();
    let all: Vec<usize> = (0..table.order()).collect();
    let domain = rep.domain();
    search(&vars, &all, limits, |asg| {
        let mut coeffs: BTreeMap<usize, Scalar> = BTreeMap::new();
        for (w, c) in u.terms() {
            let e = table.evaluate_word(w, |g| asg.get(&g).copied())?;
            let slot = coeffs.entry(e).or_insert_with(|| domain.zero());
            *slot = &*slot + c;
        }
        let mut value = DenseMatrix::zeros(domain, rep.dim(), rep.dim());
        for (e, c) in coeffs.iter().filter(|(_, c)| !c.is_zero()) {
            value.add_scaled(c, &images[*e]);
        }
        Ok((!value.is_zero()).then_some(value))
    })
}

/// Whether `v o u(g1, .., gn) = 0` for every vector and every assignment.
pub fn check_action_identity(
    rep: &MatrixRepresentation,
    u: &GroupAlgebraElement,
    table: &FiniteGroupTable,
    limits: &Limits,
) -> Result<bool> {
    Ok(find_action_witness(rep, u, table, limits)?.is_none())
}

/// Elements whose images form a basis of the span of all images.
fn spanning_elements(images: &[DenseMatrix], domain: Domain) -> Result<Vec<usize>> {
    let m = images[0].rows();
    let mut span = SpanBuilder::new(domain, m * m)?;
    let mut out = Vec::new();
    for (e, img) in images.iter().enumerate() {
        if span.insert(img.entries().to_vec())? {
            out.push(e);
        }
        if span.is_full() {
            break;
        }
    }
    Ok(out)
}

/// First assignment of group elements to the variables of `f` whose value
/// is nonzero, if any.
///
/// For multilinear `f` only elements whose images span the enveloping
/// algebra are substituted, which decides the question by linearity.
pub fn find_polynomial_witness(
    rep: &MatrixRepresentation,
    f: &NCPolynomial,
    table: &FiniteGroupTable,
    limits: &Limits,
) -> Result<Option<Witness>> {
    let f = f.coerce(rep.domain())?;
    if f.is_zero() {
        return Ok(None);
    }
    let images = element_images(rep, table)?;
    let vars: Vec<u32> = f.variables().into_iter().collect();
    let choices = if f.is_multilinear() {
        spanning_elements(&images, rep.domain())?
    } else {
        (0..table.order()).collect()
    };
    if vars.is_empty() {
        // A nonzero constant never vanishes on a nonzero module.
        return Ok((rep.dim() > 0).then(|| {
            let value = DenseMatrix::scalar_identity(rep.dim(), &f.coefficient(&[]));
            Witness {
                assignment: BTreeMap::new(),
                value,
                row: 0,
            }
        }));
    }
    search(&vars, &choices, limits, |asg| {
        let mats: BTreeMap<u32, DenseMatrix> = asg.iter().map(|(&v, &e)| (v, images[e].clone())).collect();
        let value = evaluate(&f, &mats)?;
        Ok((!value.is_zero()).then_some(value))
    })
}

/// Whether `f` vanishes on every tuple of group elements.
pub fn check_polynomial_identity(
    rep: &MatrixRepresentation,
    f: &NCPolynomial,
    table: &FiniteGroupTable,
    limits: &Limits,
) -> Result<bool> {
    Ok(find_polynomial_witness(rep, f, table, limits)?.is_none())
}
