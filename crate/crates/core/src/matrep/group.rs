use std::collections::{HashMap, VecDeque};
use std::fmt;

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::exact::DenseMatrix;
use crate::freegrp::Word;

use super::rep::MatrixRepresentation;

/// Element of a concrete finite group.
///
/// Permutations act on the right: `p[i - 1]` is the image of point `i`, and
/// the product `p * q` applies `p` first.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum GroupElement {
    Matrix(DenseMatrix),
    Perm(Vec<u32>),
}

impl GroupElement {
    fn multiply(&self, other: &GroupElement) -> GroupElement {
        match (self, other) {
            (GroupElement::Matrix(a), GroupElement::Matrix(b)) => GroupElement::Matrix(a * b),
            (GroupElement::Perm(p), GroupElement::Perm(q)) => {
                GroupElement::Perm(p.iter().map(|&i| q[i as usize - 1]).collect())
            }
            _ => unreachable!("tables never mix element kinds"),
        }
    }

    fn inverse(&self) -> Result<GroupElement> {
        match self {
            GroupElement::Matrix(a) => Ok(GroupElement::Matrix(a.inverse()?)),
            GroupElement::Perm(p) => {
                let mut inv = vec![0; p.len()];
                for (i, &j) in p.iter().enumerate() {
                    inv[j as usize - 1] = i as u32 + 1;
                }
                Ok(GroupElement::Perm(inv))
            }
        }
    }
}

impl fmt::Display for GroupElement {
    /// Matrices as `[[..]]`, permutations in cycle notation (`()` for the
    /// identity).
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupElement::Matrix(m) => write!(f, "{m}"),
            GroupElement::Perm(p) => write!(f, "{}", cycle_string(p)),
        }
    }
}

pub(crate) fn cycle_string(p: &[u32]) -> String {
    let mut seen = vec![false; p.len()];
    let mut out = String::new();
    for start in 1..=p.len() as u32 {
        if seen[start as usize - 1] || p[start as usize - 1] == start {
            continue;
        }
        let mut cycle = vec![start];
        seen[start as usize - 1] = true;
        let mut i = p[start as usize - 1];
        while i != start {
            seen[i as usize - 1] = true;
            cycle.push(i);
            i = p[i as usize - 1];
        }
        let body: Vec<String> = cycle.iter().map(u32::to_string).collect();
        out.push_str(&format!("({})", body.join(" ")));
    }
    if out.is_empty() {
        out.push_str("()");
    }
    out
}

/// Full Cayley tables are kept only up to this order; larger groups
/// multiply by walking generator words.
const DENSE_TABLE_MAX: usize = 2048;

/// A finite group enumerated from generators.
///
/// Elements are numbered in breadth-first discovery order from the identity
/// (index 0), trying right multiplication by `g1, g1^-1, g2, g2^-1, ...`.
#[derive(Debug, Clone)]
pub struct FiniteGroupTable {
    elements: Vec<GroupElement>,
    index: HashMap<GroupElement, usize>,
    generators: Vec<usize>,
    /// `moves[2k][e] = e * g_k`, `moves[2k + 1][e] = e * g_k^-1`.
    moves: Vec<Vec<u32>>,
    parent: Vec<Option<(usize, usize)>>,
    inverses: Vec<usize>,
    table: Option<Vec<u32>>,
}

impl FiniteGroupTable {
    fn close(identity: GroupElement, gens: Vec<GroupElement>, limits: &Limits) -> Result<Self> {
        let mut step = Vec::with_capacity(2 * gens.len());
        for g in &gens {
            step.push(g.clone());
            step.push(g.inverse()?);
        }
        let mut elements = vec![identity.clone()];
        let mut index = HashMap::from([(identity, 0usize)]);
        let mut parent = vec![None];
        let mut moves: Vec<Vec<u32>> = vec![Vec::new(); step.len()];
        let mut queue = VecDeque::from([0usize]);
        while let Some(e) = queue.pop_front() {
            for (j, s) in step.iter().enumerate() {
                let prod = elements[e].multiply(s);
                let target = match index.get(&prod) {
                    Some(&t) => t,
                    None => {
                        if elements.len() >= limits.max_group {
                            return Err(Error::cap(
                                "group order",
                                elements.len() as u128 + 1,
                                limits.max_group as u128,
                            ));
                        }
                        let t = elements.len();
                        index.insert(prod.clone(), t);
                        elements.push(prod);
                        parent.push(Some((e, j)));
                        queue.push_back(t);
                        t
                    }
                };
                moves[j].push(target as u32);
            }
        }
        let generators = (0..gens.len()).map(|k| moves[2 * k][0] as usize).collect();
        let mut t = FiniteGroupTable {
            elements,
            index,
            generators,
            moves,
            parent,
            inverses: Vec::new(),
            table: None,
        };
        t.inverses = (0..t.order()).map(|e| t.inverse_by_word(e)).collect();
        if t.order() <= DENSE_TABLE_MAX {
            let n = t.order();
            let mut table = vec![0u32; n * n];
            for a in 0..n {
                for b in 0..n {
                    table[a * n + b] = t.multiply_by_word(a, b) as u32;
                }
            }
            t.table = Some(table);
        }
        Ok(t)
    }

    /// Closure of a permutation group on `1..=degree`.
    pub fn from_permutations(degree: usize, gens: &[Vec<u32>], limits: &Limits) -> Result<Self> {
        for g in gens {
            let mut sorted = g.clone();
            sorted.sort_unstable();
            if sorted != (1..=degree as u32).collect::<Vec<_>>() {
                return Err(Error::invalid(format!("not a permutation of 1..{degree}: {g:?}")));
            }
        }
        let identity = GroupElement::Perm((1..=degree as u32).collect());
        FiniteGroupTable::close(identity, gens.iter().cloned().map(GroupElement::Perm).collect(), limits)
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn elements(&self) -> &[GroupElement] {
        &self.elements
    }

    pub fn element(&self, e: usize) -> &GroupElement {
        &self.elements[e]
    }

    pub fn index_of(&self, g: &GroupElement) -> Option<usize> {
        self.index.get(g).copied()
    }

    /// Element indices of the generators, in the order given.
    pub fn generators(&self) -> &[usize] {
        &self.generators
    }

    /// The breadth-first predecessor of `e` and the move (`2k` for `g_k`,
    /// `2k + 1` for its inverse) leading to it.
    pub fn parent(&self, e: usize) -> Option<(usize, usize)> {
        self.parent[e]
    }

    pub fn right_generator(&self, e: usize, k: usize, inverse: bool) -> usize {
        self.moves[2 * k + inverse as usize][e] as usize
    }

    /// A shortest word in the generators (letters `x1, x2, ...`) for `e`.
    pub fn word(&self, e: usize) -> Word {
        let mut syllables = Vec::new();
        let mut cur = e;
        while let Some((p, j)) = self.parent[cur] {
            syllables.push((j as u32 / 2 + 1, if j % 2 == 0 { 1 } else { -1 }));
            cur = p;
        }
        syllables.reverse();
        Word::from_syllables(syllables).expect("generator indices are positive")
    }

    fn multiply_by_word(&self, a: usize, b: usize) -> usize {
        let mut path = Vec::new();
        let mut cur = b;
        while let Some((p, j)) = self.parent[cur] {
            path.push(j);
            cur = p;
        }
        path.iter().rev().fold(a, |acc, &j| self.moves[j][acc] as usize)
    }

    fn inverse_by_word(&self, e: usize) -> usize {
        // e = s1 ... sr, so e^-1 = sr^-1 ... s1^-1
        let mut acc = 0;
        let mut cur = e;
        while let Some((p, j)) = self.parent[cur] {
            acc = self.moves[j ^ 1][acc] as usize;
            cur = p;
        }
        acc
    }

    pub fn multiply(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.order() + b] as usize,
            None => self.multiply_by_word(a, b),
        }
    }

    pub fn inverse(&self, a: usize) -> usize {
        self.inverses[a]
    }

    pub fn power(&self, a: usize, exp: i64) -> usize {
        let base = if exp < 0 { self.inverse(a) } else { a };
        (0..exp.unsigned_abs()).fold(0, |acc, _| self.multiply(acc, base))
    }

    /// `[a, b] = a^-1 b^-1 a b`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        let ab = self.multiply(a, b);
        let ba = self.multiply(b, a);
        self.multiply(self.inverse(ba), ab)
    }

    /// `g^-1 a g`.
    pub fn conjugate(&self, a: usize, g: usize) -> usize {
        self.multiply(self.multiply(self.inverse(g), a), g)
    }

    /// Value of a free-group word with `x_i` sent to element `assignment(i)`.
    pub fn evaluate_word(&self, w: &Word, assignment: impl Fn(u32) -> Option<usize>) -> Result<usize> {
        let mut acc = 0;
        for &(g, e) in w.syllables() {
            let a = assignment(g).ok_or(Error::MissingImage(g))?;
            acc = self.multiply(acc, self.power(a, e));
        }
        Ok(acc)
    }
}

/// Finite group generated by the matrices of `rep`.
pub fn group_closure(rep: &MatrixRepresentation, limits: &Limits) -> Result<FiniteGroupTable> {
    let identity = GroupElement::Matrix(DenseMatrix::identity(rep.domain(), rep.dim()));
    let gens = rep.generators().iter().cloned().map(GroupElement::Matrix).collect();
    FiniteGroupTable::close(identity, gens, limits)
}

/// Matrix of every table element under `rep`, where `rep`'s generators are
/// the images of the table's generators. Fails if that assignment does not
/// extend to a homomorphism.
pub fn element_images(rep: &MatrixRepresentation, table: &FiniteGroupTable) -> Result<Vec<DenseMatrix>> {
    if rep.generators().len() != table.generators().len() {
        return Err(Error::invalid(format!(
            "representation has {} generators, group has {}",
            rep.generators().len(),
            table.generators().len()
        )));
    }
    let mut images = Vec::with_capacity(table.order());
    images.push(DenseMatrix::identity(rep.domain(), rep.dim()));
    for e in 1..table.order() {
        let (p, j) = table.parent(e).expect("non-identity elements have parents");
        let step = if j % 2 == 0 {
            &rep.generators()[j / 2]
        } else {
            &rep.inverses()[j / 2]
        };
        images.push(&images[p] * step);
    }
    for (k, g) in rep.generators().iter().enumerate() {
        for e in 0..table.order() {
            if images[table.right_generator(e, k, false)] != &images[e] * g {
                return Err(Error::NotAHomomorphism);
            }
        }
    }
    Ok(images)
}

/// Elements acting as the identity.
pub fn kernel_elements(rep: &MatrixRepresentation, table: &FiniteGroupTable) -> Result<Vec<usize>> {
    Ok(element_images(rep, table)?
        .iter()
        .enumerate()
        .filter(|(_, m)| m.is_identity())
        .map(|(e, _)| e)
        .collect())
}
