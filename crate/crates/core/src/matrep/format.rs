//! Line-based `key = value` files describing matrix groups, permutation
//! groups and matrix algebras.
//!
//! ```text
//! # upper unitriangular 2x2 over F2
//! kind = matrix
//! field = F2
//! dim = 2
//! gen u = [[1,1],[0,1]]
//! ```
//!
//! `kind = perm` files give `degree` and cycle generators such as
//! `gen = (1 2 3)(4 5)`; `kind = algebra` files give `elem = [[..]]` lines
//! spanning an algebra.

use std::fmt;
use std::path::Path;
use std::str::FromStr;

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::exact::{DenseMatrix, Domain, Scalar};

use super::group::{cycle_string, group_closure, FiniteGroupTable};
use super::rep::{enveloping_algebra, MatrixRepresentation};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RepFile {
    Matrix(MatrixRepresentation),
    Perm {
        degree: usize,
        generators: Vec<Vec<u32>>,
        labels: Vec<Option<String>>,
    },
    Algebra {
        domain: Domain,
        dim: usize,
        basis: Vec<DenseMatrix>,
    },
}

/// Parses `[[a,b],[c,d]]` with entries in `domain`.
pub fn parse_matrix(text: &str, domain: Domain) -> Result<DenseMatrix> {
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let inner = compact
        .strip_prefix("[[")
        .and_then(|s| s.strip_suffix("]]"))
        .ok_or_else(|| Error::parse(format!("expected [[..],..] matrix, found `{text}`")))?;
    let rows = inner
        .split("],[")
        .map(|row| {
            row.split(',')
                .map(|e| Scalar::parse_in(e, Some(domain)))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    DenseMatrix::from_rows(domain, rows)
}

/// Parses cycle notation on `1..=degree`; `()` is the identity.
fn parse_cycles(text: &str, degree: usize) -> Result<Vec<u32>> {
    let mut perm: Vec<u32> = (1..=degree as u32).collect();
    let mut rest = text.trim();
    if rest.is_empty() {
        return Err(Error::parse("empty permutation; write () for the identity"));
    }
    while !rest.is_empty() {
        let body = rest
            .strip_prefix('(')
            .and_then(|r| r.split_once(')'))
            .ok_or_else(|| Error::parse(format!("bad cycle syntax `{text}`")))?;
        let points = body
            .0
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|s| !s.is_empty())
            .map(|s| {
                let p: u32 = s.parse().map_err(|_| Error::parse(format!("bad point `{s}`")))?;
                if p == 0 || p as usize > degree {
                    return Err(Error::parse(format!("point {p} outside 1..{degree}")));
                }
                Ok(p)
            })
            .collect::<Result<Vec<_>>>()?;
        // Compose this cycle after what has been read so far.
        let mut cycle: Vec<u32> = (1..=degree as u32).collect();
        let mut seen = vec![false; degree];
        for (i, &p) in points.iter().enumerate() {
            if std::mem::replace(&mut seen[p as usize - 1], true) {
                return Err(Error::parse(format!("point {p} repeated in a cycle")));
            }
            cycle[p as usize - 1] = points[(i + 1) % points.len()];
        }
        perm = perm.iter().map(|&i| cycle[i as usize - 1]).collect();
        rest = body.1.trim_start();
    }
    Ok(perm)
}

fn permutation_matrix(domain: Domain, p: &[u32]) -> DenseMatrix {
    let mut m = DenseMatrix::zeros(domain, p.len(), p.len());
    for (i, &j) in p.iter().enumerate() {
        m.set(i, j as usize - 1, domain.one());
    }
    m
}

impl RepFile {
    pub fn load(path: impl AsRef<Path>) -> Result<RepFile> {
        let path = path.as_ref();
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::invalid(format!("cannot read {}: {e}", path.display())))?;
        text.parse()
    }

    /// The representation itself, or permutation matrices over `domain`
    /// (default Q) for a permutation group.
    pub fn representation(&self, domain: Option<Domain>) -> Result<MatrixRepresentation> {
        match self {
            RepFile::Matrix(rep) => match domain {
                Some(d) if d != rep.domain() => Err(Error::DomainMismatch(rep.domain(), d)),
                _ => Ok(rep.clone()),
            },
            RepFile::Perm {
                degree,
                generators,
                labels,
            } => {
                let d = domain.unwrap_or(Domain::Rational);
                let gens = generators.iter().map(|p| permutation_matrix(d, p)).collect();
                MatrixRepresentation::with_labels(d, *degree, gens, labels.clone())
            }
            RepFile::Algebra { .. } => Err(Error::invalid("an algebra file does not describe a group")),
        }
    }

    /// Enumerated group. Permutation files multiply permutations directly.
    pub fn group_table(&self, limits: &Limits) -> Result<FiniteGroupTable> {
        match self {
            RepFile::Perm { degree, generators, .. } => {
                FiniteGroupTable::from_permutations(*degree, generators, limits)
            }
            _ => group_closure(&self.representation(None)?, limits),
        }
    }

    /// Listed basis of an algebra file, or the enveloping algebra of a group.
    pub fn algebra_basis(&self) -> Result<Vec<DenseMatrix>> {
        match self {
            RepFile::Algebra { basis, .. } => Ok(basis.clone()),
            _ => enveloping_algebra(&self.representation(None)?),
        }
    }
}

struct Fields {
    kind: Option<String>,
    field: Option<Domain>,
    dim: Option<usize>,
    degree: Option<usize>,
    gens: Vec<(Option<String>, String)>,
    elems: Vec<String>,
}

impl FromStr for RepFile {
    type Err = Error;

    fn from_str(text: &str) -> Result<RepFile> {
        let mut f = Fields {
            kind: None,
            field: None,
            dim: None,
            degree: None,
            gens: Vec::new(),
            elems: Vec::new(),
        };
        for (lineno, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| Error::parse(format!("line {}: expected `key = value`", lineno + 1)))?;
            let value = value.trim().to_string();
            let mut words = key.split_whitespace();
            let name = words.next().unwrap_or("");
            let label = words.next().map(str::to_string);
            if words.next().is_some() || (label.is_some() && name != "gen") {
                return Err(Error::parse(format!("line {}: bad key `{}`", lineno + 1, key.trim())));
            }
            let number = |v: &str| {
                v.parse::<usize>()
                    .map_err(|_| Error::parse(format!("line {}: expected a number, found `{v}`", lineno + 1)))
            };
            match name {
                "kind" => f.kind = Some(value),
                "field" => f.field = Some(value.parse()?),
                "dim" => f.dim = Some(number(&value)?),
                "degree" => f.degree = Some(number(&value)?),
                "gen" => f.gens.push((label, value)),
                "elem" => f.elems.push(value),
                other => return Err(Error::parse(format!("line {}: unknown key `{other}`", lineno + 1))),
            }
        }
        let missing = |what: &str| Error::parse(format!("missing `{what}`"));
        match f.kind.as_deref() {
            Some("matrix") => {
                let domain = f.field.ok_or_else(|| missing("field"))?;
                let dim = f.dim.ok_or_else(|| missing("dim"))?;
                let mut gens = Vec::new();
                let mut labels = Vec::new();
                for (l, g) in f.gens {
                    gens.push(parse_matrix(&g, domain)?);
                    labels.push(l);
                }
                Ok(RepFile::Matrix(MatrixRepresentation::with_labels(
                    domain, dim, gens, labels,
                )?))
            }
            Some("perm") => {
                let degree = f.degree.ok_or_else(|| missing("degree"))?;
                let mut generators = Vec::new();
                let mut labels = Vec::new();
                for (l, g) in f.gens {
                    generators.push(parse_cycles(&g, degree)?);
                    labels.push(l);
                }
                Ok(RepFile::Perm {
                    degree,
                    generators,
                    labels,
                })
            }
            Some("algebra") => {
                let domain = f.field.ok_or_else(|| missing("field"))?;
                domain.require_field()?;
                let dim = f.dim.ok_or_else(|| missing("dim"))?;
                let basis = f
                    .elems
                    .iter()
                    .map(|e| {
                        let m = parse_matrix(e, domain)?;
                        if m.rows() != dim || m.cols() != dim {
                            return Err(Error::DimensionMismatch {
                                expected: dim,
                                found: m.rows(),
                            });
                        }
                        Ok(m)
                    })
                    .collect::<Result<Vec<_>>>()?;
                if basis.is_empty() {
                    return Err(missing("elem"));
                }
                Ok(RepFile::Algebra { domain, dim, basis })
            }
            Some(other) => Err(Error::parse(format!("unknown kind `{other}`"))),
            None => Err(missing("kind")),
        }
    }
}

fn gen_key(label: &Option<String>) -> String {
    match label {
        Some(l) => format!("gen {l}"),
        None => "gen".to_string(),
    }
}

impl fmt::Display for RepFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepFile::Matrix(rep) => {
                writeln!(f, "kind = matrix")?;
                writeln!(f, "field = {}", rep.domain())?;
                writeln!(f, "dim = {}", rep.dim())?;
                for (g, l) in rep.generators().iter().zip(rep.labels()) {
                    writeln!(f, "{} = {g}", gen_key(l))?;
                }
            }
            RepFile::Perm {
                degree,
                generators,
                labels,
            } => {
                writeln!(f, "kind = perm")?;
                writeln!(f, "degree = {degree}")?;
                for (g, l) in generators.iter().zip(labels) {
                    writeln!(f, "{} = {}", gen_key(l), cycle_string(g))?;
                }
            }
            RepFile::Algebra { domain, dim, basis } => {
                writeln!(f, "kind = algebra")?;
                writeln!(f, "field = {domain}")?;
                writeln!(f, "dim = {dim}")?;
                for b in basis {
                    writeln!(f, "elem = {b}")?;
                }
            }
        }
        Ok(())
    }
}

/// Bundled example groups and algebras.
pub struct Catalog;

const GROUPS: &[(&str, &str)] = &[
    ("C2", include_str!("../../data/groups/C2.rep")),
    ("C4", include_str!("../../data/groups/C4.rep")),
    ("C2xC2", include_str!("../../data/groups/C2xC2.rep")),
    ("S3", include_str!("../../data/groups/S3.rep")),
    ("D4", include_str!("../../data/groups/D4.rep")),
    ("Q8", include_str!("../../data/groups/Q8.rep")),
    ("UT3F2", include_str!("../../data/groups/UT3F2.rep")),
    ("A4", include_str!("../../data/groups/A4.rep")),
];

const ALGEBRAS: &[(&str, &str)] = &[
    ("K", include_str!("../../data/algebras/K.alg")),
    ("M2", include_str!("../../data/algebras/M2.alg")),
    ("M3", include_str!("../../data/algebras/M3.alg")),
    ("UT2", include_str!("../../data/algebras/UT2.alg")),
    ("UT2unipotent", include_str!("../../data/algebras/UT2unipotent.alg")),
];

impl Catalog {
    pub fn group_names() -> Vec<&'static str> {
        GROUPS.iter().map(|(n, _)| *n).collect()
    }

    pub fn algebra_names() -> Vec<&'static str> {
        ALGEBRAS.iter().map(|(n, _)| *n).collect()
    }

    pub fn group(name: &str) -> Option<RepFile> {
        GROUPS
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, text)| text.parse().expect("bundled group files parse"))
    }

    pub fn algebra(name: &str) -> Option<RepFile> {
        ALGEBRAS
            .iter()
            .find(|(n, _)| *n == name)
            .map(|(_, text)| text.parse().expect("bundled algebra files parse"))
    }
}
