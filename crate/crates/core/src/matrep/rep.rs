use crate::error::{Error, Result};
use crate::exact::{DenseMatrix, Domain, Scalar, SpanBuilder, Subspace};

/// A group given by invertible matrices acting on row vectors: `v o g = v g`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixRepresentation {
    dim: usize,
    domain: Domain,
    generators: Vec<DenseMatrix>,
    inverses: Vec<DenseMatrix>,
    labels: Vec<Option<String>>,
}

impl MatrixRepresentation {
    pub fn new(domain: Domain, dim: usize, generators: Vec<DenseMatrix>) -> Result<Self> {
        let labels = vec![None; generators.len()];
        MatrixRepresentation::with_labels(domain, dim, generators, labels)
    }

    pub fn with_labels(
        domain: Domain,
        dim: usize,
        generators: Vec<DenseMatrix>,
        labels: Vec<Option<String>>,
    ) -> Result<Self> {
        domain.require_field()?;
        if labels.len() != generators.len() {
            return Err(Error::invalid("one label slot per generator"));
        }
        let mut inverses = Vec::with_capacity(generators.len());
        for g in &generators {
            domain.require_same(g.domain())?;
            if g.rows() != dim || g.cols() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: if g.rows() != dim { g.rows() } else { g.cols() },
                });
            }
            let inv = g.inverse()?;
            if !(g * &inv).is_identity() || !(&inv * g).is_identity() {
                return Err(Error::NotInvertible);
            }
            inverses.push(inv);
        }
        Ok(MatrixRepresentation {
            dim,
            domain,
            generators,
            inverses,
            labels,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn domain(&self) -> Domain {
        self.domain
    }

    pub fn generators(&self) -> &[DenseMatrix] {
        &self.generators
    }

    pub fn inverses(&self) -> &[DenseMatrix] {
        &self.inverses
    }

    pub fn labels(&self) -> &[Option<String>] {
        &self.labels
    }

    /// Generators followed by their inverses.
    fn generators_and_inverses(&self) -> impl Iterator<Item = &DenseMatrix> {
        self.generators.iter().chain(&self.inverses)
    }
}

fn check_scalars(domain: Domain, values: &[Scalar]) -> Result<()> {
    values.iter().try_for_each(|s| domain.require_same(s.domain()))
}

/// `I + lambda E(i, i+1)` for each superdiagonal position and each `lambda`.
pub fn ut_natural(n: usize, domain: Domain, lambdas: &[Scalar]) -> Result<MatrixRepresentation> {
    if lambdas.is_empty() {
        return Err(Error::invalid("the coefficient set is empty"));
    }
    check_scalars(domain, lambdas)?;
    let mut gens = Vec::new();
    for i in 0..n.saturating_sub(1) {
        for l in lambdas {
            let mut g = DenseMatrix::identity(domain, n);
            g.set(i, i + 1, l.clone());
            gens.push(g);
        }
    }
    MatrixRepresentation::new(domain, n, gens)
}

/// [`ut_natural`] generators plus `diag(1, .., delta, .., 1)` for each
/// position and each `delta`.
pub fn t_natural(n: usize, domain: Domain, lambdas: &[Scalar], deltas: &[Scalar]) -> Result<MatrixRepresentation> {
    check_scalars(domain, deltas)?;
    if deltas.iter().any(Scalar::is_zero) {
        return Err(Error::invalid("diagonal entries must be nonzero"));
    }
    let ut = ut_natural(n, domain, lambdas)?;
    let mut gens = ut.generators;
    for i in 0..n {
        for d in deltas {
            let mut g = DenseMatrix::identity(domain, n);
            g.set(i, i, d.clone());
            gens.push(g);
        }
    }
    MatrixRepresentation::new(domain, n, gens)
}

/// Unitriangular generators together with `lambda I`; the generated group
/// lies in `{alpha I + strictly upper triangular}`.
pub fn units_of_scalar_plus_nilpotent(n: usize, domain: Domain, lambda: &Scalar) -> Result<MatrixRepresentation> {
    domain.require_same(lambda.domain())?;
    if lambda.is_zero() || lambda.is_one() {
        return Err(Error::invalid("the scalar must differ from 0 and 1"));
    }
    let ut = ut_natural(n, domain, &[domain.one()])?;
    let mut gens = ut.generators;
    gens.push(DenseMatrix::scalar_identity(n, lambda));
    MatrixRepresentation::new(domain, n, gens)
}

fn flatten(m: &DenseMatrix) -> Vec<Scalar> {
    m.entries().to_vec()
}

fn unflatten(domain: Domain, n: usize, row: &[Scalar]) -> DenseMatrix {
    DenseMatrix::new(domain, n, n, row.to_vec()).expect("row has n*n entries")
}

/// Linear span of the group as a subspace of the `dim * dim` coordinate space.
pub fn enveloping_subspace(rep: &MatrixRepresentation) -> Result<Subspace> {
    let n = rep.dim;
    let mut span = SpanBuilder::new(rep.domain, n * n)?;
    let mut frontier = vec![DenseMatrix::identity(rep.domain, n)];
    span.insert(flatten(&frontier[0]))?;
    while let Some(b) = frontier.pop() {
        for g in rep.generators_and_inverses() {
            let p = &b * g;
            if span.insert(flatten(&p))? {
                frontier.push(p);
            }
        }
    }
    Ok(span.finish())
}

/// Canonical basis of the enveloping algebra, the span of the group.
pub fn enveloping_algebra(rep: &MatrixRepresentation) -> Result<Vec<DenseMatrix>> {
    let s = enveloping_subspace(rep)?;
    Ok(s.basis_rows().map(|r| unflatten(rep.domain, rep.dim, r)).collect())
}

/// Whether `N^n = 0` for the algebra `N` generated by all `g - I` and
/// `g^-1 - I`.
pub fn aug_image_nilpotency(rep: &MatrixRepresentation, n: usize) -> Result<bool> {
    if n == 0 {
        return Err(Error::invalid("degree must be at least 1"));
    }
    let m = rep.dim;
    let id = DenseMatrix::identity(rep.domain, m);
    let gens: Vec<DenseMatrix> = rep.generators_and_inverses().map(|g| g - &id).collect();
    // Words of length k in the generators of N, up to span.
    let mut level = Subspace::span(rep.domain, m * m, gens.iter().map(flatten))?;
    for _ in 1..n {
        if level.is_zero() {
            break;
        }
        let mut next = SpanBuilder::new(rep.domain, m * m)?;
        for row in level.basis_rows() {
            let w = unflatten(rep.domain, m, row);
            for g in &gens {
                next.insert(flatten(&(&w * g)))?;
            }
        }
        level = next.finish();
    }
    Ok(level.is_zero())
}

/// Block upper triangular representation on `V1 + V2`: rep1 generators act
/// as `diag(g1, I)`, rep2 generators as `diag(I, g2)`, and each `phi` in
/// `hom_basis` (default: all matrix units) as `[[I, phi], [0, I]]`.
pub fn triangular_product(
    rep1: &MatrixRepresentation,
    rep2: &MatrixRepresentation,
    hom_basis: Option<&[DenseMatrix]>,
) -> Result<MatrixRepresentation> {
    rep1.domain.require_same(rep2.domain)?;
    let d = rep1.domain;
    let (m1, m2) = (rep1.dim, rep2.dim);
    let units: Vec<DenseMatrix>;
    let homs = match hom_basis {
        Some(h) => h,
        None => {
            units = (0..m1)
                .flat_map(|i| (0..m2).map(move |j| (i, j)))
                .map(|(i, j)| {
                    let mut e = DenseMatrix::zeros(d, m1, m2);
                    e.set(i, j, d.one());
                    e
                })
                .collect();
            &units
        }
    };
    let (i1, i2) = (DenseMatrix::identity(d, m1), DenseMatrix::identity(d, m2));
    let zero = DenseMatrix::zeros(d, m1, m2);
    let mut gens = Vec::new();
    let mut labels = Vec::new();
    for (g, l) in rep1.generators.iter().zip(&rep1.labels) {
        gens.push(DenseMatrix::block_upper(g, &zero, &i2)?);
        labels.push(l.clone());
    }
    for (g, l) in rep2.generators.iter().zip(&rep2.labels) {
        gens.push(DenseMatrix::block_upper(&i1, &zero, g)?);
        labels.push(l.clone());
    }
    for phi in homs {
        d.require_same(phi.domain())?;
        if phi.rows() != m1 || phi.cols() != m2 {
            return Err(Error::DimensionMismatch {
                expected: m1,
                found: phi.rows(),
            });
        }
        gens.push(DenseMatrix::block_upper(&i1, phi, &i2)?);
        labels.push(None);
    }
    MatrixRepresentation::with_labels(d, m1 + m2, gens, labels)
}
