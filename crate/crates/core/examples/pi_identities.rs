//! Multilinear identities of small matrix algebras, and the standard
//! polynomial s4 on 2x2 and 3x3 matrices.
//!
//!     cargo run --example pi_identities

use std::collections::BTreeMap;

use varkit::exact::{DenseMatrix, Domain};
use varkit::ncpoly::{evaluate, multilinear_identities, standard_polynomial};
use varkit::Limits;

fn units(n: usize, which: &[(usize, usize)]) -> Vec<DenseMatrix> {
    which
        .iter()
        .map(|&(i, j)| DenseMatrix::unit(Domain::Rational, n, i, j))
        .collect()
}

fn main() -> varkit::Result<()> {
    let limits = Limits::default();
    let all2: Vec<(usize, usize)> = (0..2).flat_map(|i| (0..2).map(move |j| (i, j))).collect();
    let algebras = [("UT2", units(2, &[(0, 0), (0, 1), (1, 1)])), ("M2", units(2, &all2))];
    for (name, basis) in &algebras {
        for n in 2..=4 {
            let ids = multilinear_identities(basis, n, &limits)?;
            println!("{name}: degree {n}, {} independent identities", ids.dim());
        }
    }

    let s4 = standard_polynomial(4)?;
    let m2 = multilinear_identities(&algebras[1].1, 4, &limits)?;
    println!("\ns4 is an identity of M2: {}", m2.contains(&s4)?);

    let tuple = units(3, &[(0, 0), (0, 1), (1, 1), (1, 2)]);
    let asg: BTreeMap<u32, DenseMatrix> = tuple.into_iter().enumerate().map(|(k, m)| (k as u32 + 1, m)).collect();
    println!("s4(E11, E12, E22, E23) on M3 = {}", evaluate(&s4, &asg)?);

    let ut2 = multilinear_identities(&algebras[0].1, 4, &limits)?;
    println!("\nbasis of the degree 4 identities of UT2:");
    for f in ut2.basis_polynomials() {
        println!("  {f}");
    }
    Ok(())
}
