//! The T-ideal generated by the commutator, and its product with itself,
//! compared with the identities of upper triangular 2x2 matrices.
//!
//!     cargo run --example tideal_product

use varkit::exact::{DenseMatrix, Domain};
use varkit::ncpoly::{multilinear_identities, t_consequences, tideal_product_component, NCPolynomial};
use varkit::Limits;

fn main() -> varkit::Result<()> {
    let limits = Limits::default();
    let comm: NCPolynomial = "x1*x2 - x2*x1".parse()?;
    let q = Domain::Rational;
    let ut2: Vec<DenseMatrix> = [(0, 0), (0, 1), (1, 1)]
        .iter()
        .map(|&(i, j)| DenseMatrix::unit(q, 2, i, j))
        .collect();
    println!("n\tdim P_n\tT(comm)\tT(comm)^2\tId(UT2)\tequal");
    for n in 2..=5 {
        let t = t_consequences(std::slice::from_ref(&comm), n, &limits)?;
        let sq = tideal_product_component(std::slice::from_ref(&comm), std::slice::from_ref(&comm), n, &limits)?;
        let ids = multilinear_identities(&ut2, n, &limits)?;
        let total: usize = (1..=n).product();
        println!(
            "{n}\t{total}\t{}\t{}\t\t{}\t{}",
            t.dim(),
            sq.dim(),
            ids.dim(),
            sq == ids
        );
    }
    Ok(())
}
