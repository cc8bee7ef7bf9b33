//! Integral dimension series of the bundled groups next to their lower
//! central series, and the coefficient ring sensitivity of `C2`.
//!
//!     cargo run --example dimension_subgroups

use varkit::dimsub::{
    compare_series, dimension_series, dimension_subgroup_sigma, lower_central_series, verbal_ideal, FiniteGroupAlgebra,
};
use varkit::exact::Domain;
use varkit::matrep::Catalog;
use varkit::ncpoly::NCPolynomial;
use varkit::Limits;

fn main() -> varkit::Result<()> {
    let limits = Limits::default();
    for name in Catalog::group_names() {
        let table = Catalog::group(name).expect("bundled").group_table(&limits)?;
        let alg = FiniteGroupAlgebra::new(table.clone(), Domain::Integer);
        let report = compare_series(&dimension_series(&alg, 4)?, &lower_central_series(&table, 4)?)?;
        let orders: Vec<String> = report.rows.iter().map(|r| r.d_order.to_string()).collect();
        println!(
            "{name:<6} |D_n(Z)| = {:<12} gamma_n = D_n: {}",
            orders.join(", "),
            report.findings().is_empty()
        );
    }

    let c2 = Catalog::group("C2").expect("bundled").group_table(&limits)?;
    for d in [Domain::Integer, Domain::Rational] {
        let ds = dimension_series(&FiniteGroupAlgebra::new(c2.clone(), d), 2)?;
        println!("C2 over {d}: |D_2| = {}", ds[1].order());
    }

    let comm: NCPolynomial = "x1*x2 - x2*x1".parse()?;
    let s3 = Catalog::group("S3").expect("bundled").group_table(&limits)?;
    let alg = FiniteGroupAlgebra::new(s3, Domain::Rational);
    let ideal = verbal_ideal(&alg, std::slice::from_ref(&comm), &limits)?;
    let ds = dimension_subgroup_sigma(&alg, &[comm], &limits)?;
    println!(
        "\nS3, commutative algebras: ideal rank {}, |D_Sigma| = {}",
        ideal.ideal.rank(),
        ds.order()
    );
    Ok(())
}
