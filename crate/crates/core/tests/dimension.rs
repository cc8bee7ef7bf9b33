mod common;

use std::collections::BTreeSet;

use common::Oracle;

use varkit::dimsub::{
    augmentation_ideal_power, compare_series, dimension_series, dimension_subgroup_sigma, lower_central_series,
    verbal_ideal, verbal_ideal_on, Completeness, FiniteGroupAlgebra, SubgroupSet,
};
use varkit::exact::{Domain, Scalar, Subspace};
use varkit::matrep::{Catalog, FiniteGroupTable};
use varkit::ncpoly::NCPolynomial;
use varkit::Limits;

fn lim() -> Limits {
    Limits::default()
}

fn table(name: &str) -> FiniteGroupTable {
    Catalog::group(name).unwrap().group_table(&lim()).unwrap()
}

fn elements(s: &SubgroupSet) -> BTreeSet<usize> {
    s.elements().iter().copied().collect()
}

#[test]
fn integral_dimension_series_equals_lower_central_series_on_catalog() {
    for name in Catalog::group_names() {
        let t = table(name);
        let alg = FiniteGroupAlgebra::new(t.clone(), Domain::Integer);
        let ds = dimension_series(&alg, 4).unwrap();
        let gs = lower_central_series(&t, 4).unwrap();
        let oracle = Oracle::new(&t);
        let og = oracle.gamma(4);
        let od = oracle.dimension(4);
        for n in 0..4 {
            assert_eq!(elements(&gs[n]), og[n], "{name}: gamma_{}", n + 1);
            assert_eq!(elements(&ds[n]), od[n], "{name}: D_{}", n + 1);
        }
        let report = compare_series(&ds, &gs).unwrap();
        assert!(report.all_contained(), "{name}");
        assert!(report.findings().is_empty(), "{name}:\n{report}");
    }
}

#[test]
fn coefficient_ring_matters_for_c2() {
    let t = table("C2");
    let dz = dimension_series(&FiniteGroupAlgebra::new(t.clone(), Domain::Integer), 2).unwrap();
    let dq = dimension_series(&FiniteGroupAlgebra::new(t, Domain::Rational), 2).unwrap();
    assert_eq!(dz[1].order(), 1);
    assert_eq!(dq[1].order(), 2);
}

#[test]
fn augmentation_powers_decrease() {
    for name in ["S3", "D4", "Q8"] {
        for d in [Domain::Integer, Domain::Rational, Domain::prime(2).unwrap()] {
            let alg = FiniteGroupAlgebra::new(table(name), d);
            let mut prev: Option<Subspace> = None;
            for n in 1..=4 {
                let p = augmentation_ideal_power(&alg, n).unwrap();
                if let Some(q) = &prev {
                    assert!(p.is_subspace_of(q).unwrap(), "{name} over {d}, n = {n}");
                }
                prev = Some(p);
            }
            let ds = dimension_series(&alg, 4).unwrap();
            for w in ds.windows(2) {
                assert!(w[1].is_subset_of(&w[0]));
            }
        }
    }
}

#[test]
fn monomials_reproduce_augmentation_powers() {
    for name in Catalog::group_names() {
        for d in [Domain::Integer, Domain::Rational] {
            let alg = FiniteGroupAlgebra::new(table(name), d);
            let deltas: Vec<Vec<Scalar>> = (1..alg.order()).map(|g| alg.minus_one(g)).collect();
            for n in 1..=3u32 {
                let text = (1..=n).map(|i| format!("x{i}")).collect::<Vec<_>>().join("*");
                let mono: NCPolynomial = text.parse().unwrap();
                let got = verbal_ideal_on(&alg, &[mono], &deltas, &lim()).unwrap();
                assert_eq!(
                    got.ideal,
                    augmentation_ideal_power(&alg, n as usize).unwrap(),
                    "{name} over {d}, n = {n}"
                );
            }
        }
    }
}

#[test]
fn commutative_sigma_gives_the_derived_subgroup() {
    let comm: NCPolynomial = "x1*x2 - x2*x1".parse().unwrap();
    for name in Catalog::group_names() {
        let t = table(name);
        let alg = FiniteGroupAlgebra::new(t.clone(), Domain::Rational);
        let ds = dimension_subgroup_sigma(&alg, std::slice::from_ref(&comm), &lim()).unwrap();
        assert!(ds.has_abelian_quotient(&t), "{name}");
        assert_eq!(ds, lower_central_series(&t, 2).unwrap()[1], "{name}");
    }
    let s3 = table("S3");
    let alg = FiniteGroupAlgebra::new(s3, Domain::Rational);
    let v = verbal_ideal(&alg, std::slice::from_ref(&comm), &lim()).unwrap();
    assert_eq!(v.ideal.rank(), 4);
    assert_eq!(v.completeness, Completeness::Exact);
    assert_eq!(
        dimension_subgroup_sigma(&alg, std::slice::from_ref(&comm), &lim())
            .unwrap()
            .order(),
        3
    );
    let f3 = FiniteGroupAlgebra::new(table("S3"), Domain::prime(3).unwrap());
    assert_eq!(
        verbal_ideal(&f3, &[comm], &lim()).unwrap().completeness,
        Completeness::LowerBound
    );
}
