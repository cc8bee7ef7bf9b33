//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! nonzero if any criterion fails.

mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use rand::Rng;

use common::*;
use varkit::dimsub::{
    compare_series, dimension_series, dimension_subgroup_sigma, lower_central_series, FiniteGroupAlgebra,
};
use varkit::exact::{DenseMatrix, Domain, Subspace};
use varkit::freegrp::{left_normed_commutator, Word};
use varkit::grpalg::s_n_identity_element;
use varkit::magnus::{dimension_degree, in_free_dimension_subgroup};
use varkit::matrep::{
    aug_image_nilpotency, check_action_identity, enveloping_subspace, group_closure, units_of_scalar_plus_nilpotent,
    ut_natural, Catalog,
};
use varkit::ncpoly::{
    evaluate, multilinear_identities, standard_polynomial, t_consequences, tideal_product_component, MultilinearSpace,
    NCPolynomial,
};
use varkit::Limits;

type Outcome = Result<String, String>;

/// Name, time budget in seconds, check.
type Criterion = (&'static str, u64, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lim() -> Limits {
    Limits::default()
}

fn catalog_table(name: &str) -> varkit::matrep::FiniteGroupTable {
    Catalog::group(name).unwrap().group_table(&lim()).unwrap()
}

fn magnus_depth() -> Outcome {
    let gens = [
        Word::generator(1),
        Word::generator(2),
        Word::generator(1).inverse(),
        Word::generator(2).inverse(),
    ];
    let mut enumerated = 0;
    for w in 2..=5usize {
        let mut idx = vec![0usize; w];
        loop {
            let entries: Vec<Word> = idx.iter().map(|&i| gens[i].clone()).collect();
            let c = left_normed_commutator(&entries).unwrap();
            let d = dimension_degree(&c, 2, 6, &lim()).unwrap();
            ensure(d.at_least(w as u32), || {
                format!("weight {w} commutator {c} has degree {d}")
            })?;
            enumerated += 1;
            let mut k = 0;
            while k < w && idx[k] == gens.len() - 1 {
                idx[k] = 0;
                k += 1;
            }
            if k == w {
                break;
            }
            idx[k] += 1;
        }
    }
    let mut r = rng(101);
    for n in 2..=5usize {
        for _ in 0..100 {
            let factors = r.gen_range(1..=3);
            let w = (0..factors).fold(Word::identity(), |acc, _| {
                acc.multiply(&random_commutator(&mut r, 2, n))
            });
            ensure(in_free_dimension_subgroup(&w, n as u32, 2, &lim()).unwrap(), || {
                format!("product of weight-{n} commutators {w} not in D_{n}")
            })?;
        }
    }
    let mut r = rng(102);
    for _ in 0..100 {
        let w = random_non_commutator(&mut r, 2, 16);
        ensure(!in_free_dimension_subgroup(&w, 2, 2, &lim()).unwrap(), || {
            format!("{w} reported in D_2")
        })?;
    }
    Ok(format!("{enumerated} commutators, 400 products, 100 non-commutators"))
}

fn standard_polynomials() -> Outcome {
    let m2 = all_units(2);
    let s2 = standard_polynomial(2).unwrap();
    let s4 = standard_polynomial(4).unwrap();
    ensure(
        multilinear_identities(&m2, 4, &lim()).unwrap().contains(&s4).unwrap(),
        || "s4 not an identity of M2".into(),
    )?;
    ensure(
        !multilinear_identities(&m2, 2, &lim()).unwrap().contains(&s2).unwrap(),
        || "s2 is an identity of M2".into(),
    )?;
    let names = |n: usize| -> Vec<(String, DenseMatrix)> {
        (0..n)
            .flat_map(|i| (0..n).map(move |j| (format!("E{}{}", i + 1, j + 1), unit(n, i, j))))
            .collect()
    };
    let b2 = names(2);
    let witness2 = b2
        .iter()
        .flat_map(|a| b2.iter().map(move |b| (a, b)))
        .find_map(|(a, b)| {
            let v = evaluate(&s2, &BTreeMap::from([(1, a.1.clone()), (2, b.1.clone())])).unwrap();
            (!v.is_zero()).then(|| format!("s2({}, {}) = {v}", a.0, b.0))
        })
        .ok_or("no witness for s2 on M2")?;
    let tuple = [(0, 0), (0, 1), (1, 1), (1, 2)];
    let asg: BTreeMap<u32, DenseMatrix> = tuple
        .iter()
        .enumerate()
        .map(|(k, &(i, j))| (k as u32 + 1, unit(3, i, j)))
        .collect();
    let v = evaluate(&s4, &asg).unwrap();
    ensure(!v.is_zero(), || "s4 vanishes on the chosen M3 tuple".into())?;
    Ok(format!("{witness2}; s4(E11, E12, E22, E23) = {v} on M3"))
}

fn nilpotency_membership() -> Outcome {
    let f2 = Domain::prime(2).unwrap();
    for d in [Domain::Rational, f2] {
        for n in 2..=5 {
            let rep = ut_natural(n, d, &[d.one()]).unwrap();
            ensure(aug_image_nilpotency(&rep, n).unwrap(), || {
                format!("UT_{n} over {d} fails at {n}")
            })?;
            ensure(!aug_image_nilpotency(&rep, n - 1).unwrap(), || {
                format!("UT_{n} over {d} passes at {}", n - 1)
            })?;
        }
    }
    let mut instances = 0;
    for m in 1..=3 {
        let rep = ut_natural(m, f2, &[f2.one()]).unwrap();
        let table = group_closure(&rep, &lim()).unwrap();
        for n in 1..=3u32 {
            let fast = aug_image_nilpotency(&rep, n as usize).unwrap();
            let slow = check_action_identity(&rep, &s_n_identity_element(n).unwrap(), &table, &lim()).unwrap();
            ensure(fast == slow, || {
                format!("UT_{m}(F2), n = {n}: nilpotency {fast}, exhaustive {slow}")
            })?;
            instances += 1;
        }
    }
    Ok(format!("{instances} F2 instances agree with the exhaustive check"))
}

fn units_witness() -> Outcome {
    let q = Domain::Rational;
    for n in 2..=3 {
        let units = units_of_scalar_plus_nilpotent(n, q, &q.from_i64(2)).unwrap();
        let ut = ut_natural(n, q, &[q.one()]).unwrap();
        let (a, b) = (enveloping_subspace(&units).unwrap(), enveloping_subspace(&ut).unwrap());
        ensure(a == b, || format!("enveloping algebras differ at n = {n}"))?;
        for k in 1..=5 {
            ensure(!aug_image_nilpotency(&units, k).unwrap(), || {
                format!("units rep nilpotent at n = {n}, k = {k}")
            })?;
        }
    }
    Ok("enveloping algebras equal, no nilpotency level up to 5".into())
}

fn commutativity_asymmetry() -> Outcome {
    let q = Domain::Rational;
    let a = multilinear_identities(&[DenseMatrix::identity(q, 2), unit(2, 0, 1)], 2, &lim()).unwrap();
    let b = multilinear_identities(&units(2, &[(0, 0), (0, 1), (1, 1)]), 2, &lim()).unwrap();
    ensure(a.dim() == 1 && b.dim() == 0, || {
        format!("dimensions {} and {}", a.dim(), b.dim())
    })?;
    Ok("dim 1 for span{I, E12}, dim 0 for span{E11, E12, E22}".into())
}

fn tideal_product() -> Outcome {
    let comm: NCPolynomial = "x1*x2 - x2*x1".parse().unwrap();
    let prod = tideal_product_component(std::slice::from_ref(&comm), std::slice::from_ref(&comm), 4, &lim()).unwrap();
    let ids = multilinear_identities(&units(2, &[(0, 0), (0, 1), (1, 1)]), 4, &lim()).unwrap();
    ensure(prod.subspace().ambient() == 24, || "ambient is not 24".into())?;
    ensure(prod == ids, || {
        format!("product dim {} vs identities dim {}", prod.dim(), ids.dim())
    })?;
    Ok(format!("equal subspaces of P_4, dim {}", prod.dim()))
}

fn dimension_subgroups() -> Outcome {
    let mut rows = Vec::new();
    for name in Catalog::group_names() {
        let t = catalog_table(name);
        let ds = dimension_series(&FiniteGroupAlgebra::new(t.clone(), Domain::Integer), 4).unwrap();
        let gs = lower_central_series(&t, 4).unwrap();
        let oracle = Oracle::new(&t);
        let (og, od) = (oracle.gamma(4), oracle.dimension(4));
        for n in 0..4 {
            let g: BTreeSet<usize> = gs[n].elements().iter().copied().collect();
            let d: BTreeSet<usize> = ds[n].elements().iter().copied().collect();
            ensure(g == og[n], || {
                format!("{name}: gamma_{} disagrees with commutator closure", n + 1)
            })?;
            ensure(d == od[n], || {
                format!("{name}: D_{} disagrees with lattice membership", n + 1)
            })?;
        }
        let report = compare_series(&ds, &gs).unwrap();
        ensure(report.all_contained(), || {
            format!("{name}: gamma_n not contained in D_n")
        })?;
        ensure(report.findings().is_empty(), || {
            format!("{name}: gamma_n != D_n at {:?}", report.findings())
        })?;
        rows.push(format!(
            "{name}:{}",
            gs.iter().map(|s| s.order().to_string()).collect::<Vec<_>>().join("/")
        ));
    }
    let c2 = catalog_table("C2");
    let dz = dimension_series(&FiniteGroupAlgebra::new(c2.clone(), Domain::Integer), 2).unwrap();
    let dq = dimension_series(&FiniteGroupAlgebra::new(c2, Domain::Rational), 2).unwrap();
    ensure(dz[1].order() == 1 && dq[1].order() == 2, || {
        format!("C2: |D2(Z)| = {}, |D2(Q)| = {}", dz[1].order(), dq[1].order())
    })?;
    Ok(format!("{}; C2: D2(Q) = C2, D2(Z) = 1", rows.join(" ")))
}

fn sigma_dimension() -> Outcome {
    let comm: NCPolynomial = "x1*x2 - x2*x1".parse().unwrap();
    for name in Catalog::group_names() {
        let t = catalog_table(name);
        let alg = FiniteGroupAlgebra::new(t.clone(), Domain::Rational);
        let ds = dimension_subgroup_sigma(&alg, std::slice::from_ref(&comm), &lim()).unwrap();
        ensure(ds.has_abelian_quotient(&t), || format!("{name}: G/D_Sigma not abelian"))?;
        if name == "S3" {
            let g2 = &lower_central_series(&t, 2).unwrap()[1];
            ensure(&ds == g2 && ds.order() == 3, || {
                format!("S3: |D_Sigma| = {}", ds.order())
            })?;
        }
    }
    Ok("D_Sigma(S3) = A3 = gamma_2(S3); all quotients abelian".into())
}

fn property_suites() -> Outcome {
    ensure(fox_identity_on_random_words(7, 200), || "Fox identity failed".into())?;
    ensure(magnus_multiplicative_on_random_pairs(11, 200), || {
        "Magnus multiplicativity failed".into()
    })?;

    let mut r = rng(211);
    for d in [Domain::Integer, Domain::Rational, Domain::prime(5).unwrap()] {
        for _ in 0..50 {
            let cols = r.gen_range(1..6);
            let rows: Vec<Vec<_>> = (0..r.gen_range(1..7))
                .map(|_| (0..cols).map(|_| d.from_i64(r.gen_range(-6..7))).collect())
                .collect();
            let mut prev = Subspace::zero(d, cols).unwrap();
            for k in 1..=rows.len() {
                let cur = Subspace::span(d, cols, rows.iter().take(k).cloned()).unwrap();
                ensure(prev.is_subspace_of(&cur).unwrap(), || {
                    format!("span chain not monotone over {d}")
                })?;
                prev = cur;
            }
        }
    }

    let q = Domain::Rational;
    let algebras: Vec<(&str, Vec<DenseMatrix>)> = vec![
        ("K", vec![DenseMatrix::identity(q, 1)]),
        ("span{I,E12}", vec![DenseMatrix::identity(q, 2), unit(2, 0, 1)]),
        ("UT2", units(2, &[(0, 0), (0, 1), (1, 1)])),
        ("M2", all_units(2)),
    ];
    let comm: NCPolynomial = "x1*x2 - x2*x1".parse().unwrap();
    let mut spaces: Vec<(String, MultilinearSpace)> = Vec::new();
    for n in 1..=4 {
        for (name, basis) in &algebras {
            spaces.push((
                format!("{name} deg {n}"),
                multilinear_identities(basis, n, &lim()).unwrap(),
            ));
        }
        spaces.push((
            format!("T(comm) deg {n}"),
            t_consequences(std::slice::from_ref(&comm), n, &lim()).unwrap(),
        ));
        spaces.push((
            format!("T(comm)^2 deg {n}"),
            tideal_product_component(std::slice::from_ref(&comm), std::slice::from_ref(&comm), n, &lim()).unwrap(),
        ));
    }
    spaces.push((
        "T(s4) deg 4".into(),
        t_consequences(&[standard_polynomial(4).unwrap()], 4, &lim()).unwrap(),
    ));
    for (label, s) in &spaces {
        ensure(s.is_sn_invariant().unwrap(), || format!("{label} is not S_n invariant"))?;
    }

    let invocations: &[&[&str]] = &[
        &["magnus", "comm(comm(x1,x2),x2)", "--letters", "2", "--cutoff", "4"],
        &["dimsub", "--group", "catalog:Q8", "--nmax", "4", "--gamma"],
        &["identities", "--algebra", "catalog:UT2", "--degree", "3"],
        &["trprod", "--left", "catalog:UT3F2", "--right", "catalog:UT3F2"],
        &["check", "--rep", "catalog:UT3F2", "--identity", "action:y1-1"],
    ];
    for args in invocations {
        let first = run_cli(args);
        ensure(run_cli(args) == first, || {
            format!("nondeterministic output for {args:?}")
        })?;
    }
    let ut2 = data("reps/ut2_f2.rep");
    let contract: &[(&[&str], i32)] = &[
        (&["check", "--rep", &ut2, "--identity", "action:(y1-1)(y2-1)"], 0),
        (&["check", "--rep", &ut2, "--identity", "action:y1-1"], 1),
        (&["magnus", "x1 (", "--letters", "1", "--cutoff", "2"], 2),
        (
            &[
                "--max-degree",
                "3",
                "identities",
                "--algebra",
                "catalog:M2",
                "--degree",
                "4",
            ],
            3,
        ),
    ];
    for (args, code) in contract {
        let got = run_cli(args).0;
        ensure(got == *code, || format!("{args:?} exited {got}, expected {code}"))?;
    }
    Ok(format!("{} identity spaces invariant, CLI deterministic", spaces.len()))
}

fn main() {
    let criteria: [Criterion; 9] = [
        ("1 magnus depth of commutators", 30, magnus_depth),
        ("2 standard polynomials on M2, M3", 10, standard_polynomials),
        ("3 nilpotency vs action identities", 30, nilpotency_membership),
        ("4 units representation witness", 10, units_witness),
        ("5 commutativity of span{I,E12}", 5, commutativity_asymmetry),
        ("6 T-ideal product equals UT2 identities", 60, tideal_product),
        ("7 dimension subgroups of the catalog", 60, dimension_subgroups),
        ("8 D_Sigma for commutative Sigma", 30, sigma_dimension),
        ("9 property suites", 120, property_suites),
    ];
    std::panic::set_hook(Box::new(|_| {}));
    let mut failures = 0;
    for (name, budget, run) in criteria {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(_) if elapsed > Duration::from_secs(budget) => Err(format!("over budget of {budget}s")),
            other => other,
        };
        let (tag, detail) = match &outcome {
            Ok(d) => ("PASS", d),
            Err(d) => ("FAIL", d),
        };
        println!("{tag}  [{:>7.2}s / {budget}s]  {name}: {detail}", elapsed.as_secs_f64());
        if outcome.is_err() {
            failures += 1;
        }
    }
    if failures > 0 {
        println!("{failures} criteria failed");
        std::process::exit(1);
    }
    println!("all criteria passed");
}
