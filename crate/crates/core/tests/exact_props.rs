use proptest::prelude::*;

use varkit::exact::{hnf, member, rref, DenseMatrix, Domain, Scalar, Subspace};

fn int_rows(rows: &[Vec<i64>], domain: Domain) -> DenseMatrix {
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    DenseMatrix::from_i64_rows(domain, &refs).unwrap()
}

fn matrix_strategy() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..5, 1usize..6).prop_flat_map(|(r, c)| prop::collection::vec(prop::collection::vec(-6i64..7, c), r))
}

fn to_domain(row: &[Scalar], d: Domain) -> Vec<Scalar> {
    row.iter().map(|x| x.coerce(d).unwrap()).collect()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 64, .. ProptestConfig::default() })]

    #[test]
    fn rref_is_idempotent(rows in matrix_strategy()) {
        let s = rref(&int_rows(&rows, Domain::Rational)).unwrap();
        prop_assert_eq!(rref(s.basis()).unwrap(), s);
    }

    #[test]
    fn hnf_generates_the_same_lattice(rows in matrix_strategy()) {
        let a = int_rows(&rows, Domain::Integer);
        let h = hnf(&a).unwrap();
        let original = Subspace::span(Domain::Integer, a.cols(), a.row_vecs()).unwrap();
        for row in a.row_vecs() {
            prop_assert!(member(&row, &h).unwrap());
        }
        for row in h.basis_rows() {
            // every HNF row is an integer combination of the input rows
            prop_assert!(original.contains(row).unwrap());
        }
        // entries above each pivot are reduced into 0..pivot
        for (k, &p) in h.pivots().iter().enumerate() {
            let pivot = h.basis().get(k, p).clone();
            prop_assert!(!pivot.is_negative() && !pivot.is_zero());
            for above in 0..k {
                let e = h.basis().get(above, p);
                prop_assert!(!e.is_negative());
                prop_assert!((e - &pivot).is_negative());
            }
        }
    }

    #[test]
    fn membership_is_closed_under_sums(rows in matrix_strategy(), a in -3i64..4, b in -3i64..4) {
        for d in [Domain::Integer, Domain::Rational, Domain::Prime(5)] {
            let m = int_rows(&rows, d);
            let s = Subspace::span(d, m.cols(), m.row_vecs()).unwrap();
            let v = m.row(0).to_vec();
            let w = m.row(m.rows() - 1).to_vec();
            let combo: Vec<Scalar> = v
                .iter()
                .zip(&w)
                .map(|(x, y)| &(x * &d.from_i64(a)) + &(y * &d.from_i64(b)))
                .collect();
            prop_assert!(member(&combo, &s).unwrap());
        }
    }

    #[test]
    fn integer_and_rational_ranks_agree(rows in matrix_strategy()) {
        let h = hnf(&int_rows(&rows, Domain::Integer)).unwrap();
        let r = rref(&int_rows(&rows, Domain::Rational)).unwrap();
        prop_assert_eq!(h.rank(), r.rank());
        // the rational span of the HNF rows is the same subspace
        let hq = Subspace::span(Domain::Rational, r.ambient(), h.basis_rows().map(|x| to_domain(x, Domain::Rational))).unwrap();
        prop_assert_eq!(hq, r);
    }

    #[test]
    fn spans_grow_monotonically(rows in matrix_strategy()) {
        for d in [Domain::Integer, Domain::Rational, Domain::Prime(3)] {
            let m = int_rows(&rows, d);
            let mut prev = Subspace::zero(d, m.cols()).unwrap();
            for k in 1..=m.rows() {
                let cur = Subspace::span(d, m.cols(), m.row_vecs().into_iter().take(k)).unwrap();
                prop_assert!(prev.is_subspace_of(&cur).unwrap());
                prev = cur;
            }
        }
    }

    #[test]
    fn annihilator_is_orthogonal(rows in matrix_strategy()) {
        let s = rref(&int_rows(&rows, Domain::Rational)).unwrap();
        let ann = s.annihilator().unwrap();
        prop_assert_eq!(ann.rank() + s.rank(), s.ambient());
        for w in s.basis_rows() {
            for x in ann.basis_rows() {
                let dot = w.iter().zip(x).fold(Domain::Rational.zero(), |acc, (a, b)| &acc + &(a * b));
                prop_assert!(dot.is_zero());
            }
        }
    }
}

#[test]
fn spec_style_examples() {
    let h = hnf(&int_rows(&[vec![2, 0], vec![1, 1]], Domain::Integer)).unwrap();
    assert_eq!(h.basis().to_string(), "[[1,1],[0,2]]");
    let lattice = Subspace::span(Domain::Integer, 1, vec![vec![Domain::Integer.from_i64(2)]]).unwrap();
    assert!(!member(&[Domain::Integer.one()], &lattice).unwrap());
    let line = Subspace::span(Domain::Rational, 1, vec![vec![Domain::Rational.from_i64(2)]]).unwrap();
    assert!(member(&[Domain::Rational.one()], &line).unwrap());
}
