#![allow(dead_code)]

use std::collections::{BTreeSet, HashMap};
use std::process::Command;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use varkit::exact::{hnf, member, DenseMatrix, Domain, Scalar};
use varkit::freegrp::{left_normed_commutator, Word};
use varkit::grpalg::{fox_derivative, GroupAlgebraElement};
use varkit::magnus::{magnus_embed, series_multiply, TruncatedSeries};
use varkit::matrep::{FiniteGroupTable, GroupElement};
use varkit::Limits;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random (unreduced) word of length `0..=max_len` over `x1..x_letters`.
pub fn random_word(rng: &mut impl Rng, letters: u32, max_len: usize) -> Word {
    let len = rng.gen_range(0..=max_len);
    let signed: Vec<i32> = (0..len)
        .map(|_| {
            let g = rng.gen_range(1..=letters) as i32;
            if rng.gen_bool(0.5) {
                g
            } else {
                -g
            }
        })
        .collect();
    Word::from_letters(&signed).unwrap()
}

/// A random nonempty word whose image in the abelianization is nonzero.
pub fn random_non_commutator(rng: &mut impl Rng, letters: u32, max_len: usize) -> Word {
    loop {
        let w = random_word(rng, letters, max_len);
        if (1..=letters).any(|g| w.exponent_sum(g) != 0) {
            return w;
        }
    }
}

/// A left-normed commutator of weight `weight` whose entries are short
/// random words.
pub fn random_commutator(rng: &mut impl Rng, letters: u32, weight: usize) -> Word {
    let entries: Vec<Word> = (0..weight).map(|_| random_word(rng, letters, 3)).collect();
    left_normed_commutator(&entries).unwrap()
}

/// `w - 1 == sum_i (dw/dx_i)(x_i - 1)` over the integers.
pub fn fox_identity_holds(w: &Word, letters: u32) -> bool {
    let z = Domain::Integer;
    let lhs = GroupAlgebraElement::from_word(z, w.clone())
        .sub(&GroupAlgebraElement::one(z))
        .unwrap();
    let mut rhs = GroupAlgebraElement::zero(z);
    for i in 1..=letters {
        let term = fox_derivative(w, i)
            .multiply(&GroupAlgebraElement::generator_minus_one(z, i))
            .unwrap();
        rhs = rhs.add(&term).unwrap();
    }
    lhs == rhs
}

pub fn fox_identity_on_random_words(seed: u64, count: usize) -> bool {
    let mut r = rng(seed);
    (0..count).all(|_| fox_identity_holds(&random_word(&mut r, 3, 20), 3))
}

pub fn magnus(w: &Word, letters: u32, cutoff: u32) -> TruncatedSeries {
    magnus_embed(w, letters, cutoff, &Limits::default()).unwrap()
}

/// Multiplicativity of the Magnus embedding and `M(w) M(w^-1) = 1`.
pub fn magnus_multiplicative_on_random_pairs(seed: u64, count: usize) -> bool {
    let mut r = rng(seed);
    (0..count).all(|_| {
        let u = random_word(&mut r, 2, 12);
        let v = random_word(&mut r, 2, 12);
        let lhs = magnus(&u.multiply(&v), 2, 5);
        let rhs = series_multiply(&magnus(&u, 2, 5), &magnus(&v, 2, 5)).unwrap();
        let unit = series_multiply(&magnus(&u, 2, 5), &magnus(&u.inverse(), 2, 5)).unwrap();
        lhs == rhs && unit.is_one()
    })
}

pub fn bin() -> &'static str {
    env!("CARGO_BIN_EXE_varkit")
}

/// Runs the binary and returns `(exit code, stdout)`.
pub fn run_cli(args: &[&str]) -> (i32, String) {
    let out = Command::new(bin())
        .args(args)
        .env_remove("VARKIT_MAX_GROUP")
        .env_remove("VARKIT_MAX_DEGREE")
        .env_remove("VARKIT_MAX_ASSIGN")
        .output()
        .expect("binary runs");
    (out.status.code().unwrap_or(-1), String::from_utf8(out.stdout).unwrap())
}

pub fn data(rel: &str) -> String {
    format!("{}/data/{rel}", env!("CARGO_MANIFEST_DIR"))
}

pub fn unit(n: usize, i: usize, j: usize) -> DenseMatrix {
    DenseMatrix::unit(Domain::Rational, n, i, j)
}

pub fn units(n: usize, which: &[(usize, usize)]) -> Vec<DenseMatrix> {
    which.iter().map(|&(i, j)| unit(n, i, j)).collect()
}

pub fn all_units(n: usize) -> Vec<DenseMatrix> {
    (0..n).flat_map(|i| (0..n).map(move |j| unit(n, i, j))).collect()
}

/// Brute-force group arithmetic on the concrete elements, independent of
/// the table's word machinery.
pub struct Oracle {
    elements: Vec<GroupElement>,
    index: HashMap<GroupElement, usize>,
}

impl Oracle {
    pub fn new(t: &FiniteGroupTable) -> Self {
        let elements = t.elements().to_vec();
        let index = elements.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        Oracle { elements, index }
    }

    pub fn n(&self) -> usize {
        self.elements.len()
    }

    pub fn mul(&self, a: usize, b: usize) -> usize {
        let prod = match (&self.elements[a], &self.elements[b]) {
            (GroupElement::Perm(p), GroupElement::Perm(q)) => {
                GroupElement::Perm(p.iter().map(|&i| q[i as usize - 1]).collect())
            }
            (GroupElement::Matrix(x), GroupElement::Matrix(y)) => GroupElement::Matrix(x * y),
            _ => unreachable!(),
        };
        self.index[&prod]
    }

    pub fn inv(&self, a: usize) -> usize {
        (0..self.n()).find(|&b| self.mul(a, b) == 0).unwrap()
    }

    pub fn comm(&self, a: usize, b: usize) -> usize {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    /// Subgroup generated by `gens`, by closure under products.
    pub fn generated(&self, gens: &BTreeSet<usize>) -> BTreeSet<usize> {
        let mut set: BTreeSet<usize> = BTreeSet::from([0]);
        loop {
            let next: BTreeSet<usize> = set
                .iter()
                .flat_map(|&a| gens.iter().map(move |&g| (a, g)))
                .map(|(a, g)| self.mul(a, g))
                .chain(set.iter().copied())
                .collect();
            if next == set {
                return set;
            }
            set = next;
        }
    }

    pub fn gamma(&self, n: usize) -> Vec<BTreeSet<usize>> {
        let mut out = vec![(0..self.n()).collect::<BTreeSet<_>>()];
        while out.len() < n {
            let prev = out.last().unwrap();
            let comms = prev
                .iter()
                .flat_map(|&a| (0..self.n()).map(move |g| (a, g)))
                .map(|(a, g)| self.comm(a, g))
                .collect();
            out.push(self.generated(&comms));
        }
        out
    }

    /// `sum_i u_i g_i` times `(g - 1)` in `Z G`.
    pub fn times_delta(&self, u: &[i64], g: usize) -> Vec<i64> {
        let mut out = vec![0i64; self.n()];
        for (h, &c) in u.iter().enumerate() {
            if c != 0 {
                out[self.mul(h, g)] += c;
                out[h] -= c;
            }
        }
        out
    }

    /// Integral dimension subgroups from lattice bases of `Delta^n`,
    /// `n = 1..=n_max`.
    pub fn dimension(&self, n_max: usize) -> Vec<BTreeSet<usize>> {
        let mut layer: Vec<Vec<i64>> = (1..self.n())
            .map(|g| self.times_delta(&unit_vec(self.n(), 0), g))
            .collect();
        let mut out = Vec::new();
        for n in 1..=n_max {
            let lattice = hnf(&to_matrix(&layer, self.n())).unwrap();
            out.push(
                (0..self.n())
                    .filter(|&g| member(&to_scalars(&self.times_delta(&unit_vec(self.n(), 0), g)), &lattice).unwrap())
                    .collect(),
            );
            if n < n_max {
                let basis: Vec<Vec<i64>> = lattice
                    .basis_rows()
                    .map(|r| r.iter().map(|x| x.to_string().parse().unwrap()).collect())
                    .collect();
                layer = basis
                    .iter()
                    .flat_map(|b| (1..self.n()).map(move |g| (b, g)))
                    .map(|(b, g)| self.times_delta(b, g))
                    .collect();
            }
        }
        out
    }
}

fn unit_vec(n: usize, i: usize) -> Vec<i64> {
    let mut v = vec![0; n];
    v[i] = 1;
    v
}

fn to_scalars(v: &[i64]) -> Vec<Scalar> {
    v.iter().map(|&x| Domain::Integer.from_i64(x)).collect()
}

fn to_matrix(rows: &[Vec<i64>], cols: usize) -> DenseMatrix {
    let rows: Vec<Vec<Scalar>> = rows.iter().map(|r| to_scalars(r)).collect();
    if rows.is_empty() {
        return DenseMatrix::zeros(Domain::Integer, 0, cols);
    }
    DenseMatrix::from_rows(Domain::Integer, rows).unwrap()
}
