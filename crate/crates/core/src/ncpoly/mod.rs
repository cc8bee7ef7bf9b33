//! Free associative algebra over a field and bounded-degree multilinear
//! identity spaces.

mod multilinear;
mod poly;

pub use multilinear::{
    coordinates, multilinear_identities, permutation_rank, permutation_unrank, t_consequences,
    tideal_product_component, MultilinearSpace,
};
pub use poly::{
    evaluate, multilinearize, permutations, standard_polynomial, standard_polynomial_in, Monomial, NCPolynomial,
};
