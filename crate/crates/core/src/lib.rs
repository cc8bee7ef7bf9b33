//! Exact computations for varieties of group representations.
//!
//! Free groups and their Magnus expansion, group algebras and Fox
//! derivatives, polynomial identities of matrix algebras, matrix
//! representations of finite groups, and dimension subgroups. All arithmetic
//! is exact over `Z`, `Q` or a prime field.

pub mod cli;
pub mod config;
pub mod dimsub;
pub mod error;
pub mod exact;
pub mod freegrp;
pub mod grpalg;
pub mod magnus;
pub mod matrep;
pub mod ncpoly;
pub(crate) mod text;

pub use config::Limits;
pub use error::{Error, Result};
