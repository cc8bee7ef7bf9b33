//! Exact scalars, dense matrices, and canonical subspaces over Z, Q and F_p.

mod matrix;
mod scalar;
mod span;

pub use matrix::DenseMatrix;
pub use scalar::{Domain, Scalar};
pub use span::{hnf, member, rref, SpanBuilder, Subspace};
