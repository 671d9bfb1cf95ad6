//! Exact dense and sparse linear algebra over a [`Field`](crate::Field).

mod dense;
pub mod sparse;

pub use dense::{subspace_equal, Matrix};
pub use sparse::{sparse_kernel, Echelon, SparseColumns, SparseVec};

use crate::field::Field;

/// Rank of `a`.
pub fn rank<F: Field>(a: &Matrix<F>) -> usize {
    a.rank()
}

/// Columns of the result span `ker a`.
pub fn kernel_basis<F: Field>(a: &Matrix<F>) -> Matrix<F> {
    a.kernel_basis()
}
