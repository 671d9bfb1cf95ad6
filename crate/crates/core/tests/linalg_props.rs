use invalg::linalg::{kernel_basis, rank, sparse_kernel, Echelon, Matrix, SparseColumns};
use invalg::{Field, Mersenne61, Rational, RationalMatrix};
use proptest::prelude::*;

fn int_matrix() -> impl Strategy<Value = Vec<Vec<i64>>> {
    (1usize..=5, 1usize..=5).prop_flat_map(|(r, c)| proptest::collection::vec(proptest::collection::vec(-4i64..=4, c), r))
}

fn to_matrix<F: Field>(rows: &[Vec<i64>]) -> Matrix<F> {
    let cols = rows[0].len();
    Matrix::from_rows(cols, rows.iter().map(|r| r.iter().map(|&v| F::from_i64(v)).collect()).collect())
}

proptest! {
    #[test]
    fn rank_nullity(rows in int_matrix()) {
        let a: RationalMatrix = to_matrix(&rows);
        let k = kernel_basis(&a);
        prop_assert_eq!(rank(&a) + k.cols(), a.cols());
        prop_assert!(a.mul(&k).is_zero());
        prop_assert_eq!(rank(&k), k.cols());
    }

    #[test]
    fn rank_of_transpose(rows in int_matrix()) {
        let a: RationalMatrix = to_matrix(&rows);
        prop_assert_eq!(rank(&a), rank(&a.transpose()));
    }

    // entries are small enough that every nonzero minor survives reduction
    // modulo the Mersenne prime
    #[test]
    fn rational_and_modular_ranks_agree(rows in int_matrix()) {
        let q: RationalMatrix = to_matrix(&rows);
        let p: Matrix<Mersenne61> = to_matrix(&rows);
        prop_assert_eq!(rank(&q), rank(&p));
    }

    #[test]
    fn sparse_and_dense_agree(rows in int_matrix()) {
        let a: RationalMatrix = to_matrix(&rows);
        let mut ech = Echelon::new(a.cols());
        for i in 0..a.rows() {
            ech.insert(a.row(i).iter().cloned().enumerate());
        }
        prop_assert_eq!(ech.rank(), rank(&a));
        let ker = sparse_kernel(a.cols(), (0..a.rows()).map(|i| a.row(i).iter().cloned().enumerate().collect()));
        let ker = SparseColumns::new(a.cols(), ker);
        prop_assert!(ker.span_eq(&SparseColumns::from_dense(&kernel_basis(&a))));
    }

    #[test]
    fn rref_is_idempotent(rows in int_matrix()) {
        let a: RationalMatrix = to_matrix(&rows);
        let (r, pivots) = a.rref();
        let (rr, pivots2) = r.rref();
        prop_assert_eq!(&r, &rr);
        prop_assert_eq!(pivots, pivots2);
    }
}

#[test]
fn kernel_of_identity_is_trivial() {
    let i = RationalMatrix::identity(4);
    assert_eq!(kernel_basis(&i).cols(), 0);
    assert!(i.is_identity());
    assert_eq!(rank(&Matrix::<Rational>::zeros(3, 2)), 0);
}
