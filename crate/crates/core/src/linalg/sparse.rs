//! Sparse exact elimination.
//!
//! The Lie-algebra actions on tensor and monomial spaces have a handful of
//! nonzeros per column, so their kernels are found by sparse echelon
//! reduction followed by back substitution over the free columns only.

use std::collections::{BTreeMap, HashMap};

use crate::field::Field;
use crate::linalg::Matrix;

/// Sparse vector as `(index, value)` pairs sorted by index, no zeros stored.
pub type SparseVec<F> = Vec<(usize, F)>;

/// Incremental row echelon form over a field.
///
/// Pivot rows are normalised to a leading one and only ever contain entries
/// in columns to the right of their pivot.
#[derive(Clone, Debug)]
pub struct Echelon<F> {
    cols: usize,
    pivot_of_col: HashMap<usize, usize>,
    rows: Vec<(usize, SparseVec<F>)>,
}

impl<F: Field> Echelon<F> {
    pub fn new(cols: usize) -> Self {
        Echelon {
            cols,
            pivot_of_col: HashMap::new(),
            rows: Vec::new(),
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    /// Reduces `row` against the current pivots; returns what is left.
    pub fn reduce(&self, row: impl IntoIterator<Item = (usize, F)>) -> BTreeMap<usize, F> {
        let mut work: BTreeMap<usize, F> = BTreeMap::new();
        for (c, v) in row {
            debug_assert!(c < self.cols);
            if v.is_zero() {
                continue;
            }
            let e = work.entry(c).or_insert_with(F::zero);
            let cur = std::mem::replace(e, F::zero());
            *e = cur + v;
            if e.is_zero() {
                work.remove(&c);
            }
        }
        let mut cursor = 0;
        loop {
            let hit = work
                .range(cursor..)
                .find(|(c, _)| self.pivot_of_col.contains_key(c))
                .map(|(c, v)| (*c, v.clone()));
            let Some((c, factor)) = hit else { break };
            let (_, prow) = &self.rows[self.pivot_of_col[&c]];
            for (pc, pv) in prow {
                let e = work.entry(*pc).or_insert_with(F::zero);
                let cur = std::mem::replace(e, F::zero());
                *e = cur - factor.clone() * pv;
                if e.is_zero() {
                    work.remove(pc);
                }
            }
            cursor = c + 1;
        }
        work
    }

    /// Adds a row; returns `true` if it raised the rank.
    pub fn insert(&mut self, row: impl IntoIterator<Item = (usize, F)>) -> bool {
        let work = self.reduce(row);
        let Some((&pc, lead)) = work.iter().next() else {
            return false;
        };
        let inv = lead.inverse().expect("nonzero leading entry");
        let normalized: SparseVec<F> = work.into_iter().map(|(c, v)| (c, v * &inv)).collect();
        self.pivot_of_col.insert(pc, self.rows.len());
        self.rows.push((pc, normalized));
        true
    }

    pub fn is_pivot(&self, col: usize) -> bool {
        self.pivot_of_col.contains_key(&col)
    }

    /// Basis of the null space of the inserted rows, one sparse vector per
    /// free column (which carries a one), in increasing free-column order.
    pub fn kernel(&self) -> Vec<SparseVec<F>> {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&i| std::cmp::Reverse(self.rows[i].0));
        // fully reduced rows keyed by pivot column; entries only in free columns
        let mut reduced: HashMap<usize, BTreeMap<usize, F>> = HashMap::new();
        for i in order {
            let (pc, row) = &self.rows[i];
            let mut acc: BTreeMap<usize, F> = BTreeMap::new();
            for (c, v) in row.iter().skip(1) {
                if let Some(other) = reduced.get(c) {
                    for (fc, fv) in other {
                        let e = acc.entry(*fc).or_insert_with(F::zero);
                        let cur = std::mem::replace(e, F::zero());
                        *e = cur - v.clone() * fv;
                    }
                } else {
                    let e = acc.entry(*c).or_insert_with(F::zero);
                    let cur = std::mem::replace(e, F::zero());
                    *e = cur + v.clone();
                }
            }
            acc.retain(|_, v| !v.is_zero());
            reduced.insert(*pc, acc);
        }
        let free: Vec<usize> = (0..self.cols).filter(|c| !self.is_pivot(*c)).collect();
        let mut columns: HashMap<usize, Vec<(usize, F)>> = HashMap::new();
        for (pc, row) in &reduced {
            for (fc, v) in row {
                columns.entry(*fc).or_default().push((*pc, -v.clone()));
            }
        }
        free.into_iter()
            .map(|f| {
                let mut v = columns.remove(&f).unwrap_or_default();
                v.push((f, F::one()));
                v.sort_by_key(|(i, _)| *i);
                v
            })
            .collect()
    }
}

/// Kernel of the matrix with the given sparse rows and `cols` columns.
pub fn sparse_kernel<F: Field>(
    cols: usize,
    rows: impl IntoIterator<Item = SparseVec<F>>,
) -> Vec<SparseVec<F>> {
    let mut ech = Echelon::new(cols);
    for r in rows {
        ech.insert(r);
    }
    ech.kernel()
}

/// A list of sparse column vectors in a common ambient space.
#[derive(Clone, Debug, PartialEq)]
pub struct SparseColumns<F> {
    pub nrows: usize,
    pub columns: Vec<SparseVec<F>>,
}

impl<F: Field> SparseColumns<F> {
    pub fn new(nrows: usize, columns: Vec<SparseVec<F>>) -> Self {
        debug_assert!(columns.iter().flatten().all(|(i, _)| *i < nrows));
        SparseColumns { nrows, columns }
    }

    pub fn ncols(&self) -> usize {
        self.columns.len()
    }

    pub fn rank(&self) -> usize {
        let mut ech = Echelon::new(self.nrows);
        for c in &self.columns {
            ech.insert(c.iter().cloned());
        }
        ech.rank()
    }

    /// True iff both column spans coincide.
    pub fn span_eq(&self, other: &Self) -> bool {
        assert_eq!(self.nrows, other.nrows, "different ambient spaces");
        let mut ech = Echelon::new(self.nrows);
        for c in &self.columns {
            ech.insert(c.iter().cloned());
        }
        let ra = ech.rank();
        let rb = other.rank();
        if ra != rb {
            return false;
        }
        other
            .columns
            .iter()
            .all(|c| ech.reduce(c.iter().cloned()).is_empty())
    }

    /// True iff every column of `self` lies in the span of `other`.
    pub fn span_within(&self, other: &Self) -> bool {
        let mut ech = Echelon::new(self.nrows);
        for c in &other.columns {
            ech.insert(c.iter().cloned());
        }
        self.columns
            .iter()
            .all(|c| ech.reduce(c.iter().cloned()).is_empty())
    }

    pub fn to_dense(&self) -> Matrix<F> {
        let mut m = Matrix::zeros(self.nrows, self.columns.len());
        for (j, c) in self.columns.iter().enumerate() {
            for (i, v) in c {
                m[(*i, j)] = v.clone();
            }
        }
        m
    }

    pub fn from_dense(m: &Matrix<F>) -> Self {
        let columns = (0..m.cols())
            .map(|j| {
                (0..m.rows())
                    .filter(|&i| !m[(i, j)].is_zero())
                    .map(|i| (i, m[(i, j)].clone()))
                    .collect()
            })
            .collect();
        SparseColumns {
            nrows: m.rows(),
            columns,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{Rational, RationalMatrix};
    use num_traits::Zero;

    fn q(v: i64) -> Rational {
        Rational::from_i64(v)
    }

    #[test]
    fn kernel_of_sum_functional() {
        let k = sparse_kernel(3, vec![vec![(0, q(1)), (1, q(1)), (2, q(1))]]);
        assert_eq!(k.len(), 2);
        for v in &k {
            let s = v.iter().fold(q(0), |a, (_, x)| a + x.clone());
            assert!(s.is_zero());
        }
    }

    #[test]
    fn agrees_with_dense_kernel() {
        let dense = RationalMatrix::from_i64_rows(&[
            &[1, 2, 0, -1, 3],
            &[0, 0, 1, 1, 0],
            &[2, 4, 1, -1, 6],
        ]);
        let rows: Vec<SparseVec<Rational>> = (0..dense.rows())
            .map(|i| {
                (0..dense.cols())
                    .filter(|&j| !dense[(i, j)].is_zero())
                    .map(|j| (j, dense[(i, j)].clone()))
                    .collect()
            })
            .collect();
        let sk = SparseColumns::new(5, sparse_kernel(5, rows));
        let dk = dense.kernel_basis();
        assert!(crate::linalg::subspace_equal(&sk.to_dense(), &dk));
        assert!(dense.mul(&sk.to_dense()).is_zero());
    }

    #[test]
    fn span_checks() {
        let a = SparseColumns::new(3, vec![vec![(0, q(1))], vec![(1, q(1))]]);
        let b = SparseColumns::new(3, vec![vec![(0, q(1)), (1, q(1))], vec![(0, q(1)), (1, q(-1))]]);
        let c = SparseColumns::new(3, vec![vec![(2, q(1))]]);
        assert!(a.span_eq(&b));
        assert!(!a.span_eq(&c));
        assert!(c.span_within(&SparseColumns::new(3, vec![vec![(2, q(5))]])));
    }
}
