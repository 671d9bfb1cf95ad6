use crate::field::Field;
use crate::linalg::Matrix;

use super::{derivation_rank, fgca_dims, Derivation, Element, Generator, GeneratorSet, Monomial};

/// The Koszul complex `Λ(Y) ⊗ S(X)` of a linear map `F: Y → X`, with `Y` in
/// degree 1 and `X` in degree 2. `f` has `dim X` rows and `dim Y` columns.
#[derive(Clone)]
pub struct KoszulComplexSpec<F> {
    pub f: Matrix<F>,
}

impl<F: Field> KoszulComplexSpec<F> {
    pub fn new(f: Matrix<F>) -> Self {
        KoszulComplexSpec { f }
    }

    /// Generators `y1..` (odd, degree 1) followed by `x1..` (even, degree 2).
    pub fn generators(&self) -> GeneratorSet {
        let ys = (0..self.f.cols()).map(|j| Generator {
            name: format!("y{}", j + 1),
            degree: vec![1],
            odd: true,
        });
        let xs = (0..self.f.rows()).map(|i| Generator {
            name: format!("x{}", i + 1),
            degree: vec![2],
            odd: false,
        });
        GeneratorSet::new(ys.chain(xs).collect()).expect("distinct names")
    }

    pub fn differential(&self) -> Derivation<F> {
        let ny = self.f.cols();
        let mut d = Derivation::zero(ny + self.f.rows(), true);
        for j in 0..ny {
            let mut img = Element::zero();
            for i in 0..self.f.rows() {
                img.add_term(Monomial::generator(ny + i), self.f[(i, j)].clone());
            }
            d.images[j] = img;
        }
        d
    }

    /// Dimensions of `Λ(ker F) ⊗ S(coker F)`, which the cohomology must match.
    pub fn predicted_dims(&self, maxdeg: u32) -> Vec<usize> {
        let r = self.f.rank();
        let ker = self.f.cols() - r;
        let coker = self.f.rows() - r;
        let gens = GeneratorSet::graded(
            (0..ker)
                .map(|i| (format!("k{i}"), 1))
                .chain((0..coker).map(|i| (format!("c{i}"), 2))),
        )
        .expect("distinct names");
        fgca_dims(&gens, maxdeg)
    }
}

/// Cohomology dimensions of the Koszul complex in degrees `0..=maxdeg`.
pub fn koszul_cohomology<F: Field>(spec: &KoszulComplexSpec<F>, maxdeg: u32) -> Vec<usize> {
    let gens = spec.generators();
    let d = spec.differential();
    let bases: Vec<Vec<Monomial>> = (0..=maxdeg + 1).map(|k| gens.monomial_basis(k)).collect();
    let ranks: Vec<usize> = (0..=maxdeg as usize)
        .map(|k| derivation_rank(&gens, &d, &bases[k], &bases[k + 1]))
        .collect();
    (0..=maxdeg as usize)
        .map(|k| bases[k].len() - ranks[k] - if k > 0 { ranks[k - 1] } else { 0 })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::RationalMatrix;

    #[test]
    fn identity_is_acyclic() {
        let spec = KoszulComplexSpec::new(RationalMatrix::identity(1));
        assert_eq!(koszul_cohomology(&spec, 6), vec![1, 0, 0, 0, 0, 0, 0]);
    }

    #[test]
    fn zero_map() {
        let spec = KoszulComplexSpec::new(RationalMatrix::zeros(1, 1));
        assert_eq!(koszul_cohomology(&spec, 6), vec![1, 1, 1, 1, 1, 1, 1]);
        assert_eq!(spec.predicted_dims(6), koszul_cohomology(&spec, 6));
    }

    #[test]
    fn surjection_from_plane() {
        let spec = KoszulComplexSpec::new(RationalMatrix::from_i64_rows(&[&[1, 1]]));
        assert_eq!(koszul_cohomology(&spec, 5), vec![1, 1, 0, 0, 0, 0]);
    }

    #[test]
    fn differential_squares_to_zero() {
        let spec = KoszulComplexSpec::new(RationalMatrix::from_i64_rows(&[&[1, 2, 0], &[0, 1, -1]]));
        let gens = spec.generators();
        let d = spec.differential();
        for k in 0..6 {
            for m in gens.monomial_basis(k) {
                let dd = gens.apply(&d, &gens.apply_to_monomial(&d, &m));
                assert!(dd.is_zero());
            }
        }
    }
}
