use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::Echelon;

use super::{coordinates, index_of, Element, GeneratorSet, Monomial};

/// A free graded-commutative algebra modulo an ideal, truncated in total
/// degree.
#[derive(Clone, Debug)]
pub struct FreeGcaPresentation<F> {
    pub gens: GeneratorSet,
    /// Homogeneous ideal generators.
    pub relations: Vec<Element<F>>,
    pub truncation: u32,
}

impl<F: Field> FreeGcaPresentation<F> {
    pub fn free(gens: GeneratorSet, truncation: u32) -> Self {
        FreeGcaPresentation {
            gens,
            relations: Vec::new(),
            truncation,
        }
    }

    /// Adds the relation `g = 0` for the named generator.
    pub fn kill_generator(&mut self, name: &str) {
        let i = self.gens.index_of(name).expect("unknown generator");
        self.relations.push(self.gens.generator(i));
    }

    /// Total degree of a nonzero homogeneous relation.
    pub fn relation_degree(&self, r: &Element<F>) -> Result<Option<u32>> {
        let mut degs = r.terms().map(|(m, _)| self.gens.monomial_total_degree(m));
        let Some(first) = degs.next() else {
            return Ok(None);
        };
        if degs.any(|d| d != first) {
            return Err(Error::Inhomogeneous(self.gens.format_element(r)));
        }
        Ok(Some(first))
    }
}

/// Dimensions of the quotient in total degrees `0..=truncation`; the ideal
/// in degree `d` is spanned by all products `r·m` with `|r| + |m| = d`.
pub fn quotient_dims<F: Field>(pres: &FreeGcaPresentation<F>) -> Result<Vec<usize>> {
    let mut rels = Vec::new();
    for r in &pres.relations {
        if let Some(d) = pres.relation_degree(r)? {
            if d <= pres.truncation {
                rels.push((d, r));
            }
        }
    }
    if rels.iter().all(|(_, r)| r.len() == 1) {
        return Ok(monomial_quotient_dims(pres, &rels));
    }
    let bases: Vec<_> = (0..=pres.truncation)
        .map(|d| pres.gens.monomial_basis(d))
        .collect();
    let mut dims = Vec::with_capacity(bases.len());
    for (d, basis) in bases.iter().enumerate() {
        let index = index_of(basis);
        let mut ech = Echelon::new(basis.len());
        'fill: for (rd, r) in &rels {
            let Some(rest) = (d as u32).checked_sub(*rd) else {
                continue;
            };
            for m in &bases[rest as usize] {
                let prod = pres.gens.mul(r, &Element::monomial(m.clone(), F::one()));
                ech.insert(coordinates(&index, &prod));
                if ech.rank() == basis.len() {
                    break 'fill;
                }
            }
        }
        dims.push(basis.len() - ech.rank());
    }
    Ok(dims)
}

/// For an ideal generated by monomials the ideal in each degree is spanned
/// by the monomials divisible by a generator, so the quotient dimension is
/// a count.
fn monomial_quotient_dims<F: Field>(pres: &FreeGcaPresentation<F>, rels: &[(u32, &Element<F>)]) -> Vec<usize> {
    let divisors: Vec<&Monomial> = rels.iter().map(|(_, r)| r.terms().next().expect("nonzero").0).collect();
    let divides = |d: &Monomial, m: &Monomial| d.0.iter().all(|&(g, e)| m.exponent(g as usize) >= e);
    (0..=pres.truncation)
        .map(|d| {
            pres.gens
                .monomial_basis(d)
                .iter()
                .filter(|m| !divisors.iter().any(|r| divides(r, m)))
                .count()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gca::fgca_dims;
    use crate::Rational;

    #[test]
    fn exterior_quotient() {
        let gens = GeneratorSet::graded([("x3", 3), ("x5", 5)]).unwrap();
        let mut p = FreeGcaPresentation::<Rational>::free(gens, 8);
        p.kill_generator("x3");
        assert_eq!(quotient_dims(&p).unwrap(), vec![1, 0, 0, 0, 0, 1, 0, 0, 0]);
    }

    #[test]
    fn empty_ideal_is_free() {
        let gens = GeneratorSet::graded([("a", 1), ("b", 2), ("c", 3)]).unwrap();
        let p = FreeGcaPresentation::<Rational>::free(gens.clone(), 9);
        assert_eq!(quotient_dims(&p).unwrap(), fgca_dims(&gens, 9));
    }

    #[test]
    fn truncated_polynomial() {
        let gens = GeneratorSet::graded([("e2", 2)]).unwrap();
        let mut p = FreeGcaPresentation::<Rational>::free(gens, 6);
        p.relations
            .push(Element::monomial(Monomial(vec![(0, 2)]), Rational::from_i64(1)));
        assert_eq!(quotient_dims(&p).unwrap(), vec![1, 0, 1, 0, 0, 0, 0]);
    }

    #[test]
    fn monomial_and_general_paths_agree() {
        let gens = GeneratorSet::graded([("a", 1), ("b", 2), ("c", 3), ("d", 2)]).unwrap();
        let one = Rational::from_i64(1);
        let ab = Element::monomial(Monomial(vec![(0, 1), (1, 1)]), one.clone());
        let d2 = Element::monomial(Monomial(vec![(3, 2)]), one.clone());
        let mut p = FreeGcaPresentation::<Rational>::free(gens.clone(), 9);
        p.relations = vec![ab.clone(), d2.clone()];
        let fast = quotient_dims(&p).unwrap();
        // a non-monomial relation forces the elimination path; b·(ab) is
        // already in the ideal so the answer must not change
        p.relations.push(gens.mul(&ab, &(gens.generator(1) + gens.generator(3))));
        assert_eq!(quotient_dims(&p).unwrap(), fast);
        assert_eq!(fast[..4], [1, 1, 2, 2]);
    }

    #[test]
    fn inhomogeneous_rejected() {
        let gens = GeneratorSet::graded([("a", 1), ("b", 2)]).unwrap();
        let mut p = FreeGcaPresentation::<Rational>::free(gens.clone(), 4);
        p.relations
            .push(gens.generator::<Rational>(0) + gens.generator::<Rational>(1));
        assert!(matches!(quotient_dims(&p), Err(Error::Inhomogeneous(_))));
    }
}
