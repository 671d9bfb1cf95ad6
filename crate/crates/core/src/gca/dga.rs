use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::field::Field;

use super::{derivation_rank, Derivation, Element, GeneratorSet, Monomial};

/// A bigraded free graded-commutative algebra with a derivation `δ` of
/// bidegree `(2, -1)`, considered up to a total-degree truncation.
#[derive(Clone, Debug)]
pub struct BigradedDga<F> {
    gens: GeneratorSet,
    delta: Derivation<F>,
    truncation: u32,
}

/// `dim H^{p,q}` for every bidegree of total degree at most the truncation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CohomologyTable {
    pub truncation: u32,
    pub dims: BTreeMap<(u32, u32), usize>,
}

impl CohomologyTable {
    pub fn get(&self, p: u32, q: u32) -> usize {
        self.dims.get(&(p, q)).copied().unwrap_or(0)
    }

    /// `dim H^{0,q}` for `q = 0..=truncation`.
    pub fn zero_column(&self) -> Vec<usize> {
        (0..=self.truncation).map(|q| self.get(0, q)).collect()
    }

    /// Total-degree dimensions.
    pub fn total_dims(&self) -> Vec<usize> {
        let mut v = vec![0; self.truncation as usize + 1];
        for (&(p, q), &d) in &self.dims {
            v[(p + q) as usize] += d;
        }
        v
    }

    /// First nonzero bidegree with `p != 0`, if any.
    pub fn off_column_witness(&self) -> Option<(u32, u32)> {
        self.dims
            .iter()
            .find(|(&(p, _), &d)| p != 0 && d != 0)
            .map(|(&k, _)| k)
    }
}

impl<F: Field> BigradedDga<F> {
    /// `delta[i]` is the value of `δ` on generator `i`; each must be
    /// homogeneous of the generator's bidegree shifted by `(2, -1)`.
    pub fn new(gens: GeneratorSet, delta: Vec<Element<F>>, truncation: u32) -> Result<Self> {
        if !gens.is_empty() && gens.arity() != 2 {
            return Err(Error::InvalidParameter("generators must be bigraded".into()));
        }
        if delta.len() != gens.len() {
            return Err(Error::InvalidParameter(format!(
                "{} differential values for {} generators",
                delta.len(),
                gens.len()
            )));
        }
        for (i, img) in delta.iter().enumerate() {
            let g = gens.get(i);
            for (m, _) in img.terms() {
                let d = gens.monomial_degree(m);
                if g.degree[1] == 0 || d != vec![g.degree[0] + 2, g.degree[1] - 1] {
                    return Err(Error::Inhomogeneous(format!(
                        "δ({}) = {}",
                        g.name,
                        gens.format_element(img)
                    )));
                }
            }
        }
        Ok(BigradedDga {
            gens,
            delta: Derivation {
                images: delta,
                odd: true,
            },
            truncation,
        })
    }

    pub fn generators(&self) -> &GeneratorSet {
        &self.gens
    }

    pub fn truncation(&self) -> u32 {
        self.truncation
    }

    pub fn delta(&self, x: &Element<F>) -> Element<F> {
        self.gens.apply(&self.delta, x)
    }

    pub fn cell(&self, p: u32, q: u32) -> Vec<Monomial> {
        self.gens.monomials_of_degree(&[p, q])
    }

    /// Checks `δ² = 0` on every monomial up to the truncation.
    pub fn check_square_zero(&self) -> Result<()> {
        for t in 0..=self.truncation {
            for p in 0..=t {
                for m in self.cell(p, t - p) {
                    let dd = self.delta(&self.gens.apply_to_monomial(&self.delta, &m));
                    if !dd.is_zero() {
                        return Err(Error::NotSquareZero {
                            witness: self.gens.format_monomial(&m),
                        });
                    }
                }
            }
        }
        Ok(())
    }

    fn rank_out(&self, p: u32, q: u32) -> usize {
        if q == 0 {
            return 0;
        }
        derivation_rank(&self.gens, &self.delta, &self.cell(p, q), &self.cell(p + 2, q - 1))
    }

    /// `dim H^{p,q} = dim ker(δ on (p,q)) - dim im(δ from (p-2,q+1))`.
    pub fn cohomology(&self) -> Result<CohomologyTable> {
        self.check_square_zero()?;
        let mut dims = BTreeMap::new();
        for t in 0..=self.truncation {
            for p in 0..=t {
                let q = t - p;
                let dim = self.cell(p, q).len();
                if dim == 0 {
                    continue;
                }
                let rank_in = if p >= 2 { self.rank_out(p - 2, q + 1) } else { 0 };
                let h = dim - self.rank_out(p, q) - rank_in;
                if h != 0 {
                    dims.insert((p, q), h);
                }
            }
        }
        Ok(CohomologyTable {
            truncation: self.truncation,
            dims,
        })
    }
}

/// Cohomology table of a bigraded DGA, after verifying `δ² = 0`.
pub fn dga_cohomology<F: Field>(dga: &BigradedDga<F>) -> Result<CohomologyTable> {
    dga.cohomology()
}
