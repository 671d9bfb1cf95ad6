//! Free graded-commutative algebras over a field.
//!
//! Odd generators anticommute and square to zero, even generators are
//! polynomial. Monomials are stored with their factors in increasing
//! generator order, which is the order of the [`GeneratorSet`].

mod dga;
mod koszul;
mod quotient;

pub use dga::{dga_cohomology, BigradedDga, CohomologyTable};
pub use koszul::{koszul_cohomology, KoszulComplexSpec};
pub use quotient::{quotient_dims, FreeGcaPresentation};

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::field::Field;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Generator {
    pub name: String,
    /// Multidegree; singly graded sets use one component, bigraded two.
    pub degree: Vec<u32>,
    pub odd: bool,
}

impl Generator {
    pub fn total_degree(&self) -> u32 {
        self.degree.iter().sum()
    }
}

/// Named generators with multidegrees and parities.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GeneratorSet {
    gens: Vec<Generator>,
}

impl GeneratorSet {
    /// Generators with explicit parities. Names must be unique, degrees
    /// nonzero and all of the same arity.
    pub fn new(gens: Vec<Generator>) -> Result<Self> {
        let mut seen = HashSet::new();
        let arity = gens.first().map(|g| g.degree.len());
        for g in &gens {
            if !seen.insert(g.name.as_str()) {
                return Err(Error::InvalidParameter(format!("duplicate generator {}", g.name)));
            }
            if g.degree.iter().all(|&d| d == 0) {
                return Err(Error::InvalidParameter(format!("generator {} has degree zero", g.name)));
            }
            if Some(g.degree.len()) != arity {
                return Err(Error::InvalidParameter(format!(
                    "generator {} has a different grading arity",
                    g.name
                )));
            }
        }
        Ok(GeneratorSet { gens })
    }

    /// Singly graded generators, parity given by degree.
    pub fn graded<S: Into<String>>(gens: impl IntoIterator<Item = (S, u32)>) -> Result<Self> {
        Self::new(
            gens.into_iter()
                .map(|(n, d)| Generator {
                    name: n.into(),
                    degree: vec![d],
                    odd: d % 2 == 1,
                })
                .collect(),
        )
    }

    /// Bigraded generators, parity given by total degree.
    pub fn bigraded<S: Into<String>>(gens: impl IntoIterator<Item = (S, (u32, u32))>) -> Result<Self> {
        Self::new(
            gens.into_iter()
                .map(|(n, (p, q))| Generator {
                    name: n.into(),
                    degree: vec![p, q],
                    odd: (p + q) % 2 == 1,
                })
                .collect(),
        )
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn get(&self, i: usize) -> &Generator {
        &self.gens[i]
    }

    pub fn iter(&self) -> impl Iterator<Item = &Generator> {
        self.gens.iter()
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.gens.iter().position(|g| g.name == name)
    }

    /// Grading arity (zero for an empty set).
    pub fn arity(&self) -> usize {
        self.gens.first().map_or(0, |g| g.degree.len())
    }

    /// Concatenation; names must stay unique.
    pub fn join(&self, other: &GeneratorSet) -> Result<Self> {
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Self::new(gens)
    }

    pub fn monomial_degree(&self, m: &Monomial) -> Vec<u32> {
        let mut d = vec![0; self.arity()];
        for &(g, e) in &m.0 {
            for (acc, x) in d.iter_mut().zip(&self.gens[g as usize].degree) {
                *acc += e * x;
            }
        }
        d
    }

    pub fn monomial_total_degree(&self, m: &Monomial) -> u32 {
        self.monomial_degree(m).iter().sum()
    }

    pub fn monomial_is_odd(&self, m: &Monomial) -> bool {
        m.0.iter()
            .filter(|(g, _)| self.gens[*g as usize].odd)
            .map(|(_, e)| *e)
            .sum::<u32>()
            % 2
            == 1
    }

    /// Product of monomials with its Koszul sign; `None` if it vanishes.
    pub fn mul_monomials(&self, a: &Monomial, b: &Monomial) -> Option<(bool, Monomial)> {
        let mut out = Vec::with_capacity(a.0.len() + b.0.len());
        let mut negative = false;
        // odd factors of `a` not yet passed by the merge
        let mut odd_left_in_a: u32 = a
            .0
            .iter()
            .filter(|(g, _)| self.gens[*g as usize].odd)
            .count() as u32;
        let (mut i, mut j) = (0, 0);
        while i < a.0.len() || j < b.0.len() {
            let take_a = j == b.0.len() || (i < a.0.len() && a.0[i].0 < b.0[j].0);
            let take_b = i == a.0.len() || (j < b.0.len() && b.0[j].0 < a.0[i].0);
            if take_a {
                if self.gens[a.0[i].0 as usize].odd {
                    odd_left_in_a -= 1;
                }
                out.push(a.0[i]);
                i += 1;
            } else if take_b {
                let (g, e) = b.0[j];
                if self.gens[g as usize].odd && odd_left_in_a % 2 == 1 {
                    negative = !negative;
                }
                out.push((g, e));
                j += 1;
            } else {
                let (g, ea) = a.0[i];
                let eb = b.0[j].1;
                if self.gens[g as usize].odd {
                    return None;
                }
                out.push((g, ea + eb));
                i += 1;
                j += 1;
            }
        }
        Some((negative, Monomial(out)))
    }

    pub fn mul<F: Field>(&self, a: &Element<F>, b: &Element<F>) -> Element<F> {
        let mut out = Element::zero();
        for (ma, ca) in &a.0 {
            for (mb, cb) in &b.0 {
                if let Some((neg, m)) = self.mul_monomials(ma, mb) {
                    let c = ca.clone() * cb;
                    out.add_term(m, if neg { -c } else { c });
                }
            }
        }
        out
    }

    fn mul_monomial_left<F: Field>(&self, m: &Monomial, e: &Element<F>) -> Element<F> {
        let mut out = Element::zero();
        for (mb, c) in &e.0 {
            if let Some((neg, p)) = self.mul_monomials(m, mb) {
                out.add_term(p, if neg { -c.clone() } else { c.clone() });
            }
        }
        out
    }

    fn mul_monomial_right<F: Field>(&self, e: &Element<F>, m: &Monomial) -> Element<F> {
        let mut out = Element::zero();
        for (ma, c) in &e.0 {
            if let Some((neg, p)) = self.mul_monomials(ma, m) {
                out.add_term(p, if neg { -c.clone() } else { c.clone() });
            }
        }
        out
    }

    /// Applies the derivation determined by its values on generators, with
    /// the sign rule `d(xy) = dx·y + (-1)^{|d||x|} x·dy`.
    pub fn apply_to_monomial<F: Field>(&self, d: &Derivation<F>, m: &Monomial) -> Element<F> {
        let mut out = Element::zero();
        let mut prefix_odd = false;
        for (k, &(g, e)) in m.0.iter().enumerate() {
            let image = &d.images[g as usize];
            if !image.is_zero() {
                let mut left: Vec<(u32, u32)> = m.0[..k].to_vec();
                if e > 1 {
                    left.push((g, e - 1));
                }
                let right = Monomial(m.0[k + 1..].to_vec());
                let term = self.mul_monomial_right(&self.mul_monomial_left(&Monomial(left), image), &right);
                let mut coef = F::from_i64(e as i64);
                if d.odd && prefix_odd {
                    coef = -coef;
                }
                out.add_scaled(&term, &coef);
            }
            if self.gens[g as usize].odd && e % 2 == 1 {
                prefix_odd = !prefix_odd;
            }
        }
        out
    }

    pub fn apply<F: Field>(&self, d: &Derivation<F>, x: &Element<F>) -> Element<F> {
        let mut out = Element::zero();
        for (m, c) in &x.0 {
            out.add_scaled(&self.apply_to_monomial(d, m), c);
        }
        out
    }

    /// All monomials of the given multidegree, sorted.
    pub fn monomials_of_degree(&self, degree: &[u32]) -> Vec<Monomial> {
        assert!(self.is_empty() || degree.len() == self.arity(), "grading arity mismatch");
        let mut out = Vec::new();
        let mut cur = Vec::new();
        let mut rest = degree.to_vec();
        self.enumerate(0, &mut rest, &mut cur, &mut out);
        out.sort();
        out
    }

    fn enumerate(&self, i: usize, rest: &mut Vec<u32>, cur: &mut Vec<(u32, u32)>, out: &mut Vec<Monomial>) {
        if rest.iter().all(|&r| r == 0) {
            out.push(Monomial(cur.clone()));
            return;
        }
        if i == self.gens.len() {
            return;
        }
        let g = &self.gens[i];
        let max_e = g
            .degree
            .iter()
            .zip(rest.iter())
            .filter(|(d, _)| **d > 0)
            .map(|(d, r)| r / d)
            .min()
            .unwrap_or(0);
        let max_e = if g.odd { max_e.min(1) } else { max_e };
        for e in (1..=max_e).rev() {
            for (r, d) in rest.iter_mut().zip(&g.degree) {
                *r -= e * d;
            }
            cur.push((i as u32, e));
            self.enumerate(i + 1, rest, cur, out);
            cur.pop();
            for (r, d) in rest.iter_mut().zip(&g.degree) {
                *r += e * d;
            }
        }
        self.enumerate(i + 1, rest, cur, out);
    }

    /// Monomials of total degree `degree` (all multidegrees summed).
    pub fn monomial_basis(&self, degree: u32) -> Vec<Monomial> {
        let single = GeneratorSet {
            gens: self
                .gens
                .iter()
                .map(|g| Generator {
                    name: g.name.clone(),
                    degree: vec![g.total_degree()],
                    odd: g.odd,
                })
                .collect(),
        };
        single.monomials_of_degree(&[degree])
    }

    pub fn generator<F: Field>(&self, i: usize) -> Element<F> {
        Element::monomial(Monomial(vec![(i as u32, 1)]), F::one())
    }

    pub fn format_monomial(&self, m: &Monomial) -> String {
        if m.0.is_empty() {
            return "1".to_string();
        }
        m.0.iter()
            .map(|&(g, e)| {
                let name = &self.gens[g as usize].name;
                if e == 1 {
                    name.clone()
                } else {
                    format!("{name}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join("*")
    }

    pub fn format_element<F: Field>(&self, x: &Element<F>) -> String {
        if x.is_zero() {
            return "0".to_string();
        }
        x.0.iter()
            .map(|(m, c)| format!("({c})*{}", self.format_monomial(m)))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Dimensions of the free graded-commutative algebra on `gens` in total
/// degrees `0..=maxdeg`, from the product of `(1+t^d)` over odd and
/// `1/(1-t^d)` over even generators.
pub fn fgca_dims(gens: &GeneratorSet, maxdeg: u32) -> Vec<usize> {
    let n = maxdeg as usize + 1;
    let mut series = vec![0usize; n];
    series[0] = 1;
    for g in gens.iter() {
        let d = g.total_degree() as usize;
        if g.odd {
            for k in (d..n).rev() {
                series[k] += series[k - d];
            }
        } else {
            for k in d..n {
                series[k] += series[k - d];
            }
        }
    }
    series
}

/// A monomial: `(generator index, exponent)` pairs sorted by index.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Monomial(pub Vec<(u32, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn generator(i: usize) -> Self {
        Monomial(vec![(i as u32, 1)])
    }

    pub fn exponent(&self, g: usize) -> u32 {
        self.0
            .iter()
            .find(|(i, _)| *i as usize == g)
            .map_or(0, |(_, e)| *e)
    }
}

/// A linear combination of monomials.
#[derive(Clone, PartialEq, Debug)]
pub struct Element<F>(pub BTreeMap<Monomial, F>);

impl<F: Field> Element<F> {
    pub fn zero() -> Self {
        Element(BTreeMap::new())
    }

    pub fn one() -> Self {
        Self::monomial(Monomial::one(), F::one())
    }

    pub fn monomial(m: Monomial, c: F) -> Self {
        let mut e = Self::zero();
        e.add_term(m, c);
        e
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    pub fn add_term(&mut self, m: Monomial, c: F) {
        if c.is_zero() {
            return;
        }
        match self.0.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let cur = std::mem::replace(o.get_mut(), F::zero());
                let s = cur + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &F) {
        if c.is_zero() {
            return;
        }
        for (m, v) in &other.0 {
            self.add_term(m.clone(), v.clone() * c);
        }
    }

    pub fn scaled(&self, c: &F) -> Self {
        let mut e = Self::zero();
        e.add_scaled(self, c);
        e
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &F)> {
        self.0.iter()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl<F: Field> std::ops::Add for Element<F> {
    type Output = Self;
    fn add(mut self, o: Self) -> Self {
        self.add_scaled(&o, &F::one());
        self
    }
}

impl<F: Field> std::ops::Sub for Element<F> {
    type Output = Self;
    fn sub(mut self, o: Self) -> Self {
        self.add_scaled(&o, &-F::one());
        self
    }
}

impl<F: Field> fmt::Display for Element<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.0.iter().map(|(m, c)| format!("{c}*{:?}", m.0)).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// A derivation, given by its values on the generators.
#[derive(Clone, Debug)]
pub struct Derivation<F> {
    pub images: Vec<Element<F>>,
    /// Odd derivations pick up a sign when passing odd elements.
    pub odd: bool,
}

impl<F: Field> Derivation<F> {
    pub fn zero(n: usize, odd: bool) -> Self {
        Derivation {
            images: vec![Element::zero(); n],
            odd,
        }
    }
}

/// Coordinates of `x` in the monomial basis `basis`, as a sparse vector.
/// Panics if `x` has a monomial outside `basis`.
pub fn coordinates<F: Field>(
    index: &std::collections::HashMap<Monomial, usize>,
    x: &Element<F>,
) -> Vec<(usize, F)> {
    let mut v: Vec<(usize, F)> = x
        .0
        .iter()
        .map(|(m, c)| (*index.get(m).expect("monomial outside the target basis"), c.clone()))
        .collect();
    v.sort_by_key(|(i, _)| *i);
    v
}

pub(crate) fn index_of(basis: &[Monomial]) -> std::collections::HashMap<Monomial, usize> {
    basis.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect()
}

/// Rank of the derivation `d` restricted to the span of `source`, whose
/// images must lie in the span of `target`.
pub(crate) fn derivation_rank<F: Field>(
    gens: &GeneratorSet,
    d: &Derivation<F>,
    source: &[Monomial],
    target: &[Monomial],
) -> usize {
    let index = index_of(target);
    let mut ech = crate::linalg::Echelon::new(target.len());
    for m in source {
        let image = gens.apply_to_monomial(d, m);
        ech.insert(coordinates(&index, &image));
    }
    ech.rank()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    #[test]
    fn monomial_basis_examples() {
        let x3 = GeneratorSet::graded([("x3", 3)]).unwrap();
        assert!(x3.monomial_basis(6).is_empty());
        let e2 = GeneratorSet::graded([("e2", 2)]).unwrap();
        let b = e2.monomial_basis(6);
        assert_eq!(b.len(), 1);
        assert_eq!(e2.format_monomial(&b[0]), "e2^3");
        let xy = GeneratorSet::graded([("x1", 1), ("y1", 1)]).unwrap();
        let b = xy.monomial_basis(2);
        assert_eq!(b.len(), 1);
        assert_eq!(xy.format_monomial(&b[0]), "x1*y1");
    }

    #[test]
    fn fgca_dims_examples() {
        let x3 = GeneratorSet::graded([("x3", 3)]).unwrap();
        assert_eq!(fgca_dims(&x3, 6), vec![1, 0, 0, 1, 0, 0, 0]);
        let e2 = GeneratorSet::graded([("e2", 2)]).unwrap();
        assert_eq!(fgca_dims(&e2, 6), vec![1, 0, 1, 0, 1, 0, 1]);
        let xy = GeneratorSet::graded([("x1", 1), ("y1", 1)]).unwrap();
        assert_eq!(fgca_dims(&xy, 4), vec![1, 2, 1, 0, 0]);
    }

    #[test]
    fn dims_match_enumeration() {
        let gens = GeneratorSet::graded([("a", 1), ("b", 2), ("c", 3), ("d", 2), ("e", 5)]).unwrap();
        let dims = fgca_dims(&gens, 10);
        for d in 0..=10 {
            assert_eq!(gens.monomial_basis(d).len(), dims[d as usize], "degree {d}");
        }
    }

    #[test]
    fn koszul_signs() {
        let gens = GeneratorSet::graded([("x", 1), ("y", 1)]).unwrap();
        let x = Monomial::generator(0);
        let y = Monomial::generator(1);
        let (neg, xy) = gens.mul_monomials(&y, &x).unwrap();
        assert!(neg);
        assert_eq!(xy, Monomial(vec![(0, 1), (1, 1)]));
        assert!(gens.mul_monomials(&x, &x).is_none());
        assert!(!gens.mul_monomials(&x, &y).unwrap().0);
    }

    #[test]
    fn duplicate_names_rejected() {
        assert!(GeneratorSet::graded([("a", 1), ("a", 2)]).is_err());
        assert!(GeneratorSet::graded([("a", 0)]).is_err());
    }

    #[test]
    fn derivation_leibniz_on_polynomial() {
        // d(e^3) = 3 e^2 de with d(e) = f
        let gens = GeneratorSet::graded([("e", 2), ("f", 3)]).unwrap();
        let mut d = Derivation::<Rational>::zero(2, true);
        d.images[0] = gens.generator(1);
        let m = Monomial(vec![(0, 3)]);
        let out = gens.apply_to_monomial(&d, &m);
        let expected = Element::monomial(Monomial(vec![(0, 2), (1, 1)]), Rational::from_i64(3));
        assert_eq!(out, expected);
    }
}
