//! Invariants of `GL_g` and `SL_g` as kernels of the infinitesimal action.
//!
//! A vector is `gl_g`-invariant iff it has weight zero and is killed by
//! every `E_rs` with `r != s`; for `sl_g` the weight must be a multiple of
//! `(1, ..., 1)` instead. Kernels are therefore computed on a single weight
//! space, which is what keeps `T^{4,4}(Q^4)` tractable.
//!
//! Tensor basis convention: covariant slots first, multi-indices enumerated
//! row-major (the last slot varies fastest), indices `0..g`.

use std::collections::HashMap;
use std::fmt;
use std::hash::Hash;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::field::Field;
use crate::gca::{Derivation, Element, GeneratorSet, Monomial};
use crate::linalg::{Echelon, SparseColumns};
use crate::Rational;

/// Largest weight space the invariant solver will process.
pub const WEIGHT_SPACE_LIMIT: usize = 20_000;
/// Largest ambient tensor space that will be enumerated.
pub const AMBIENT_LIMIT: u128 = 1 << 22;
/// Largest number of nonzero entries in a σ matrix.
pub const SIGMA_ENTRY_LIMIT: u128 = 2_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Group {
    GL,
    SL,
}

impl FromStr for Group {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_uppercase().as_str() {
            "GL" => Ok(Group::GL),
            "SL" => Ok(Group::SL),
            _ => Err(Error::InvalidParameter(format!("unknown group {s}"))),
        }
    }
}

impl fmt::Display for Group {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Group::GL => "GL",
            Group::SL => "SL",
        })
    }
}

impl Group {
    /// Whether a weight can carry invariants.
    pub fn admits_weight(&self, w: &[i64]) -> bool {
        match self {
            Group::GL => w.iter().all(|&x| x == 0),
            Group::SL => w.windows(2).all(|p| p[0] == p[1]),
        }
    }
}

/// Invariants of a `gl_g`-module given by a basis, weights and the action
/// of the off-diagonal `E_rs` on basis elements. Returns the invariant
/// subspace as sparse columns in the coordinates of `basis`.
///
/// `act(r, s, b)` may return basis elements outside `basis` (they live in
/// other weight spaces); only their identity matters.
pub fn lie_invariants<B, F, W, A>(
    g: usize,
    group: Group,
    basis: &[B],
    weight: W,
    act: A,
) -> Result<SparseColumns<F>>
where
    B: Clone + Eq + Hash,
    F: Field,
    W: Fn(&B) -> Vec<i64>,
    A: Fn(usize, usize, &B) -> Vec<(B, F)>,
{
    let selected: Vec<usize> = (0..basis.len())
        .filter(|&i| group.admits_weight(&weight(&basis[i])))
        .collect();
    if selected.len() > WEIGHT_SPACE_LIMIT {
        return Err(Error::ResourceGuard {
            what: "weight space dimension".into(),
            actual: selected.len() as u128,
            limit: WEIGHT_SPACE_LIMIT as u128,
        });
    }
    let mut ops: Vec<(usize, usize)> = (0..g.saturating_sub(1)).map(|r| (r, r + 1)).collect();
    for r in 0..g {
        for s in 0..g {
            if r != s && s != r + 1 {
                ops.push((r, s));
            }
        }
    }
    let mut ech = Echelon::new(selected.len());
    for (r, s) in ops {
        if ech.rank() == selected.len() {
            break;
        }
        let mut rows: HashMap<B, Vec<(usize, F)>> = HashMap::new();
        let mut order: Vec<B> = Vec::new();
        for (col, &i) in selected.iter().enumerate() {
            for (t, c) in act(r, s, &basis[i]) {
                if c.is_zero() {
                    continue;
                }
                let row = rows.entry(t.clone()).or_insert_with(|| {
                    order.push(t);
                    Vec::new()
                });
                row.push((col, c));
            }
        }
        for t in order {
            ech.insert(rows.remove(&t).expect("row present"));
        }
    }
    let columns = ech
        .kernel()
        .into_iter()
        .map(|v| v.into_iter().map(|(i, c)| (selected[i], c)).collect())
        .collect();
    Ok(SparseColumns::new(basis.len(), columns))
}

/// `T^{k,l}(Q^g) = N^{⊗k} ⊗ (N^∨)^{⊗l}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TensorSpaceSpec {
    pub k: usize,
    pub l: usize,
    pub g: usize,
}

impl TensorSpaceSpec {
    pub fn new(k: usize, l: usize, g: usize) -> Result<Self> {
        if g == 0 {
            return Err(Error::InvalidParameter("g must be positive".into()));
        }
        Ok(TensorSpaceSpec { k, l, g })
    }

    pub fn slots(&self) -> usize {
        self.k + self.l
    }

    pub fn dim(&self) -> u128 {
        (self.g as u128).pow(self.slots() as u32)
    }

    pub fn decode(&self, mut index: usize) -> Vec<usize> {
        let mut digits = vec![0; self.slots()];
        for d in digits.iter_mut().rev() {
            *d = index % self.g;
            index /= self.g;
        }
        digits
    }

    pub fn encode(&self, digits: &[usize]) -> usize {
        digits.iter().fold(0, |acc, &d| acc * self.g + d)
    }

    pub fn weight(&self, index: usize) -> Vec<i64> {
        let mut w = vec![0i64; self.g];
        for (slot, d) in self.decode(index).into_iter().enumerate() {
            w[d] += if slot < self.k { 1 } else { -1 };
        }
        w
    }

    /// `E_rs` on a basis tensor: `E_rs a_i = δ_si a_r` on covariant slots
    /// and `E_rs a^j = -δ_rj a^s` on contravariant slots.
    pub fn act(&self, r: usize, s: usize, index: usize) -> Vec<(usize, i64)> {
        let digits = self.decode(index);
        let mut out: Vec<(usize, i64)> = Vec::new();
        let mut push = |i: usize, c: i64| match out.iter_mut().find(|(j, _)| *j == i) {
            Some(e) => e.1 += c,
            None => out.push((i, c)),
        };
        for slot in 0..self.slots() {
            let mut d = digits.clone();
            if slot < self.k {
                if digits[slot] == s {
                    d[slot] = r;
                    push(self.encode(&d), 1);
                }
            } else if digits[slot] == r {
                d[slot] = s;
                push(self.encode(&d), -1);
            }
        }
        out.retain(|(_, c)| *c != 0);
        out
    }

    /// Indices of basis tensors whose weight can carry invariants.
    fn admissible(&self, group: Group) -> Result<Vec<usize>> {
        let dim = self.dim();
        if dim > AMBIENT_LIMIT {
            return Err(Error::ResourceGuard {
                what: "tensor space dimension".into(),
                actual: dim,
                limit: AMBIENT_LIMIT,
            });
        }
        Ok((0..dim as usize)
            .filter(|&i| group.admits_weight(&self.weight(i)))
            .collect())
    }

    /// Basis of the invariant subspace, in the full tensor basis.
    pub fn invariant_basis(&self, group: Group) -> Result<SparseColumns<Rational>> {
        let basis = self.admissible(group)?;
        let inv = lie_invariants(
            self.g,
            group,
            &basis,
            |&i| self.weight(i),
            |r, s, &i| {
                self.act(r, s, i)
                    .into_iter()
                    .map(|(j, c)| (j, Rational::from_i64(c)))
                    .collect()
            },
        )?;
        let columns = inv
            .columns
            .into_iter()
            .map(|v| v.into_iter().map(|(i, c)| (basis[i], c)).collect())
            .collect();
        Ok(SparseColumns::new(self.dim() as usize, columns))
    }
}

pub fn gl_invariant_basis(spec: &TensorSpaceSpec) -> Result<SparseColumns<Rational>> {
    spec.invariant_basis(Group::GL)
}

pub fn sl_invariant_basis(spec: &TensorSpaceSpec) -> Result<SparseColumns<Rational>> {
    spec.invariant_basis(Group::SL)
}

/// All permutations of `0..m` in lexicographic order.
pub fn permutations(m: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur: Vec<usize> = (0..m).collect();
    loop {
        out.push(cur.clone());
        let Some(i) = (0..m.saturating_sub(1)).rev().find(|&i| cur[i] < cur[i + 1]) else {
            break;
        };
        let j = (i + 1..m).rev().find(|&j| cur[j] > cur[i]).expect("successor exists");
        cur.swap(i, j);
        cur[i + 1..].reverse();
    }
    out
}

/// The columns `σ(s) = Σ a_{i_1}⊗…⊗a_{i_m}⊗a^{i_{s⁻¹(1)}}⊗…⊗a^{i_{s⁻¹(m)}}`
/// in `T^{m,m}(Q^g)`, one per permutation `s` in lexicographic order.
pub fn sigma_matrix(m: usize, g: usize) -> Result<SparseColumns<Rational>> {
    if m > 6 {
        return Err(Error::ResourceGuard {
            what: "σ permutation degree".into(),
            actual: m as u128,
            limit: 6,
        });
    }
    let spec = TensorSpaceSpec::new(m, m, g)?;
    let perms = permutations(m);
    let entries = (g as u128).pow(m as u32) * perms.len() as u128;
    if entries > SIGMA_ENTRY_LIMIT {
        return Err(Error::ResourceGuard {
            what: "σ matrix entries".into(),
            actual: entries,
            limit: SIGMA_ENTRY_LIMIT,
        });
    }
    let words = TensorSpaceSpec { k: m, l: 0, g };
    let columns = perms
        .iter()
        .map(|s| {
            let mut inv = vec![0; m];
            for (i, &si) in s.iter().enumerate() {
                inv[si] = i;
            }
            let mut col: Vec<(usize, Rational)> = (0..words.dim() as usize)
                .map(|w| {
                    let i = words.decode(w);
                    let mut digits = i.clone();
                    digits.extend(inv.iter().map(|&t| i[t]));
                    (spec.encode(&digits), Rational::from_i64(1))
                })
                .collect();
            col.sort_by_key(|(i, _)| *i);
            col
        })
        .collect();
    Ok(SparseColumns::new(spec.dim() as usize, columns))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FundamentalReport {
    pub m: usize,
    pub g: usize,
    pub rank: usize,
    pub invariant_dim: usize,
    /// span σ equals the invariant subspace
    pub surjective: bool,
    /// rank σ = m!
    pub injective: bool,
}

impl FundamentalReport {
    /// Surjective always, injective exactly when `m <= g`.
    pub fn as_predicted(&self) -> bool {
        self.surjective && self.injective == (self.m <= self.g)
    }
}

pub fn verify_fundamental_theorems(m: usize, g: usize) -> Result<FundamentalReport> {
    let sigma = sigma_matrix(m, g)?;
    let inv = gl_invariant_basis(&TensorSpaceSpec::new(m, m, g)?)?;
    let rank = sigma.rank();
    Ok(FundamentalReport {
        m,
        g,
        rank,
        invariant_dim: inv.ncols(),
        surjective: sigma.span_eq(&inv),
        injective: rank == sigma.ncols(),
    })
}

/// A free graded-commutative algebra whose generators span `gl_g`-modules;
/// the action is extended to monomials as an even derivation.
#[derive(Clone, Debug)]
pub struct GlAlgebra<F> {
    pub gens: GeneratorSet,
    pub g: usize,
    weights: Vec<Vec<i64>>,
    actions: HashMap<(usize, usize), Derivation<F>>,
}

impl<F: Field> GlAlgebra<F> {
    /// `weights[i]` is the weight of generator `i`; `act(r, s, i)` is
    /// `E_rs` applied to generator `i` (a combination of generators).
    pub fn new(
        gens: GeneratorSet,
        g: usize,
        weights: Vec<Vec<i64>>,
        act: impl Fn(usize, usize, usize) -> Element<F>,
    ) -> Self {
        assert_eq!(weights.len(), gens.len());
        let mut actions = HashMap::new();
        for r in 0..g {
            for s in 0..g {
                if r != s {
                    let images = (0..gens.len()).map(|i| act(r, s, i)).collect();
                    actions.insert((r, s), Derivation { images, odd: false });
                }
            }
        }
        GlAlgebra {
            gens,
            g,
            weights,
            actions,
        }
    }

    pub fn weight(&self, m: &Monomial) -> Vec<i64> {
        let mut w = vec![0; self.g];
        for &(i, e) in &m.0 {
            for (acc, x) in w.iter_mut().zip(&self.weights[i as usize]) {
                *acc += e as i64 * x;
            }
        }
        w
    }

    pub fn act(&self, r: usize, s: usize, m: &Monomial) -> Element<F> {
        self.gens.apply_to_monomial(&self.actions[&(r, s)], m)
    }

    /// Monomial basis of a cell and its invariant subspace in those
    /// coordinates.
    pub fn cell_invariants(&self, degree: &[u32], group: Group) -> Result<(Vec<Monomial>, SparseColumns<F>)> {
        let basis = self.gens.monomials_of_degree(degree);
        let inv = lie_invariants(
            self.g,
            group,
            &basis,
            |m| self.weight(m),
            |r, s, m| self.act(r, s, m).0.into_iter().collect(),
        )?;
        Ok((basis, inv))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dims(k: usize, l: usize, g: usize) -> (usize, usize) {
        let spec = TensorSpaceSpec::new(k, l, g).unwrap();
        (
            gl_invariant_basis(&spec).unwrap().ncols(),
            sl_invariant_basis(&spec).unwrap().ncols(),
        )
    }

    #[test]
    fn identity_tensor_is_invariant() {
        let spec = TensorSpaceSpec::new(1, 1, 3).unwrap();
        for r in 0..3 {
            for s in 0..3 {
                let mut acc: HashMap<usize, i64> = HashMap::new();
                for i in 0..3 {
                    for (j, c) in spec.act(r, s, spec.encode(&[i, i])) {
                        *acc.entry(j).or_default() += c;
                    }
                }
                assert!(acc.values().all(|&c| c == 0));
            }
        }
    }

    #[test]
    fn spec_examples() {
        assert_eq!(dims(1, 2, 3).0, 0);
        assert_eq!(dims(2, 2, 2).0, 2);
        assert_eq!(dims(2, 2, 1).0, 1);
        assert_eq!(dims(1, 0, 2).1, 0);
        assert_eq!(dims(2, 0, 2).1, 1);
    }

    #[test]
    fn sl_line_in_t20() {
        let spec = TensorSpaceSpec::new(2, 0, 2).unwrap();
        let inv = sl_invariant_basis(&spec).unwrap();
        let expected = SparseColumns::new(
            4,
            vec![vec![(1, Rational::from_i64(1)), (2, Rational::from_i64(-1))]],
        );
        assert!(inv.span_eq(&expected));
    }

    #[test]
    fn sigma_examples() {
        let s = sigma_matrix(1, 3).unwrap();
        assert_eq!(s.ncols(), 1);
        assert_eq!(s.columns[0].iter().map(|(i, _)| *i).collect::<Vec<_>>(), vec![0, 4, 8]);
        assert_eq!(sigma_matrix(2, 2).unwrap().rank(), 2);
        assert_eq!(sigma_matrix(2, 1).unwrap().rank(), 1);
        assert!(sigma_matrix(7, 1).is_err());
    }

    #[test]
    fn fundamental_reports() {
        let r = verify_fundamental_theorems(2, 2).unwrap();
        assert_eq!((r.rank, r.surjective, r.injective), (2, true, true));
        let r = verify_fundamental_theorems(3, 2).unwrap();
        assert!(r.surjective && !r.injective);
        assert_eq!(r.rank, 5);
        let r = verify_fundamental_theorems(1, 1).unwrap();
        assert_eq!((r.rank, r.surjective, r.injective), (1, true, true));
    }

    #[test]
    fn permutations_lex() {
        assert_eq!(
            permutations(3),
            vec![
                vec![0, 1, 2],
                vec![0, 2, 1],
                vec![1, 0, 2],
                vec![1, 2, 0],
                vec![2, 0, 1],
                vec![2, 1, 0]
            ]
        );
        assert_eq!(permutations(0), vec![Vec::<usize>::new()]);
    }
}
