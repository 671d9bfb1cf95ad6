use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::field::Field;
use crate::error::{Error, Result};
use crate::gca::{Element, Generator, GeneratorSet, Monomial};
use crate::invariants::{GlAlgebra, Group};
use crate::schur::{enumerate_partitions, lr_coefficient, schur_dim, Partition, PartitionFilter};
use crate::Rational;

/// `A = S(S²N) ⊗ S(N⊗W) ⊗ Λ(N^∨⊗U)` (n even) or
/// `C = S(Λ²N) ⊗ Λ(N⊗W) ⊗ S(N^∨⊗U)` (n odd).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AcVariant {
    A,
    C,
}

impl FromStr for AcVariant {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "A" | "a" => Ok(AcVariant::A),
            "C" | "c" => Ok(AcVariant::C),
            _ => Err(Error::InvalidParameter(format!("unknown variant {s}"))),
        }
    }
}

impl fmt::Display for AcVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            AcVariant::A => "A",
            AcVariant::C => "C",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct AcAlgebraSpec {
    pub variant: AcVariant,
    pub g: usize,
    pub dim_w: usize,
    pub dim_u: usize,
}

/// The generators `x_ij` spanning `S²N` (`i ≤ j`) or `Λ²N` (`i < j`).
pub(crate) fn quadratic_pairs(g: usize, symmetric: bool) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for i in 0..g {
        for j in i..g {
            if symmetric || i < j {
                out.push((i, j));
            }
        }
    }
    out
}

/// `x_ij` in terms of the canonical generators: `x_ji = ±x_ij`, `x_ii = 0`
/// in the alternating case. Returns `(position, sign)`.
pub(crate) fn normalize_pair(pairs: &[(usize, usize)], i: usize, j: usize, symmetric: bool) -> Option<(usize, i64)> {
    if i == j && !symmetric {
        return None;
    }
    let (key, sign) = if i <= j { ((i, j), 1) } else { ((j, i), if symmetric { 1 } else { -1 }) };
    pairs.iter().position(|&p| p == key).map(|pos| (pos, sign))
}

/// `E_rs x_ij = δ_si x_rj + δ_sj x_ir`.
pub(crate) fn act_on_pair(
    pairs: &[(usize, usize)],
    offset: usize,
    symmetric: bool,
    r: usize,
    s: usize,
    (i, j): (usize, usize),
) -> Element<Rational> {
    let mut out = Element::zero();
    let mut add = |a: usize, b: usize| {
        if let Some((pos, sign)) = normalize_pair(pairs, a, b, symmetric) {
            out.add_term(Monomial::generator(offset + pos), Rational::from_i64(sign));
        }
    };
    if s == i {
        add(r, j);
    }
    if s == j {
        add(i, r);
    }
    out
}

impl AcAlgebraSpec {
    pub fn new(variant: AcVariant, g: usize, dim_w: usize, dim_u: usize) -> Result<Self> {
        if g == 0 {
            return Err(Error::InvalidParameter("g must be positive".into()));
        }
        Ok(AcAlgebraSpec {
            variant,
            g,
            dim_w,
            dim_u,
        })
    }

    /// The trigraded algebra with its `gl_g`-action. Generators `x{i}{j}`,
    /// `y{i}_{α}` (`a_i ⊗ w_α`) and `z{i}_{β}` (`a^i ⊗ u_β`), 1-based.
    pub fn algebra(&self) -> GlAlgebra<Rational> {
        let g = self.g;
        let a = self.variant == AcVariant::A;
        let pairs = quadratic_pairs(g, a);
        let mut gens = Vec::new();
        let mut weights = Vec::new();
        for &(i, j) in &pairs {
            gens.push(Generator {
                name: format!("x{}{}", i + 1, j + 1),
                degree: vec![1, 0, 0],
                odd: false,
            });
            let mut w = vec![0; g];
            w[i] += 1;
            w[j] += 1;
            weights.push(w);
        }
        let y0 = gens.len();
        for i in 0..g {
            for al in 0..self.dim_w {
                gens.push(Generator {
                    name: format!("y{}_{}", i + 1, al + 1),
                    degree: vec![0, 1, 0],
                    odd: !a,
                });
                let mut w = vec![0; g];
                w[i] = 1;
                weights.push(w);
            }
        }
        let z0 = gens.len();
        for i in 0..g {
            for be in 0..self.dim_u {
                gens.push(Generator {
                    name: format!("z{}_{}", i + 1, be + 1),
                    degree: vec![0, 0, 1],
                    odd: a,
                });
                let mut w = vec![0; g];
                w[i] = -1;
                weights.push(w);
            }
        }
        let set = GeneratorSet::new(gens).expect("distinct names");
        let (dw, du) = (self.dim_w, self.dim_u);
        GlAlgebra::new(set, g, weights, |r, s, k| {
            if k < y0 {
                act_on_pair(&pairs, 0, a, r, s, pairs[k])
            } else if k < z0 {
                let (i, al) = ((k - y0) / dw, (k - y0) % dw);
                if i == s {
                    Element::monomial(Monomial::generator(y0 + r * dw + al), Rational::from_i64(1))
                } else {
                    Element::zero()
                }
            } else {
                let (i, be) = ((k - z0) / du, (k - z0) % du);
                if i == r {
                    Element::monomial(Monomial::generator(z0 + s * du + be), Rational::from_i64(-1))
                } else {
                    Element::zero()
                }
            }
        })
    }
}

/// Dimension of the invariants of the `(p, q, r)` cell, by Lie-algebra
/// kernel on its monomial basis.
pub fn ac_invariant_dims_bruteforce(spec: &AcAlgebraSpec, p: u32, q: u32, r: u32, group: Group) -> Result<usize> {
    let alg = spec.algebra();
    Ok(alg.cell_invariants(&[p, q, r], group)?.1.ncols())
}

fn to_usize(x: BigUint) -> usize {
    x.to_usize().expect("dimension fits in usize")
}

/// `Σ c^ν_{λ,μ} · dim S_μ(W) · dim S_ν̃(U)` (variant `A`, `λ` with even rows)
/// or `Σ c^ν_{λ,μ} · dim S_μ̃(W) · dim S_ν(U)` (variant `C`, even columns),
/// over `|λ| = 2p`, `|μ| = q`, `|ν| = 2p+q` and `height(ν) ≤ g`.
pub fn ac_invariant_dims_formula(spec: &AcAlgebraSpec, p: u32, q: u32) -> Result<usize> {
    let total = 2 * p + q;
    if total > 8 {
        return Err(Error::ResourceGuard {
            what: "2p+q for the LR formula".into(),
            actual: total as u128,
            limit: 8,
        });
    }
    let filter = match spec.variant {
        AcVariant::A => PartitionFilter::EvenRows,
        AcVariant::C => PartitionFilter::EvenCols,
    };
    let lambdas = enumerate_partitions(2 * p, filter);
    let mus = enumerate_partitions(q, PartitionFilter::All);
    let nus: Vec<Partition> = enumerate_partitions(total, PartitionFilter::All)
        .into_iter()
        .filter(|nu| nu.height() <= spec.g)
        .collect();
    let (dw, du) = (spec.dim_w as u32, spec.dim_u as u32);
    let mut sum = 0usize;
    for la in &lambdas {
        for mu in &mus {
            for nu in &nus {
                let c = lr_coefficient(la, mu, nu) as usize;
                if c == 0 {
                    continue;
                }
                let (dmw, dnu) = match spec.variant {
                    AcVariant::A => (schur_dim(mu, dw), schur_dim(&nu.conjugate(), du)),
                    AcVariant::C => (schur_dim(&mu.conjugate(), dw), schur_dim(nu, du)),
                };
                sum += c * to_usize(dmw) * to_usize(dnu);
            }
        }
    }
    Ok(sum)
}

fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// `dim S^p(Λ²U) ⊗ Λ^q(W⊗U)`.
pub fn gh_target_dims(dim_w: usize, dim_u: usize, p: usize, q: usize) -> usize {
    let wedge = binomial(dim_u, 2);
    let sym = if wedge == 0 { usize::from(p == 0) } else { binomial(wedge + p - 1, p) };
    sym * binomial(dim_w * dim_u, q)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn target_examples() {
        assert_eq!(gh_target_dims(2, 2, 1, 0), 1);
        assert_eq!(gh_target_dims(1, 1, 0, 1), 1);
        assert_eq!(gh_target_dims(2, 2, 1, 1), 4);
        assert_eq!(gh_target_dims(2, 1, 1, 0), 0);
    }

    #[test]
    fn off_diagonal_cells_vanish() {
        let s = AcAlgebraSpec::new(AcVariant::A, 2, 1, 2).unwrap();
        assert_eq!(ac_invariant_dims_bruteforce(&s, 1, 0, 1, Group::GL).unwrap(), 0);
        assert_eq!(ac_invariant_dims_bruteforce(&s, 0, 1, 2, Group::GL).unwrap(), 0);
    }

    #[test]
    fn tensor_cell() {
        for variant in [AcVariant::A, AcVariant::C] {
            for g in 1..=3 {
                let s = AcAlgebraSpec::new(variant, g, 2, 2).unwrap();
                assert_eq!(ac_invariant_dims_bruteforce(&s, 0, 1, 1, Group::GL).unwrap(), 4);
            }
        }
    }

    #[test]
    fn degenerate_rank_one() {
        let s = AcAlgebraSpec::new(AcVariant::A, 1, 1, 2).unwrap();
        assert_eq!(ac_invariant_dims_bruteforce(&s, 1, 0, 2, Group::GL).unwrap(), 1);
        assert_eq!(ac_invariant_dims_formula(&s, 1, 0).unwrap(), 1);
    }

    #[test]
    fn formula_examples() {
        let s = AcAlgebraSpec::new(AcVariant::A, 2, 2, 2).unwrap();
        assert_eq!(ac_invariant_dims_formula(&s, 1, 0).unwrap(), 1);
        assert_eq!(ac_invariant_dims_formula(&s, 0, 2).unwrap(), binomial(4, 2));
    }
}
