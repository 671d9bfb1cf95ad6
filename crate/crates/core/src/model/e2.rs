use std::collections::HashMap;

use crate::field::Field;
use crate::error::{Error, Result};
use crate::gca::{coordinates, index_of, BigradedDga, CohomologyTable, Element, Generator, GeneratorSet, Monomial};
use crate::invariants::{GlAlgebra, Group};
use crate::linalg::Echelon;
use crate::Rational;

use super::ac::{act_on_pair, normalize_pair, quadratic_pairs};
use super::ddga::d_dga_of;
use super::{build_spaces, ModelParams};

/// The second page as a free bigraded algebra on `x_ij` (bidegree `(2,0)`,
/// spanning `L²N`) and the classes `λ_{[U],L_m}`, `λ_{a_i,L_m}`,
/// `λ_{b_i,L_m}`, with its `gl_g`-action and `d₂`.
#[derive(Clone, Debug)]
pub struct E2Model {
    pub params: ModelParams,
    pub algebra: GlAlgebra<Rational>,
    pub dga: BigradedDga<Rational>,
}

fn xname(i: usize, j: usize) -> String {
    format!("x{}_{}", i + 1, j + 1)
}

pub fn lambda_u(m: u32) -> String {
    format!("lam[U,L{m}]")
}

pub fn lambda_a(i: usize, m: u32) -> String {
    format!("lam[a{},L{m}]", i + 1)
}

pub fn lambda_b(i: usize, m: u32) -> String {
    format!("lam[b{},L{m}]", i + 1)
}

impl E2Model {
    pub fn new(params: &ModelParams) -> Result<Self> {
        let n = params.n;
        let g = params.g as usize;
        let symmetric = n.is_multiple_of(2);
        let spaces = build_spaces(params);
        let pairs = quadratic_pairs(g, symmetric);
        let mut gens = Vec::new();
        let mut weights = Vec::new();
        for &(i, j) in &pairs {
            gens.push(Generator {
                name: xname(i, j),
                degree: vec![2, 0],
                odd: false,
            });
            let mut w = vec![0; g];
            w[i] += 1;
            w[j] += 1;
            weights.push(w);
        }
        for v in &spaces.v {
            gens.push(Generator {
                name: lambda_u(v.index[0]),
                degree: vec![0, v.degree],
                odd: true,
            });
            weights.push(vec![0; g]);
        }
        let a0 = gens.len();
        for w in &spaces.w {
            for i in 0..g {
                gens.push(Generator {
                    name: lambda_a(i, w.index[0]),
                    degree: vec![0, w.degree],
                    odd: w.degree % 2 == 1,
                });
                let mut wt = vec![0; g];
                wt[i] = 1;
                weights.push(wt);
            }
        }
        let b0 = gens.len();
        for u in &spaces.u {
            for i in 0..g {
                gens.push(Generator {
                    name: lambda_b(i, u.index[0]),
                    degree: vec![0, u.degree],
                    odd: u.degree % 2 == 1,
                });
                let mut wt = vec![0; g];
                wt[i] = -1;
                weights.push(wt);
            }
        }
        let set = GeneratorSet::new(gens)?;
        let v0 = pairs.len();
        let algebra = GlAlgebra::new(set.clone(), g, weights, |r, s, k| {
            if k < v0 {
                act_on_pair(&pairs, 0, symmetric, r, s, pairs[k])
            } else if k < a0 {
                Element::zero()
            } else if k < b0 {
                let (blk, i) = ((k - a0) / g, (k - a0) % g);
                if i == s {
                    Element::monomial(Monomial::generator(a0 + blk * g + r), Rational::from_i64(1))
                } else {
                    Element::zero()
                }
            } else {
                let (blk, i) = ((k - b0) / g, (k - b0) % g);
                if i == r {
                    Element::monomial(Monomial::generator(b0 + blk * g + s), Rational::from_i64(-1))
                } else {
                    Element::zero()
                }
            }
        });
        // d₂(λ_{a_j,L_m}) = (−1)^{n+1} Σ_i x_ij λ_{b_i,L_m}
        let sign = if n.is_multiple_of(2) { -1 } else { 1 };
        let mut delta = vec![Element::zero(); set.len()];
        for (blk, w) in spaces.w.iter().enumerate() {
            let m = w.index[0];
            let Some(ublk) = spaces.u.iter().position(|u| u.index[0] == m) else {
                continue;
            };
            for j in 0..g {
                let mut img = Element::zero();
                for i in 0..g {
                    let Some((pos, s)) = normalize_pair(&pairs, i, j, symmetric) else {
                        continue;
                    };
                    let term = set.mul(
                        &Element::monomial(Monomial::generator(pos), Rational::from_i64(s * sign)),
                        &set.generator(b0 + ublk * g + i),
                    );
                    img = img + term;
                }
                delta[a0 + blk * g + j] = img;
            }
        }
        let dga = BigradedDga::new(set, delta, params.maxdeg + 1)?;
        Ok(E2Model {
            params: *params,
            algebra,
            dga,
        })
    }

    pub fn generators(&self) -> &GeneratorSet {
        &self.algebra.gens
    }

    /// Evaluates a symbolic λ-expression in this algebra; `None` if it
    /// mentions a class absent from the model.
    pub fn element_of(&self, e: &LambdaExpr) -> Option<Element<Rational>> {
        let gens = self.generators();
        let mut out = Element::zero();
        for (c, names) in &e.terms {
            let mut term = Element::one();
            for name in names {
                term = gens.mul(&term, &gens.generator(gens.index_of(name)?));
            }
            out.add_scaled(&term, &Rational::from_i64(*c));
        }
        Some(out)
    }

    /// Cohomology of the `SL_g`-invariant subcomplex under `d₂`, for total
    /// degrees up to `maxdeg`.
    pub fn invariant_cohomology(&self) -> Result<CohomologyTable> {
        let maxdeg = self.params.maxdeg;
        let gens = self.generators();
        let mut inv: HashMap<(u32, u32), Vec<Element<Rational>>> = HashMap::new();
        let mut invariants = |p: u32, q: u32| -> Result<Vec<Element<Rational>>> {
            if let Some(v) = inv.get(&(p, q)) {
                return Ok(v.clone());
            }
            let (basis, cols) = self.algebra.cell_invariants(&[p, q], Group::SL)?;
            let elems: Vec<Element<Rational>> = cols
                .columns
                .into_iter()
                .map(|c| {
                    let mut e = Element::zero();
                    for (i, v) in c {
                        e.add_term(basis[i].clone(), v);
                    }
                    e
                })
                .collect();
            inv.insert((p, q), elems.clone());
            Ok(elems)
        };
        let mut rank_out: HashMap<(u32, u32), usize> = HashMap::new();
        let mut dims = std::collections::BTreeMap::new();
        for t in 0..=maxdeg {
            for p in 0..=t {
                let q = t - p;
                let here = invariants(p, q)?;
                let out = if q == 0 || here.is_empty() {
                    0
                } else {
                    let target = gens.monomials_of_degree(&[p + 2, q - 1]);
                    let index = index_of(&target);
                    let mut ech = Echelon::new(target.len());
                    for e in &here {
                        ech.insert(coordinates(&index, &self.dga.delta(e)));
                    }
                    ech.rank()
                };
                rank_out.insert((p, q), out);
                let rank_in = if p >= 2 { rank_out[&(p - 2, q + 1)] } else { 0 };
                let h = here.len() - out - rank_in;
                if h != 0 {
                    dims.insert((p, q), h);
                }
            }
        }
        Ok(CohomologyTable {
            truncation: maxdeg,
            dims,
        })
    }
}

/// Brute-force `Ē₃` next to the `D^{*,*}` model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OracleReport {
    pub oracle: CohomologyTable,
    pub model: CohomologyTable,
}

impl OracleReport {
    /// Bidegrees where the two tables differ.
    pub fn mismatches(&self) -> Vec<(u32, u32)> {
        let t = self.oracle.truncation;
        let mut out = Vec::new();
        for s in 0..=t {
            for p in 0..=s {
                if self.oracle.get(p, s - p) != self.model.get(p, s - p) {
                    out.push((p, s - p));
                }
            }
        }
        out
    }

    pub fn ensure_match(&self) -> Result<()> {
        match self.mismatches().first() {
            None => Ok(()),
            Some((p, q)) => Err(Error::Inconsistent {
                context: format!(
                    "E2 oracle {} vs D model {}",
                    self.oracle.get(*p, *q),
                    self.model.get(*p, *q)
                ),
                cell: format!("({p},{q})"),
            }),
        }
    }
}

/// Checks `d₂² = 0`, computes the invariant cohomology of the explicit
/// second page and the cohomology of `D^{*,*}` in the same range.
pub fn e2_bruteforce_oracle(params: &ModelParams) -> Result<OracleReport> {
    let e2 = E2Model::new(params)?;
    e2.dga.check_square_zero()?;
    let oracle = e2.invariant_cohomology()?;
    let model = d_dga_of(&build_spaces(params), params.maxdeg)?.cohomology()?;
    Ok(OracleReport { oracle, model })
}

/// A symbolic sum of products of λ-classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaExpr {
    pub terms: Vec<(i64, Vec<String>)>,
}

impl LambdaExpr {
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

impl std::fmt::Display for LambdaExpr {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(c, names)| {
                let body = names.join("*");
                if *c == 1 {
                    body
                } else {
                    format!("{c}*{body}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// The λ-class of `L_{m_1}⋯L_{m_r}` in the second page: a single generator
/// for `r = 1`, `Σ_j λ_{a_j,L_{m0}}λ_{b_j,L_{m1}} + λ_{b_j,L_{m0}}λ_{a_j,L_{m1}}`
/// for `r = 2`, and zero for `r ≥ 3`.
pub fn lambda_relations(params: &ModelParams, ms: &[u32]) -> Result<LambdaExpr> {
    let g = params.g as usize;
    let terms = match ms {
        [] => return Err(Error::InvalidParameter("empty monomial".into())),
        [m] => vec![(1, vec![lambda_u(*m)])],
        [m0, m1] => (0..g)
            .map(|j| (1, vec![lambda_a(j, *m0), lambda_b(j, *m1)]))
            .chain((0..g).map(|j| (1, vec![lambda_b(j, *m0), lambda_a(j, *m1)])))
            .collect(),
        _ => Vec::new(),
    };
    Ok(LambdaExpr { terms })
}
