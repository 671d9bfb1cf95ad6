//! Partitions, Schur-functor dimensions and Littlewood–Richardson coefficients.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_integer::binomial;
use num_traits::{One, Zero};

use crate::error::Error;

/// A Young diagram: strictly positive, weakly decreasing row lengths.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Partition(Vec<u32>);

impl Partition {
    pub fn new(parts: Vec<u32>) -> Result<Self, Error> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?}: parts must be positive")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?}: parts must be weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Number of rows.
    pub fn height(&self) -> usize {
        self.0.len()
    }

    /// Length of row `i`, zero past the last row.
    pub fn row(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    /// The transposed diagram.
    pub fn conjugate(&self) -> Partition {
        let first = self.row(0);
        Partition(
            (0..first)
                .map(|j| self.0.iter().filter(|&&p| p > j).count() as u32)
                .collect(),
        )
    }

    pub fn contains(&self, other: &Partition) -> bool {
        other.height() <= self.height() && other.0.iter().zip(&self.0).all(|(a, b)| a <= b)
    }

    pub fn has_even_rows(&self) -> bool {
        self.0.iter().all(|p| p % 2 == 0)
    }

    pub fn has_even_cols(&self) -> bool {
        self.conjugate().has_even_rows()
    }

    fn hooks(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        let conj = self.conjugate();
        self.0.iter().enumerate().flat_map(move |(i, &len)| {
            let conj = conj.clone();
            (0..len).map(move |j| {
                let arm = len - j - 1;
                let leg = conj.row(j as usize) as usize - i - 1;
                let content = j as i64 - i as i64;
                (content, (arm as u64 + leg as u64 + 1))
            })
        })
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", s.join(","))
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `"3,2,1"`, `"(3,2,1)"`, or `"0"`/`""`/`"()"` for the empty partition.
impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        let body = s.trim().trim_start_matches('(').trim_end_matches(')').trim();
        if body.is_empty() || body == "0" {
            return Ok(Partition::empty());
        }
        let parts = body
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<u32>()
                    .map_err(|_| Error::InvalidPartition(s.to_string()))
            })
            .collect::<Result<Vec<_>, _>>()?;
        Partition::new(parts)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PartitionFilter {
    All,
    EvenRows,
    EvenCols,
}

impl FromStr for PartitionFilter {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        match s {
            "all" => Ok(PartitionFilter::All),
            "even_rows" | "even-rows" => Ok(PartitionFilter::EvenRows),
            "even_cols" | "even-cols" => Ok(PartitionFilter::EvenCols),
            _ => Err(Error::InvalidParameter(format!("unknown partition filter {s}"))),
        }
    }
}

/// All partitions of `n` passing `filter`, in reverse lexicographic order
/// (`(4)` first, `(1,1,1,1)` last).
pub fn enumerate_partitions(n: u32, filter: PartitionFilter) -> Vec<Partition> {
    fn rec(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            cur.push(p);
            rec(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut all = Vec::new();
    rec(n, n, &mut Vec::new(), &mut all);
    all.retain(|p| match filter {
        PartitionFilter::All => true,
        PartitionFilter::EvenRows => p.has_even_rows(),
        PartitionFilter::EvenCols => p.has_even_cols(),
    });
    all
}

/// `dim S_λ(Q^g)` by the hook-content formula; zero iff `height(λ) > g`.
pub fn schur_dim(lambda: &Partition, g: u32) -> BigUint {
    let mut num = BigUint::one();
    let mut den = BigUint::one();
    for (content, hook) in lambda.hooks() {
        let factor = g as i64 + content;
        if factor <= 0 {
            return BigUint::zero();
        }
        num *= factor as u64;
        den *= hook;
    }
    num / den
}

/// Number of standard Young tableaux of shape λ, i.e. `dim M_λ`.
pub fn num_standard_tableaux(lambda: &Partition) -> BigUint {
    let n = lambda.size();
    let mut num: BigUint = (1..=n as u64).product();
    let mut den = BigUint::one();
    for (_, hook) in lambda.hooks() {
        den *= hook;
    }
    num /= den;
    num
}

/// `dim S^k(Q^d)`
pub fn dim_sym(d: u64, k: u64) -> BigUint {
    if d == 0 {
        return if k == 0 { BigUint::one() } else { BigUint::zero() };
    }
    binomial(BigUint::from(d + k - 1), BigUint::from(k))
}

/// `dim Λ^k(Q^d)`
pub fn dim_ext(d: u64, k: u64) -> BigUint {
    if k > d {
        return BigUint::zero();
    }
    binomial(BigUint::from(d), BigUint::from(k))
}

/// One instance of a Cauchy-type dimension identity: `lhs` is the sum of
/// Schur-functor dimensions, `rhs` the dimension of the plethysm.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CauchyCheck {
    pub identity: &'static str,
    pub degree: u32,
    pub lhs: BigUint,
    pub rhs: BigUint,
}

impl CauchyCheck {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// The four decompositions
/// `S^q(V⊗W) = ⊕ S_λV⊗S_λW`, `Λ^q(V⊗W) = ⊕ S_λV⊗S_λ̃W`,
/// `S^p(S²V) = ⊕_{even rows} S_λV` and `S^p(Λ²V) = ⊕_{even columns} S_λV`,
/// compared by dimension for `dim V = v`, `dim W = w` and every degree
/// `q ≤ maxdeg` (resp. `2p ≤ maxdeg`).
pub fn cauchy_checks(v: u32, w: u32, maxdeg: u32) -> Vec<CauchyCheck> {
    let sum = |it: &mut dyn Iterator<Item = BigUint>| it.fold(BigUint::zero(), |a, b| a + b);
    let (v64, w64) = (u64::from(v), u64::from(w));
    let mut out = Vec::new();
    for q in 0..=maxdeg {
        let lambdas = enumerate_partitions(q, PartitionFilter::All);
        out.push(CauchyCheck {
            identity: "S(V⊗W)",
            degree: q,
            lhs: sum(&mut lambdas.iter().map(|l| schur_dim(l, v) * schur_dim(l, w))),
            rhs: dim_sym(v64 * w64, u64::from(q)),
        });
        out.push(CauchyCheck {
            identity: "Λ(V⊗W)",
            degree: q,
            lhs: sum(&mut lambdas.iter().map(|l| schur_dim(l, v) * schur_dim(&l.conjugate(), w))),
            rhs: dim_ext(v64 * w64, u64::from(q)),
        });
    }
    let small = |x: BigUint| u64::try_from(x).expect("dimension fits in u64");
    for p in 0..=maxdeg / 2 {
        out.push(CauchyCheck {
            identity: "S(S²V)",
            degree: 2 * p,
            lhs: sum(&mut enumerate_partitions(2 * p, PartitionFilter::EvenRows).iter().map(|l| schur_dim(l, v))),
            rhs: dim_sym(small(dim_sym(v64, 2)), u64::from(p)),
        });
        out.push(CauchyCheck {
            identity: "S(Λ²V)",
            degree: 2 * p,
            lhs: sum(&mut enumerate_partitions(2 * p, PartitionFilter::EvenCols).iter().map(|l| schur_dim(l, v))),
            rhs: dim_sym(small(dim_ext(v64, 2)), u64::from(p)),
        });
    }
    out
}

/// Littlewood–Richardson coefficient `c^κ_{λ,μ}`, counted as LR tableaux of
/// shape κ/λ and content μ.
pub fn lr_coefficient(lambda: &Partition, mu: &Partition, kappa: &Partition) -> u64 {
    if kappa.size() != lambda.size() + mu.size() || !kappa.contains(lambda) {
        return 0;
    }
    if !kappa.contains(mu) {
        return 0;
    }
    let rows: Vec<(u32, u32)> = (0..kappa.height())
        .map(|i| (lambda.row(i), kappa.row(i)))
        .collect();
    let mut filling: Vec<Vec<u32>> = rows.iter().map(|(a, b)| vec![0; (b - a) as usize]).collect();
    let mut counts = vec![0u32; mu.height() + 1];
    let mut search = LrSearch {
        rows: &rows,
        mu,
        filling: &mut filling,
        counts: &mut counts,
        found: 0,
    };
    search.fill(0, None);
    search.found
}

struct LrSearch<'a> {
    rows: &'a [(u32, u32)],
    mu: &'a Partition,
    filling: &'a mut Vec<Vec<u32>>,
    counts: &'a mut Vec<u32>,
    found: u64,
}

impl LrSearch<'_> {
    /// Fills row `i` right to left; `pos` is the next column to fill (absolute).
    fn fill(&mut self, i: usize, pos: Option<u32>) {
        if i == self.rows.len() {
            self.found += 1;
            return;
        }
        let (start, end) = self.rows[i];
        let col = match pos {
            Some(c) => c,
            None => {
                if start == end {
                    return self.fill(i + 1, None);
                }
                end - 1
            }
        };
        let k = (col - start) as usize;
        // weakly increasing along the row
        let upper = if col + 1 < end {
            self.filling[i][k + 1]
        } else {
            self.mu.height() as u32
        };
        // strictly increasing down columns
        let lower = if i > 0 {
            let (ps, pe) = self.rows[i - 1];
            if col >= ps && col < pe {
                self.filling[i - 1][(col - ps) as usize] + 1
            } else {
                1
            }
        } else {
            1
        };
        for v in lower..=upper {
            let vi = v as usize;
            if self.counts[vi] >= self.mu.row(vi - 1) {
                continue;
            }
            // lattice word condition on the reverse reading word
            if vi > 1 && self.counts[vi] + 1 > self.counts[vi - 1] {
                continue;
            }
            self.counts[vi] += 1;
            self.filling[i][k] = v;
            if col == start {
                self.fill(i + 1, None);
            } else {
                self.fill(i, Some(col - 1));
            }
            self.counts[vi] -= 1;
        }
    }
}

/// Decomposition of `S_λ ⊗ S_μ` as `(κ, c^κ_{λ,μ})` pairs with positive
/// multiplicity, κ in reverse lexicographic order.
pub fn schur_product_expand(lambda: &Partition, mu: &Partition) -> Vec<(Partition, u64)> {
    let n = lambda.size() + mu.size();
    enumerate_partitions(n, PartitionFilter::All)
        .into_iter()
        .filter(|k| k.contains(lambda) && k.contains(mu))
        .filter_map(|k| {
            let c = lr_coefficient(lambda, mu, &k);
            (c > 0).then_some((k, c))
        })
        .collect()
}
