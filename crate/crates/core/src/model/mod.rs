//! The graded spaces `V, W, U, K, B` attached to `(n, g, M)`, the DGA
//! `D^{*,*}`, the algebras `A`/`C`, the explicit `E_2` model and the
//! resulting presentations of cohomology rings.

mod ac;
mod ddga;
mod e2;
mod presentations;

pub use ac::{
    ac_invariant_dims_bruteforce, ac_invariant_dims_formula, gh_target_dims, AcAlgebraSpec, AcVariant,
};
pub use ddga::{build_d_dga, e3_zero_column};
pub use e2::{e2_bruteforce_oracle, lambda_relations, E2Model, LambdaExpr, OracleReport};
pub use presentations::{
    blockdiff_cohomology, diff_cohomology, diff_presentations, mt_cohomology, BlockdiffReport,
    DiffReport, PresentationReport,
};

use crate::error::{Error, Result};
use crate::gca::GeneratorSet;

/// The parameters `(n, g, M)` with a total-degree truncation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ModelParams {
    pub n: u32,
    pub g: u32,
    /// Largest index `m` of the classes `L_m` kept in the model.
    pub m_max: u32,
    pub maxdeg: u32,
}

impl ModelParams {
    pub fn new(n: u32, g: u32, m_max: u32, maxdeg: u32) -> Result<Self> {
        if n < 5 {
            return Err(Error::BoundViolation(format!("requires n ≥ 5 (got n = {n})")));
        }
        if 4 * m_max < 3 * n - 5 {
            return Err(Error::BoundViolation(format!(
                "requires 4M ≥ 3n−5 (got M = {m_max}, n = {n})"
            )));
        }
        if g + 3 <= n {
            return Err(Error::BoundViolation(format!("requires g > n−3 (got g = {g}, n = {n})")));
        }
        if maxdeg + 3 > n {
            return Err(Error::BoundViolation(format!(
                "requires maxdeg ≤ n−3 (got maxdeg = {maxdeg}, n = {n})"
            )));
        }
        Ok(ModelParams { n, g, m_max, maxdeg })
    }

    /// Smallest admissible `M`.
    pub fn minimal_m(n: u32) -> u32 {
        (3 * n - 5).div_ceil(4)
    }

    /// Smallest admissible `M` and `g`, full degree range `n − 3`.
    pub fn minimal(n: u32) -> Result<Self> {
        if n < 5 {
            return Err(Error::BoundViolation(format!("requires n ≥ 5 (got n = {n})")));
        }
        Self::new(n, n - 2, Self::minimal_m(n), n - 3)
    }

    pub fn with_maxdeg(self, maxdeg: u32) -> Result<Self> {
        Self::new(self.n, self.g, self.m_max, maxdeg)
    }
}

/// A named basis element of one of the graded spaces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpaceGen {
    pub name: String,
    /// `[m]` for single-index generators, `[m0, m1]` for pairs,
    /// `[k]` for the Borel class of degree `4k + 1`.
    pub index: Vec<u32>,
    pub degree: u32,
}

fn positive(d: i64) -> Option<u32> {
    (d > 0).then_some(d as u32)
}

/// Which pair generators `k_{m0,m1}` of `K(n)` are kept: degree `> 1`
/// (the default) or degree `> 0`. The two differ only in degree 1, and only
/// when `n ≡ 3 (mod 4)`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum PairRule {
    #[default]
    DegreeAboveOne,
    DegreePositive,
}

impl PairRule {
    fn admits(&self, degree: i64) -> bool {
        match self {
            PairRule::DegreeAboveOne => degree > 1,
            PairRule::DegreePositive => degree > 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSpaces {
    pub n: u32,
    pub m_max: u32,
    pub v: Vec<SpaceGen>,
    pub w: Vec<SpaceGen>,
    pub u: Vec<SpaceGen>,
    /// The classes `k_m`.
    pub k_single: Vec<SpaceGen>,
    /// The classes `k_{m0,m1}`.
    pub k_pairs: Vec<SpaceGen>,
    /// Borel classes up to the requested degree.
    pub borel: Vec<SpaceGen>,
}

impl GradedSpaces {
    pub fn new(n: u32, m_max: u32, borel_degree: u32, rule: PairRule) -> Self {
        let (ni, range) = (n as i64, 1..=m_max);
        let single = |name: &str, f: &dyn Fn(i64) -> i64| -> Vec<SpaceGen> {
            range
                .clone()
                .filter_map(|m| {
                    positive(f(m as i64)).map(|degree| SpaceGen {
                        name: format!("{name}{m}"),
                        index: vec![m],
                        degree,
                    })
                })
                .collect()
        };
        let v = single("v", &|m| 4 * m - 2 * ni - 1);
        let w = single("w", &|m| 4 * m - ni);
        let u = single("u", &|m| 4 * m - ni - 1);
        let k_single = single("k", &|m| 4 * m - 2 * ni - 1);
        let mut k_pairs = Vec::new();
        for m0 in 1..=m_max {
            if 4 * m0 < n + 1 {
                continue;
            }
            for m1 in m0..=m_max {
                let d = 4 * (m0 + m1) as i64 - 2 * ni - 1;
                if rule.admits(d) {
                    k_pairs.push(SpaceGen {
                        name: format!("k{m0}_{m1}"),
                        index: vec![m0, m1],
                        degree: d as u32,
                    });
                }
            }
        }
        let borel = (1..)
            .map(|k| 4 * k + 1)
            .take_while(|&d| d <= borel_degree)
            .map(|d| SpaceGen {
                name: format!("beta{d}"),
                index: vec![(d - 1) / 4],
                degree: d,
            })
            .collect();
        GradedSpaces {
            n,
            m_max,
            v,
            w,
            u,
            k_single,
            k_pairs,
            borel,
        }
    }

    /// `S(w_m) = u_m`, or `None` when `4m − n − 1 = 0`.
    pub fn s_map(&self, m: u32) -> Option<&SpaceGen> {
        self.u.iter().find(|u| u.index[0] == m)
    }

    fn graded(gens: impl IntoIterator<Item = SpaceGen>) -> GeneratorSet {
        GeneratorSet::graded(gens.into_iter().map(|s| (s.name, s.degree))).expect("distinct names")
    }

    /// Generators of `Λ(K(n))`.
    pub fn k_generators(&self) -> GeneratorSet {
        Self::graded(self.k_single.iter().chain(&self.k_pairs).cloned())
    }

    pub fn k_pair_generators(&self) -> GeneratorSet {
        Self::graded(self.k_pairs.iter().cloned())
    }

    pub fn borel_generators(&self) -> GeneratorSet {
        Self::graded(self.borel.iter().cloned())
    }
}

pub fn build_spaces(params: &ModelParams) -> GradedSpaces {
    GradedSpaces::new(params.n, params.m_max, params.maxdeg, PairRule::DegreeAboveOne)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn summary(v: &[SpaceGen]) -> Vec<(Vec<u32>, u32)> {
        v.iter().map(|s| (s.index.clone(), s.degree)).collect()
    }

    #[test]
    fn spaces_n5() {
        let s = GradedSpaces::new(5, 4, 0, PairRule::DegreeAboveOne);
        assert_eq!(summary(&s.v), vec![(vec![3], 1), (vec![4], 5)]);
        assert_eq!(summary(&s.u), vec![(vec![2], 2), (vec![3], 6), (vec![4], 10)]);
        assert_eq!(summary(&s.w), vec![(vec![2], 3), (vec![3], 7), (vec![4], 11)]);
    }

    #[test]
    fn spaces_n7() {
        let s = GradedSpaces::new(7, 4, 0, PairRule::DegreeAboveOne);
        assert_eq!(summary(&s.k_single), vec![(vec![4], 1)]);
        assert_eq!(
            summary(&s.k_pairs),
            vec![
                (vec![2, 3], 5),
                (vec![2, 4], 9),
                (vec![3, 3], 9),
                (vec![3, 4], 13),
                (vec![4, 4], 17)
            ]
        );
        assert!(s.s_map(2).is_none());
        assert_eq!(s.s_map(3).unwrap().degree, 4);
        let loose = GradedSpaces::new(7, 4, 0, PairRule::DegreePositive);
        assert_eq!(loose.k_pairs[0].index, vec![2, 2]);
        assert_eq!(loose.k_pairs[0].degree, 1);
    }

    #[test]
    fn k_generators_are_odd() {
        for n in 5..=13 {
            let p = ModelParams::minimal(n).unwrap();
            let s = build_spaces(&p);
            assert!(s.k_generators().iter().all(|g| g.odd));
        }
    }

    #[test]
    fn borel_degrees() {
        let s = GradedSpaces::new(9, 6, 13, PairRule::DegreeAboveOne);
        assert_eq!(s.borel.iter().map(|b| b.degree).collect::<Vec<_>>(), vec![5, 9, 13]);
    }

    #[test]
    fn parameter_bounds() {
        let e = ModelParams::new(9, 30, 5, 5).unwrap_err();
        assert!(e.to_string().contains("requires 4M ≥ 3n−5"), "{e}");
        let e = ModelParams::new(9, 6, 6, 5).unwrap_err();
        assert!(e.to_string().contains("g > n−3"));
        assert!(ModelParams::new(9, 7, 6, 7).is_err());
        assert!(ModelParams::new(4, 7, 6, 1).is_err());
        assert_eq!(ModelParams::minimal(5).unwrap().m_max, 3);
    }
}
