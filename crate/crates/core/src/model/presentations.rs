use crate::error::{Error, Result};
use crate::gca::{fgca_dims, quotient_dims, FreeGcaPresentation, GeneratorSet};
use crate::Rational;

use super::{e3_zero_column, ModelParams, PairRule, GradedSpaces, SpaceGen};

/// A presentation together with its dimensions in degrees `0..=truncation`.
#[derive(Clone, Debug)]
pub struct PresentationReport {
    pub presentation: FreeGcaPresentation<Rational>,
    pub dims: Vec<usize>,
}

impl PresentationReport {
    fn compute(presentation: FreeGcaPresentation<Rational>) -> Result<Self> {
        let dims = quotient_dims(&presentation)?;
        Ok(PresentationReport { presentation, dims })
    }

    /// Names of generators killed by the relations.
    pub fn killed(&self) -> Vec<String> {
        let p = &self.presentation;
        p.relations.iter().map(|r| p.gens.format_element(r)).collect()
    }
}

/// Nondecreasing sequences with entries in `lo..=hi` summing to `sum`.
fn multisets(lo: u32, hi: u32, sum: u32) -> Vec<Vec<u32>> {
    fn go(lo: u32, hi: u32, rest: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for m in lo..=hi.min(rest) {
            cur.push(m);
            go(m, hi, rest - m, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if lo > 0 {
        go(lo, hi, sum, &mut Vec::new(), &mut out);
    }
    out
}

/// `L2^2L3` style name of a monomial in the classes `L_m`.
fn monomial_name(c: &[u32]) -> String {
    let mut out = String::new();
    let mut i = 0;
    while i < c.len() {
        let j = (i..c.len()).find(|&j| c[j] != c[i]).unwrap_or(c.len());
        out.push_str(&format!("L{}", c[i]));
        if j - i > 1 {
            out.push_str(&format!("^{}", j - i));
        }
        i = j;
    }
    out
}

/// Monomials `c` in `L_lo, …, L_hi` with `4|c| − (2n+1)` in `1..=maxdeg`,
/// ordered by degree.
fn desuspended_monomials(n: u32, lo: u32, hi: u32, maxdeg: u32) -> Vec<(Vec<u32>, u32)> {
    let mut out = Vec::new();
    for s in 1.. {
        let d = 4 * s as i64 - 2 * n as i64 - 1;
        if d > maxdeg as i64 {
            break;
        }
        if d > 0 {
            for c in multisets(lo, hi, s) {
                out.push((c, d as u32));
            }
        }
    }
    out
}

fn exterior(names: Vec<(String, u32)>) -> GeneratorSet {
    GeneratorSet::graded(names).expect("distinct names")
}

/// The exterior algebra on `μ_c`, `c = L_{m_1}⋯L_{m_r}` with
/// `(n+1)/4 ≤ m_1 ≤ … ≤ m_r ≤ n` and degree `4Σm_i − (2n+1) > 0`.
pub fn mt_cohomology(n: u32, maxdeg: u32) -> Result<PresentationReport> {
    if n < 2 {
        return Err(Error::BoundViolation(format!("requires n ≥ 2 (got n = {n})")));
    }
    let lo = (n + 1).div_ceil(4);
    let gens = desuspended_monomials(n, lo, n, maxdeg)
        .into_iter()
        .map(|(c, d)| (format!("mu[{}]", monomial_name(&c)), d))
        .collect();
    PresentationReport::compute(FreeGcaPresentation::free(exterior(gens), maxdeg))
}

/// The three descriptions of the cohomology of the diffeomorphism group.
#[derive(Clone, Debug)]
pub struct DiffReport {
    pub n: u32,
    pub maxdeg: u32,
    pub pair_rule: PairRule,
    /// Tautological classes `μ_c` modulo `μ_{L_m}` and degree one.
    pub tautological: PresentationReport,
    /// `F(k_c)` modulo `k_{L_m}`, `k_{L_m c}` (`4m ≤ n`) and
    /// `k_{L_{m0}L_{m1}}` with `4(m0+m1) = 2n+2`.
    pub k_classes: PresentationReport,
    /// `Λ` on the pair classes `k_{m0,m1}`.
    pub pairs: PresentationReport,
}

impl DiffReport {
    pub fn dims(&self) -> &[usize] {
        &self.pairs.dims
    }

    /// Degrees in which the three presentations disagree.
    pub fn mismatch_degrees(&self) -> Vec<u32> {
        (0..=self.maxdeg)
            .filter(|&d| {
                let d = d as usize;
                self.tautological.dims[d] != self.k_classes.dims[d] || self.k_classes.dims[d] != self.pairs.dims[d]
            })
            .collect()
    }

    /// Monomial basis of the pair presentation, degree by degree.
    pub fn basis(&self) -> Vec<Vec<String>> {
        let gens = &self.pairs.presentation.gens;
        (0..=self.maxdeg)
            .map(|d| gens.monomial_basis(d).iter().map(|m| gens.format_monomial(m)).collect())
            .collect()
    }
}

/// Computes all three presentations without the `g`-dependent range checks.
pub fn diff_presentations(n: u32, m_max: u32, maxdeg: u32, rule: PairRule) -> Result<DiffReport> {
    if n < 2 {
        return Err(Error::BoundViolation(format!("requires n ≥ 2 (got n = {n})")));
    }
    let mus = desuspended_monomials(n, (n + 1).div_ceil(4), n, maxdeg);
    let a_gens = exterior(mus.iter().map(|(c, d)| (format!("mu[{}]", monomial_name(c)), *d)).collect());
    let mut a = FreeGcaPresentation::free(a_gens.clone(), maxdeg);
    for (i, (c, d)) in mus.iter().enumerate() {
        if c.len() == 1 || *d == 1 {
            a.relations.push(a_gens.generator(i));
        }
    }

    let ks = desuspended_monomials(n, 1, u32::MAX, maxdeg);
    let b_gens = exterior(ks.iter().map(|(c, d)| (format!("k[{}]", monomial_name(c)), *d)).collect());
    let mut b = FreeGcaPresentation::free(b_gens.clone(), maxdeg);
    for (i, (c, _)) in ks.iter().enumerate() {
        let kill = c.len() == 1
            || c.iter().any(|&m| 4 * m <= n)
            || (c.len() == 2 && 4 * (c[0] + c[1]) == 2 * n + 2);
        if kill {
            b.relations.push(b_gens.generator(i));
        }
    }

    let spaces = GradedSpaces::new(n, m_max, 0, rule);
    let c = FreeGcaPresentation::free(spaces.k_pair_generators(), maxdeg);

    Ok(DiffReport {
        n,
        maxdeg,
        pair_rule: rule,
        tautological: PresentationReport::compute(a)?,
        k_classes: PresentationReport::compute(b)?,
        pairs: PresentationReport::compute(c)?,
    })
}

/// The three presentations, required to agree degreewise.
pub fn diff_cohomology(params: &ModelParams) -> Result<DiffReport> {
    if 2 * params.maxdeg + 4 > params.g {
        return Err(Error::BoundViolation(format!(
            "requires maxdeg ≤ (g−4)/2 (got maxdeg = {}, g = {})",
            params.maxdeg, params.g
        )));
    }
    let report = diff_presentations(params.n, params.m_max, params.maxdeg, PairRule::default())?;
    if let Some(d) = report.mismatch_degrees().first() {
        let d = *d as usize;
        return Err(Error::Inconsistent {
            context: format!(
                "presentations disagree: {} / {} / {}",
                report.tautological.dims[d], report.k_classes.dims[d], report.pairs.dims[d]
            ),
            cell: format!("degree {d}"),
        });
    }
    Ok(report)
}

fn convolve(a: &[usize], b: &[usize]) -> Vec<usize> {
    let n = a.len().min(b.len());
    (0..n).map(|d| (0..=d).map(|i| a[i] * b[d - i]).sum()).collect()
}

/// The block-diffeomorphism stage `Λ(K_pairs ⊕ B)` and the tangential
/// stage `Λ(K(n) ⊕ B)`.
#[derive(Clone, Debug)]
pub struct BlockdiffReport {
    pub n: u32,
    pub maxdeg: u32,
    pub pair_rule: PairRule,
    pub generators: Vec<SpaceGen>,
    pub dims: Vec<usize>,
    pub tangential_generators: Vec<SpaceGen>,
    pub tangential_dims: Vec<usize>,
    /// Disagreements with the independent computations, only possible
    /// under [`PairRule::DegreePositive`].
    pub discrepancies: Vec<String>,
}

impl BlockdiffReport {
    pub fn basis(&self) -> Vec<Vec<String>> {
        let gens = exterior(self.generators.iter().map(|g| (g.name.clone(), g.degree)).collect());
        (0..=self.maxdeg)
            .map(|d| gens.monomial_basis(d).iter().map(|m| gens.format_monomial(m)).collect())
            .collect()
    }
}

/// `maxdeg ≤ n − 4`, or `n − 3` when `extended`.
///
/// The kernel of the comparison map is imposed as an ideal, with the same
/// generators as the `k_c` presentation.
pub fn blockdiff_cohomology(params: &ModelParams, extended: bool, rule: PairRule) -> Result<BlockdiffReport> {
    let (n, maxdeg) = (params.n, params.maxdeg);
    if !extended && maxdeg + 4 > n {
        return Err(Error::BoundViolation(format!(
            "requires maxdeg ≤ n−4 (got maxdeg = {maxdeg}, n = {n}); the tangential range n−3 needs the extended option"
        )));
    }
    let spaces = GradedSpaces::new(n, params.m_max, maxdeg, rule);
    let generators: Vec<SpaceGen> = spaces.k_pairs.iter().chain(&spaces.borel).cloned().collect();
    let tangential_generators: Vec<SpaceGen> = spaces
        .k_single
        .iter()
        .chain(&spaces.k_pairs)
        .chain(&spaces.borel)
        .cloned()
        .collect();
    let dims_of = |gs: &[SpaceGen]| fgca_dims(&exterior(gs.iter().map(|g| (g.name.clone(), g.degree)).collect()), maxdeg);
    let dims = dims_of(&generators);
    let tangential_dims = dims_of(&tangential_generators);

    let borel = fgca_dims(&spaces.borel_generators(), maxdeg);
    let mut discrepancies = Vec::new();
    let quotient = diff_presentations(n, params.m_max, maxdeg, rule)?.k_classes.dims;
    let checks = [
        ("block stage vs quotient ⊗ Λ(B)", convolve(&quotient, &borel), &dims),
        (
            "tangential stage vs E3 zero column ⊗ Λ(B)",
            convolve(&e3_zero_column(params)?, &borel),
            &tangential_dims,
        ),
    ];
    for (what, expected, got) in checks {
        if let Some(d) = (0..expected.len()).find(|&d| expected[d] != got[d]) {
            if rule == PairRule::default() {
                return Err(Error::Inconsistent {
                    context: format!("{what}: {} vs {}", got[d], expected[d]),
                    cell: format!("degree {d}"),
                });
            }
            discrepancies.push(format!("{what}: {} vs {} in degree {d}", got[d], expected[d]));
        }
    }
    Ok(BlockdiffReport {
        n,
        maxdeg,
        pair_rule: rule,
        generators,
        dims,
        tangential_generators,
        tangential_dims,
        discrepancies,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn degree_one_names(n: u32) -> Vec<String> {
        let r = mt_cohomology(n, 1).unwrap();
        r.presentation.gens.iter().map(|g| g.name.clone()).collect()
    }

    #[test]
    fn mt_degree_one() {
        assert_eq!(degree_one_names(9), vec!["mu[L5]"]);
        assert_eq!(degree_one_names(7), vec!["mu[L2^2]", "mu[L4]"]);
        assert!(degree_one_names(6).is_empty());
    }

    #[test]
    fn names() {
        assert_eq!(monomial_name(&[2, 2, 3]), "L2^2L3");
        assert_eq!(monomial_name(&[5]), "L5");
    }

    #[test]
    fn diff_n9() {
        let p = ModelParams::new(9, 30, 6, 5).unwrap();
        let r = diff_cohomology(&p).unwrap();
        assert_eq!(r.dims(), &[1, 0, 0, 0, 0, 1]);
        assert_eq!(r.basis()[5], vec!["k3_3"]);
    }

    #[test]
    fn diff_degree_one_vanishes() {
        for n in 4..=13 {
            let r = diff_presentations(n, n, 1, PairRule::default()).unwrap();
            assert!(r.mismatch_degrees().is_empty());
            assert_eq!(r.dims()[1], 0, "n = {n}");
        }
    }

    #[test]
    fn diff_needs_large_g() {
        let p = ModelParams::new(9, 10, 6, 5).unwrap();
        assert!(matches!(diff_cohomology(&p), Err(Error::BoundViolation(_))));
    }

    #[test]
    fn loose_rule_disagrees_for_n7() {
        let r = diff_presentations(7, 4, 4, PairRule::DegreePositive).unwrap();
        assert_eq!(r.mismatch_degrees(), vec![1]);
    }

    #[test]
    fn blockdiff_n9() {
        let p = ModelParams::new(9, 30, 6, 5).unwrap();
        let r = blockdiff_cohomology(&p, false, PairRule::default()).unwrap();
        assert_eq!(r.dims, vec![1, 0, 0, 0, 0, 2]);
        assert_eq!(r.tangential_dims[1], 1);
        assert!(r.generators.iter().filter(|g| g.name.starts_with("beta")).all(|g| g.degree % 4 == 1));
    }

    #[test]
    fn blockdiff_range() {
        let p = ModelParams::new(9, 30, 6, 6).unwrap();
        assert!(blockdiff_cohomology(&p, false, PairRule::default()).is_err());
        assert!(blockdiff_cohomology(&p, true, PairRule::default()).is_ok());
    }
}
