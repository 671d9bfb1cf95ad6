//! The acceptance suite: nine exact checks, each with a time budget.

use std::fmt;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::field::Field;
use crate::gca::{koszul_cohomology, KoszulComplexSpec};
use crate::invariants::{gl_invariant_basis, sl_invariant_basis, verify_fundamental_theorems, Group, TensorSpaceSpec};
use crate::model::{
    ac_invariant_dims_bruteforce, ac_invariant_dims_formula, blockdiff_cohomology, diff_cohomology,
    diff_presentations, e2_bruteforce_oracle, e3_zero_column, gh_target_dims, mt_cohomology, AcAlgebraSpec,
    AcVariant, ModelParams, PairRule,
};
use crate::schur::{cauchy_checks, enumerate_partitions, lr_coefficient, PartitionFilter};
use crate::{Rational, RationalMatrix};

#[derive(Clone, Debug)]
pub struct CriterionResult {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    /// Number of individual checks performed.
    pub checks: usize,
    /// First failure, or a summary on success.
    pub detail: String,
    pub elapsed: Duration,
    pub budget: Duration,
}

impl CriterionResult {
    pub fn within_budget(&self) -> bool {
        self.elapsed <= self.budget
    }

    pub fn ok(&self) -> bool {
        self.passed && self.within_budget()
    }
}

impl fmt::Display for CriterionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}] {}. {}: {} checks, {:.2}s (budget {}s){}",
            if self.ok() { "PASS" } else { "FAIL" },
            self.id,
            self.name,
            self.checks,
            self.elapsed.as_secs_f64(),
            self.budget.as_secs(),
            if self.detail.is_empty() { String::new() } else { format!(" — {}", self.detail) }
        )
    }
}

/// Accumulates checks; the first failure is kept as the detail.
struct Tally {
    checks: usize,
    failure: Option<String>,
}

impl Tally {
    fn new() -> Self {
        Tally {
            checks: 0,
            failure: None,
        }
    }

    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.checks += 1;
        if !ok && self.failure.is_none() {
            self.failure = Some(what());
        }
    }

    fn check_result<T>(&mut self, r: Result<T>, what: impl FnOnce() -> String) -> Option<T> {
        match r {
            Ok(v) => {
                self.checks += 1;
                Some(v)
            }
            Err(e) => {
                self.check(false, || format!("{}: {e}", what()));
                None
            }
        }
    }
}

fn run(id: u8, name: &'static str, budget_secs: u64, body: impl FnOnce(&mut Tally)) -> CriterionResult {
    let start = Instant::now();
    let mut tally = Tally::new();
    body(&mut tally);
    let passed = tally.failure.is_none();
    CriterionResult {
        id,
        name,
        passed,
        checks: tally.checks,
        detail: tally.failure.unwrap_or_default(),
        elapsed: start.elapsed(),
        budget: Duration::from_secs(budget_secs),
    }
}

/// span σ_{N,m} = invariants of `T^{m,m}`, and `rank σ = m!` iff `m ≤ g`.
pub fn fundamental_theorems() -> CriterionResult {
    run(1, "fundamental theorems", 120, |t| {
        for m in 1..=4 {
            for g in 1..=4 {
                if let Some(r) = t.check_result(verify_fundamental_theorems(m, g), || format!("m={m} g={g}")) {
                    t.check(r.as_predicted(), || format!("m={m} g={g}: {r:?}"));
                }
            }
        }
    })
}

/// Weight vanishing for `GL` and `SL`, and `SL = GL` on `T^{k,k}`.
pub fn weight_vanishing() -> CriterionResult {
    run(2, "weight vanishing", 120, |t| {
        for g in 1..=3usize {
            for k in 0..=5usize {
                for l in 0..=5 - k {
                    let spec = TensorSpaceSpec { k, l, g };
                    let ctx = || format!("k={k} l={l} g={g}");
                    let (Some(gl), Some(sl)) = (
                        t.check_result(gl_invariant_basis(&spec), ctx),
                        t.check_result(sl_invariant_basis(&spec), ctx),
                    ) else {
                        continue;
                    };
                    if k != l {
                        t.check(gl.ncols() == 0, || format!("{}: GL invariants {}", ctx(), gl.ncols()));
                    }
                    if (k as i64 - l as i64) % g as i64 != 0 {
                        t.check(sl.ncols() == 0, || format!("{}: SL invariants {}", ctx(), sl.ncols()));
                    }
                    if k == l {
                        t.check(sl.span_eq(&gl), || format!("{}: SL ≠ GL", ctx()));
                    }
                }
            }
        }
    })
}

/// LR symmetries up to `|κ| = 8` and the four Cauchy dimension identities.
pub fn lr_and_cauchy() -> CriterionResult {
    run(3, "Littlewood-Richardson and Cauchy identities", 60, |t| {
        for size in 0..=8u32 {
            for kappa in enumerate_partitions(size, PartitionFilter::All) {
                let kc = kappa.conjugate();
                for a in 0..=size {
                    for la in enumerate_partitions(a, PartitionFilter::All) {
                        for mu in enumerate_partitions(size - a, PartitionFilter::All) {
                            let c = lr_coefficient(&la, &mu, &kappa);
                            t.check(c == lr_coefficient(&mu, &la, &kappa), || {
                                format!("c^{kappa}_{{{la},{mu}}} not symmetric")
                            });
                            t.check(c == lr_coefficient(&la.conjugate(), &mu.conjugate(), &kc), || {
                                format!("c^{kappa}_{{{la},{mu}}} not conjugation invariant")
                            });
                        }
                    }
                }
            }
        }
        for v in 1..=3u32 {
            for w in 1..=3u32 {
                for c in cauchy_checks(v, w, 6) {
                    t.check(c.holds(), || format!("{} degree {}, v={v} w={w}", c.identity, c.degree));
                }
            }
        }
    })
}

/// Brute-force invariants of `A`/`C` against the LR formula and the
/// stable value, and vanishing off `r = 2p+q`.
pub fn ac_invariants() -> CriterionResult {
    run(4, "invariants of A and C", 600, |t| {
        for variant in [AcVariant::A, AcVariant::C] {
            for g in 1..=3 {
                for dim_w in 1..=2 {
                    for dim_u in 1..=2 {
                        let spec = AcAlgebraSpec {
                            variant,
                            g,
                            dim_w,
                            dim_u,
                        };
                        for p in 0..=2u32 {
                            for q in 0..=4 - 2 * p {
                                let diag = 2 * p + q;
                                let ctx = || format!("{variant} g={g} W={dim_w} U={dim_u} p={p} q={q}");
                                for r in 0..=diag + 2 {
                                    let Some(b) = t.check_result(
                                        ac_invariant_dims_bruteforce(&spec, p, q, r, Group::GL),
                                        || format!("{} r={r}", ctx()),
                                    ) else {
                                        continue;
                                    };
                                    if r != diag {
                                        t.check(b == 0, || format!("{} r={r}: {b} invariants off the diagonal", ctx()));
                                        continue;
                                    }
                                    if let Some(f) = t.check_result(ac_invariant_dims_formula(&spec, p, q), ctx) {
                                        t.check(b == f, || format!("{}: brute force {b}, formula {f}", ctx()));
                                    }
                                    if diag as usize <= g {
                                        let target = gh_target_dims(dim_w, dim_u, p as usize, q as usize);
                                        t.check(b == target, || format!("{}: {b} vs stable {target}", ctx()));
                                    }
                                }
                            }
                        }
                    }
                }
            }
        }
    })
}

/// A random `rows × cols` integer matrix of rank at most `rank`.
fn random_map(rng: &mut ChaCha8Rng, rows: usize, cols: usize, rank: usize) -> RationalMatrix {
    let left: Vec<Vec<i64>> = (0..rows).map(|_| (0..rank).map(|_| rng.gen_range(-2..=2)).collect()).collect();
    let right: Vec<Vec<i64>> = (0..rank).map(|_| (0..cols).map(|_| rng.gen_range(-2..=2)).collect()).collect();
    let rows_out = (0..rows)
        .map(|i| {
            (0..cols)
                .map(|j| Rational::from_i64((0..rank).map(|k| left[i][k] * right[k][j]).sum()))
                .collect()
        })
        .collect();
    RationalMatrix::from_rows(cols, rows_out)
}

/// Koszul cohomology of 50 random maps against `Λ(ker F) ⊗ S(coker F)`.
pub fn koszul_model() -> CriterionResult {
    run(5, "Koszul complex cohomology", 120, |t| {
        let mut rng = ChaCha8Rng::seed_from_u64(0x6b6f737a);
        for trial in 0..50 {
            let rows = rng.gen_range(1..=5);
            let cols = rng.gen_range(1..=5);
            let rank = rng.gen_range(0..=rows.min(cols));
            let spec = KoszulComplexSpec::new(random_map(&mut rng, rows, cols, rank));
            let got = koszul_cohomology(&spec, 8);
            let want = spec.predicted_dims(8);
            t.check(got == want, || format!("trial {trial} ({rows}x{cols}): {got:?} vs {want:?}"));
        }
    })
}

/// `H^{p,q}(D) = 0` for `p ≠ 0` and the zero column is `Λ(K(n))`.
pub fn e3_pipeline() -> CriterionResult {
    run(6, "E3 zero column", 300, |t| {
        for n in 5..=12 {
            if let Some(p) = t.check_result(ModelParams::minimal(n), || format!("n={n}")) {
                t.check_result(e3_zero_column(&p), || format!("n={n}"));
            }
        }
    })
}

/// The explicit second page with `d₂` against `D^{*,*}`.
pub fn spectral_oracle() -> CriterionResult {
    run(7, "E2 oracle against the D model", 900, |t| {
        for n in 5..=6u32 {
            for g in [n - 2, n - 1] {
                let ctx = || format!("n={n} g={g}");
                let Some(p) = t.check_result(ModelParams::new(n, g, ModelParams::minimal_m(n), n - 3), ctx) else {
                    continue;
                };
                if let Some(r) = t.check_result(e2_bruteforce_oracle(&p), ctx) {
                    t.check_result(r.ensure_match(), ctx);
                    }
            }
        }
    })
}

/// The three presentations agree; block and tangential stages; spot values.
pub fn final_rings() -> CriterionResult {
    run(8, "cohomology presentations", 120, |t| {
        for n in 5..=13u32 {
            let m = ModelParams::minimal_m(n);
            let ctx = || format!("n={n}");
            let Some(p) = t.check_result(ModelParams::new(n, 2 * (n - 3) + 4, m, n - 3), ctx) else {
                continue;
            };
            if let Some(r) = t.check_result(diff_cohomology(&p), ctx) {
                t.check(r.dims()[1] == 0, || format!("n={n}: H¹ = {}", r.dims()[1]));
                if n == 9 {
                    t.check(r.dims()[..6] == [1, 0, 0, 0, 0, 1], || format!("n=9: {:?}", r.dims()));
                }
            }
            let Some(pb) = t.check_result(p.with_maxdeg(n - 4), ctx) else {
                continue;
            };
            if let Some(b) = t.check_result(blockdiff_cohomology(&pb, false, PairRule::default()), ctx) {
                if n == 9 {
                    t.check(b.dims == [1, 0, 0, 0, 0, 2], || format!("n=9 block: {:?}", b.dims));
                }
            }
        }
        if let Some(r) = t.check_result(diff_presentations(4, 4, 1, PairRule::default()), || "n=4".into()) {
            t.check(r.mismatch_degrees().is_empty() && r.dims()[1] == 0, || format!("n=4: {:?}", r.dims()));
        }
    })
}

/// Degree-one classes of the Madsen–Tillmann spectrum.
pub fn mt_degree_one() -> CriterionResult {
    run(9, "degree-one classes of the MT spectrum", 10, |t| {
        for n in 5..=13u32 {
            let Some(r) = t.check_result(mt_cohomology(n, 1), || format!("n={n}")) else {
                continue;
            };
            let mut names: Vec<String> = r.presentation.gens.iter().map(|g| g.name.clone()).collect();
            names.sort();
            let expected: Vec<String> = match n % 4 {
                1 => vec![format!("mu[L{}]", n.div_ceil(2))],
                3 => {
                    let k = (n + 1) / 4;
                    let mut v = vec![format!("mu[L{}]", 2 * k), format!("mu[L{k}^2]")];
                    v.sort();
                    v
                }
                _ => vec![],
            };
            t.check(names == expected && r.dims[1] == expected.len(), || {
                format!("n={n}: {names:?}, expected {expected:?}")
            });
        }
    })
}

pub type CriterionFn = fn() -> CriterionResult;

pub const CRITERIA: [CriterionFn; 9] = [
    fundamental_theorems,
    weight_vanishing,
    lr_and_cauchy,
    ac_invariants,
    koszul_model,
    e3_pipeline,
    spectral_oracle,
    final_rings,
    mt_degree_one,
];

pub fn run_all() -> Vec<CriterionResult> {
    CRITERIA.iter().map(|c| c()).collect()
}
