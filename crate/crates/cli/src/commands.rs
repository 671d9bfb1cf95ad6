//! One function per subcommand, each producing a [`Report`].

use std::path::Path;

use invalg::gca::{koszul_cohomology, GeneratorSet, KoszulComplexSpec};
use invalg::invariants::{verify_fundamental_theorems, Group, TensorSpaceSpec};
use invalg::model::{
    ac_invariant_dims_bruteforce, ac_invariant_dims_formula, blockdiff_cohomology, build_spaces,
    diff_cohomology, e2_bruteforce_oracle, e3_zero_column, gh_target_dims, mt_cohomology, AcAlgebraSpec,
    AcVariant, E2Model, ModelParams, PairRule, SpaceGen,
};
use invalg::schur::{cauchy_checks, enumerate_partitions, lr_coefficient, schur_dim, Partition, PartitionFilter};
use invalg::verify;
use invalg::{Rational, RationalMatrix};
use serde_json::{json, Value};

use crate::report::{Report, Table};
use crate::CliError;

type Result<T> = std::result::Result<T, CliError>;

fn dims_table(dims: &[usize]) -> Table {
    let mut t = Table::new(&["degree", "dim"]);
    for (d, v) in dims.iter().enumerate() {
        t.push(vec![d.to_string(), v.to_string()]);
    }
    t
}

fn gens_json(gens: &GeneratorSet) -> Value {
    gens.iter()
        .map(|g| json!({ "name": g.name, "degree": g.degree, "odd": g.odd }))
        .collect()
}

fn space_gens_json(gens: &[SpaceGen]) -> Value {
    gens.iter()
        .map(|g| json!({ "name": g.name, "degree": g.degree, "index": g.index }))
        .collect()
}

pub fn lr(lambda: &Partition, mu: &Partition, kappa: &Partition) -> Report {
    let c = lr_coefficient(lambda, mu, kappa);
    let mut r = Report::new("lr", "Littlewood-Richardson rule for S_λ ⊗ S_μ")
        .input("lambda", lambda.to_string())
        .input("mu", mu.to_string())
        .input("kappa", kappa.to_string());
    r.field("c", c);
    r.table = Table::new(&["lambda", "mu", "kappa", "c"]);
    r.table
        .push(vec![lambda.to_string(), mu.to_string(), kappa.to_string(), c.to_string()]);
    r
}

pub fn schur_dim_cmd(lambda: &Partition, g: u32) -> Report {
    let d = schur_dim(lambda, g);
    let mut r = Report::new("schur-dim", "hook-content formula for dim S_λ(Q^g)")
        .input("lambda", lambda.to_string())
        .input("g", g);
    r.field("dim", d.to_string());
    r.table = Table::new(&["lambda", "g", "dim"]);
    r.table.push(vec![lambda.to_string(), g.to_string(), d.to_string()]);
    r
}

pub fn partitions(n: u32, filter: PartitionFilter, filter_name: &str) -> Report {
    let ps = enumerate_partitions(n, filter);
    let mut r = Report::new("partitions", "partitions of n; even rows index S(S²V), even columns S(Λ²V)")
        .input("n", n)
        .input("filter", filter_name);
    r.field("count", ps.len());
    r.field("partitions", ps.iter().map(|p| p.to_string()).collect::<Vec<_>>());
    r.table = Table::new(&["index", "partition", "height", "conjugate"]);
    for (i, p) in ps.iter().enumerate() {
        r.table.push(vec![
            i.to_string(),
            p.to_string(),
            p.height().to_string(),
            p.conjugate().to_string(),
        ]);
    }
    r
}

pub fn invariants(k: usize, l: usize, g: usize, group: Group) -> Result<Report> {
    let spec = TensorSpaceSpec::new(k, l, g)?;
    let basis = spec.invariant_basis(group)?;
    let mut r = Report::new("invariants", "invariants of V^{⊗k} ⊗ V^{∨⊗l} by the weight argument")
        .input("k", k)
        .input("l", l)
        .input("g", g)
        .input("group", group.to_string());
    r.field("dim", basis.ncols());
    r.field("ambient_dim", spec.dim().to_string());
    r.table = Table::new(&["k", "l", "g", "group", "dim"]);
    r.table.push(vec![
        k.to_string(),
        l.to_string(),
        g.to_string(),
        group.to_string(),
        basis.ncols().to_string(),
    ]);
    Ok(r)
}

pub fn fft_check(m: usize, g: usize) -> Result<Report> {
    let f = verify_fundamental_theorems(m, g)?;
    let mut r = Report::new("fft-check", "first and second fundamental theorems of invariant theory for GL(V)")
        .input("m", m)
        .input("g", g);
    r.field("rank", f.rank);
    r.field("invariant_dim", f.invariant_dim);
    r.field("surjective", f.surjective);
    r.field("injective", f.injective);
    r.field("as_predicted", f.as_predicted());
    r.table = Table::new(&["m", "g", "rank", "invariant_dim", "surjective", "injective"]);
    r.table.push(vec![
        m.to_string(),
        g.to_string(),
        f.rank.to_string(),
        f.invariant_dim.to_string(),
        f.surjective.to_string(),
        f.injective.to_string(),
    ]);
    if !f.as_predicted() {
        r.failure = Some(format!("σ does not behave as predicted at m={m}, g={g}"));
    }
    Ok(r)
}

pub fn cauchy_check(v: u32, w: u32, maxdeg: u32) -> Report {
    let checks = cauchy_checks(v, w, maxdeg);
    let mut r = Report::new("cauchy-check", "Cauchy decompositions of S(V⊗W), Λ(V⊗W), S(S²V), S(Λ²V)")
        .input("dims", vec![v, w])
        .input("maxdeg", maxdeg);
    r.table = Table::new(&["identity", "degree", "lhs", "rhs", "holds"]);
    let mut rows = Vec::new();
    for c in &checks {
        rows.push(json!({
            "identity": c.identity,
            "degree": c.degree,
            "lhs": c.lhs.to_string(),
            "rhs": c.rhs.to_string(),
            "holds": c.holds(),
        }));
        r.table.push(vec![
            c.identity.into(),
            c.degree.to_string(),
            c.lhs.to_string(),
            c.rhs.to_string(),
            c.holds().to_string(),
        ]);
    }
    r.field("checks", rows);
    r.field("all_hold", checks.iter().all(|c| c.holds()));
    if let Some(c) = checks.iter().find(|c| !c.holds()) {
        r.failure = Some(format!("{} in degree {}: {} ≠ {}", c.identity, c.degree, c.lhs, c.rhs));
    }
    r
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum AcMode {
    Brute,
    Formula,
    Target,
}

#[allow(clippy::too_many_arguments)]
pub fn ac_dims(
    variant: AcVariant,
    g: usize,
    (dim_w, dim_u): (usize, usize),
    p: u32,
    q: u32,
    r_deg: Option<u32>,
    mode: AcMode,
    group: Group,
) -> Result<Report> {
    let spec = AcAlgebraSpec::new(variant, g, dim_w, dim_u)?;
    let r_deg = r_deg.unwrap_or(2 * p + q);
    let dim = match mode {
        AcMode::Brute => ac_invariant_dims_bruteforce(&spec, p, q, r_deg, group)?,
        AcMode::Formula if r_deg != 2 * p + q => 0,
        AcMode::Formula => ac_invariant_dims_formula(&spec, p, q)?,
        AcMode::Target => gh_target_dims(dim_w, dim_u, p as usize, q as usize),
    };
    let mode_name = match mode {
        AcMode::Brute => "brute",
        AcMode::Formula => "formula",
        AcMode::Target => "target",
    };
    let mut r = Report::new(
        "ac-dims",
        "invariants of S(S²N)⊗S(N⊗W)⊗Λ(N^∨⊗U) (A) and S(Λ²N)⊗Λ(N⊗W)⊗S(N^∨⊗U) (C)",
    )
    .input("variant", variant.to_string())
    .input("g", g)
    .input("dims", vec![dim_w, dim_u])
    .input("p", p)
    .input("q", q)
    .input("r", r_deg)
    .input("mode", mode_name)
    .input("group", group.to_string());
    r.field("dim", dim);
    r.table = Table::new(&["variant", "g", "p", "q", "r", "mode", "dim"]);
    r.table.push(vec![
        variant.to_string(),
        g.to_string(),
        p.to_string(),
        q.to_string(),
        r_deg.to_string(),
        mode_name.into(),
        dim.to_string(),
    ]);
    Ok(r)
}

/// `rows cols` on the first line, then `rows·cols` entries (integers or
/// `p/q`), whitespace separated.
pub fn parse_map(text: &str) -> Result<RationalMatrix> {
    let mut tokens = text.split_whitespace();
    let mut next_usize = |what: &str| -> Result<usize> {
        tokens
            .next()
            .ok_or_else(|| CliError::Input(format!("map file: missing {what}")))?
            .parse()
            .map_err(|_| CliError::Input(format!("map file: bad {what}")))
    };
    let rows = next_usize("row count")?;
    let cols = next_usize("column count")?;
    let entries: Vec<&str> = tokens.collect();
    if entries.len() != rows * cols {
        return Err(CliError::Input(format!(
            "map file: expected {} entries, found {}",
            rows * cols,
            entries.len()
        )));
    }
    let values = entries
        .iter()
        .map(|e| {
            e.parse::<Rational>()
                .map_err(|_| CliError::Input(format!("map file: bad entry {e}")))
        })
        .collect::<Result<Vec<_>>>()?;
    let data = if cols == 0 {
        vec![Vec::new(); rows]
    } else {
        values.chunks(cols).map(|c| c.to_vec()).collect()
    };
    Ok(RationalMatrix::from_rows(cols, data))
}

pub fn koszul(path: &Path, maxdeg: u32) -> Result<Report> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("cannot read {}: {e}", path.display())))?;
    let f = parse_map(&text)?;
    if f.rows() > 5 || f.cols() > 5 || maxdeg > 8 {
        return Err(CliError::Input(format!(
            "requires dim X, dim Y ≤ 5 and maxdeg ≤ 8 (got {}×{}, maxdeg {maxdeg})",
            f.rows(),
            f.cols()
        )));
    }
    let spec = KoszulComplexSpec::new(f);
    let dims = koszul_cohomology(&spec, maxdeg);
    let predicted = spec.predicted_dims(maxdeg);
    let rank = spec.f.rank();
    let mut r = Report::new("koszul", "Koszul model Λ(Y)⊗S(X), d|Y = F, has H = Λ(ker F)⊗S(coker F)")
        .input("map_file", path.display().to_string())
        .input("rows", spec.f.rows())
        .input("cols", spec.f.cols())
        .input("maxdeg", maxdeg);
    r.field("rank", rank);
    r.field("dims", dims.clone());
    r.field("predicted", predicted.clone());
    r.field("generators", gens_json(&spec.generators()));
    r.table = Table::new(&["degree", "dim", "predicted"]);
    for d in 0..dims.len() {
        r.table
            .push(vec![d.to_string(), dims[d].to_string(), predicted[d].to_string()]);
    }
    if let Some(d) = (0..dims.len()).find(|&d| dims[d] != predicted[d]) {
        r.failure = Some(format!("degree {d}: H = {} but Λ(ker)⊗S(coker) = {}", dims[d], predicted[d]));
    }
    Ok(r)
}

fn params_input(r: Report, p: &ModelParams) -> Report {
    r.input("n", p.n).input("g", p.g).input("M", p.m_max).input("maxdeg", p.maxdeg)
}

pub fn e3(params: &ModelParams) -> Result<Report> {
    let column = e3_zero_column(params)?;
    let spaces = build_spaces(params);
    let mut r = params_input(
        Report::new("e3", "evaluation spectral sequence: D^{*,*} is concentrated in column 0, which is Λ(K(n))"),
        params,
    );
    r.field("dims", column.clone());
    r.field("generators", gens_json(&spaces.k_generators()));
    r.table = dims_table(&column);
    Ok(r)
}

pub fn oracle_e2(params: &ModelParams) -> Result<Report> {
    let report = e2_bruteforce_oracle(params)?;
    let e2 = E2Model::new(params)?;
    let mut r = params_input(
        Report::new("oracle-e2", "explicit E2 page with d2 on SL-invariants against the D^{*,*} model"),
        params,
    );
    let mut cells = Vec::new();
    r.table = Table::new(&["p", "q", "oracle", "model"]);
    let t = report.oracle.truncation;
    for s in 0..=t {
        for p in 0..=s {
            let (o, m) = (report.oracle.get(p, s - p), report.model.get(p, s - p));
            cells.push(json!({ "p": p, "q": s - p, "oracle": o, "model": m }));
            r.table
                .push(vec![p.to_string(), (s - p).to_string(), o.to_string(), m.to_string()]);
        }
    }
    r.field("cells", cells);
    r.field("dims", report.oracle.total_dims());
    r.field("generators", gens_json(e2.generators()));
    let mism = report.mismatches();
    r.field(
        "mismatches",
        mism.iter().map(|(p, q)| vec![*p, *q]).collect::<Vec<_>>(),
    );
    if let Err(e) = report.ensure_match() {
        r.failure = Some(e.to_string());
    }
    Ok(r)
}

pub fn mt(n: u32, maxdeg: u32) -> Result<Report> {
    let rep = mt_cohomology(n, maxdeg)?;
    let mut r = Report::new("mt", "rational cohomology of the Madsen-Tillmann spectrum MTθ_n in low degrees")
        .input("n", n)
        .input("maxdeg", maxdeg);
    r.field("dims", rep.dims.clone());
    r.field("generators", gens_json(&rep.presentation.gens));
    r.field("killed", rep.killed());
    r.table = dims_table(&rep.dims);
    Ok(r)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Space {
    Mt,
    Diff,
    Blockdiff,
    Tangential,
}

pub fn cohomology(space: Space, params: &ModelParams, rule: PairRule, extended: bool) -> Result<Report> {
    let rule_name = match rule {
        PairRule::DegreeAboveOne => "degree-above-one",
        PairRule::DegreePositive => "degree-positive",
    };
    match space {
        Space::Mt => unreachable!("the MT spectrum takes no model parameters; see `mt`"),
        Space::Diff => {
            let rep = diff_cohomology(params)?;
            let mut r = params_input(
                Report::new(
                    "cohomology",
                    "H*(BDiff∂(U^n_{g,1});Q) in the stable range: tautological, k-class and pair presentations",
                ),
                params,
            )
            .input("space", "diff")
            .input("pair_rule", rule_name);
            r.field("dims", rep.dims().to_vec());
            r.field("generators", gens_json(&rep.pairs.presentation.gens));
            r.field(
                "presentations",
                json!({
                    "tautological": { "dims": rep.tautological.dims, "generators": gens_json(&rep.tautological.presentation.gens), "killed": rep.tautological.killed() },
                    "k_classes": { "dims": rep.k_classes.dims, "generators": gens_json(&rep.k_classes.presentation.gens), "killed": rep.k_classes.killed() },
                    "pairs": { "dims": rep.pairs.dims, "generators": gens_json(&rep.pairs.presentation.gens) },
                }),
            );
            r.field("basis", rep.basis());
            r.table = Table::new(&["degree", "tautological", "k_classes", "pairs"]);
            for d in 0..rep.dims().len() {
                r.table.push(vec![
                    d.to_string(),
                    rep.tautological.dims[d].to_string(),
                    rep.k_classes.dims[d].to_string(),
                    rep.pairs.dims[d].to_string(),
                ]);
            }
            Ok(r)
        }
        Space::Blockdiff | Space::Tangential => {
            let rep = blockdiff_cohomology(params, extended, rule)?;
            let tangential = space == Space::Tangential;
            let mut r = params_input(
                if tangential {
                    Report::new("cohomology", "tangential stage: Λ(K(n) ⊕ B) with Borel classes B")
                } else {
                    Report::new("cohomology", "block diffeomorphisms: Λ(K_pairs ⊕ B) with Borel classes B")
                },
                params,
            )
            .input("space", if tangential { "tangential" } else { "blockdiff" })
            .input("pair_rule", rule_name)
            .input("extended", extended);
            let (dims, gens) = if tangential {
                (&rep.tangential_dims, &rep.tangential_generators)
            } else {
                (&rep.dims, &rep.generators)
            };
            r.field("dims", dims.clone());
            r.field("generators", space_gens_json(gens));
            if !tangential {
                r.field("basis", rep.basis());
            }
            r.field("discrepancies", rep.discrepancies.clone());
            r.table = dims_table(dims);
            Ok(r)
        }
    }
}

pub fn verify_all() -> Report {
    // timings go to stderr only, so the report itself is deterministic
    let mut r = Report::new("verify-all", "acceptance suite");
    let results = verify::run_all();
    r.table = Table::new(&["id", "name", "passed", "checks", "budget", "detail"]);
    let mut rows = Vec::new();
    for c in &results {
        eprintln!("{c}");
        rows.push(json!({
            "id": c.id,
            "name": c.name,
            "passed": c.ok(),
            "checks": c.checks,
            "detail": c.detail,
            "budget_seconds": c.budget.as_secs(),
        }));
        r.table.push(vec![
            c.id.to_string(),
            c.name.into(),
            c.ok().to_string(),
            c.checks.to_string(),
            c.budget.as_secs().to_string(),
            c.detail.clone(),
        ]);
    }
    r.field("criteria", rows);
    let failed: Vec<String> = results.iter().filter(|c| !c.ok()).map(|c| c.id.to_string()).collect();
    r.field("all_passed", failed.is_empty());
    if !failed.is_empty() {
        r.failure = Some(format!("criteria {} failed", failed.join(", ")));
    }
    r
}
