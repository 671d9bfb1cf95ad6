//! `invalg`: batch front end for the invariant-theory and cohomology
//! computations. Every subcommand prints (or writes with `--output`) one
//! report in JSON, CSV or text.
//!
//! Exit status: 0 on success, 1 for invalid parameters, 2 when two
//! independent computations disagree.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use invalg::invariants::Group;
use invalg::model::{AcVariant, ModelParams, PairRule};
use invalg::schur::{Partition, PartitionFilter};

use commands::{AcMode, Space};
use report::{Format, Report};

#[derive(Debug)]
pub enum CliError {
    Input(String),
    Consistency(String),
}

impl From<invalg::Error> for CliError {
    fn from(e: invalg::Error) -> Self {
        if e.is_input_error() {
            CliError::Input(e.to_string())
        } else {
            CliError::Consistency(e.to_string())
        }
    }
}

#[derive(Parser, Debug)]
#[command(name = "invalg", version, about = "Exact invariant theory and cohomology computations")]
struct Cli {
    #[arg(long, value_enum, default_value = "json", global = true)]
    format: Format,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    output: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug)]
struct ModelArgs {
    #[arg(long)]
    n: u32,
    /// Defaults to the smallest admissible genus.
    #[arg(long)]
    g: Option<u32>,
    /// Largest m of the classes L_m; defaults to ⌈(3n−5)/4⌉.
    #[arg(long = "M")]
    m: Option<u32>,
    /// Defaults to n − 3.
    #[arg(long)]
    maxdeg: Option<u32>,
}

impl ModelArgs {
    fn params(&self, default_g: impl Fn(u32, u32) -> u32) -> Result<ModelParams, CliError> {
        if self.n < 5 {
            return Err(CliError::Input(format!("requires n ≥ 5 (got n = {})", self.n)));
        }
        let maxdeg = self.maxdeg.unwrap_or(self.n - 3);
        let g = self.g.unwrap_or_else(|| default_g(self.n, maxdeg));
        let m = self.m.unwrap_or_else(|| ModelParams::minimal_m(self.n));
        Ok(ModelParams::new(self.n, g, m, maxdeg)?)
    }
}

fn smallest_g(n: u32, _maxdeg: u32) -> u32 {
    n - 2
}

/// The presentations of the stable cohomology need `2·maxdeg + 4 ≤ g`.
fn stable_g(n: u32, maxdeg: u32) -> u32 {
    (n - 2).max(2 * maxdeg + 4)
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Littlewood–Richardson coefficient c^κ_{λ,μ}; partitions as "2,1".
    Lr { lambda: Partition, mu: Partition, kappa: Partition },
    /// dim S_λ(Q^g).
    SchurDim { lambda: Partition, g: u32 },
    /// Partitions of n.
    Partitions {
        n: u32,
        /// all, even-rows or even-cols.
        #[arg(long, default_value = "all")]
        filter: String,
    },
    /// Dimension of the invariants in V^{⊗k} ⊗ V^{∨⊗l}, dim V = g.
    Invariants {
        k: usize,
        l: usize,
        g: usize,
        #[arg(long, default_value = "GL")]
        group: Group,
    },
    /// Span and rank of σ: Q[S_m] → End(V^{⊗m}) against the invariants.
    FftCheck { m: usize, g: usize },
    /// Cauchy dimension identities for dim V, dim W.
    CauchyCheck {
        /// "v,w" (or a single value for both).
        #[arg(long, default_value = "3,3")]
        dims: String,
        #[arg(long, default_value_t = 6)]
        maxdeg: u32,
    },
    /// Invariants of the (p, q, r) cell of A or C.
    AcDims {
        #[arg(long)]
        variant: AcVariant,
        #[arg(long)]
        g: usize,
        /// "dim W,dim U".
        #[arg(long, default_value = "2,2")]
        dims: String,
        #[arg(long)]
        p: u32,
        #[arg(long)]
        q: u32,
        /// Defaults to 2p + q.
        #[arg(long)]
        r: Option<u32>,
        #[arg(long, value_enum, default_value = "brute")]
        mode: AcMode,
        #[arg(long, default_value = "GL")]
        group: Group,
    },
    /// Cohomology of the Koszul model of a linear map.
    Koszul {
        #[arg(long)]
        map_file: PathBuf,
        #[arg(long, default_value_t = 8)]
        maxdeg: u32,
    },
    /// The zero column of the D^{*,*} model.
    E3(ModelArgs),
    /// The explicit E2 page with d2 against the D^{*,*} model.
    OracleE2(ModelArgs),
    /// Low-degree cohomology of the Madsen–Tillmann spectrum.
    Mt {
        #[arg(long)]
        n: u32,
        #[arg(long, default_value_t = 1)]
        maxdeg: u32,
    },
    /// Cohomology rings: mt, diff, blockdiff or tangential.
    Cohomology {
        #[arg(long, value_enum)]
        space: Space,
        #[command(flatten)]
        model: ModelArgs,
        /// Keep pair classes of degree 1 as well.
        #[arg(long)]
        degree_positive_pairs: bool,
        /// Allow maxdeg = n − 3 for blockdiff/tangential.
        #[arg(long)]
        extended: bool,
    },
    /// Run the acceptance suite.
    VerifyAll,
}

fn parse_pair(s: &str) -> Result<(usize, usize), CliError> {
    let parts: Vec<&str> = s.split(',').map(str::trim).collect();
    let num = |t: &str| {
        t.parse::<usize>()
            .map_err(|_| CliError::Input(format!("bad dimension list {s}")))
    };
    match parts.as_slice() {
        [a] => Ok((num(a)?, num(a)?)),
        [a, b] => Ok((num(a)?, num(b)?)),
        _ => Err(CliError::Input(format!("expected one or two dimensions, got {s}"))),
    }
}

fn run(cmd: Command) -> Result<Report, CliError> {
    Ok(match cmd {
        Command::Lr { lambda, mu, kappa } => commands::lr(&lambda, &mu, &kappa),
        Command::SchurDim { lambda, g } => commands::schur_dim_cmd(&lambda, g),
        Command::Partitions { n, filter } => {
            let f: PartitionFilter = filter.parse()?;
            commands::partitions(n, f, &filter)
        }
        Command::Invariants { k, l, g, group } => commands::invariants(k, l, g, group)?,
        Command::FftCheck { m, g } => commands::fft_check(m, g)?,
        Command::CauchyCheck { dims, maxdeg } => {
            let (v, w) = parse_pair(&dims)?;
            if v > 3 || w > 3 || maxdeg > 8 {
                return Err(CliError::Input(format!(
                    "requires dims ≤ 3 and maxdeg ≤ 8 (got {v},{w}, maxdeg {maxdeg})"
                )));
            }
            commands::cauchy_check(v as u32, w as u32, maxdeg)
        }
        Command::AcDims {
            variant,
            g,
            dims,
            p,
            q,
            r,
            mode,
            group,
        } => commands::ac_dims(variant, g, parse_pair(&dims)?, p, q, r, mode, group)?,
        Command::Koszul { map_file, maxdeg } => commands::koszul(&map_file, maxdeg)?,
        Command::E3(m) => commands::e3(&m.params(smallest_g)?)?,
        Command::OracleE2(m) => commands::oracle_e2(&m.params(smallest_g)?)?,
        Command::Mt { n, maxdeg } => commands::mt(n, maxdeg)?,
        Command::Cohomology {
            space,
            model,
            degree_positive_pairs,
            extended,
        } => {
            let rule = if degree_positive_pairs {
                PairRule::DegreePositive
            } else {
                PairRule::default()
            };
            if space == Space::Mt {
                let maxdeg = model.maxdeg.unwrap_or(1);
                commands::mt(model.n, maxdeg).map(|mut r| {
                    r.command = "cohomology";
                    r.inputs.insert("space".into(), "mt".into());
                    r
                })?
            } else {
                let mut model = model;
                if model.maxdeg.is_none() && space != Space::Diff && !extended {
                    model.maxdeg = Some(model.n.saturating_sub(4));
                }
                let params = model.params(stable_g)?;
                commands::cohomology(space, &params, rule, extended)?
            }
        }
        Command::VerifyAll => commands::verify_all(),
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let report = match run(cli.command) {
        Ok(r) => r,
        Err(CliError::Input(msg)) => {
            eprintln!("error: {msg}");
            return ExitCode::from(1);
        }
        Err(CliError::Consistency(msg)) => {
            eprintln!("consistency failure: {msg}");
            return ExitCode::from(2);
        }
    };
    let text = report.render(cli.format);
    match &cli.output {
        Some(path) => {
            if let Err(e) = std::fs::write(path, &text) {
                eprintln!("error: cannot write {}: {e}", path.display());
                return ExitCode::from(1);
            }
        }
        None => print!("{text}"),
    }
    match report.failure {
        Some(f) => {
            eprintln!("consistency failure: {f}");
            ExitCode::from(2)
        }
        None => ExitCode::SUCCESS,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn error_classes_map_to_exit_codes() {
        let e = invalg::Error::Inconsistent {
            context: "x".into(),
            cell: "(1,2)".into(),
        };
        assert!(matches!(CliError::from(e), CliError::Consistency(m) if m.contains("(1,2)")));
        let e = invalg::Error::BoundViolation("requires g > n−3".into());
        assert!(matches!(CliError::from(e), CliError::Input(_)));
    }

    #[test]
    fn model_defaults() {
        let m = ModelArgs {
            n: 9,
            g: None,
            m: None,
            maxdeg: Some(5),
        };
        let p = m.params(stable_g).unwrap();
        assert_eq!((p.g, p.m_max), (14, 6));
        assert_eq!(m.params(smallest_g).unwrap().g, 7);
    }
}
