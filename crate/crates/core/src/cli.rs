//! The `pavingehr` command line. [`run`] returns the exit code and the text
//! to print, so the binary is a thin wrapper and tests need no subprocess.

use std::fs;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use serde_json::{json, Value};

use crate::designs::{
    ehrhart_projective_plane, plane_known_to_exist, steiner_to_profile, validate_steiner, volume_projective_plane,
    SteinerSystem,
};
use crate::ehrhart::{ehrhart_hypersimplex, ehrhart_panhandle, ehrhart_paving};
use crate::error::{Error, Result};
use crate::exactmath::{factorial, format_rational, set_table_limit, Polynomial, Rational};
use crate::matroid::{panhandle_basis_count, Matroid, MatroidJson, PanhandleParams, PavingProfile};
use crate::oracle::{count_matroid_points, count_panhandle_points};
use crate::par::{with_jobs, Strategy};
use crate::positivity::{
    verify_big_conjecture, verify_genfunc, verify_phi_positive, verify_tilde_phi_positive, verify_weighted_lah,
    VerificationReport,
};
use crate::volume::{hypersimplex_volume, volume_panhandle, volume_paving};

pub const EXIT_OK: i32 = 0;
pub const EXIT_COUNTEREXAMPLE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(name = "pavingehr", version, about = "Exact Ehrhart polynomials and volumes of paving matroids")]
struct Cli {
    /// Worker threads; output does not depend on it.
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    /// Largest row kept in the Eulerian and Stirling tables.
    #[arg(long, global = true)]
    table_limit: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Ehrhart polynomial, coefficients in increasing degree.
    #[command(subcommand)]
    Ehrhart(Target),
    /// Normalized volume.
    #[command(subcommand)]
    Volume(Target),
    /// Brute-force lattice-point count of the t-th dilate.
    #[command(subcommand)]
    Oracle(OracleTarget),
    /// Exhaustive checks over parameter ranges.
    #[command(subcommand)]
    Verify(VerifyTarget),
    /// Panhandle basis counts, volumes and Ehrhart coefficients for n <= n-max.
    Sweep {
        #[arg(long, default_value_t = 6)]
        n_max: usize,
    },
}

#[derive(Subcommand, Debug)]
enum Target {
    Hypersimplex {
        #[arg(long)]
        r: usize,
        #[arg(long)]
        n: usize,
    },
    Panhandle(PanArgs),
    /// From a profile file or an explicit paving matroid.
    Paving {
        #[arg(long, conflicts_with = "matroid", required_unless_present = "matroid")]
        profile: Option<PathBuf>,
        #[arg(long)]
        matroid: Option<PathBuf>,
    },
    /// From parameters or a Steiner JSON file.
    Steiner {
        #[arg(long, requires_all = ["k", "n"], conflicts_with = "steiner", required_unless_present = "steiner")]
        t: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        steiner: Option<PathBuf>,
    },
    /// Projective plane of order q.
    Plane {
        #[arg(long)]
        q: usize,
    },
}

#[derive(Args, Debug)]
struct PanArgs {
    #[arg(long)]
    r: usize,
    #[arg(long)]
    s: usize,
    #[arg(long)]
    n: usize,
}

#[derive(Subcommand, Debug)]
enum OracleTarget {
    Panhandle {
        #[command(flatten)]
        pan: PanArgs,
        #[arg(long)]
        t: u64,
    },
    Matroid {
        #[arg(long)]
        matroid: PathBuf,
        #[arg(long)]
        t: u64,
    },
}

#[derive(Subcommand, Debug)]
enum VerifyTarget {
    BigConjecture {
        #[arg(long, default_value_t = 5)]
        max_s: usize,
    },
    PhiPositive {
        #[arg(long, default_value_t = 10)]
        max_s: usize,
        #[arg(long, default_value_t = 4)]
        max_extra: usize,
    },
    TildePhiPositive {
        #[arg(long, default_value_t = 10)]
        max_s: usize,
        #[arg(long, default_value_t = 4)]
        max_extra: usize,
    },
    Genfunc {
        #[arg(long, default_value_t = 6)]
        max_s: usize,
        #[arg(long, default_value_t = 3)]
        max_extra: usize,
        #[arg(long, default_value_t = 3)]
        max_u: usize,
    },
    WeightedLah {
        #[arg(long, default_value_t = 7)]
        n_max: usize,
    },
}

/// Parses `argv` (program name first) and executes it.
pub fn run<I, S>(argv: I) -> (i32, String)
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            return (code, e.render().to_string());
        }
    };
    if let Some(limit) = cli.table_limit {
        set_table_limit(limit);
    }
    let jobs = cli.jobs;
    match with_jobs(jobs, move || execute(&cli)).and_then(|r| r) {
        Ok((code, out)) => (code, out),
        Err(e) => (EXIT_USAGE, format!("error: {e}\n")),
    }
}

fn execute(cli: &Cli) -> Result<(i32, String)> {
    match &cli.command {
        Command::Ehrhart(target) => {
            let (params, ehr, formula_only) = ehrhart_of(target)?;
            let format = cli.format.unwrap_or(Format::Json);
            Ok((EXIT_OK, render_polynomial(params, &ehr, formula_only, format)))
        }
        Command::Volume(target) => {
            let (params, vol, formula_only) = volume_of(target)?;
            Ok((EXIT_OK, render_volume(params, &vol, formula_only, cli.format.unwrap_or(Format::Json))))
        }
        Command::Oracle(target) => {
            let (t, count) = match target {
                OracleTarget::Panhandle { pan, t } => (*t, count_panhandle_points(&panhandle(pan)?, *t)?),
                OracleTarget::Matroid { matroid, t } => (*t, count_matroid_points(&read_matroid(matroid)?, *t)?),
            };
            let out = match cli.format.unwrap_or(Format::Csv) {
                Format::Csv => format!("t,count\n{t},{count}\n"),
                Format::Json => json_line(&json!({"t": t.to_string(), "count": count.to_string()})),
            };
            Ok((EXIT_OK, out))
        }
        Command::Verify(target) => {
            let strategy = Strategy::Parallel;
            let report = match *target {
                VerifyTarget::BigConjecture { max_s } => verify_big_conjecture(max_s, strategy)?,
                VerifyTarget::PhiPositive { max_s, max_extra } => verify_phi_positive(max_s, max_extra, strategy),
                VerifyTarget::TildePhiPositive { max_s, max_extra } => {
                    verify_tilde_phi_positive(max_s, max_extra, strategy)
                }
                VerifyTarget::Genfunc { max_s, max_extra, max_u } => verify_genfunc(max_s, max_extra, max_u, strategy),
                VerifyTarget::WeightedLah { n_max } => verify_weighted_lah(n_max, strategy)?,
            };
            Ok((exit_for(&report), render_report(&report, cli.format.unwrap_or(Format::Json))))
        }
        Command::Sweep { n_max } => sweep(*n_max, cli.format.unwrap_or(Format::Csv)),
    }
}

fn exit_for(report: &VerificationReport) -> i32 {
    if report.is_certified() {
        EXIT_OK
    } else {
        EXIT_COUNTEREXAMPLE
    }
}

fn panhandle(a: &PanArgs) -> Result<PanhandleParams> {
    PanhandleParams::new(a.r, a.s, a.n)
}

fn read_file(path: &PathBuf) -> Result<String> {
    fs::read_to_string(path).map_err(|e| Error::Parse(format!("cannot read {}: {e}", path.display())))
}

fn read_matroid(path: &PathBuf) -> Result<Matroid> {
    Matroid::from_json_str(&read_file(path)?)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn read_profile(path: &PathBuf) -> Result<PavingProfile> {
    PavingProfile::from_json_str(&read_file(path)?)
        .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))
}

fn profile_of_matroid(m: &Matroid) -> Result<PavingProfile> {
    if !m.is_connected() {
        return Err(Error::Unsupported("paving formulas need a connected matroid".into()));
    }
    m.paving_profile()
}

/// Resolves a Steiner target to its profile; explicit blocks must validate.
fn steiner_profile(
    t: Option<usize>,
    k: Option<usize>,
    n: Option<usize>,
    file: &Option<PathBuf>,
) -> Result<(Value, PavingProfile, bool)> {
    let sys = match (file, t, k, n) {
        (Some(path), ..) => SteinerSystem::from_json_str(&read_file(path)?)
            .map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?,
        (None, Some(t), Some(k), Some(n)) => SteinerSystem::from_parameters(t, k, n)?,
        _ => return Err(Error::InvalidParameters("steiner needs --t --k --n or --steiner FILE".into())),
    };
    if sys.blocks.is_some() && !validate_steiner(&sys) {
        return Err(Error::Parse(format!(
            "field \"blocks\": not a Steiner system S({},{},{})",
            sys.t, sys.k, sys.n
        )));
    }
    let params = json!({"t": sys.t.to_string(), "k": sys.k.to_string(), "n": sys.n.to_string()});
    Ok((params, steiner_to_profile(&sys)?, sys.blocks.is_none()))
}

fn profile_target(profile: &Option<PathBuf>, matroid: &Option<PathBuf>) -> Result<(Value, PavingProfile)> {
    let p = match (profile, matroid) {
        (Some(path), _) => read_profile(path)?,
        (None, Some(path)) => profile_of_matroid(&read_matroid(path)?)?,
        (None, None) => return Err(Error::InvalidParameters("paving needs --profile or --matroid".into())),
    };
    Ok((p.to_json_value(), p))
}

fn ehrhart_of(target: &Target) -> Result<(Value, Polynomial, bool)> {
    Ok(match target {
        Target::Hypersimplex { r, n } => (
            json!({"kind": "hypersimplex", "r": r.to_string(), "n": n.to_string()}),
            ehrhart_hypersimplex(*r, *n)?,
            false,
        ),
        Target::Panhandle(a) => {
            let p = panhandle(a)?;
            (pan_params(&p), ehrhart_panhandle(&p), false)
        }
        Target::Paving { profile, matroid } => {
            let (params, p) = profile_target(profile, matroid)?;
            (json!({"kind": "paving", "profile": params}), ehrhart_paving(&p)?, false)
        }
        Target::Steiner { t, k, n, steiner } => {
            let (params, p, formula_only) = steiner_profile(*t, *k, *n, steiner)?;
            (json!({"kind": "steiner", "params": params}), ehrhart_paving(&p)?, formula_only)
        }
        Target::Plane { q } => (
            json!({"kind": "plane", "q": q.to_string()}),
            ehrhart_projective_plane(*q)?,
            !plane_known_to_exist(*q),
        ),
    })
}

fn volume_of(target: &Target) -> Result<(Value, BigInt, bool)> {
    Ok(match target {
        Target::Hypersimplex { r, n } => (
            json!({"kind": "hypersimplex", "r": r.to_string(), "n": n.to_string()}),
            hypersimplex_volume(*r, *n)?,
            false,
        ),
        Target::Panhandle(a) => {
            let p = panhandle(a)?;
            (pan_params(&p), volume_panhandle(&p), false)
        }
        Target::Paving { profile, matroid } => {
            let (params, p) = profile_target(profile, matroid)?;
            (json!({"kind": "paving", "profile": params}), volume_paving(&p)?, false)
        }
        Target::Steiner { t, k, n, steiner } => {
            let (params, p, formula_only) = steiner_profile(*t, *k, *n, steiner)?;
            (json!({"kind": "steiner", "params": params}), volume_paving(&p)?, formula_only)
        }
        Target::Plane { q } => (
            json!({"kind": "plane", "q": q.to_string()}),
            volume_projective_plane(*q)?,
            !plane_known_to_exist(*q),
        ),
    })
}

fn pan_params(p: &PanhandleParams) -> Value {
    json!({"kind": "panhandle", "r": p.r.to_string(), "s": p.s.to_string(), "n": p.n.to_string()})
}

fn json_line(v: &Value) -> String {
    let mut s = serde_json::to_string(v).expect("JSON value serializes");
    s.push('\n');
    s
}

fn render_polynomial(params: Value, ehr: &Polynomial, formula_only: bool, format: Format) -> String {
    match format {
        Format::Json => json_line(&json!({"input": params, "ehrhart": ehr.to_json_value(), "formula_only": formula_only})),
        Format::Csv => {
            let mut out = String::from("degree,coefficient\n");
            for (i, c) in ehr.coeffs().iter().enumerate() {
                out.push_str(&format!("{i},{}\n", format_rational(c)));
            }
            out
        }
    }
}

fn render_volume(params: Value, vol: &BigInt, formula_only: bool, format: Format) -> String {
    match format {
        Format::Json => json_line(&json!({"input": params, "volume": vol.to_string(), "formula_only": formula_only})),
        Format::Csv => format!("volume\n{vol}\n"),
    }
}

fn render_report(report: &VerificationReport, format: Format) -> String {
    match format {
        Format::Json => json_line(&report.to_json_value()),
        Format::Csv => {
            let mut out = String::from("status,tuples_checked,counterexamples\n");
            out.push_str(&format!(
                "{},{},{}\n",
                report.status(),
                report.tuples_checked(),
                report.counterexamples().len()
            ));
            out
        }
    }
}

fn sweep(n_max: usize, format: Format) -> Result<(i32, String)> {
    if n_max > 30 {
        return Err(Error::GuardExceeded(format!("sweep limited to n <= 30, got {n_max}")));
    }
    let params = PanhandleParams::all_up_to(n_max);
    let rows = Strategy::Parallel.map(&params, |p| {
        let ehr = ehrhart_panhandle(p);
        let vol = volume_panhandle(p);
        debug_assert_eq!(ehr.leading_coeff() * Rational::from(factorial(p.n - 1)), Rational::from(vol.clone()));
        (*p, panhandle_basis_count(p), vol, ehr)
    });
    let out = match format {
        Format::Csv => {
            let mut out = String::from("r,s,n,bases,volume,ehrhart\n");
            for (p, bases, vol, ehr) in &rows {
                let coeffs: Vec<String> = ehr.coeffs().iter().map(format_rational).collect();
                out.push_str(&format!("{},{},{},{bases},{vol},{}\n", p.r, p.s, p.n, coeffs.join(" ")));
            }
            out
        }
        Format::Json => json_line(&Value::Array(
            rows.iter()
                .map(|(p, bases, vol, ehr)| {
                    json!({
                        "r": p.r.to_string(), "s": p.s.to_string(), "n": p.n.to_string(),
                        "bases": bases.to_string(), "volume": vol.to_string(), "ehrhart": ehr.to_json_value(),
                    })
                })
                .collect(),
        )),
    };
    Ok((EXIT_OK, out))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cli(args: &str) -> (i32, String) {
        run(std::iter::once("pavingehr").chain(args.split_whitespace()))
    }

    #[test]
    fn plane_json() {
        let (code, out) = cli("ehrhart plane --q 2 --format json");
        assert_eq!(code, 0);
        assert_eq!(
            out,
            "{\"ehrhart\":{\"coeffs\":[\"1/1\",\"21/5\",\"343/45\",\"63/8\",\"91/18\",\"77/40\",\"29/90\"],\
             \"var\":\"t\"},\"formula_only\":false,\"input\":{\"kind\":\"plane\",\"q\":\"2\"}}\n"
        );
    }

    #[test]
    fn oracle_row_and_usage_errors() {
        assert_eq!(cli("oracle panhandle --r 2 --s 2 --n 4 --t 1"), (0, "t,count\n1,5\n".into()));
        assert_eq!(cli("ehrhart panhandle --r 3 --s 2 --n 4").0, 2);
        assert_eq!(cli("ehrhart nonsense").0, 2);
        assert_eq!(cli("--jobs 0 volume plane --q 2").0, 2);
        assert_eq!(cli("--help").0, 0);
    }

    #[test]
    fn volumes() {
        let (code, out) = cli("volume plane --q 2");
        assert_eq!(code, 0);
        assert!(out.contains("\"volume\":\"232\""));
        assert_eq!(cli("volume panhandle --r 3 --s 3 --n 7 --format csv").1, "volume\n10\n");
        assert!(cli("volume plane --q 6").1.contains("\"formula_only\":true"));
        assert!(cli("ehrhart steiner --t 2 --k 3 --n 7").1.contains("\"formula_only\":true"));
    }
}
