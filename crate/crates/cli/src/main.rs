//! Command-line surface: pointwise evaluation, value tables, series
//! dumps, solution-claim verification and Laplace-pair checks, with
//! deterministic JSON/CSV/plain output.
//!
//! Exit codes: 0 when every requested check passes, 1 when a check ran
//! and failed (including tails or series that could not be certified),
//! 2 when no check ran because the invocation was invalid.

mod output;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use output::{
    claim_plain_line, eigen_doc, eval_doc, laplace_doc, residual_doc, table_csv, ClaimDoc,
    SeriesDoc, TableRowDoc,
};
use wrightfn::series::{higher_order_series, wright_series, GenPowerSeries, SeriesSpec, Sign};
use wrightfn::special::{
    bessel_clifford, bessel_i_wright, bessel_j_wright, ml_eval, tricomi_c0, tricomi_jt,
    wright_eval, wright_gen_bessel, EvalResult, WrightParams,
};
use wrightfn::transforms::{check_laplace_first_kind, check_laplace_second_kind};
use wrightfn::verify::{
    claim_passes, verify_eq1, verify_higher_order, verify_prop41, verify_prop42, verify_prop43,
    verify_remark, verify_theorem31, VerifyConfig, Window,
};
use wrightfn::Error;

#[derive(Parser)]
#[command(
    name = "wrightfn",
    version,
    about = "Wright-function evaluation, Caputo series operators, and identity verification"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format (defaults: plain for eval, csv for table, json
    /// for series/verify/laplace)
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
    /// Write output to a file instead of stdout
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Plain,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum EvalSelector {
    Wright,
    Ml,
    C0,
    Besselj,
    Besseli,
    Clifford,
    #[value(name = "tricomi-jt")]
    TricomiJt,
    Genbessel,
}

impl EvalSelector {
    fn name(self) -> &'static str {
        match self {
            EvalSelector::Wright => "wright",
            EvalSelector::Ml => "ml",
            EvalSelector::C0 => "c0",
            EvalSelector::Besselj => "besselj",
            EvalSelector::Besseli => "besseli",
            EvalSelector::Clifford => "clifford",
            EvalSelector::TricomiJt => "tricomi-jt",
            EvalSelector::Genbessel => "genbessel",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SeriesSelector {
    Wright,
    Higher,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ClaimSelector {
    Eq1,
    Thm31,
    Higher,
    Prop41,
    Remark,
    Prop42,
    Prop43,
    All,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum KindSelector {
    First,
    Second,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SignArg {
    #[value(name = "plus", alias = "+")]
    Plus,
    #[value(name = "minus", alias = "-")]
    Minus,
}

impl From<SignArg> for Sign {
    fn from(s: SignArg) -> Sign {
        match s {
            SignArg::Plus => Sign::Plus,
            SignArg::Minus => Sign::Minus,
        }
    }
}

#[derive(Args)]
struct FnParams {
    /// Wright gamma slope lambda (wright, genbessel)
    #[arg(long, allow_negative_numbers = true)]
    lambda: Option<f64>,
    /// Wright gamma offset mu (wright) / Mittag-Leffler offset (laplace)
    #[arg(long, allow_negative_numbers = true)]
    mu: Option<f64>,
    /// Mittag-Leffler slope alpha (ml)
    #[arg(long, allow_negative_numbers = true)]
    alpha: Option<f64>,
    /// Mittag-Leffler offset beta (ml)
    #[arg(long, allow_negative_numbers = true)]
    beta: Option<f64>,
    /// Bessel order nu (besselj, besseli, clifford, tricomi-jt, genbessel)
    #[arg(long, allow_negative_numbers = true)]
    nu: Option<f64>,
    /// Series argument z
    #[arg(long, allow_negative_numbers = true)]
    z: Option<f64>,
    /// Argument t (c0)
    #[arg(long, allow_negative_numbers = true)]
    t: Option<f64>,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long, allow_negative_numbers = true)]
    lambda: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    beta: Option<f64>,
    #[arg(long, allow_negative_numbers = true)]
    nu: Option<f64>,
    /// Nonlinearity exponent m (prop42)
    #[arg(long, allow_negative_numbers = true)]
    m: Option<f64>,
    /// Coefficient-mode truncation order
    #[arg(long, default_value_t = 8)]
    order: usize,
    /// Grid-mode truncation order
    #[arg(long, default_value_t = 40)]
    grid_order: usize,
    /// Absolute tolerance for coefficient residuals
    #[arg(long, default_value_t = 1e-11)]
    coeff_tol: f64,
    /// Relative tolerance for grid residuals
    #[arg(long, default_value_t = 1e-8)]
    grid_tol: f64,
    /// Relative tolerance for the eigenfactor structure check
    #[arg(long, default_value_t = 1e-10)]
    eigen_tol: f64,
    #[arg(long, default_value_t = 0.1, allow_negative_numbers = true)]
    t_from: f64,
    #[arg(long, default_value_t = 2.0, allow_negative_numbers = true)]
    t_to: f64,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    x_from: f64,
    #[arg(long, default_value_t = 3.0, allow_negative_numbers = true)]
    x_to: f64,
    /// Points per grid axis
    #[arg(long, default_value_t = 25)]
    points: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a special function at one point
    Eval {
        selector: EvalSelector,
        #[command(flatten)]
        params: FnParams,
        /// Certified bound on the truncation tail
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Emit a truncated generalized power series
    Series {
        selector: SeriesSelector,
        #[command(flatten)]
        params: FnParams,
        #[arg(long)]
        sign: Option<SignArg>,
        /// Exponent step of the series variable
        #[arg(long)]
        power: Option<f64>,
        #[arg(long, default_value_t = 8)]
        order: usize,
    },
    /// Tabulate a special function over a window
    Table {
        selector: EvalSelector,
        #[command(flatten)]
        params: FnParams,
        #[arg(long, allow_negative_numbers = true)]
        from: f64,
        #[arg(long, allow_negative_numbers = true)]
        to: f64,
        #[arg(long)]
        points: usize,
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
    },
    /// Verify a solution claim (coefficient and grid residuals)
    Verify {
        claim: ClaimSelector,
        #[command(flatten)]
        args: VerifyArgs,
    },
    /// Check a Laplace-transform pair against its closed form
    Laplace {
        kind: KindSelector,
        #[command(flatten)]
        params: FnParams,
        #[arg(long)]
        sign: Option<SignArg>,
        /// Transform variables, comma separated
        #[arg(long, value_delimiter = ',', allow_negative_numbers = true, required = true)]
        s: Vec<f64>,
        #[arg(long, default_value_t = 1e-6)]
        tol: f64,
    },
}

/// A failed invocation: `Usage` means no check ran (exit 2), `Check`
/// means a check ran and did not pass (exit 1).
enum Failure {
    Usage(String),
    Check(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 2,
            Failure::Check(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Check(m) => m,
        }
    }
}

/// Maps a library error: parameter-level problems are usage errors;
/// certification failures mean the check ran and failed. In non-check
/// contexts (eval/series/table) everything is a usage failure, since no
/// pass/fail semantics exist there.
fn lift(e: Error, checking: bool) -> Failure {
    match e {
        Error::Domain(_) | Error::Precondition(_) | Error::Invariant(_) => {
            Failure::Usage(e.to_string())
        }
        Error::NonConvergence { .. } | Error::TailNotCertified(_) | Error::Quadrature(_) => {
            if checking {
                Failure::Check(e.to_string())
            } else {
                Failure::Usage(e.to_string())
            }
        }
    }
}

fn req(v: Option<f64>, flag: &str, selector: &str) -> Result<f64, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("{selector} requires --{flag}")))
}

fn evaluate(
    selector: EvalSelector,
    p: &FnParams,
    arg: Option<f64>,
    tol: f64,
) -> Result<EvalResult, Failure> {
    let name = selector.name();
    let lift0 = |e: Error| lift(e, false);
    match selector {
        EvalSelector::Wright => {
            let lambda = req(p.lambda, "lambda", name)?;
            let mu = req(p.mu, "mu", name)?;
            let z = req(arg.or(p.z), "z", name)?;
            let params = WrightParams::new(lambda, mu).map_err(lift0)?;
            wright_eval(params, z, tol).map_err(lift0)
        }
        EvalSelector::Ml => {
            let alpha = req(p.alpha, "alpha", name)?;
            let beta = req(p.beta, "beta", name)?;
            let z = req(arg.or(p.z), "z", name)?;
            ml_eval(alpha, beta, z, tol).map_err(lift0)
        }
        EvalSelector::C0 => {
            let t = req(arg.or(p.t), "t", name)?;
            tricomi_c0(t, tol).map_err(lift0)
        }
        EvalSelector::Besselj => {
            let nu = req(p.nu, "nu", name)?;
            let z = req(arg.or(p.z), "z", name)?;
            bessel_j_wright(nu, z, tol).map_err(lift0)
        }
        EvalSelector::Besseli => {
            let nu = req(p.nu, "nu", name)?;
            let z = req(arg.or(p.z), "z", name)?;
            bessel_i_wright(nu, z, tol).map_err(lift0)
        }
        EvalSelector::Clifford => {
            let nu = req(p.nu, "nu", name)?;
            let z = req(arg.or(p.z), "z", name)?;
            bessel_clifford(nu, z, tol).map_err(lift0)
        }
        EvalSelector::TricomiJt => {
            let nu = req(p.nu, "nu", name)?;
            let z = req(arg.or(p.z), "z", name)?;
            tricomi_jt(nu, z, tol).map_err(lift0)
        }
        EvalSelector::Genbessel => {
            let lambda = req(p.lambda, "lambda", name)?;
            let nu = req(p.nu, "nu", name)?;
            let z = req(arg.or(p.z), "z", name)?;
            wright_gen_bessel(lambda, nu, z, tol).map_err(lift0)
        }
    }
}

fn build_series(
    selector: SeriesSelector,
    p: &FnParams,
    sign: Option<SignArg>,
    power: Option<f64>,
    order: usize,
) -> Result<GenPowerSeries, Failure> {
    let lift0 = |e: Error| lift(e, false);
    match selector {
        SeriesSelector::Wright => {
            let lambda = req(p.lambda, "lambda", "series wright")?;
            let mu = req(p.mu, "mu", "series wright")?;
            let power = req(power, "power", "series wright")?;
            let sign = sign.map(Sign::from).unwrap_or(Sign::Plus);
            let params = WrightParams::new(lambda, mu).map_err(lift0)?;
            let spec = SeriesSpec::new(params, sign, power, order).map_err(lift0)?;
            Ok(wright_series(&spec))
        }
        SeriesSelector::Higher => {
            let beta = req(p.beta, "beta", "series higher")?;
            let nu = req(p.nu, "nu", "series higher")?;
            higher_order_series(beta, nu, order).map_err(lift0)
        }
    }
}

fn verify_config(a: &VerifyArgs) -> Result<VerifyConfig, Failure> {
    let lift0 = |e: Error| lift(e, false);
    Ok(VerifyConfig {
        coeff_tol: a.coeff_tol,
        grid_rel_tol: a.grid_tol,
        eigen_rel_tol: a.eigen_tol,
        grid_order: a.grid_order,
        t_window: Window::new(a.t_from, a.t_to, a.points).map_err(lift0)?,
        x_window: Window::new(a.x_from, a.x_to, a.points).map_err(lift0)?,
        ..VerifyConfig::default()
    })
}

/// Runs one claim with its default parameters unless overridden;
/// returns the report documents and the claim-level verdict.
fn run_claim(
    claim: ClaimSelector,
    a: &VerifyArgs,
    cfg: &VerifyConfig,
) -> Result<(Vec<ClaimDoc>, bool), Failure> {
    let liftc = |e: Error| lift(e, true);
    let n = a.order;
    let residuals = |rs: Vec<wrightfn::verify::ResidualReport>| {
        let pass = claim_passes(&rs);
        let docs = rs.iter().map(|r| ClaimDoc::Residual(residual_doc(r))).collect::<Vec<_>>();
        (docs, pass)
    };
    match claim {
        ClaimSelector::Eq1 => {
            let lambda = a.lambda.unwrap_or(0.5);
            Ok(residuals(verify_eq1(lambda, n, cfg).map_err(liftc)?))
        }
        ClaimSelector::Thm31 => {
            let beta = a.beta.unwrap_or(0.5);
            let nu = a.nu.unwrap_or(0.8);
            Ok(residuals(verify_theorem31(beta, nu, n, cfg).map_err(liftc)?))
        }
        ClaimSelector::Higher => {
            let beta = a.beta.unwrap_or(0.5);
            let nu = a.nu.unwrap_or(1.2);
            let r = verify_higher_order(beta, nu, n, cfg).map_err(liftc)?;
            let pass = r.structure_holds(cfg.eigen_rel_tol);
            Ok((vec![ClaimDoc::Eigen(eigen_doc(&r, pass))], pass))
        }
        ClaimSelector::Prop41 => {
            let beta = a.beta.unwrap_or(0.5);
            let nu = a.nu.unwrap_or(0.8);
            Ok(residuals(verify_prop41(beta, nu, n, cfg).map_err(liftc)?))
        }
        ClaimSelector::Remark => Ok(residuals(verify_remark(n, cfg).map_err(liftc)?)),
        ClaimSelector::Prop42 => {
            let lambda = a.lambda.unwrap_or(0.5);
            let m = a.m.unwrap_or(2.0);
            Ok(residuals(verify_prop42(lambda, m, n, cfg).map_err(liftc)?))
        }
        ClaimSelector::Prop43 => {
            let beta = a.beta.unwrap_or(0.5);
            let nu = a.nu.unwrap_or(0.8);
            Ok(residuals(verify_prop43(beta, nu, n, cfg).map_err(liftc)?))
        }
        ClaimSelector::All => {
            let mut docs = Vec::new();
            let mut all_pass = true;
            for claim in [
                ClaimSelector::Eq1,
                ClaimSelector::Thm31,
                ClaimSelector::Higher,
                ClaimSelector::Prop41,
                ClaimSelector::Remark,
                ClaimSelector::Prop42,
                ClaimSelector::Prop43,
            ] {
                let (mut d, pass) = run_claim(claim, a, cfg)?;
                docs.append(&mut d);
                all_pass &= pass;
            }
            Ok((docs, all_pass))
        }
    }
}

fn emit(out: &Option<PathBuf>, text: String) -> Result<(), Failure> {
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> Result<String, Failure> {
    serde_json::to_string(value)
        .map(|s| s + "\n")
        .map_err(|e| Failure::Usage(format!("serialization failed: {e}")))
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Eval { selector, params, tol } => {
            let r = evaluate(selector, &params, None, tol)?;
            let doc = eval_doc(selector.name(), &r);
            let text = match cli.format.unwrap_or(Format::Plain) {
                Format::Plain => {
                    format!("{} {} {}\n", doc.value, doc.abs_error_bound, doc.terms_used)
                }
                Format::Json => to_json(&doc)?,
                Format::Csv => format!(
                    "value,error_bound,terms_used\n{},{},{}\n",
                    doc.value, doc.abs_error_bound, doc.terms_used
                ),
            };
            emit(&cli.out, text)?;
            Ok(0)
        }
        Command::Series { selector, params, sign, power, order } => {
            let s = build_series(selector, &params, sign, power, order)?;
            let doc = SeriesDoc {
                terms: s.terms().iter().map(|t| (t.coeff, t.exponent)).collect(),
                var: s.var().to_string(),
            };
            let text = match cli.format.unwrap_or(Format::Json) {
                Format::Json => to_json(&doc)?,
                Format::Csv => {
                    let mut out = String::from("coeff,exponent\n");
                    for (c, e) in &doc.terms {
                        out.push_str(&format!("{c},{e}\n"));
                    }
                    out
                }
                Format::Plain => {
                    let mut out = String::new();
                    for (c, e) in &doc.terms {
                        out.push_str(&format!("{c} {e}\n"));
                    }
                    out
                }
            };
            emit(&cli.out, text)?;
            Ok(0)
        }
        Command::Table { selector, params, from, to, points, tol } => {
            if points < 2 {
                return Err(Failure::Usage(format!(
                    "table needs at least 2 points, got {points}"
                )));
            }
            if !(from < to) {
                return Err(Failure::Usage(format!("empty table window [{from}, {to}]")));
            }
            let step = (to - from) / (points - 1) as f64;
            let mut rows = Vec::with_capacity(points);
            for i in 0..points {
                let arg = from + i as f64 * step;
                let r = evaluate(selector, &params, Some(arg), tol)?;
                rows.push(TableRowDoc { arg, error_bound: r.abs_error_bound, value: r.value });
            }
            let text = match cli.format.unwrap_or(Format::Csv) {
                Format::Csv => table_csv(&rows),
                Format::Json => to_json(&rows)?,
                Format::Plain => {
                    let mut out = String::new();
                    for r in &rows {
                        out.push_str(&format!("{} {} {}\n", r.arg, r.value, r.error_bound));
                    }
                    out
                }
            };
            emit(&cli.out, text)?;
            Ok(0)
        }
        Command::Verify { claim, args } => {
            let cfg = verify_config(&args)?;
            let (docs, pass) = run_claim(claim, &args, &cfg)?;
            let text = match cli.format.unwrap_or(Format::Json) {
                Format::Json => to_json(&docs)?,
                Format::Plain => {
                    let mut out = String::new();
                    for d in &docs {
                        out.push_str(&claim_plain_line(d));
                        out.push('\n');
                    }
                    out
                }
                Format::Csv => {
                    return Err(Failure::Usage("verify has no csv representation".to_string()))
                }
            };
            emit(&cli.out, text)?;
            Ok(if pass { 0 } else { 1 })
        }
        Command::Laplace { kind, params, sign, s, tol } => {
            let report = match kind {
                KindSelector::First => {
                    let lambda = req(params.lambda, "lambda", "laplace first")?;
                    let mu = req(params.mu, "mu", "laplace first")?;
                    let sign = sign.map(Sign::from).unwrap_or(Sign::Minus);
                    let p = WrightParams::new(lambda, mu).map_err(|e| lift(e, false))?;
                    check_laplace_first_kind(p, sign, &s, tol).map_err(|e| lift(e, true))?
                }
                KindSelector::Second => {
                    let nu = req(params.nu, "nu", "laplace second")?;
                    let mu = req(params.mu, "mu", "laplace second")?;
                    check_laplace_second_kind(nu, mu, &s, tol).map_err(|e| lift(e, true))?
                }
            };
            let doc = laplace_doc(&report);
            let text = match cli.format.unwrap_or(Format::Json) {
                Format::Json => to_json(&doc)?,
                Format::Plain => format!(
                    "{} {} max_rel_gap={}\n",
                    doc.kind,
                    if doc.pass { "pass" } else { "FAIL" },
                    doc.max_rel_gap
                ),
                Format::Csv => {
                    return Err(Failure::Usage("laplace has no csv representation".to_string()))
                }
            };
            emit(&cli.out, text)?;
            Ok(if report.pass { 0 } else { 1 })
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}
