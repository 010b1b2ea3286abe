//! Command-line front end: `eval`, `verify`, `table` and `constants`.

use clap::{Args, Parser, Subcommand, ValueEnum};
use std::f64::consts::{LN_2, PI};
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use crate::consts::{EULER_GAMMA, GAMMA_PLUS_LN_2PI, LN_PI};
use crate::context::{EvalContext, RealValue};
use crate::error::{Error, Result};
use crate::registry::{run_suite, SamplePlan};
use crate::regsum::{abel_trig_limit, TrigKind, TrigSeriesSpec};
use crate::report::{fmt17, table_csv, ReportDocument};
use crate::repr::{self, Path};
use crate::special::{digamma, log_gamma};
use crate::zeta;

pub const EXIT_FAILED_CASES: u8 = 1;
pub const EXIT_BAD_ARGS: u8 = 2;
pub const EXIT_NON_CONVERGENCE: u8 = 3;
pub const EXIT_IO: u8 = 4;

#[derive(Debug, Parser)]
#[command(name = "stieltjes", version, about = "Stieltjes constants, Hurwitz zeta derivatives and identity checks")]
pub struct Cli {
    #[command(flatten)]
    pub context: ContextArgs,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct ContextArgs {
    /// Absolute error target.
    #[arg(long, global = true, default_value_t = 1e-10)]
    pub abs_tol: f64,
    /// Term budget for explicit sums.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    pub max_terms: u64,
    /// Euler–Maclaurin correction order (even).
    #[arg(long, global = true, default_value_t = 12)]
    pub em_order: u32,
    /// Largest Abel damping parameter.
    #[arg(long, global = true, default_value_t = 0.02)]
    pub abel_eps0: f64,
    /// Number of Abel damping levels.
    #[arg(long, global = true, default_value_t = 8)]
    pub abel_levels: u32,
}

impl ContextArgs {
    pub fn to_context(&self) -> EvalContext {
        EvalContext {
            abs_tol: self.abs_tol,
            max_terms: self.max_terms,
            em_order: self.em_order,
            abel_eps0: self.abel_eps0,
            abel_levels: self.abel_levels,
            ..EvalContext::default()
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate one quantity.
    Eval {
        quantity: Quantity,
        #[command(flatten)]
        args: QuantityArgs,
    },
    /// Run the identity suite and write a report.
    Verify {
        /// Only identities whose id starts with this prefix.
        #[arg(long)]
        filter: Option<String>,
        #[arg(long, value_enum, default_value_t = Plan::Full)]
        plan: Plan,
        /// Report path; the report goes to standard output when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Tabulate a quantity over `x` as CSV.
    Table {
        quantity: Quantity,
        /// `start:stop:count`.
        #[arg(long)]
        grid: String,
        #[command(flatten)]
        args: QuantityArgs,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Closed-form constants against independent evaluations.
    Constants,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum Quantity {
    Stieltjes,
    StieltjesXderiv,
    HurwitzZetaDeriv,
    RiemannZetaDeriv,
    AltZetaDeriv,
    Beta,
    LogGamma,
    Digamma,
    BarnesLogG,
    Gamma1Rep,
    Zeta2Fourier,
    KummerLogGamma,
    BarnesFourier,
    AbelTrigLimit,
    HansenTrig,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Plan {
    Smoke,
    Full,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Cos,
    Sin,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
#[value(rename_all = "snake_case")]
pub enum RepPath {
    Abel,
    StieltjesExpansion,
}

/// Arguments shared by every quantity; each quantity reads the ones it needs.
#[derive(Debug, Clone, Args)]
pub struct QuantityArgs {
    /// Stieltjes order.
    #[arg(long, default_value_t = 1)]
    pub n: u32,
    /// Derivative order.
    #[arg(long, default_value_t = 0)]
    pub k: u32,
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub s: f64,
    #[arg(long, default_value_t = 0.5, allow_negative_numbers = true)]
    pub x: f64,
    /// Phase shift of the trigonometric argument.
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub y: f64,
    /// Power of log n.
    #[arg(long, default_value_t = 0)]
    pub j: u32,
    #[arg(long, value_enum, default_value_t = Kind::Cos)]
    pub kind: Kind,
    #[arg(long, value_enum, default_value_t = RepPath::Abel)]
    pub path: RepPath,
}

/// A value with its error estimate and the method that produced it.
#[derive(Debug, Clone, PartialEq)]
pub struct Evaluated {
    pub value: RealValue,
    pub method: String,
}

fn tagged(value: RealValue, method: &str) -> Evaluated {
    Evaluated { value, method: method.to_string() }
}

fn path_name(p: Path) -> &'static str {
    match p {
        Path::StieltjesExpansion => "STIELTJES_EXPANSION",
        Path::Abel => "ABEL",
        Path::ClosedForm => "CLOSED_FORM",
        Path::Direct => "DIRECT",
    }
}

fn rep(v: repr::RepresentationValue) -> Evaluated {
    tagged(v.real(), path_name(v.path))
}

pub fn evaluate(q: Quantity, a: &QuantityArgs, ctx: &EvalContext) -> Result<Evaluated> {
    let kind = match a.kind {
        Kind::Cos => TrigKind::Cos,
        Kind::Sin => TrigKind::Sin,
    };
    Ok(match q {
        Quantity::Stieltjes => tagged(zeta::stieltjes(a.n, a.x, ctx)?.real(), "DIRECT_SERIES"),
        Quantity::StieltjesXderiv => tagged(zeta::stieltjes_via_xderiv(a.n, a.x, ctx)?.real(), "X_DERIVATIVE"),
        Quantity::HurwitzZetaDeriv => tagged(zeta::hurwitz_zeta_deriv(a.k, a.s, a.x, ctx)?, "EULER_MACLAURIN"),
        Quantity::RiemannZetaDeriv => tagged(zeta::riemann_zeta_deriv(a.k, a.s, ctx)?, "EULER_MACLAURIN"),
        Quantity::AltZetaDeriv => tagged(zeta::alt_zeta_deriv(a.k, a.s, ctx)?, "HURWITZ"),
        Quantity::Beta => tagged(zeta::dirichlet_beta_deriv(a.k, a.s, ctx)?, "HURWITZ"),
        Quantity::LogGamma => tagged(log_gamma(a.x, ctx)?, "STIRLING"),
        Quantity::Digamma => tagged(digamma(a.x, ctx)?, "STIRLING"),
        Quantity::BarnesLogG => tagged(zeta::barnes_log_g(a.x, ctx)?, "HURWITZ"),
        Quantity::Gamma1Rep => {
            let p = match a.path {
                RepPath::Abel => Path::Abel,
                RepPath::StieltjesExpansion => Path::StieltjesExpansion,
            };
            rep(repr::gamma1_rep(a.x, p, ctx)?)
        }
        Quantity::Zeta2Fourier => rep(repr::zeta2_fourier(a.x, ctx)?),
        Quantity::KummerLogGamma => rep(repr::kummer_log_gamma(a.x, ctx)?),
        Quantity::BarnesFourier => rep(repr::barnes_fourier(a.x, ctx)?),
        Quantity::AbelTrigLimit => {
            let r = abel_trig_limit(&TrigSeriesSpec::new(a.j, a.x, a.y, a.s, kind), ctx)?;
            tagged(RealValue::new(r.value, r.err_estimate), "ABEL")
        }
        Quantity::HansenTrig => rep(repr::hansen_trig_closed(a.j, a.x, a.y, kind, ctx)?),
    })
}

/// Parses `start:stop:count` into `count` equally spaced points.
pub fn parse_grid(spec: &str) -> Result<Vec<f64>> {
    let bad = || Error::domain("grid", format!("expected start:stop:count, got `{spec}`"));
    let parts: Vec<&str> = spec.split(':').collect();
    let [a, b, c] = parts[..] else { return Err(bad()) };
    let a: f64 = a.trim().parse().map_err(|_| bad())?;
    let b: f64 = b.trim().parse().map_err(|_| bad())?;
    let c: usize = c.trim().parse().map_err(|_| bad())?;
    if c == 0 || !a.is_finite() || !b.is_finite() {
        return Err(bad());
    }
    if c == 1 {
        return Ok(vec![a]);
    }
    Ok((0..c).map(|i| a + (b - a) * i as f64 / (c - 1) as f64).collect())
}

/// One closed-form constant with an independent evaluation.
#[derive(Debug, Clone, PartialEq)]
pub struct ConstantRow {
    pub name: &'static str,
    pub expression: &'static str,
    pub closed_form: f64,
    pub computed: f64,
}

impl ConstantRow {
    pub fn residual(&self) -> f64 {
        (self.closed_form - self.computed).abs()
    }
}

pub fn constants(ctx: &EvalContext) -> Result<Vec<ConstantRow>> {
    let g1 = zeta::stieltjes(1, 1.0, ctx)?.value;
    let zp0 = zeta::riemann_zeta_deriv(1, 0.0, ctx)?.value;
    let zpm1 = zeta::riemann_zeta_deriv(1, -1.0, ctx)?.value;
    let lg14 = log_gamma(0.25, ctx)?.value;
    let z2 = PI * PI / 6.0;
    let c = GAMMA_PLUS_LN_2PI;
    let l3 = 3f64.ln();
    let quarter = |sign: f64| {
        0.5 * (2.0 * g1 - 7.0 * LN_2 * LN_2 - 6.0 * EULER_GAMMA * LN_2)
            + sign * 0.5 * PI * (EULER_GAMMA + 4.0 * LN_2 + 3.0 * LN_PI - 4.0 * lg14)
    };
    let abel = |x: f64, j: u32| -> Result<f64> {
        Ok(abel_trig_limit(&TrigSeriesSpec::new(j, x, 0.0, 1.0, TrigKind::Cos), ctx)?.value)
    };
    let row = |name, expression, closed_form, computed| ConstantRow { name, expression, closed_form, computed };
    Ok(vec![
        row(
            "logG(1/2)",
            "(1/24) log 2 - (1/4) log pi + (3/2) zeta'(-1)",
            LN_2 / 24.0 - 0.25 * LN_PI + 1.5 * zpm1,
            zeta::barnes_log_g_product(-0.5, ctx)?.value,
        ),
        row(
            "gamma1(1/2)",
            "gamma1 - log^2 2 - 2 gamma log 2",
            g1 - LN_2 * LN_2 - 2.0 * EULER_GAMMA * LN_2,
            zeta::stieltjes(1, 0.5, ctx)?.value,
        ),
        row(
            "gamma1",
            "zeta''(0) + C log 2pi - (C^2 - zeta(2)/2)/2, C = gamma + log 2pi",
            zeta::riemann_zeta_deriv(2, 0.0, ctx)?.value + c * (2.0 * PI).ln() - 0.5 * (c * c - 0.5 * z2),
            g1,
        ),
        row(
            "gamma1(1/4)",
            "gamma1 - (7/2) log^2 2 - 3 gamma log 2 - (pi/2)[gamma + 4 log 2 + 3 log pi - 4 log Gamma(1/4)]",
            quarter(-1.0),
            zeta::stieltjes(1, 0.25, ctx)?.value,
        ),
        row(
            "gamma1(3/4)",
            "gamma1 - (7/2) log^2 2 - 3 gamma log 2 + (pi/2)[gamma + 4 log 2 + 3 log pi - 4 log Gamma(1/4)]",
            quarter(1.0),
            zeta::stieltjes(1, 0.75, ctx)?.value,
        ),
        row(
            "beta'(0)",
            "2 log Gamma(1/4) - log pi - (3/2) log 2",
            2.0 * lg14 - LN_PI - 1.5 * LN_2,
            zeta::dirichlet_beta_deriv(1, 0.0, ctx)?.value,
        ),
        row(
            "beta'(1)",
            "(pi/4)[gamma + 2 log 2 + 3 log pi - 4 log Gamma(1/4)]",
            0.25 * PI * (EULER_GAMMA + 2.0 * LN_2 + 3.0 * LN_PI - 4.0 * lg14),
            zeta::dirichlet_beta_deriv(1, 1.0, ctx)?.value,
        ),
        row(
            "zeta''(0,1/2)",
            "2 zeta'(0) log 2 - (1/2) log^2 2",
            2.0 * zp0 * LN_2 - 0.5 * LN_2 * LN_2,
            zeta::hurwitz_zeta_deriv(2, 0.0, 0.5, ctx)?.value,
        ),
        row(
            "sum log n cos(2n pi/3)/n",
            "(1/2)(gamma - (1/2) log 3) log 3",
            0.5 * (EULER_GAMMA - 0.5 * l3) * l3,
            abel(1.0 / 3.0, 1)?,
        ),
        row(
            "zeta'(-2n-1) pi series",
            "(gamma + log pi)/pi",
            (EULER_GAMMA + LN_PI) / PI,
            repr::zeta_prime_odd_pi_series(ctx)?.value,
        ),
        row(
            "gamma1'(1)",
            "2 pi^2 zeta'(-1) + zeta(2)(gamma + log 2pi)",
            2.0 * PI * PI * zpm1 + z2 * c,
            zeta::gamma1_prime(1.0, ctx)?.value,
        ),
    ])
}

fn error_code(e: &Error) -> u8 {
    if e.is_non_convergence() {
        EXIT_NON_CONVERGENCE
    } else {
        EXIT_BAD_ARGS
    }
}

fn fail(e: &Error) -> ExitCode {
    eprintln!("error: {e}");
    ExitCode::from(error_code(e))
}

fn emit(out: &Option<PathBuf>, text: &str) -> std::io::Result<()> {
    match out {
        Some(p) => std::fs::write(p, text),
        None => std::io::stdout().write_all(text.as_bytes()),
    }
}

pub fn run(cli: Cli) -> ExitCode {
    let ctx = cli.context.to_context();
    if let Err(e) = ctx.validate() {
        return fail(&e);
    }
    match cli.command {
        Command::Eval { quantity, args } => match evaluate(quantity, &args, &ctx) {
            Ok(v) => {
                println!("value        {}", fmt17(v.value.value));
                println!("err_estimate {}", fmt17(v.value.err_estimate));
                println!("method       {}", v.method);
                ExitCode::SUCCESS
            }
            Err(e) => fail(&e),
        },
        Command::Table { quantity, grid, args, out } => {
            let xs = match parse_grid(&grid) {
                Ok(xs) => xs,
                Err(e) => return fail(&e),
            };
            let mut rows = Vec::with_capacity(xs.len());
            for x in xs {
                match evaluate(quantity, &QuantityArgs { x, ..args.clone() }, &ctx) {
                    Ok(v) => rows.push((x, v.value.value, v.value.err_estimate)),
                    Err(e) => return fail(&e),
                }
            }
            match emit(&out, &table_csv(&rows)) {
                Ok(()) => ExitCode::SUCCESS,
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(EXIT_IO)
                }
            }
        }
        Command::Verify { filter, plan, out, format } => {
            let plan = match plan {
                Plan::Smoke => SamplePlan::Smoke,
                Plan::Full => SamplePlan::Full,
            };
            let cases = match run_suite(filter.as_deref(), plan, &ctx) {
                Ok(c) => c,
                Err(e) => return fail(&e),
            };
            let doc = ReportDocument::new(ctx, cases);
            let text = match format {
                Format::Json => doc.to_json(),
                Format::Csv => doc.to_csv(),
            };
            if let Err(e) = emit(&out, &text) {
                eprintln!("error: {e}");
                return ExitCode::from(EXIT_IO);
            }
            let s = &doc.summary;
            let line = format!(
                "total {} passed {} failed {} max_residual {}",
                s.total,
                s.passed,
                s.failed,
                fmt17(s.max_residual)
            );
            if out.is_some() {
                println!("{line}");
            } else {
                eprintln!("{line}");
            }
            for c in doc.cases.iter().filter(|c| !c.pass) {
                eprintln!("FAIL {} {:?} residual {} tol {}", c.id, c.params, fmt17(c.residual), fmt17(c.tol));
            }
            if doc.all_passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(EXIT_FAILED_CASES)
            }
        }
        Command::Constants => match constants(&ctx) {
            Ok(rows) => {
                println!("{:<26} {:>24} {:>10}  expression", "name", "value", "residual");
                for r in rows {
                    println!("{:<26} {:>24} {:>10.3e}  {}", r.name, fmt17(r.closed_form), r.residual(), r.expression);
                }
                ExitCode::SUCCESS
            }
            Err(e) => fail(&e),
        },
    }
}

pub fn main() -> ExitCode {
    run(Cli::parse())
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn command_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn grid_parsing() {
        let g = parse_grid("0.1:0.9:9").unwrap();
        assert_eq!(g.len(), 9);
        assert_eq!(g[4], 0.5);
        assert_eq!(parse_grid("2:3:1").unwrap(), vec![2.0]);
        assert!(parse_grid("0:1").is_err());
        assert!(parse_grid("0:1:0").is_err());
        assert!(parse_grid("a:1:3").is_err());
    }

    #[test]
    fn constants_agree() {
        let rows = constants(&EvalContext::default()).unwrap();
        for r in &rows {
            assert!(r.residual() < 1e-8, "{r:?}");
        }
        let z = rows.iter().find(|r| r.name == "zeta''(0,1/2)").unwrap();
        assert!(z.residual() <= 1e-9);
    }

    #[test]
    fn error_codes() {
        assert_eq!(error_code(&Error::domain("x", "y")), EXIT_BAD_ARGS);
        assert_eq!(error_code(&Error::NonConvergence { op: "x", err: 1.0 }), EXIT_NON_CONVERGENCE);
    }
}
