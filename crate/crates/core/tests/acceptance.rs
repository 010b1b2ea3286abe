//! Acceptance suite: one PASS/FAIL line per criterion with the measured residuals.
//!
//! Exits non-zero when the set of failing criteria differs from the known set,
//! or when a known failure does not have its documented size.

use std::collections::BTreeSet;
use std::f64::consts::{LN_2, PI};
use std::process::ExitCode;

use stieltjes::consts::{EULER_GAMMA, LN_2PI, LN_PI};
use stieltjes::registry::{check, run_suite, Params, SamplePlan};
use stieltjes::regsum::{abel_exp_limit, abel_trig_limit, TrigKind, TrigSeriesSpec};
use stieltjes::report::ReportDocument;
use stieltjes::repr::{gamma1_rep, zeta2_fourier, zeta_prime_odd_pi_series, Path};
use stieltjes::special::log_gamma;
use stieltjes::zeta::{alt_zeta_deriv, dirichlet_beta_deriv, hurwitz_zeta_deriv, riemann_zeta_deriv, stieltjes as gamma_n};
use stieltjes::{EvalContext, Result};

const X9: [f64; 9] = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9];
const HALF_GRID: [f64; 5] = [0.1, 0.2, 0.25, 0.3, 0.4];

/// Criteria that cannot be met as stated, with the reason printed beside them.
const KNOWN_FAILURES: &[(u32, &str)] =
    &[(8, "the stated limit ζ'(0) − log 2 has the wrong sign on ζ'(0); the limit is −ζ'(0) − log 2")];

struct Check {
    label: String,
    residual: f64,
    tol: f64,
}

impl Check {
    fn new(label: impl Into<String>, residual: f64, tol: f64) -> Self {
        Check { label: label.into(), residual, tol }
    }

    fn pass(&self) -> bool {
        self.residual <= self.tol
    }
}

struct Criterion {
    id: u32,
    name: &'static str,
    checks: Vec<Check>,
}

impl Criterion {
    fn pass(&self) -> bool {
        !self.checks.is_empty() && self.checks.iter().all(Check::pass)
    }
}

fn ctx() -> EvalContext {
    EvalContext::default()
}

fn case(id: &str, params: &[(&str, f64)]) -> Result<Check> {
    let p: Params = params.iter().map(|(k, v)| (k.to_string(), *v)).collect();
    let c = check(id, &p, &ctx())?;
    let label = if params.is_empty() {
        id.to_string()
    } else {
        let ps: Vec<String> = params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        format!("{id} {}", ps.join(","))
    };
    Ok(Check::new(label, c.residual, c.tol))
}

fn grid_max(label: &str, xs: &[f64], tol: f64, f: impl Fn(f64) -> Result<f64>) -> Result<Check> {
    let mut worst: f64 = 0.0;
    for &x in xs {
        let r = f(x)?;
        worst = if r.is_nan() { f64::NAN } else { worst.max(r) };
    }
    Ok(Check::new(label, worst, tol))
}

fn c01() -> Result<Vec<Check>> {
    Ok(vec![grid_max("ζ(0, x) vs ½ − x", &X9, 1e-12, |x| {
        Ok((hurwitz_zeta_deriv(0, 0.0, x, &ctx())?.value - (0.5 - x)).abs())
    })?])
}

fn c02() -> Result<Vec<Check>> {
    Ok(vec![grid_max("ζ'(0, x) vs log Γ(x) − ½ log 2π", &X9, 1e-10, |x| {
        let lhs = hurwitz_zeta_deriv(1, 0.0, x, &ctx())?.value;
        Ok((lhs - log_gamma(x, &ctx())?.value + 0.5 * LN_2PI).abs())
    })?])
}

fn gamma1() -> Result<f64> {
    Ok(gamma_n(1, 1.0, &ctx())?.value)
}

fn c03() -> Result<Vec<Check>> {
    let closed = gamma1()? - LN_2 * LN_2 - 2.0 * EULER_GAMMA * LN_2;
    let v = gamma_n(1, 0.5, &ctx())?.value;
    Ok(vec![
        Check::new("γ₁(½) vs γ₁ − log² 2 − 2γ log 2", (v - closed).abs(), 1e-9),
        // oracle: mpmath.stieltjes(1, 0.5)
        Check::new("γ₁(½) vs oracle", (v - -1.353_459_680_804_941_5).abs(), 1e-9),
    ])
}

fn c04() -> Result<Vec<Check>> {
    let lg = log_gamma(0.25, &ctx())?.value;
    let closed = 0.5 * (2.0 * gamma1()? - 7.0 * LN_2 * LN_2 - 6.0 * EULER_GAMMA * LN_2)
        - 0.5 * PI * (EULER_GAMMA + 4.0 * LN_2 + 3.0 * LN_PI - 4.0 * lg);
    let v = gamma_n(1, 0.25, &ctx())?.value;
    Ok(vec![
        Check::new("γ₁(¼) vs closed form", (v - closed).abs(), 1e-8),
        // oracle: mpmath.stieltjes(1, 0.25)
        Check::new("γ₁(¼) vs oracle", (v - -5.518_076_350_199_403_8).abs(), 1e-8),
    ])
}

fn c05() -> Result<Vec<Check>> {
    let closed = -LN_2PI * LN_2 - 0.5 * LN_2 * LN_2;
    let engine = hurwitz_zeta_deriv(2, 0.0, 0.5, &ctx())?.value;
    let fourier = zeta2_fourier(0.5, &ctx())?.value;
    Ok(vec![
        Check::new("engine ζ''(0, ½) vs −log 2π log 2 − ½ log² 2", (engine - closed).abs(), 1e-9),
        Check::new("Fourier ζ''(0, ½) vs closed form", (fourier - closed).abs(), 1e-6),
        // oracle: mpmath.zeta(0, 0.5, 2)
        Check::new("engine ζ''(0, ½) vs oracle", (engine - -1.514_145_813_756_521_9).abs(), 1e-9),
    ])
}

fn c06() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for path in [Path::Abel, Path::StieltjesExpansion] {
        let mut worst: f64 = 0.0;
        let mut tol: f64 = 1e-6;
        for &x in &X9 {
            let a = gamma1_rep(x, path, &ctx())?;
            let b = gamma_n(1, x, &ctx())?;
            let t = 1e-6f64.max(a.err_estimate + b.err_estimate);
            let r = (a.value - b.value).abs();
            if r / t > worst / tol {
                worst = r;
                tol = t;
            }
        }
        out.push(Check::new(format!("gamma1_rep ({path:?}) vs stieltjes(1, x), worst ratio"), worst, tol));
    }
    Ok(out)
}

fn c07() -> Result<Vec<Check>> {
    Ok(vec![grid_max("zeta2_fourier(u) vs ζ''(0, u)", &X9, 1e-6, |u| {
        Ok((zeta2_fourier(u, &ctx())?.value - hurwitz_zeta_deriv(2, 0.0, u, &ctx())?.value).abs())
    })?])
}

fn trig_limit(x: f64, kind: TrigKind) -> Result<f64> {
    Ok(abel_trig_limit(&TrigSeriesSpec::new(0, x, 0.0, 0.0, kind), &ctx())?.value)
}

fn c08() -> Result<Vec<Check>> {
    let zp0 = riemann_zeta_deriv(1, 0.0, &ctx())?.value;
    let l0 = abel_exp_limit(0, &ctx())?.value;
    let l2 = abel_exp_limit(2, &ctx())?.value;
    let za3 = alt_zeta_deriv(0, 3.0, &ctx())?.value;
    Ok(vec![
        grid_max("Σ cos 2πnx → −½", &X9, 1e-8, |x| Ok((trig_limit(x, TrigKind::Cos)? + 0.5).abs()))?,
        grid_max("Σ sin 2πnx → ½ cot πx", &X9, 1e-8, |x| {
            Ok((trig_limit(x, TrigKind::Sin)? - 0.5 / (PI * x).tan()).abs())
        })?,
        Check::new("lim Σ (−1)ⁿ e^{−nz} log n vs ζ'(0) − log 2", (l0 - (zp0 - LN_2)).abs(), 1e-7),
        Check::new("ζₐ(3) vs (3/7)π² lim Σ (−1)ⁿ n² e^{−nz} log n", (za3 - 3.0 / 7.0 * PI * PI * l2).abs(), 1e-6),
    ])
}

/// Diagnostics for the known failure of criterion 8, checked rather than assumed.
fn c08_diagnosis() -> Result<Vec<Check>> {
    let zp0 = riemann_zeta_deriv(1, 0.0, &ctx())?.value;
    let l0 = abel_exp_limit(0, &ctx())?.value;
    Ok(vec![
        Check::new("lim Σ (−1)ⁿ e^{−nz} log n vs −ζ'(0) − log 2", (l0 - (-zp0 - LN_2)).abs(), 1e-7),
        Check::new("stated-form residual minus log 2π", ((l0 - (zp0 - LN_2)).abs() - LN_2PI).abs(), 1e-7),
        // oracle: −mpmath.zeta(0, 1, 1) − log 2
        Check::new("limit vs oracle ½ log(π/2)", (l0 - 0.225_791_352_644_727_43).abs(), 1e-7),
    ])
}

fn c09() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for id in ["I-3.6", "I-7.19"] {
        for &x in &HALF_GRID {
            let mut c = case(id, &[("x", x)])?;
            c.tol = 1e-8;
            out.push(c);
        }
    }
    for &x in &HALF_GRID {
        let mut c = case("I-8.11", &[("x", x)])?;
        c.tol = 1e-6;
        out.push(c);
    }
    Ok(out)
}

fn c10() -> Result<Vec<Check>> {
    let mut out = vec![case("I-2.14", &[])?];
    for k in [1.0, 2.0, 3.0] {
        out.push(case("I-2.15", &[("k", k)])?);
    }
    for c in &mut out {
        c.tol = 1e-8;
    }
    Ok(out)
}

fn c11() -> Result<Vec<Check>> {
    let mut out: Vec<Check> =
        X9.iter().map(|&t| case("I-6.11", &[("t", t)])).collect::<Result<_>>()?;
    out.push(case("I-6.7", &[])?);
    for c in &mut out {
        c.tol = 1e-8;
    }
    Ok(out)
}

fn c12() -> Result<Vec<Check>> {
    let lg = log_gamma(0.25, &ctx())?.value;
    let closed = 0.25 * PI * (EULER_GAMMA + 2.0 * LN_2 + 3.0 * LN_PI - 4.0 * lg);
    let v = dirichlet_beta_deriv(1, 1.0, &ctx())?.value;
    Ok(vec![
        Check::new("β'(1) vs ¼π[γ + 2 log 2 + 3 log π − 4 log Γ(¼)]", (v - closed).abs(), 1e-9),
        // oracle: mpmath −nsum((−1)ⁿ log(2n+1)/(2n+1))
        Check::new("β'(1) vs oracle", (v - 0.192_901_316_796_912_43).abs(), 1e-9),
    ])
}

fn c13() -> Result<Vec<Check>> {
    let v = zeta_prime_odd_pi_series(&ctx())?.value;
    Ok(vec![Check::new("Σ (−1)^{n−1} ζ'(−2n−1) π^{2n+1}/(2n+1)! vs (γ + log π)/π", (v - (EULER_GAMMA + LN_PI) / PI).abs(), 1e-8)])
}

fn c14() -> Result<Vec<Check>> {
    let mut out = Vec::new();
    for q in [2.0, 3.0, 4.0] {
        let mut c = case("I-7.5", &[("p", 1.0), ("q", q)])?;
        c.tol = 1e-7;
        out.push(c);
    }
    let q2 = gamma_n(1, 0.5, &ctx())?;
    let closed = gamma1()? - LN_2 * LN_2 - 2.0 * EULER_GAMMA * LN_2;
    out.push(Check::new("q = 2 sum vs γ₁(½) closed form", (q2.value - closed).abs(), 4.0 * q2.err_estimate));
    Ok(out)
}

fn c15() -> Result<Vec<Check>> {
    let a = ReportDocument::new(ctx(), run_suite(None, SamplePlan::Full, &ctx())?);
    let b = ReportDocument::new(ctx(), run_suite(None, SamplePlan::Full, &ctx())?);
    let identical = a.to_json() == b.to_json()
        && a.cases.iter().zip(&b.cases).all(|(x, y)| x.lhs.to_bits() == y.lhs.to_bits() && x.rhs.to_bits() == y.rhs.to_bits());
    Ok(vec![
        Check::new("two FULL runs differ (0 = bit-identical)", if identical { 0.0 } else { 1.0 }, 0.0),
        Check::new(format!("failing cases out of {}", a.summary.total), a.summary.failed as f64, 0.0),
        Check::new("fewer than 300 cases", if a.summary.total >= 300 { 0.0 } else { 1.0 }, 0.0),
    ])
}

fn main() -> ExitCode {
    type Eval = fn() -> Result<Vec<Check>>;
    let table: [(u32, &str, Eval); 15] = [
        (1, "ζ(0, x) = ½ − x", c01),
        (2, "Lerch identity", c02),
        (3, "γ₁(½) closed form", c03),
        (4, "γ₁(¼) closed form", c04),
        (5, "ζ''(0, ½) closed form", c05),
        (6, "Fourier representation of γ₁(x)", c06),
        (7, "Fourier series of ζ''(0, u)", c07),
        (8, "Abel limits", c08),
        (9, "duplication formulas", c09),
        (10, "integrals of ψ", c10),
        (11, "Vardi identity and log G(½)", c11),
        (12, "Malmstén's β'(1)", c12),
        (13, "power series in ζ'(−2n−1) at π", c13),
        (14, "multiplication sum rule for γ₁", c14),
        (15, "determinism of the full suite", c15),
    ];
    let mut failed = BTreeSet::new();
    let mut ok = true;
    for (id, name, eval) in table {
        let start = std::time::Instant::now();
        let crit = match eval() {
            Ok(checks) => Criterion { id, name, checks },
            Err(e) => {
                println!("FAIL {id:>2} {name}: error: {e}");
                failed.insert(id);
                continue;
            }
        };
        let status = if crit.pass() { "PASS" } else { "FAIL" };
        println!("{status} {:>2} {} ({:.2}s)", crit.id, crit.name, start.elapsed().as_secs_f64());
        for c in &crit.checks {
            let mark = if c.pass() { "ok  " } else { "FAIL" };
            println!("       {mark} {}: residual {:.3e}, tolerance {:.1e}", c.label, c.residual, c.tol);
        }
        if !crit.pass() {
            failed.insert(crit.id);
        }
        if let Some((_, why)) = KNOWN_FAILURES.iter().find(|(k, _)| *k == id) {
            println!("       known failure: {why}");
            match c08_diagnosis() {
                Ok(diag) => {
                    for c in &diag {
                        let mark = if c.pass() { "ok  " } else { "FAIL" };
                        println!("       {mark} {}: residual {:.3e}, tolerance {:.1e}", c.label, c.residual, c.tol);
                        ok &= c.pass();
                    }
                }
                Err(e) => {
                    println!("       diagnosis error: {e}");
                    ok = false;
                }
            }
        }
    }
    let expected: BTreeSet<u32> = KNOWN_FAILURES.iter().map(|(k, _)| *k).collect();
    println!(
        "acceptance: {} of 15 criteria pass; failing {:?}; known failures {:?}",
        15 - failed.len(),
        failed,
        expected
    );
    if ok && failed == expected {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
