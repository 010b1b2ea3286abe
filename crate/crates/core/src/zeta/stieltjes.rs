//! Generalized Stieltjes constants `γₙ(x)`.

use serde::{Deserialize, Serialize};

use super::hurwitz::hurwitz_zeta_deriv;
use crate::context::{EvalContext, RealValue};
use crate::error::{Error, Result};
use crate::special::bernoulli::scaled_even_table;
use crate::special::summation::Neumaier;

pub const MAX_ORDER: u32 = 3;
const MIN_TERMS: u64 = 1000;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum StieltjesMethod {
    DirectSeries,
    XDerivative,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct StieltjesValue {
    pub value: f64,
    pub err_estimate: f64,
    pub method: StieltjesMethod,
}

impl StieltjesValue {
    pub fn real(&self) -> RealValue {
        RealValue::new(self.value, self.err_estimate)
    }
}

/// Coefficients of `dᵐ/dtᵐ [logⁿ t / t] = t^{−1−m} Σᵢ c[m][i] logⁱ t`.
fn log_over_t_derivatives(n: usize, mmax: usize) -> Vec<Vec<f64>> {
    let mut c = vec![vec![0.0; n + 1]; mmax + 1];
    c[0][n] = 1.0;
    for m in 0..mmax {
        for i in 0..=n {
            let mut v = -((1 + m) as f64) * c[m][i];
            if i < n {
                v += (i + 1) as f64 * c[m][i + 1];
            }
            c[m + 1][i] = v;
        }
    }
    c
}

fn eval_log_poly(coef: &[f64], l: f64) -> f64 {
    coef.iter().rev().fold(0.0, |acc, &c| acc * l + c)
}

/// `log^{m}(b) − log^{m}(a)` without cancellation for nearby `a < b`.
fn log_power_gap(m: usize, a: f64, b: f64) -> f64 {
    let la = a.ln();
    let lb = b.ln();
    let d = (1.0 / a * (b - a)).ln_1p();
    let mut s = 0.0;
    for i in 0..m {
        s += lb.powi(i as i32) * la.powi((m - 1 - i) as i32);
    }
    d * s
}

fn validate(op: &'static str, n: u32, max: u32, x: f64) -> Result<()> {
    if n > max {
        return Err(Error::domain(op, format!("order {n} exceeds {max}")));
    }
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain(op, format!("x must be positive and finite, got {x}")));
    }
    Ok(())
}

/// `γₙ(x)` from
/// `γₙ(x) = Σ_{k≥0} [logⁿ(k+x)/(k+x) − (log^{n+1}(k+2) − log^{n+1}(k+1))/(n+1)]`,
/// summed explicitly for `N ≥ 1000` terms and closed with an Euler–Maclaurin tail.
pub fn stieltjes(n: u32, x: f64, ctx: &EvalContext) -> Result<StieltjesValue> {
    validate("stieltjes", n, MAX_ORDER, x)?;
    let nu = n as usize;
    let np1 = (n + 1) as f64;
    let g = |t: f64| t.ln().powi(n as i32) / t;
    let cut = MIN_TERMS.max((x.abs() * 4.0) as u64).min(ctx.max_terms);

    let mut acc = Neumaier::new();
    let mut mass = 0.0;
    for k in 0..cut {
        let kf = k as f64;
        let term = g(kf + x) - log_power_gap(nu + 1, kf + 1.0, kf + 2.0) / np1;
        mass += g(kf + x).abs();
        acc.add(term);
    }

    let a = cut as f64 + x;
    let la = a.ln();
    let pairs = ctx.em_pairs();
    let deriv = log_over_t_derivatives(nu, 2 * pairs + 1);
    let bern = scaled_even_table();
    // −L(N+x) + L(N+1), with L(t) = log^{n+1} t / (n+1)
    acc.add(-log_power_gap(nu + 1, cut as f64 + 1.0, a) / np1);
    acc.add(0.5 * g(a));
    let mut next = 0.0;
    for j in 1..=pairs + 1 {
        let m = 2 * j - 1;
        let d = a.powi(-(1 + m as i32)) * eval_log_poly(&deriv[m], la);
        let term = -bern[j] * d;
        if j <= pairs {
            acc.add(term);
        } else {
            next = term.abs();
        }
    }
    let value = acc.sum();
    Ok(StieltjesValue {
        value,
        err_estimate: next + 4.0 * f64::EPSILON * (mass + value.abs()),
        method: StieltjesMethod::DirectSeries,
    })
}

/// `γₙ(x) = ((−1)^{n+1}/(n+1)) ∂ₓ ζ^{(n+1)}(0, x)` by a central difference with
/// `h = 10⁻⁵ max(1, x)`.
///
/// The error estimate combines the step-halving discrepancy of the difference
/// quotient with the engine error divided by `h`.
pub fn stieltjes_via_xderiv(n: u32, x: f64, ctx: &EvalContext) -> Result<StieltjesValue> {
    validate("stieltjes_via_xderiv", n, MAX_ORDER - 1, x)?;
    let h = 1e-5 * x.max(1.0);
    if x <= 2.0 * h {
        return Err(Error::domain("stieltjes_via_xderiv", format!("x = {x} too close to 0 for step {h}")));
    }
    let z = |t: f64| hurwitz_zeta_deriv(n + 1, 0.0, t, ctx);
    let (p1, m1, p2, m2) = (z(x + h)?, z(x - h)?, z(x + 2.0 * h)?, z(x - 2.0 * h)?);
    let d1 = (p1.value - m1.value) / (2.0 * h);
    let d2 = (p2.value - m2.value) / (4.0 * h);
    let noise = (p1.err_estimate + m1.err_estimate) / (2.0 * h)
        + 4.0 * f64::EPSILON * p1.value.abs().max(m1.value.abs()) / h;
    let scale = if n.is_multiple_of(2) { -1.0 } else { 1.0 } / (n + 1) as f64;
    Ok(StieltjesValue {
        value: scale * d1,
        err_estimate: scale.abs() * ((d1 - d2).abs() / 3.0 + 2.0 * noise),
        method: StieltjesMethod::XDerivative,
    })
}

/// `γ₁'(x) = ζ(2, x) + ζ'(2, x)`.
pub fn gamma1_prime(x: f64, ctx: &EvalContext) -> Result<RealValue> {
    validate("gamma1_prime", 1, 1, x)?;
    let a = hurwitz_zeta_deriv(0, 2.0, x, ctx)?;
    let b = hurwitz_zeta_deriv(1, 2.0, x, ctx)?;
    Ok(a.add(b))
}
