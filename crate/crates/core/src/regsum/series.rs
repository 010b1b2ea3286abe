//! Exponentially damped log series and Ramanujan summation.

use rayon::prelude::*;

use super::extrapolate::{eps_schedule, extrapolate, Basis, ExtrapolationResult};
use crate::consts::EULER_GAMMA;
use crate::context::{EvalContext, RealValue};
use crate::error::{Error, Result};
use crate::special::quadrature::integrate_adaptive;
use crate::special::summation::Neumaier;

/// `Σ_{n≥1} e^{−nz} log n` for `z > 0`, summed until the terms drop below `10⁻¹⁸`.
pub fn exp_log_series(z: f64, ctx: &EvalContext) -> Result<RealValue> {
    if !(z > 0.0) || !z.is_finite() {
        return Err(Error::domain("exp_log_series", format!("z must be positive, got {z}")));
    }
    let mut acc = Neumaier::new();
    let mut n = 2u64;
    loop {
        let nf = n as f64;
        let t = (-nf * z).exp() * nf.ln();
        acc.add(t);
        if t < 1e-18 && nf * z > 1.0 {
            break;
        }
        n += 1;
        if n > ctx.max_terms {
            return Err(Error::NonConvergence { op: "exp_log_series", err: t / z });
        }
    }
    let v = acc.sum();
    Ok(RealValue::new(v, 1e-18 / z + 4.0 * f64::EPSILON * v.abs() * (n as f64).sqrt()))
}

/// Constant term of `Σ e^{−nz} log n` as `z → 0⁺`, extrapolated from
/// `Σ e^{−nz} log n + (γ + log z)/z` on the context's schedule.
pub fn exp_log_constant(ctx: &EvalContext) -> Result<ExtrapolationResult> {
    ctx.validate()?;
    let samples: Result<Vec<(f64, f64)>> = eps_schedule(ctx.abel_eps0, ctx.abel_levels)
        .par_iter()
        .map(|&z| Ok((z, exp_log_series(z, ctx)?.value + (EULER_GAMMA + z.ln()) / z)))
        .collect();
    extrapolate(&samples?, Basis::Poly, ctx.abs_tol)
}

const GREGORY: [f64; 6] = [
    1.0 / 12.0,
    -1.0 / 24.0,
    19.0 / 720.0,
    -3.0 / 160.0,
    863.0 / 60480.0,
    -275.0 / 24192.0,
];

/// Ramanujan sum `Σ_{n≥1} f(n) − ∫₁^∞ f(t) dt` of a smooth, convergent `f`.
///
/// Uses `Σ_{n<N} f(n) − ∫₁^N f + ½f(N) − Σᵢ gᵢ Δⁱf(N)` with Gregory's
/// coefficients `gᵢ` and forward differences at `N = 256`.
pub fn ramanujan_sum_convergent<F>(f: F, ctx: &EvalContext) -> Result<RealValue>
where
    F: Fn(f64) -> f64,
{
    const N: u64 = 256;
    let mut acc = Neumaier::new();
    for n in 1..N {
        acc.add(f(n as f64));
    }
    let integral = integrate_adaptive(&f, 1.0, N as f64, ctx)?;
    acc.add(-integral.value);
    let mut d: Vec<f64> = (0..=GREGORY.len()).map(|i| f((N + i as u64) as f64)).collect();
    acc.add(0.5 * d[0]);
    let mut last = 0.0;
    for (i, g) in GREGORY.iter().enumerate() {
        for m in 0..d.len() - 1 - i {
            d[m] = d[m + 1] - d[m];
        }
        if i + 1 < GREGORY.len() {
            acc.add(-g * d[0]);
        } else {
            last = (g * d[0]).abs();
        }
    }
    let v = acc.sum();
    Ok(RealValue::new(v, integral.err_estimate + last + 8.0 * f64::EPSILON * v.abs()))
}
