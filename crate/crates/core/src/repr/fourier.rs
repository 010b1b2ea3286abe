//! Fourier representations evaluated by Abel regularization, by the Stieltjes
//! continuation, or by direct summation of absolutely convergent parts.

use std::f64::consts::PI;

use super::hansen::hansen_trig_closed;
use super::{Path, RepresentationValue};
use crate::consts::GAMMA_PLUS_LN_2PI as C;
use crate::context::{combine, EvalContext, RealValue};
use crate::error::{Error, Result};
use crate::regsum::abel::shifted_components;
use crate::regsum::{abel_samples, Basis, Component, ExtrapolationResult, TrigKind};
use crate::special::summation::oscillatory_sum;
use crate::zeta::riemann_zeta_deriv;

fn unit_interval(op: &'static str, x: f64) -> Result<()> {
    if !(x > 0.0 && x < 1.0) {
        return Err(Error::domain(op, format!("argument must lie in (0, 1), got {x}")));
    }
    Ok(())
}

/// Abel limit of `Σ coefᵢ · logʲⁱ n · trigᵢ(2πnx) / nˢ`.
pub fn abel_combination(x: f64, s: f64, parts: &[Component], ctx: &EvalContext) -> Result<ExtrapolationResult> {
    let r = abel_samples(x, s, ctx)?.limit(parts, Basis::Poly, ctx.abs_tol)?;
    if !r.converged {
        return Err(Error::NonConvergence { op: "abel_combination", err: r.err_estimate });
    }
    Ok(r)
}

fn abel_value(x: f64, s: f64, parts: &[Component], ctx: &EvalContext) -> Result<RealValue> {
    let r = abel_combination(x, s, parts, ctx)?;
    Ok(RealValue::new(r.value, r.err_estimate))
}

use Component as P;
use TrigKind::{Cos, Sin};

/// `Σ_{n≥1} logʲ n · e^{2πint} / n²` for `j ∈ {0, 1}`: returns `(Σ sin/n², Σ cos/n², Σ log n cos/n²)`.
fn inverse_square_sums(t: f64, ctx: &EvalContext) -> Result<(RealValue, RealValue, RealValue)> {
    let (z0, e0) = oscillatory_sum(|n| 1.0 / (n * n), t, 1, ctx)?;
    let (z1, e1) = oscillatory_sum(|n| n.ln() / (n * n), t, 2, ctx)?;
    Ok((RealValue::new(z0.im, e0), RealValue::new(z0.re, e0), RealValue::new(z1.re, e1)))
}

/// `ψ(x) = −(π/2) cot πx + 2 lim Σ [γ + log 2πn] cos(2πnx) / nˢ`.
pub fn digamma_fourier(x: f64, path: Path, ctx: &EvalContext) -> Result<RepresentationValue> {
    unit_interval("digamma_fourier", x)?;
    let series = match path {
        Path::Abel => abel_value(x, 0.0, &[P::new(1, Cos, 1.0), P::new(0, Cos, C)], ctx)?,
        Path::StieltjesExpansion => {
            let h1 = hansen_trig_closed(1, x, 0.0, Cos, ctx)?.real();
            let h0 = hansen_trig_closed(0, x, 0.0, Cos, ctx)?.real();
            combine(&[(1.0, h1), (C, h0)])
        }
        _ => return Err(Error::domain("digamma_fourier", format!("unsupported path {path:?}"))),
    };
    let v = series.scale(2.0).offset(-0.5 * PI / (PI * x).tan());
    Ok(RepresentationValue::new(v, path))
}

/// Kummer: `log Γ(u) = ½ log π + Σ [γ + log 2πn] sin(2πnu)/(πn) − ½ log sin πu`.
pub fn kummer_log_gamma(u: f64, ctx: &EvalContext) -> Result<RepresentationValue> {
    unit_interval("kummer_log_gamma", u)?;
    let s = abel_value(u, 1.0, &[P::new(1, Sin, 1.0 / PI), P::new(0, Sin, C / PI)], ctx)?;
    let v = s.offset(0.5 * PI.ln() - 0.5 * (PI * u).sin().ln());
    Ok(RepresentationValue::new(v, Path::Abel))
}

/// `γ₁(x) = lim [Σ (γ + log 2πn)² cos/nˢ − ½ζ(2) Σ cos/nˢ − π Σ (γ + log 2πn) sin/nˢ]`.
pub fn gamma1_rep(x: f64, path: Path, ctx: &EvalContext) -> Result<RepresentationValue> {
    unit_interval("gamma1_rep", x)?;
    let z2 = PI * PI / 6.0;
    let v = match path {
        Path::Abel => abel_value(
            x,
            0.0,
            &[
                P::new(2, Cos, 1.0),
                P::new(1, Cos, 2.0 * C),
                P::new(0, Cos, C * C - 0.5 * z2),
                P::new(1, Sin, -PI),
                P::new(0, Sin, -PI * C),
            ],
            ctx,
        )?,
        Path::StieltjesExpansion => {
            let h = |j, kind| hansen_trig_closed(j, x, 0.0, kind, ctx).map(|v| v.real());
            combine(&[
                (1.0, h(2, Cos)?),
                (2.0 * C, h(1, Cos)?),
                (C * C - 0.5 * z2, h(0, Cos)?),
                (-PI, h(1, Sin)?),
                (-PI * C, h(0, Sin)?),
            ])
        }
        _ => return Err(Error::domain("gamma1_rep", format!("unsupported path {path:?}"))),
    };
    Ok(RepresentationValue::new(v, path))
}

/// `ζ''(0, u) = Σ [γ + log 2πn]² sin/(nπ) − ½ζ(2) Σ sin/(nπ) + Σ [γ + log 2πn] cos/n`.
pub fn zeta2_fourier(u: f64, ctx: &EvalContext) -> Result<RepresentationValue> {
    unit_interval("zeta2_fourier", u)?;
    let z2 = PI * PI / 6.0;
    let v = abel_value(
        u,
        1.0,
        &[
            P::new(2, Sin, 1.0 / PI),
            P::new(1, Sin, 2.0 * C / PI),
            P::new(0, Sin, (C * C - 0.5 * z2) / PI),
            P::new(1, Cos, 1.0),
            P::new(0, Cos, C),
        ],
        ctx,
    )?;
    Ok(RepresentationValue::new(v, Path::Abel))
}

/// Fourier expansion of `log G(1+u)` on `(0, 1)`.
pub fn barnes_fourier(u: f64, ctx: &EvalContext) -> Result<RepresentationValue> {
    unit_interval("barnes_fourier", u)?;
    let abel = abel_value(
        u,
        1.0,
        &[P::new(0, Cos, 0.5 * u), P::new(1, Sin, u / PI), P::new(0, Sin, u * C / PI)],
        ctx,
    )?;
    let (s0, c0, c1) = inverse_square_sums(u, ctx)?;
    let zp2 = riemann_zeta_deriv(1, 2.0, ctx)?;
    let z2 = PI * PI / 6.0;
    let k = 1.0 / (2.0 * PI * PI);
    let v = combine(&[
        (1.0, abel),
        (-1.0 / (4.0 * PI), s0),
        (k * C, c0),
        (k, c1),
        (k, zp2),
    ])
    .offset(0.5 * u * (2.0 * PI).ln() - 0.5 * u * (u - 1.0) - k * C * z2);
    Ok(RepresentationValue::new(v, Path::Abel))
}

/// `ζ'(−1, t) = (1/4π) Σ sin/n² − (1/2π²)[log 2π + γ − 1] Σ cos/n² − (1/2π²) Σ log n cos/n²`.
pub fn zeta_prime_neg1_fourier(t: f64, ctx: &EvalContext) -> Result<RepresentationValue> {
    unit_interval("zeta_prime_neg1_fourier", t)?;
    let (s0, c0, c1) = inverse_square_sums(t, ctx)?;
    let k = 1.0 / (2.0 * PI * PI);
    let v = combine(&[(1.0 / (4.0 * PI), s0), (-k * (C - 1.0), c0), (-k, c1)]);
    Ok(RepresentationValue::new(v, Path::Direct))
}

/// Abel limit of a single shifted series, exposed for identity checks.
pub fn abel_shifted(j: u32, x: f64, y: f64, s: f64, kind: TrigKind, ctx: &EvalContext) -> Result<RealValue> {
    abel_value(x, s, &shifted_components(j, y, kind, 1.0), ctx)
}
