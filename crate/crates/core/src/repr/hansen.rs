//! Continuation of `Σ logʲ n · sin(2πnx + y) / nˢ` to `s = 0` through Stieltjes constants.

use std::f64::consts::{FRAC_PI_2, PI, TAU};

use super::taylor::Taylor;
use crate::consts::EULER_GAMMA;
use super::{Path, RepresentationValue};
use crate::context::{EvalContext, RealValue};
use crate::error::{Error, Result};
use crate::regsum::TrigKind;
use crate::zeta::{riemann_zeta_deriv, stieltjes};

pub const MAX_LOG_POWER: u32 = 3;

fn factorial(n: usize) -> f64 {
    (1..=n).fold(1.0, |a, i| a * i as f64)
}

/// `Σ γₘ(a) sᵐ/m!` and the matching series of error bounds.
fn stieltjes_series(a: f64, order: usize, ctx: &EvalContext) -> Result<(Taylor, Taylor)> {
    let mut v = Taylor::zero(order);
    let mut e = Taylor::zero(order);
    for m in 0..=order {
        let g = stieltjes(m as u32, a, ctx)?;
        v.0[m] = g.value / factorial(m);
        e.0[m] = g.err_estimate / factorial(m);
    }
    Ok((v, e))
}

/// `lim_{s→0} Σ logʲ n · trig(2πnx + y) / nˢ` in the analytic-continuation sense.
///
/// With `F(s) = Σ sin(2πnx + y)/nˢ = (2π)^{s−1} Γ(1−s) [cos(y − πs/2) ζ(1−s, x) − cos(y + πs/2) ζ(1−s, 1−x)]`
/// the limit is `(−1)ʲ F⁽ʲ⁾(0)`. The poles of the two Hurwitz terms cancel and
/// the remaining Taylor coefficients involve `γ₀ … γⱼ` at `x` and `1 − x`.
pub fn hansen_trig_closed(j: u32, x: f64, y: f64, kind: TrigKind, ctx: &EvalContext) -> Result<RepresentationValue> {
    if j > MAX_LOG_POWER {
        return Err(Error::domain("hansen_trig_closed", format!("log power {j} exceeds {MAX_LOG_POWER}")));
    }
    if !(x > 0.0 && x < 1.0) || !y.is_finite() {
        return Err(Error::domain("hansen_trig_closed", format!("need 0 < x < 1 and finite y, got x = {x}")));
    }
    let y = match kind {
        TrigKind::Sin => y,
        TrigKind::Cos => y + FRAC_PI_2,
    };
    let n = j as usize;
    let (sy, cy) = y.sin_cos();

    let ln2pi = TAU.ln();
    let pow = Taylor::from_fn(n, |m| ln2pi.powi(m as i32) / factorial(m) / TAU);
    let mut lg = Taylor::zero(n);
    if n >= 1 {
        lg.0[1] = EULER_GAMMA;
    }
    for k in 2..=n {
        lg.0[k] = riemann_zeta_deriv(0, k as f64, ctx)?.value / k as f64;
    }
    let gamma = lg.exp();

    let half = FRAC_PI_2;
    let cos_h = Taylor::from_fn(n, |m| if m % 2 == 0 { (-1f64).powi(m as i32 / 2) * half.powi(m as i32) / factorial(m) } else { 0.0 });
    let sin_h = Taylor::from_fn(n, |m| if m % 2 == 1 { (-1f64).powi(m as i32 / 2) * half.powi(m as i32) / factorial(m) } else { 0.0 });
    let c1 = &cos_h.scale(cy) + &sin_h.scale(sy);
    let c2 = &cos_h.scale(cy) - &sin_h.scale(sy);
    // (c1 − c2)/s = 2 sin y · sin(πs/2)/s
    let sinc = Taylor::from_fn(n, |m| {
        if m % 2 == 0 {
            (-1f64).powi(m as i32 / 2) * half.powi(m as i32 + 1) / factorial(m + 1)
        } else {
            0.0
        }
    });

    let (rx, ex) = stieltjes_series(x, n, ctx)?;
    let (ry, ey) = stieltjes_series(1.0 - x, n, ctx)?;
    let bracket = &(&(&c1 * &rx) - &(&c2 * &ry)) - &sinc.scale(2.0 * sy);
    let pg = &pow * &gamma;
    let f = &pg * &bracket;
    let fe = &pg.abs() * &(&(&c1.abs() * &ex) + &(&c2.abs() * &ey));

    let sign = if j.is_multiple_of(2) { 1.0 } else { -1.0 };
    let scale = sign * factorial(n);
    let value = scale * f.0[n];
    let err = scale.abs() * fe.0[n] + 8.0 * f64::EPSILON * (value.abs() + 1.0 / (PI * x).sin());
    Ok(RepresentationValue::new(RealValue::new(value, err), Path::StieltjesExpansion))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::consts::GAMMA_PLUS_LN_2PI;
    use crate::special::digamma;

    fn c() -> EvalContext {
        EvalContext::default()
    }

    #[test]
    fn plain_cosine_and_sine() {
        for &x in &[0.1, 0.35, 0.5, 0.8] {
            let cs = hansen_trig_closed(0, x, 0.0, TrigKind::Cos, &c()).unwrap();
            let sn = hansen_trig_closed(0, x, 0.0, TrigKind::Sin, &c()).unwrap();
            assert!((cs.value + 0.5).abs() < 1e-13);
            assert!((sn.value - 0.5 / (PI * x).tan()).abs() < 1e-13);
        }
    }

    #[test]
    fn shifted_phase() {
        let (x, y) = (0.3, 0.7);
        let v = hansen_trig_closed(0, x, y, TrigKind::Sin, &c()).unwrap().value;
        let want = 0.5 * (PI * x + y).cos() / (PI * x).sin();
        assert!((v - want).abs() < 1e-13);
    }

    #[test]
    fn log_cosine_closed_form() {
        for &x in &[0.2, 0.5, 0.7] {
            let v = hansen_trig_closed(1, x, 0.0, TrigKind::Cos, &c()).unwrap().value;
            let want = 0.25 * (digamma(x, &c()).unwrap().value + digamma(1.0 - x, &c()).unwrap().value)
                + 0.5 * GAMMA_PLUS_LN_2PI;
            assert!((v - want).abs() < 1e-13, "x={x} {v} {want}");
        }
    }

    #[test]
    fn log_sine_closed_form() {
        let x = 0.3;
        let v = hansen_trig_closed(1, x, 0.0, TrigKind::Sin, &c()).unwrap().value;
        let g = |a| stieltjes(1, a, &c()).unwrap().value;
        let want = (g(1.0 - x) - g(x)) / TAU - 0.5 * GAMMA_PLUS_LN_2PI / (PI * x).tan();
        assert!((v - want).abs() < 1e-13, "{v} {want}");
    }
}
