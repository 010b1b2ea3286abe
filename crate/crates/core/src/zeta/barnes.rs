//! Barnes G-function on the positive axis.

use std::f64::consts::PI;

use super::hurwitz::{hurwitz_zeta_deriv, riemann_zeta_deriv};
use crate::consts::{EULER_GAMMA, LN_2PI};
use crate::context::{EvalContext, RealValue};
use crate::error::{Error, Result};
use crate::special::gamma::log_gamma;
use crate::special::summation::Neumaier;

/// `ζ'(−1) = (1 − γ − log 2π)/12 + ζ'(2)/(2π²)`.
pub fn zeta_prime_minus_one(ctx: &EvalContext) -> Result<RealValue> {
    let zp2 = riemann_zeta_deriv(1, 2.0, ctx)?;
    Ok(zp2.scale(1.0 / (2.0 * PI * PI)).offset((1.0 - EULER_GAMMA - LN_2PI) / 12.0))
}

/// `log G(x)` for `x > 0`, via `log G(1+t) = t log Γ(t) + ζ'(−1) − ζ'(−1, t)`
/// and `G(1+u) = G(u) Γ(u)` below 1.
pub fn barnes_log_g(x: f64, ctx: &EvalContext) -> Result<RealValue> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain("barnes_log_g", format!("x must be positive and finite, got {x}")));
    }
    if x < 1.0 {
        return Ok(log_g_one_plus(x, ctx)?.sub(log_gamma(x, ctx)?));
    }
    log_g_one_plus(x - 1.0, ctx)
}

fn log_g_one_plus(t: f64, ctx: &EvalContext) -> Result<RealValue> {
    if t == 0.0 {
        return Ok(RealValue::exact(0.0));
    }
    let lg = log_gamma(t, ctx)?.scale(t);
    let zp = zeta_prime_minus_one(ctx)?;
    let zt = hurwitz_zeta_deriv(1, -1.0, t, ctx)?;
    Ok(lg.add(zp).sub(zt))
}

/// `log G(1+z)` for `z > −1` from the Weierstrass product
/// `½z log 2π − ½z(1+z) − ½γz² + Σ_{n≥1} [n log(1+z/n) − z + z²/(2n)]`.
///
/// The sum is explicit up to `n = 64`; the remainder is expanded as
/// `Σ_{k≥3} (−1)^{k+1} zᵏ ζ(k−1, 65)/k`.
pub fn barnes_log_g_product(z: f64, ctx: &EvalContext) -> Result<RealValue> {
    if !(z > -1.0) || !z.is_finite() {
        return Err(Error::domain("barnes_log_g_product", format!("z must exceed −1, got {z}")));
    }
    const M: u64 = 64;
    let mut acc = Neumaier::new();
    acc.add(0.5 * z * LN_2PI);
    acc.add(-0.5 * z * (1.0 + z));
    acc.add(-0.5 * EULER_GAMMA * z * z);
    for n in 1..=M {
        let nf = n as f64;
        acc.add(nf * (z / nf).ln_1p() - z + z * z / (2.0 * nf));
    }
    let mut err = 0.0;
    let mut zk = z * z * z;
    for k in 3..200 {
        let hz = hurwitz_zeta_deriv(0, (k - 1) as f64, (M + 1) as f64, ctx)?;
        let sign = if k % 2 == 0 { -1.0 } else { 1.0 };
        let term = sign * zk * hz.value / k as f64;
        acc.add(term);
        err += (zk * hz.err_estimate / k as f64).abs();
        if term.abs() < 1e-18 {
            break;
        }
        zk *= z;
    }
    let v = acc.sum();
    Ok(RealValue::new(v, err + 8.0 * f64::EPSILON * (1.0 + v.abs())))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::consts::LN_PI;
    use std::f64::consts::LN_2;

    fn c() -> EvalContext {
        EvalContext::default()
    }

    #[test]
    fn canonical_zeta_prime_minus_one() {
        // oracle: mpmath.zeta(-1, 1, 1)
        let want = -0.165_421_143_700_450_93;
        assert!((zeta_prime_minus_one(&c()).unwrap().value - want).abs() < 1e-15);
        let direct = riemann_zeta_deriv(1, -1.0, &c()).unwrap().value;
        assert!((direct - want).abs() < 1e-13);
    }

    #[test]
    fn integer_arguments() {
        // G(1) = G(2) = G(3) = 1, G(4) = 2
        for x in [1.0, 2.0, 3.0] {
            assert!(barnes_log_g(x, &c()).unwrap().value.abs() < 1e-13, "x={x}");
        }
        assert!((barnes_log_g(4.0, &c()).unwrap().value - LN_2).abs() < 1e-12);
    }

    #[test]
    fn half_argument_closed_form() {
        let zp = zeta_prime_minus_one(&c()).unwrap().value;
        let want = LN_2 / 24.0 - 0.25 * LN_PI + 1.5 * zp;
        assert!((barnes_log_g(0.5, &c()).unwrap().value - want).abs() < 1e-13);
    }

    #[test]
    fn product_form_agrees() {
        for &z in &[-0.5, 0.1, 0.5, 0.9, 2.5] {
            let a = barnes_log_g(1.0 + z, &c()).unwrap().value;
            let b = barnes_log_g_product(z, &c()).unwrap().value;
            assert!((a - b).abs() < 1e-12, "z={z} {a} {b}");
        }
    }
}
