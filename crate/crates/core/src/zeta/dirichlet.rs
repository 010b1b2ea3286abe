//! Alternating zeta `ζₐ(s) = (1 − 2^{1−s}) ζ(s)` and Dirichlet beta `β(s)`.

use std::f64::consts::LN_2;

use super::hurwitz::{hurwitz_zeta_deriv, riemann_zeta_deriv, POLE_RADIUS};
use super::stieltjes::stieltjes;
use crate::context::{combine, EvalContext, RealValue};
use crate::error::{Error, Result};

fn binom(n: u32, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

fn factorial(n: u32) -> f64 {
    (1..=n).fold(1.0, |acc, i| acc * i as f64)
}

/// Laurent coefficients `zₘ = (−1)ᵐ γₘ(x)/m!` of `ζ(s, x) − 1/(s−1)`, `m = 0..=3`.
fn laurent(x: f64, ctx: &EvalContext) -> Result<Vec<RealValue>> {
    (0..=3)
        .map(|m| {
            let g = stieltjes(m, x, ctx)?.real();
            let sign = if m % 2 == 0 { 1.0 } else { -1.0 };
            Ok(g.scale(sign / factorial(m)))
        })
        .collect()
}

/// `k`-th derivative at `u` of the truncated power series `Σ cₚ uᵖ`.
fn series_deriv(c: &[RealValue], k: u32, u: f64) -> RealValue {
    let mut terms = Vec::new();
    for (p, cp) in c.iter().enumerate().skip(k as usize) {
        let f = factorial(p as u32) / factorial(p as u32 - k);
        terms.push((f * u.powi((p - k as usize) as i32), *cp));
    }
    combine(&terms)
}

/// `∂ₛᵏ ζₐ(s)` for `k ≤ 2`.
///
/// At `s = 1` the value is `(−1)^{k+1} [Σ_{j<k} C(k,j) γⱼ log^{k−j} 2 − log^{k+1} 2/(k+1)]`;
/// nearby it comes from the Laurent expansion of `ζ`.
pub fn alt_zeta_deriv(k: u32, s: f64, ctx: &EvalContext) -> Result<RealValue> {
    if k > 2 {
        return Err(Error::domain("alt_zeta_deriv", format!("derivative order {k} exceeds 2")));
    }
    if !s.is_finite() {
        return Err(Error::domain("alt_zeta_deriv", "s must be finite"));
    }
    let u = s - 1.0;
    if u == 0.0 {
        let mut terms = Vec::new();
        for j in 0..k {
            let g = stieltjes(j, 1.0, ctx)?.real();
            terms.push((binom(k, j) * LN_2.powi((k - j) as i32), g));
        }
        let tail = -LN_2.powi(k as i32 + 1) / (k + 1) as f64;
        let sign = if k.is_multiple_of(2) { -1.0 } else { 1.0 };
        return Ok(combine(&terms).offset(tail).scale(sign));
    }
    if u.abs() < POLE_RADIUS {
        // (1 − e^{−uL}) · (1/u + Σ zₘ uᵐ)
        let z = laurent(1.0, ctx)?;
        let f: Vec<f64> = (0..=5)
            .map(|m| if m == 0 { 0.0 } else { -(-LN_2).powi(m as i32) / factorial(m) })
            .collect();
        let mut c = Vec::new();
        for p in 0..=4usize {
            let mut terms = vec![(f[p + 1], RealValue::exact(1.0))];
            for m in 1..=p {
                terms.push((f[m], z[p - m]));
            }
            c.push(combine(&terms));
        }
        return Ok(series_deriv(&c, k, u));
    }
    let pow = 2f64.powf(1.0 - s);
    let mut terms = Vec::new();
    for i in 0..=k {
        let fi = if i == 0 { 1.0 - pow } else { -(-LN_2).powi(i as i32) * pow };
        let z = riemann_zeta_deriv(k - i, s, ctx)?;
        terms.push((binom(k, i) * fi, z));
    }
    Ok(combine(&terms))
}

/// `∂ₛᵏ β(s)` for `k ≤ 1`, with `β(s) = 4^{−s}[ζ(s, ¼) − ζ(s, ¾)]`.
pub fn dirichlet_beta_deriv(k: u32, s: f64, ctx: &EvalContext) -> Result<RealValue> {
    if k > 1 {
        return Err(Error::domain("dirichlet_beta_deriv", format!("derivative order {k} exceeds 1")));
    }
    if !s.is_finite() {
        return Err(Error::domain("dirichlet_beta_deriv", "s must be finite"));
    }
    let u = s - 1.0;
    let (d0, d1) = if u.abs() < POLE_RADIUS {
        let a = laurent(0.25, ctx)?;
        let b = laurent(0.75, ctx)?;
        let c: Vec<RealValue> = a.iter().zip(&b).map(|(p, q)| p.sub(*q)).collect();
        (series_deriv(&c, 0, u), series_deriv(&c, 1, u))
    } else {
        let h = |k, x| hurwitz_zeta_deriv(k, s, x, ctx);
        (h(0, 0.25)?.sub(h(0, 0.75)?), h(1, 0.25)?.sub(h(1, 0.75)?))
    };
    let ln4 = 2.0 * LN_2;
    let w = (-s * ln4).exp();
    Ok(match k {
        0 => d0.scale(w),
        _ => combine(&[(w, d1), (-ln4 * w, d0)]),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::consts::{CATALAN, EULER_GAMMA, LN_PI};
    use std::f64::consts::PI;

    fn c() -> EvalContext {
        EvalContext::default()
    }

    #[test]
    fn alternating_zeta_values() {
        assert!((alt_zeta_deriv(0, 1.0, &c()).unwrap().value - LN_2).abs() < 1e-15);
        assert!((alt_zeta_deriv(0, 0.0, &c()).unwrap().value - 0.5).abs() < 1e-14);
        let d0 = alt_zeta_deriv(1, 0.0, &c()).unwrap().value;
        assert!((d0 - 0.5 * (PI / 2.0).ln()).abs() < 1e-14);
        // ζₐ'(1) = γ log 2 − ½ log² 2
        let d1 = alt_zeta_deriv(1, 1.0, &c()).unwrap().value;
        assert!((d1 - (EULER_GAMMA * LN_2 - 0.5 * LN_2 * LN_2)).abs() < 1e-14);
    }

    #[test]
    fn alternating_zeta_is_continuous_through_one() {
        for k in 0..=2 {
            let at = alt_zeta_deriv(k, 1.0, &c()).unwrap().value;
            let inside = alt_zeta_deriv(k, 1.0 + 5e-4, &c()).unwrap().value;
            let outside = alt_zeta_deriv(k, 1.0 + 2e-3, &c()).unwrap().value;
            let slope = (outside - inside) / 1.5e-3;
            assert!((inside - at - slope * 5e-4).abs() < 1e-6, "k={k}");
        }
    }

    #[test]
    fn beta_values() {
        assert!((dirichlet_beta_deriv(0, 0.0, &c()).unwrap().value - 0.5).abs() < 1e-14);
        assert!((dirichlet_beta_deriv(0, 1.0, &c()).unwrap().value - PI / 4.0).abs() < 1e-14);
        assert!((dirichlet_beta_deriv(0, 2.0, &c()).unwrap().value - CATALAN).abs() < 1e-14);
        let lg = 1.288_022_524_698_077_5;
        let want = 2.0 * lg - LN_PI - 1.5 * LN_2;
        assert!((dirichlet_beta_deriv(1, 0.0, &c()).unwrap().value - want).abs() < 1e-13);
    }
}
