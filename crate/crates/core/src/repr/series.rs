//! Closed forms and power series: Srivastava–Tsumura trigonometric Dirichlet
//! series, the γ₁ reflection series and the odd zeta generating function.

use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;

use crate::consts::{EULER_GAMMA, GAMMA_PLUS_LN_2PI};
use crate::context::{combine, EvalContext, RealValue};
use crate::error::{Error, Result};
use crate::special::digamma;
use crate::zeta::{hurwitz_zeta_deriv, riemann_zeta_deriv};

/// Trigonometric Dirichlet series with rational phase and a Hurwitz closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SrivastavaTsumura {
    /// `Σ cos(nπ/3)/nˢ`
    CosPiThird,
    /// `Σ cos(2nπ/3)/nˢ`
    CosTwoPiThirds,
    /// `Σ cos(nπ/2)/nˢ`
    CosPiHalf,
    /// `Σ sin(nπ/3)/nˢ`
    SinPiThird,
    /// `Σ sin(2nπ/3)/nˢ`
    SinTwoPiThirds,
    /// `Σ sin(nπ/2)/nˢ`
    SinPiHalf,
}

impl SrivastavaTsumura {
    pub const ALL: [SrivastavaTsumura; 6] = [
        Self::CosPiThird,
        Self::CosTwoPiThirds,
        Self::CosPiHalf,
        Self::SinPiThird,
        Self::SinTwoPiThirds,
        Self::SinPiHalf,
    ];

    /// Phase `t` such that the series is `Σ trig(2πnt)/nˢ`.
    pub fn turns(self) -> f64 {
        match self {
            Self::CosPiThird | Self::SinPiThird => 1.0 / 6.0,
            Self::CosTwoPiThirds | Self::SinTwoPiThirds => 1.0 / 3.0,
            Self::CosPiHalf | Self::SinPiHalf => 0.25,
        }
    }

    pub fn is_sine(self) -> bool {
        matches!(self, Self::SinPiThird | Self::SinTwoPiThirds | Self::SinPiHalf)
    }
}

/// Closed-form right-hand side of the selected series, continued to all `s ≠ 1`.
pub fn srivastava_tsumura(which: SrivastavaTsumura, s: f64, ctx: &EvalContext) -> Result<RealValue> {
    use SrivastavaTsumura::*;
    let z = riemann_zeta_deriv(0, s, ctx)?;
    let hz = |a: f64| hurwitz_zeta_deriv(0, s, a, ctx);
    let p = |b: f64, e: f64| b.powf(e);
    let sqrt3 = 3f64.sqrt();
    Ok(match which {
        CosPiThird => z.scale(0.5 * (p(6.0, 1.0 - s) - p(3.0, 1.0 - s) - p(2.0, 1.0 - s) + 1.0)),
        CosTwoPiThirds => z.scale(0.5 * (p(3.0, 1.0 - s) - 1.0)),
        CosPiHalf => z.scale(p(2.0, -s) * (p(2.0, 1.0 - s) - 1.0)),
        SinPiThird => combine(&[
            (0.5 * sqrt3 * (p(3.0, -s) - 1.0), z),
            (sqrt3 * p(6.0, -s), hz(1.0 / 6.0)?),
            (sqrt3 * p(6.0, -s), hz(1.0 / 3.0)?),
        ]),
        SinTwoPiThirds => combine(&[(0.5 * sqrt3 * (p(3.0, -s) - 1.0), z), (sqrt3 * p(3.0, -s), hz(1.0 / 3.0)?)]),
        SinPiHalf => combine(&[(p(2.0, -s) - 1.0, z), (p(2.0, 1.0 - 2.0 * s), hz(0.25)?)]),
    })
}

const MAX_SERIES_TERMS: usize = 120;

/// `Σ_{n≥0} (−1)^{n−1} ζ'(−2n−p) (2πx)^{2n+p} / (2n+p)!` for parity `p ∈ {0, 1}`
/// and `|x| ≤ ½`.
///
/// The odd series (`p = 1`) carries the regularized sum `Σ log n · sin(2πnx)`,
/// the even one (`p = 0`) its cosine companion.
pub fn zeta_prime_power_series(parity: u32, x: f64, ctx: &EvalContext) -> Result<RealValue> {
    if parity > 1 || !(x.abs() <= 0.5) {
        return Err(Error::domain("zeta_prime_power_series", format!("need parity 0 or 1 and |x| <= 1/2, got {parity}, {x}")));
    }
    let t = TAU * x;
    let floor = (1e-3 * ctx.abs_tol).min(1e-14);
    let mut acc = Vec::new();
    let mut coef = if parity == 1 { -t } else { -1.0 };
    for n in 0..MAX_SERIES_TERMS {
        if n > 0 {
            let k = (2 * n) as f64 + parity as f64;
            coef *= -t * t / (k * (k - 1.0));
        }
        let d = riemann_zeta_deriv(1, -((2 * n + parity as usize) as f64), ctx)?;
        let term = d.scale(coef);
        acc.push((1.0, term));
        if term.value.abs() < floor && n > 1 {
            let total = combine(&acc);
            return Ok(RealValue::new(total.value, total.err_estimate + term.value.abs()));
        }
    }
    let last = acc.last().map_or(f64::INFINITY, |t| t.1.value.abs());
    Err(Error::NonConvergence { op: "zeta_prime_power_series", err: last })
}

/// `Σ_{n≥0} (−1)^{n−1} ζ'(−2n−1) π^{2n+1} / (2n+1)!`, which equals `(γ + log π)/π`.
pub fn zeta_prime_odd_pi_series(ctx: &EvalContext) -> Result<RealValue> {
    zeta_prime_power_series(1, 0.5, ctx)
}

pub const REFLECTION_SERIES_MAX_X: f64 = 0.45;

/// `γ₁(1−x) − γ₁(1+x)` from the power series in `ζ'(−2n−1)` plus the digamma term.
pub fn gamma1_reflection_series(x: f64, ctx: &EvalContext) -> Result<RealValue> {
    if !(0.0..=REFLECTION_SERIES_MAX_X).contains(&x) {
        return Err(Error::domain(
            "gamma1_reflection_series",
            format!("x must lie in [0, {REFLECTION_SERIES_MAX_X}], got {x}"),
        ));
    }
    let series = zeta_prime_power_series(1, x, ctx)?;
    let psi = digamma(1.0 - x, ctx)?.sub(digamma(1.0 + x, ctx)?);
    Ok(combine(&[(TAU, series), (GAMMA_PLUS_LN_2PI, psi)]))
}

/// Both sides of `Σ_{n≥1} ζ(2n+1) x^{2n} = −½[ψ(1+x) + ψ(1−x)] − γ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OddZetaSeries {
    pub series: RealValue,
    pub closed_form: RealValue,
}

impl OddZetaSeries {
    pub fn residual(&self) -> f64 {
        (self.series.value - self.closed_form.value).abs()
    }
}

pub const ODD_ZETA_MAX_X: f64 = 0.95;

pub fn zeta_odd_power_series(x: f64, ctx: &EvalContext) -> Result<OddZetaSeries> {
    if !(x.abs() <= ODD_ZETA_MAX_X) {
        return Err(Error::domain("zeta_odd_power_series", format!("|x| must be at most {ODD_ZETA_MAX_X}, got {x}")));
    }
    let x2 = x * x;
    let mut acc = Vec::new();
    let mut pow = 1.0;
    let mut n = 1usize;
    loop {
        pow *= x2;
        let z = riemann_zeta_deriv(0, (2 * n + 1) as f64, ctx)?;
        acc.push((pow, z));
        let tail = pow * x2 * z.value / (1.0 - x2);
        if tail < 0.1 * ctx.abs_tol || pow == 0.0 {
            let s = combine(&acc);
            let series = RealValue::new(s.value, s.err_estimate + tail);
            let closed = digamma(1.0 + x, ctx)?.add(digamma(1.0 - x, ctx)?).scale(-0.5).offset(-EULER_GAMMA);
            return Ok(OddZetaSeries { series, closed_form: closed });
        }
        n += 1;
        if n as u64 > ctx.max_terms {
            return Err(Error::NonConvergence { op: "zeta_odd_power_series", err: tail });
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::zeta::stieltjes;
    use std::f64::consts::PI;

    fn c() -> EvalContext {
        EvalContext::default()
    }

    #[test]
    fn cos_two_thirds_at_two() {
        let v = srivastava_tsumura(SrivastavaTsumura::CosTwoPiThirds, 2.0, &c()).unwrap();
        assert!((v.value + PI * PI / 18.0).abs() < 1e-12);
    }

    #[test]
    fn limits_at_zero_match_cot_forms() {
        for which in SrivastavaTsumura::ALL {
            let v = srivastava_tsumura(which, 0.0, &c()).unwrap().value;
            let t = which.turns();
            let want = if which.is_sine() { 0.5 / (PI * t).tan() } else { -0.5 };
            assert!((v - want).abs() < 1e-11, "{which:?} {v} {want}");
        }
    }

    #[test]
    fn sin_half_at_two_is_catalan() {
        let v = srivastava_tsumura(SrivastavaTsumura::SinPiHalf, 2.0, &c()).unwrap().value;
        assert!((v - crate::consts::CATALAN).abs() < 1e-10);
    }

    #[test]
    fn pi_series_value() {
        let v = zeta_prime_odd_pi_series(&c()).unwrap();
        let want = (EULER_GAMMA + PI.ln()) / PI;
        assert!((v.value - want).abs() < 1e-9, "{v:?} {want}");
    }

    #[test]
    fn even_series_is_odd_zeta_generating_function() {
        // ζ'(−2n) = (−1)ⁿ (2n)! ζ(2n+1) / (2(2π)^{2n}), so the terms are −½ζ(2n+1)x^{2n}
        let x = 0.3;
        let v = zeta_prime_power_series(0, x, &c()).unwrap().value;
        let odd = zeta_odd_power_series(x, &c()).unwrap().series.value;
        let want = 0.5 * TAU.ln() - 0.5 * odd;
        assert!((v - want).abs() < 1e-11, "{v} {want}");
    }

    #[test]
    fn reflection_series_matches_stieltjes() {
        for &x in &[0.1, 0.25, 0.45] {
            let v = gamma1_reflection_series(x, &c()).unwrap().value;
            let want = stieltjes(1, 1.0 - x, &c()).unwrap().value - stieltjes(1, 1.0 + x, &c()).unwrap().value;
            assert!((v - want).abs() < 1e-9, "x={x} {v} {want}");
        }
        assert!(gamma1_reflection_series(0.5, &c()).is_err());
    }

    #[test]
    fn odd_zeta_series_agrees() {
        for &x in &[0.0, 0.3, 0.5, -0.7, 0.95] {
            let r = zeta_odd_power_series(x, &c()).unwrap();
            assert!(r.residual() < 1e-9, "x={x} {r:?}");
        }
        assert!(zeta_odd_power_series(0.96, &c()).is_err());
    }
}
