//! Euler–Maclaurin evaluation of `∂ₛᵏ ζ(s, x)`.

use crate::context::{EvalContext, RealValue};
use crate::error::{Error, Result};
use crate::special::bernoulli::scaled_even_table;
use crate::special::summation::Neumaier;

pub const MAX_DERIVATIVE: u32 = 3;

/// Distance from `s = 1` inside which the evaluator reports a pole.
pub const POLE_RADIUS: f64 = 1e-3;

/// Below this `s` the cut-off and the number of Bernoulli terms are chosen by
/// minimizing the combined truncation and cancellation estimate.
const SEARCH_BELOW: f64 = -2.0;
const SEARCH_MAX_N: u64 = 64;

const BINOM: [[f64; 4]; 4] = [
    [1.0, 0.0, 0.0, 0.0],
    [1.0, 1.0, 0.0, 0.0],
    [1.0, 2.0, 1.0, 0.0],
    [1.0, 3.0, 3.0, 1.0],
];
const FACT: [f64; 4] = [1.0, 1.0, 2.0, 6.0];

struct EmParts {
    value: f64,
    trunc: f64,
    mass: f64,
}

impl EmParts {
    fn err(&self) -> f64 {
        self.trunc + 4.0 * f64::EPSILON * self.mass
    }
}

/// Powers `(−L)^0 … (−L)^3`.
fn neg_log_powers(l: f64) -> [f64; 4] {
    [1.0, -l, l * l, -l * l * l]
}

/// Bernoulli correction terms `B₂ⱼ/(2j)! ∂ₛᵏ[(s)₂ⱼ₋₁ a^{1−s−2j}]` for `j = 1..=jmax`.
fn bernoulli_terms(k: usize, s: f64, a: f64, jmax: usize) -> Vec<f64> {
    let c = scaled_even_table();
    let jmax = jmax.min(c.len() - 1);
    let nl = neg_log_powers(a.ln());
    // derivatives of the rising factorial (s)_{2j-1}, starting from (s)_1 = s
    let mut p = [s, 1.0, 0.0, 0.0];
    let inv_a2 = 1.0 / (a * a);
    let mut apow = a.powf(-s - 1.0);
    let mut out = Vec::with_capacity(jmax);
    for j in 1..=jmax {
        let mut d = 0.0;
        for i in 0..=k {
            d += BINOM[k][i] * p[i] * nl[k - i];
        }
        out.push(c[j] * apow * d);
        for m in [2 * j - 1, 2 * j] {
            let q = s + m as f64;
            p = [p[0] * q, p[1] * q + p[0], p[2] * q + 2.0 * p[1], p[3] * q + 3.0 * p[2]];
        }
        apow *= inv_a2;
    }
    out
}

/// Head sum, integral term and half term.
fn head(k: usize, s: f64, x: f64, n: u64) -> (Neumaier, f64) {
    let mut acc = Neumaier::new();
    let mut mass = 0.0;
    for i in 0..n {
        let t = i as f64 + x;
        let lt = t.ln();
        let v = (-s * lt).exp() * neg_log_powers(lt)[k];
        mass += v.abs();
        acc.add(v);
    }
    let a = n as f64 + x;
    let l = a.ln();
    let nl = neg_log_powers(l);
    let a1s = ((1.0 - s) * l).exp();
    let mut integral = 0.0;
    let inv = 1.0 / (s - 1.0);
    let mut invp = inv;
    for i in 0..=k {
        let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
        integral += BINOM[k][i] * nl[k - i] * sign * FACT[i] * invp;
        invp *= inv;
    }
    integral *= a1s;
    let half = 0.5 * (-s * l).exp() * nl[k];
    acc.add(integral);
    acc.add(half);
    mass += integral.abs() + half.abs();
    (acc, mass)
}

fn em_fixed(k: usize, s: f64, x: f64, n: u64, pairs: usize) -> EmParts {
    let (mut acc, mut mass) = head(k, s, x, n);
    let terms = bernoulli_terms(k, s, n as f64 + x, pairs + 1);
    for t in &terms[..pairs] {
        acc.add(*t);
        mass += t.abs();
    }
    EmParts { value: acc.sum(), trunc: terms[pairs].abs(), mass }
}

/// Optimal truncation of the Bernoulli series at fixed `n`.
fn em_optimal(k: usize, s: f64, x: f64, n: u64, min_pairs: usize) -> EmParts {
    let (mut acc, mut mass) = head(k, s, x, n);
    let a = n as f64 + x;
    let sigma = (-s).max(0.0);
    let jend = ((sigma + std::f64::consts::TAU * a) / 2.0).ceil() as usize + 3;
    let terms = bernoulli_terms(k, s, a, jend.max(min_pairs + 1));
    let j0 = min_pairs.max((sigma / 2.0).ceil() as usize).min(terms.len() - 1);
    let mut cut = j0;
    for j in j0..terms.len() - 1 {
        if terms[j].abs() < terms[cut].abs() {
            cut = j;
        }
    }
    // `cut` indexes the first omitted term
    for t in &terms[..cut] {
        acc.add(*t);
        mass += t.abs();
    }
    EmParts { value: acc.sum(), trunc: terms[cut].abs(), mass }
}

fn validate(op: &'static str, k: u32, s: f64, x: f64) -> Result<()> {
    if k > MAX_DERIVATIVE {
        return Err(Error::domain(op, format!("derivative order {k} exceeds {MAX_DERIVATIVE}")));
    }
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain(op, format!("x must be positive and finite, got {x}")));
    }
    if !s.is_finite() {
        return Err(Error::domain(op, "s must be finite"));
    }
    if (s - 1.0).abs() < POLE_RADIUS {
        return Err(Error::Pole { op, s });
    }
    Ok(())
}

/// `∂ₛᵏ ζ(s, x)` for `k ≤ 3`, `x > 0`, `|s − 1| ≥ 10⁻³`.
///
/// For `s ≥ −2` the cut-off is `N = max(10, ⌈|s|⌉ + 10)` with `em_order/2`
/// Bernoulli terms, doubled until the first omitted term is below `abs_tol/100`.
/// For more negative `s` the direct terms grow like `n^{|s|}` and cancel
/// against the Bernoulli tail, so `N` is kept small and the Bernoulli series is
/// truncated at its smallest term.
pub fn hurwitz_zeta_deriv(k: u32, s: f64, x: f64, ctx: &EvalContext) -> Result<RealValue> {
    validate("hurwitz_zeta_deriv", k, s, x)?;
    let ku = k as usize;
    let pairs = ctx.em_pairs();
    if s >= SEARCH_BELOW {
        let mut n = 10u64.max(s.abs().ceil() as u64 + 10);
        loop {
            let r = em_fixed(ku, s, x, n, pairs);
            if r.trunc <= 1e-2 * ctx.abs_tol || 2 * n > ctx.max_terms {
                if r.trunc > ctx.abs_tol {
                    return Err(Error::NonConvergence { op: "hurwitz_zeta_deriv", err: r.err() });
                }
                return Ok(RealValue::new(r.value, r.err()));
            }
            n *= 2;
        }
    }
    let mut best: Option<EmParts> = None;
    for n in 0..=SEARCH_MAX_N {
        if n == 0 && x < 1.0 {
            continue;
        }
        let r = em_optimal(ku, s, x, n, pairs);
        if best.as_ref().is_none_or(|b| r.err() < b.err()) {
            best = Some(r);
        }
    }
    let b = best.expect("search range is non-empty");
    Ok(RealValue::new(b.value, b.err()))
}

/// `∂ₛᵏ ζ(s)`.
pub fn riemann_zeta_deriv(k: u32, s: f64, ctx: &EvalContext) -> Result<RealValue> {
    validate("riemann_zeta_deriv", k, s, 1.0)?;
    hurwitz_zeta_deriv(k, s, 1.0, ctx)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::consts::{EULER_GAMMA, LN_2PI};
    use std::f64::consts::PI;

    fn c() -> EvalContext {
        EvalContext::default()
    }

    #[test]
    fn zeta_at_zero_is_linear_in_x() {
        for i in 1..10 {
            let x = i as f64 / 10.0;
            let v = hurwitz_zeta_deriv(0, 0.0, x, &c()).unwrap();
            assert!((v.value - (0.5 - x)).abs() < 1e-13, "x={x} {v:?}");
        }
    }

    #[test]
    fn riemann_reference_values() {
        let z2 = riemann_zeta_deriv(0, 2.0, &c()).unwrap().value;
        assert!((z2 - PI * PI / 6.0).abs() < 1e-14);
        let zp0 = riemann_zeta_deriv(1, 0.0, &c()).unwrap().value;
        assert!((zp0 + 0.5 * LN_2PI).abs() < 1e-14);
        let zm1 = riemann_zeta_deriv(0, -1.0, &c()).unwrap().value;
        assert!((zm1 + 1.0 / 12.0).abs() < 1e-14);
    }

    #[test]
    fn hurwitz_reference_values() {
        // oracle: mpmath.zeta(2, 0.3, 1)
        let v = hurwitz_zeta_deriv(1, 2.0, 0.3, &c()).unwrap().value;
        assert!((v - 12.341_930_688_885_22).abs() < 1e-12);
        // ζ'(0, x) = log Γ(x) − ½ log 2π at x = 1/2
        let v = hurwitz_zeta_deriv(1, 0.0, 0.5, &c()).unwrap().value;
        assert!((v + 0.5 * 2f64.ln()).abs() < 1e-14);
    }

    #[test]
    fn second_derivative_at_zero() {
        let v = riemann_zeta_deriv(2, 0.0, &c()).unwrap().value;
        let l = LN_2PI;
        // ζ''(0) = γ₁ + γ²/2 − π²/24 − ½ log² 2π
        let gamma1 = -0.072_815_845_483_676_72;
        let want = gamma1 + 0.5 * EULER_GAMMA * EULER_GAMMA - PI * PI / 24.0 - 0.5 * l * l;
        assert!((v - want).abs() < 1e-13, "{v} {want}");
    }

    #[test]
    fn pole_is_rejected() {
        assert!(matches!(hurwitz_zeta_deriv(0, 1.0005, 0.5, &c()), Err(Error::Pole { .. })));
        assert!(hurwitz_zeta_deriv(0, 1.002, 0.5, &c()).is_ok());
        assert!(matches!(hurwitz_zeta_deriv(4, 2.0, 0.5, &c()), Err(Error::Domain { .. })));
        assert!(matches!(hurwitz_zeta_deriv(0, 2.0, 0.0, &c()), Err(Error::Domain { .. })));
    }
}
