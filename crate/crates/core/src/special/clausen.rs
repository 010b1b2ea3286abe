//! Clausen function `Cl₂(θ) = Σ sin(nθ)/n²`.

use std::f64::consts::{PI, TAU};

use super::bernoulli::scaled_even_table;
use super::summation::Neumaier;
use crate::context::{EvalContext, RealValue};
use crate::error::{Error, Result};

/// Evaluated on `(−π, π]` through
/// `Cl₂(θ) = θ − θ log|θ| + Σ_{k≥1} |B₂ₖ| θ^{2k+1} / (2k (2k+1) (2k)!)`,
/// whose terms shrink at least by `(θ/2π)²` per step.
pub fn clausen_cl2(theta: f64, ctx: &EvalContext) -> Result<RealValue> {
    if !theta.is_finite() {
        return Err(Error::domain("clausen_cl2", "argument must be finite"));
    }
    let mut t = theta.rem_euclid(TAU);
    if t > PI {
        t -= TAU;
    }
    if t == 0.0 {
        return Ok(RealValue::exact(0.0));
    }
    let table = scaled_even_table();
    let mut acc = Neumaier::new();
    acc.add(t);
    acc.add(-t * t.abs().ln());
    let t2 = t * t;
    let mut p = t * t2;
    let mut last = f64::INFINITY;
    for k in 1..table.len() {
        let term = table[k].abs() * p / (2.0 * k as f64 * (2 * k + 1) as f64);
        acc.add(term);
        last = term.abs();
        if last < 1e-3 * ctx.abs_tol.min(1e-15) {
            break;
        }
        p *= t2;
    }
    Ok(RealValue::new(acc.sum(), last + 4.0 * f64::EPSILON))
}
