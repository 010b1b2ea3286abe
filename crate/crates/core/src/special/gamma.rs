//! `log Γ`, `ψ` and `ψ'` on the positive real axis.
//!
//! Each function shifts its argument upward with the recurrence until it is at
//! least [`SHIFT_TARGET`] and then applies the asymptotic Bernoulli expansion
//! truncated after `em_order / 2` terms.

use std::f64::consts::TAU;

use super::bernoulli::bernoulli_number;
use super::summation::Neumaier;
use crate::context::{EvalContext, RealValue};
use crate::error::{Error, Result};

pub const SHIFT_TARGET: f64 = 10.0;

fn check(op: &'static str, x: f64) -> Result<()> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(Error::domain(op, format!("argument must be positive and finite, got {x}")));
    }
    Ok(())
}

fn shift(x: f64) -> (f64, usize) {
    let m = if x >= SHIFT_TARGET { 0 } else { (SHIFT_TARGET - x).ceil() as usize };
    (x + m as f64, m)
}

pub fn log_gamma(x: f64, ctx: &EvalContext) -> Result<RealValue> {
    check("log_gamma", x)?;
    let (y, m) = shift(x);
    let mut prod = 1.0;
    for i in 0..m {
        prod *= x + i as f64;
    }
    let mut acc = Neumaier::new();
    acc.add((y - 0.5) * y.ln());
    acc.add(-y);
    acc.add(0.5 * TAU.ln());
    acc.add(-prod.ln());
    let pairs = ctx.em_pairs();
    let y2 = y * y;
    let mut p = y;
    for k in 1..=pairs {
        let b = bernoulli_number(2 * k)?;
        acc.add(b / ((2 * k * (2 * k - 1)) as f64 * p));
        p *= y2;
    }
    let k = pairs + 1;
    let next = bernoulli_number(2 * k)? / ((2 * k * (2 * k - 1)) as f64 * p);
    let v = acc.sum();
    Ok(RealValue::new(v, next.abs() + 4.0 * f64::EPSILON * (y * y.ln()).abs()))
}

pub fn digamma(x: f64, ctx: &EvalContext) -> Result<RealValue> {
    check("digamma", x)?;
    let (y, m) = shift(x);
    let mut acc = Neumaier::new();
    for i in 0..m {
        acc.add(-1.0 / (x + i as f64));
    }
    acc.add(y.ln());
    acc.add(-0.5 / y);
    let y2 = y * y;
    let mut p = y2;
    for k in 1..=ctx.em_pairs() {
        acc.add(-bernoulli_number(2 * k)? / (2 * k) as f64 / p);
        p *= y2;
    }
    let k = ctx.em_pairs() + 1;
    let next = bernoulli_number(2 * k)? / (2 * k) as f64 / p;
    let scale = y.ln().abs() + 1.0 / x;
    Ok(RealValue::new(acc.sum(), next.abs() + 4.0 * f64::EPSILON * scale))
}

pub fn trigamma(x: f64, ctx: &EvalContext) -> Result<RealValue> {
    check("trigamma", x)?;
    let (y, m) = shift(x);
    let mut acc = Neumaier::new();
    for i in 0..m {
        let t = x + i as f64;
        acc.add(1.0 / (t * t));
    }
    acc.add(1.0 / y);
    acc.add(0.5 / (y * y));
    let y2 = y * y;
    let mut p = y2 * y;
    for k in 1..=ctx.em_pairs() {
        acc.add(bernoulli_number(2 * k)? / p);
        p *= y2;
    }
    let next = bernoulli_number(2 * ctx.em_pairs() + 2)? / p;
    let v = acc.sum();
    Ok(RealValue::new(v, next.abs() + 4.0 * f64::EPSILON * v.abs()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::consts::EULER_GAMMA;
    use std::f64::consts::{LN_2, PI};

    fn ctx() -> EvalContext {
        EvalContext::default()
    }

    #[test]
    fn log_gamma_reference_values() {
        let c = ctx();
        assert!(log_gamma(1.0, &c).unwrap().value.abs() < 1e-14);
        assert!(log_gamma(2.0, &c).unwrap().value.abs() < 1e-14);
        assert!((log_gamma(0.25, &c).unwrap().value - 1.2880225246980774).abs() < 1e-14);
        assert!((log_gamma(0.5, &c).unwrap().value - 0.5 * PI.ln()).abs() < 1e-14);
        assert!((log_gamma(100.0, &c).unwrap().value - 359.134_205_369_575_4).abs() < 1e-11);
    }

    #[test]
    fn digamma_reference_values() {
        let c = ctx();
        assert!((digamma(1.0, &c).unwrap().value + EULER_GAMMA).abs() < 1e-14);
        assert!((digamma(0.5, &c).unwrap().value + EULER_GAMMA + 2.0 * LN_2).abs() < 1e-14);
        let quarter = -EULER_GAMMA - PI / 2.0 - 3.0 * LN_2;
        assert!((digamma(0.25, &c).unwrap().value - quarter).abs() < 1e-14);
    }

    #[test]
    fn trigamma_reference_values() {
        let c = ctx();
        assert!((trigamma(0.5, &c).unwrap().value - PI * PI / 2.0).abs() < 1e-13);
        assert!((trigamma(1.0, &c).unwrap().value - PI * PI / 6.0).abs() < 1e-14);
    }

    #[test]
    fn non_positive_arguments_are_rejected() {
        let c = ctx();
        for x in [0.0, -1.0, -0.5, f64::NAN] {
            assert!(matches!(log_gamma(x, &c), Err(Error::Domain { .. })));
            assert!(matches!(digamma(x, &c), Err(Error::Domain { .. })));
            assert!(matches!(trigamma(x, &c), Err(Error::Domain { .. })));
        }
    }
}
