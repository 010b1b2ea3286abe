//! Grids and evaluation shorthands shared by the catalog.

use num_complex::Complex64;

use super::{Entry, Evaluation, IdentityDescriptor, Params};
use crate::context::{EvalContext, RealValue};
use crate::error::{Error, Result};
use crate::regsum::Component;
use crate::repr::fourier::abel_combination;
use crate::special::summation::oscillatory_sum;
use crate::special::{digamma, integrate_adaptive, log_gamma};
use crate::zeta::{hurwitz_zeta_deriv, riemann_zeta_deriv, stieltjes};

/// `x ∈ {0.1, …, 0.9}`.
pub const X9: [f64; 9] = [0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9];
/// Points of `(0, ½)` with `sin 2πx ≥ 0.5`.
pub const XH: [f64; 7] = [0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4];
/// Points of `(0, 0.45]` for the power series in `ζ'(−n)`.
pub const XS: [f64; 8] = [0.1, 0.15, 0.2, 0.25, 0.3, 0.35, 0.4, 0.45];

pub const ENGINE_TOL: f64 = 1e-9;
pub const DIRECT_TOL: f64 = 1e-9;
pub const ABEL_TOL: f64 = 1e-8;
pub const ABEL2_TOL: f64 = 1e-6;
pub const QUAD_TOL: f64 = 1e-8;

pub fn desc(id: &'static str, title: &'static str, reference: &'static str, param_spec: &'static str, tol: f64) -> IdentityDescriptor {
    IdentityDescriptor { id, aliases: &[], title, reference, param_spec, default_tolerance: tol }
}

impl IdentityDescriptor {
    pub(crate) fn aliases(mut self, aliases: &'static [&'static str]) -> Self {
        self.aliases = aliases;
        self
    }
}

pub fn entry<F>(desc: IdentityDescriptor, grid: Vec<Params>, eval: F) -> Entry
where
    F: Fn(&Params, &EvalContext) -> Result<Evaluation> + Send + Sync + 'static,
{
    assert!(!grid.is_empty(), "{} has an empty grid", desc.id);
    Entry { desc, grid, eval: Box::new(eval) }
}

/// One point with no parameters.
pub fn single() -> Vec<Params> {
    vec![Params::new()]
}

pub fn pts(name: &str, vals: &[f64]) -> Vec<Params> {
    vals.iter().map(|&v| Params::from([(name.to_string(), v)])).collect()
}

/// Cartesian product, varying `b` fastest.
pub fn product(a: Vec<Params>, b: Vec<Params>) -> Vec<Params> {
    a.iter()
        .flat_map(|pa| {
            b.iter().map(move |pb| {
                let mut m = pa.clone();
                m.extend(pb.iter().map(|(k, v)| (k.clone(), *v)));
                m
            })
        })
        .collect()
}

pub fn require(ok: bool, detail: impl Into<String>) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::domain("check", detail))
    }
}

/// Parameter that must lie strictly inside `(lo, hi)`.
pub fn within(p: &Params, name: &str, lo: f64, hi: f64) -> Result<f64> {
    let v = p[name];
    require(v > lo && v < hi, format!("{name} must lie in ({lo}, {hi}), got {v}"))?;
    Ok(v)
}

/// Parameter that must be a positive integer no larger than `max`.
pub fn integer(p: &Params, name: &str, min: u32, max: u32) -> Result<u32> {
    let v = p[name];
    require(
        v.fract() == 0.0 && v >= min as f64 && v <= max as f64,
        format!("{name} must be an integer in {min}..={max}, got {v}"),
    )?;
    Ok(v as u32)
}

pub fn exact(v: f64) -> RealValue {
    RealValue::exact(v)
}

pub fn eval(lhs: RealValue, rhs: RealValue) -> Result<Evaluation> {
    Ok(Evaluation::new(lhs, rhs))
}

pub fn abel(x: f64, s: f64, parts: &[Component], ctx: &EvalContext) -> Result<RealValue> {
    let r = abel_combination(x, s, parts, ctx)?;
    Ok(RealValue::new(r.value, r.err_estimate))
}

/// Real and imaginary parts of `e^{iφ} Σ_{n≥start} f(n) e^{2πint}`.
pub fn osc_parts<F: Fn(f64) -> f64>(f: F, t: f64, start: u64, phi: f64, ctx: &EvalContext) -> Result<(RealValue, RealValue)> {
    let (z, e) = oscillatory_sum(f, t, start, ctx)?;
    let w = z * Complex64::from_polar(1.0, phi);
    Ok((RealValue::new(w.re, e), RealValue::new(w.im, e)))
}

pub fn psi(x: f64, ctx: &EvalContext) -> Result<RealValue> {
    digamma(x, ctx)
}

pub fn lgamma(x: f64, ctx: &EvalContext) -> Result<RealValue> {
    log_gamma(x, ctx)
}

pub fn gam(n: u32, x: f64, ctx: &EvalContext) -> Result<RealValue> {
    Ok(stieltjes(n, x, ctx)?.real())
}

pub fn hz(k: u32, s: f64, x: f64, ctx: &EvalContext) -> Result<RealValue> {
    hurwitz_zeta_deriv(k, s, x, ctx)
}

pub fn rz(k: u32, s: f64, ctx: &EvalContext) -> Result<RealValue> {
    riemann_zeta_deriv(k, s, ctx)
}

pub fn quad<F: Fn(f64) -> f64>(f: F, a: f64, b: f64, ctx: &EvalContext) -> Result<RealValue> {
    integrate_adaptive(f, a, b, ctx)
}

/// `f'(x)` by central differences with one Richardson step.
///
/// The error combines the Richardson correction with the propagated error of `f`.
pub fn derivative<F>(f: F, x: f64, h: f64) -> Result<RealValue>
where
    F: Fn(f64) -> Result<RealValue>,
{
    let (p1, m1) = (f(x + h)?, f(x - h)?);
    let (p2, m2) = (f(x + 0.5 * h)?, f(x - 0.5 * h)?);
    let d1 = (p1.value - m1.value) / (2.0 * h);
    let d2 = (p2.value - m2.value) / h;
    let noise = (p1.err_estimate + m1.err_estimate + p2.err_estimate + m2.err_estimate) / h
        + 4.0 * f64::EPSILON * p1.value.abs().max(m1.value.abs()) / h;
    let r = (4.0 * d2 - d1) / 3.0;
    Ok(RealValue::new(r, (r - d2).abs() * 0.1 + 2.0 * noise))
}

/// `Σ_{n≥0} w(n) ζ'(−n−shift) zⁿ/n!` summed until the terms fall below `1e-17`.
pub fn zeta_prime_taylor<W: Fn(u32) -> f64>(z: f64, shift: u32, w: W, ctx: &EvalContext) -> Result<RealValue> {
    let mut acc = crate::special::summation::Neumaier::new();
    let mut err = 0.0;
    let mut zn = 1.0;
    let mut small = 0;
    for n in 0..160u32 {
        let d = rz(1, -((n + shift) as f64), ctx)?;
        let c = w(n) * zn;
        let term = c * d.value;
        acc.add(term);
        err += (c * d.err_estimate).abs();
        small = if term.abs() < 1e-17 { small + 1 } else { 0 };
        if small >= 2 {
            break;
        }
        zn *= z / (n + 1) as f64;
    }
    let v = acc.sum();
    Ok(RealValue::new(v, err + 8.0 * f64::EPSILON * v.abs()))
}
