//! Duplication relations: Landau's series, digamma and the first Stieltjes constant.

use std::f64::consts::{LN_2, PI};

use super::super::support::*;
use super::super::{Entry, Params};
use crate::context::{combine, EvalContext, RealValue};
use crate::error::Result;

/// `Σ logʲ n · trig(2πnx)/nˢ` by direct summation: `(cos part, sin part)`.
fn series(j: i32, s: f64, x: f64, ctx: &EvalContext) -> Result<(RealValue, RealValue)> {
    let start = if j == 0 { 1 } else { 2 };
    osc_parts(|n| n.ln().powi(j) * n.powf(-s), x, start, 0.0, ctx)
}

fn half_point(p: &Params) -> Result<(f64, f64)> {
    let x = within(p, "x", 0.0, 0.5)?;
    let s = p["s"];
    require(s > 0.0, format!("s must be positive, got {s}"))?;
    Ok((x, s))
}

fn duplication_grid() -> Vec<Params> {
    product(pts("s", &[0.5, 1.0, 1.5, 2.5]), pts("x", &[0.1, 0.2, 0.3, 0.4]))
}

/// `(at x + ½, 2^{1−s} at 2x − at x + extra)` for the given component.
fn shifted(j: i32, sine: bool, p: &Params, ctx: &EvalContext) -> Result<(RealValue, RealValue, f64)> {
    let (x, s) = half_point(p)?;
    let pick = |v: (RealValue, RealValue)| if sine { v.1 } else { v.0 };
    let a = pick(series(j, s, x + 0.5, ctx)?);
    let b = pick(series(j, s, 2.0 * x, ctx)?);
    let c = pick(series(j, s, x, ctx)?);
    let k = 2f64.powf(1.0 - s);
    let rhs = combine(&[(k, b), (-1.0, c)]);
    Ok((a, rhs, k))
}

pub fn register(cat: &mut Vec<Entry>) {
    cat.push(entry(
        desc(
            "I-3.1",
            "Landau's relation for Σ log n cos(2πnx)/n",
            "f(x + ½) = f(2x) − f(x) − log 2 log(2 sin 2πx) with f(x) = Σ log n cos(2πnx)/n",
            "x ∈ (0, ½)",
            DIRECT_TOL,
        ),
        pts("x", &XH),
        |p, ctx| {
            let x = within(p, "x", 0.0, 0.5)?;
            let f = |t| series(1, 1.0, t, ctx).map(|v| v.0);
            let rhs = f(2.0 * x)?.sub(f(x)?).offset(-LN_2 * (2.0 * (2.0 * PI * x).sin()).ln());
            eval(f(x + 0.5)?, rhs)
        },
    ));
    cat.push(entry(
        desc(
            "I-3.2",
            "duplication of f_s(x) = Σ log n cos(2πnx)/nˢ",
            "f_s(x + ½) = 2^{1−s} f_s(2x) − f_s(x) + 2^{1−s} log 2 Σ cos(4πnx)/nˢ",
            "x ∈ (0, ½), s > 0",
            DIRECT_TOL,
        ),
        duplication_grid(),
        |p, ctx| {
            let (lhs, rhs, k) = shifted(1, false, p, ctx)?;
            let (x, s) = half_point(p)?;
            let c2 = series(0, s, 2.0 * x, ctx)?.0;
            eval(lhs, combine(&[(1.0, rhs), (k * LN_2, c2)]))
        },
    ));
    cat.push(entry(
        desc(
            "I-3.3",
            "duplication of C_s(x) = Σ cos(2πnx)/nˢ",
            "C_s(x + ½) = 2^{1−s} C_s(2x) − C_s(x)",
            "x ∈ (0, ½), s > 0",
            DIRECT_TOL,
        ),
        duplication_grid(),
        |p, ctx| {
            let (lhs, rhs, _) = shifted(0, false, p, ctx)?;
            eval(lhs, rhs)
        },
    ));
    cat.push(entry(
        desc(
            "I-3.4",
            "duplication of S_s(x) = Σ sin(2πnx)/nˢ",
            "S_s(x + ½) = 2^{1−s} S_s(2x) − S_s(x)",
            "x ∈ (0, ½), s > 0",
            DIRECT_TOL,
        ),
        duplication_grid(),
        |p, ctx| {
            let (lhs, rhs, _) = shifted(0, true, p, ctx)?;
            eval(lhs, rhs)
        },
    ));
    cat.push(entry(
        desc(
            "I-3.6",
            "duplication formula for the digamma function",
            "ψ(x + ½) = 2ψ(2x) − ψ(x) − 2 log 2",
            "x ∈ (0, ½)",
            ENGINE_TOL,
        ),
        pts("x", &XH),
        |p, ctx| {
            let x = within(p, "x", 0.0, 0.5)?;
            let rhs = combine(&[(2.0, psi(2.0 * x, ctx)?), (-1.0, psi(x, ctx)?)]).offset(-2.0 * LN_2);
            eval(psi(x + 0.5, ctx)?, rhs)
        },
    ));
    cat.push(entry(
        desc(
            "I-4.1",
            "duplication of g_s(x) = Σ log n sin(2πnx)/nˢ",
            "g_s(x + ½) = 2^{1−s} g_s(2x) − g_s(x) + 2^{1−s} log 2 Σ sin(4πnx)/nˢ",
            "x ∈ (0, ½), s > 0",
            DIRECT_TOL,
        ),
        duplication_grid(),
        |p, ctx| {
            let (lhs, rhs, k) = shifted(1, true, p, ctx)?;
            let (x, s) = half_point(p)?;
            let s2 = series(0, s, 2.0 * x, ctx)?.1;
            eval(lhs, combine(&[(1.0, rhs), (k * LN_2, s2)]))
        },
    ));
    cat.push(entry(
        desc(
            "I-4.2",
            "functional equation for the first generalised Stieltjes constant",
            "γ₁(½ − x) − γ₁(x + ½) = −2[γ₁(2x) − γ₁(1 − 2x)] + [γ₁(x) − γ₁(1 − x)] + 2π log 2 cot 2πx, \
             with γ₁(x + ½) written out through the duplication relation of I-7.19",
            "x ∈ (0, ½)",
            ENGINE_TOL,
        ),
        pts("x", &XH),
        |p, ctx| {
            let x = within(p, "x", 0.0, 0.5)?;
            let g = |t| gam(1, t, ctx);
            let shifted = combine(&[(2.0, g(2.0 * x)?), (-1.0, g(x)?), (2.0 * LN_2, psi(2.0 * x, ctx)?)])
                .offset(-LN_2 * LN_2);
            let lhs = g(0.5 - x)?.sub(shifted);
            let rhs = combine(&[(-2.0, g(2.0 * x)?), (2.0, g(1.0 - 2.0 * x)?), (1.0, g(x)?), (-1.0, g(1.0 - x)?)])
                .offset(2.0 * PI * LN_2 / (2.0 * PI * x).tan());
            eval(lhs, rhs)
        },
    ));
}
