//! Fourier series of ζ''(0, u), its functional equations and Dilcher's values.

use std::f64::consts::{LN_2, PI};

use super::super::support::*;
use super::super::{Entry, Evaluation};
use crate::consts::{EULER_GAMMA as G, GAMMA_PLUS_LN_2PI as C, LN_2PI};
use crate::context::{combine, EvalContext, RealValue};
use crate::error::Result;
use crate::regsum::{Component as P, TrigKind};
use crate::repr::zeta2_fourier;
use crate::zeta::stieltjes_via_xderiv;
use TrigKind::Cos;

const ZETA2: f64 = PI * PI / 6.0;

fn z2(u: f64, ctx: &EvalContext) -> Result<RealValue> {
    hz(2, 0.0, u, ctx)
}

fn z2f(u: f64, ctx: &EvalContext) -> Result<RealValue> {
    Ok(zeta2_fourier(u, ctx)?.real())
}

fn binomial(n: u32, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

pub fn register(cat: &mut Vec<Entry>) {
    cat.push(entry(
        desc(
            "I-8.1",
            "Fourier series of ζ''(0, u)",
            "ζ''(0, u) = Σ (γ + log 2πn)² sin/(nπ) − ½ζ(2) Σ sin/(nπ) + Σ (γ + log 2πn) cos/n; the note reports the coefficient ¼ζ(2)",
            "u ∈ (0, 1)",
            ABEL2_TOL,
        ),
        pts("u", &X9),
        |p, ctx| {
            let u = within(p, "u", 0.0, 1.0)?;
            let printed = 0.25 * ZETA2 * (0.5 - u);
            Ok(Evaluation::new(z2f(u, ctx)?, z2(u, ctx)?)
                .with_note(format!("coefficient ¼ζ(2) shifts the sum by {printed:.3e}")))
        },
    ));
    cat.push(entry(
        desc(
            "I-8.2",
            "γₙ(x) as an x-derivative of ζ^{(n+1)}(0, x)",
            "γₙ(x) = ((−1)^{n+1}/(n+1)) ∂ₓ ζ^{(n+1)}(0, x)",
            "n ∈ {0, 1, 2}, x > 0",
            QUAD_TOL,
        ),
        product(pts("n", &[0.0, 1.0, 2.0]), pts("x", &[0.3, 0.5, 1.0, 2.5])),
        |p, ctx| {
            let n = integer(p, "n", 0, 2)?;
            let x = p["x"];
            require(x > 0.0, format!("x must be positive, got {x}"))?;
            eval(gam(n, x, ctx)?, stieltjes_via_xderiv(n, x, ctx)?.real())
        },
    ));
    cat.push(entry(
        desc(
            "I-8.3",
            "integral of γ₁",
            "∫₁ᵘ γ₁(x) dx = ½[ζ''(0, u) − ζ''(0)]",
            "u > 0",
            QUAD_TOL,
        ),
        pts("u", &[0.3, 0.6, 1.5, 2.5]),
        |p, ctx| {
            let u = p["u"];
            require(u > 0.0, format!("u must be positive, got {u}"))?;
            let f = |x: f64| gam(1, x, ctx).map_or(f64::NAN, |v| v.value);
            let lhs = if u < 1.0 { quad(f, u, 1.0, ctx)?.scale(-1.0) } else { quad(f, 1.0, u, ctx)? };
            eval(lhs, z2(u, ctx)?.sub(rz(2, 0.0, ctx)?).scale(0.5))
        },
    ));
    cat.push(entry(
        desc(
            "I-8.4",
            "Ramanujan's cosine series for ζ''(0, u)",
            "Σ (γ + log 2πn) cos(2πnu)/n = ½[ζ''(0, u) + ζ''(0, 1 − u)]",
            "u ∈ (0, 1)",
            DIRECT_TOL,
        ),
        pts("u", &X9),
        |p, ctx| {
            let u = within(p, "u", 0.0, 1.0)?;
            let (re, _) = osc_parts(|n| (C + n.ln()) / n, u, 1, 0.0, ctx)?;
            eval(re, z2(u, ctx)?.add(z2(1.0 - u, ctx)?).scale(0.5))
        },
    ));
    cat.push(entry(
        desc(
            "I-8.5",
            "sine series for the odd part of ζ''(0, u)",
            "½[ζ''(0, u) − ζ''(0, 1 − u)] = Σ (γ + log 2πn)² sin/(nπ) − ½ζ(2) Σ sin/(nπ); the note reports the coefficient ¼ζ(2)",
            "u ∈ (0, 1)",
            DIRECT_TOL,
        ),
        pts("u", &X9),
        |p, ctx| {
            let u = within(p, "u", 0.0, 1.0)?;
            let (_, im) = osc_parts(|n| ((C + n.ln()).powi(2) - 0.5 * ZETA2) / n, u, 1, 0.0, ctx)?;
            let lhs = z2(u, ctx)?.sub(z2(1.0 - u, ctx)?).scale(0.5);
            let printed = 0.25 * ZETA2 * (0.5 - u);
            Ok(Evaluation::new(lhs, im.scale(1.0 / PI))
                .with_note(format!("coefficient ¼ζ(2) shifts the sum by {printed:.3e}")))
        },
    ));
    cat.push(entry(
        desc(
            "I-8.6",
            "even part of ζ''(0, u) through the log-sine series",
            "½[ζ''(0, u) + ζ''(0, 1 − u)] = Σ log n cos(2πnu)/n − (γ + log 2π) log(2 sin πu), Abel-summed",
            "u ∈ (0, 1)",
            ABEL_TOL,
        ),
        pts("u", &X9),
        |p, ctx| {
            let u = within(p, "u", 0.0, 1.0)?;
            let lhs = z2(u, ctx)?.add(z2(1.0 - u, ctx)?).scale(0.5);
            let rhs = abel(u, 1.0, &[P::new(1, Cos, 1.0)], ctx)?.offset(-C * (2.0 * (PI * u).sin()).ln());
            eval(lhs, rhs)
        },
    ));
    cat.push(entry(
        desc(
            "I-8.7",
            "multiplication theorem for Hurwitz zeta and its s-derivatives",
            "∂ₛᵏ Σ_{r<q} ζ(s, r/q) = ∂ₛᵏ [(qˢ − 1) ζ(s)]",
            "integer q ≥ 2, s ≠ 1, k ∈ {0, 1, 2, 3}",
            ENGINE_TOL,
        ),
        product(
            pts("q", &[2.0, 3.0, 5.0]),
            product(pts("s", &[0.0, 2.5]), pts("k", &[0.0, 2.0])),
        ),
        |p, ctx| {
            let q = integer(p, "q", 2, 64)?;
            let k = integer(p, "k", 0, 3)?;
            let s = p["s"];
            require(s != 1.0, "s must differ from 1")?;
            let qf = q as f64;
            let mut lhs = exact(0.0);
            for r in 1..q {
                lhs = lhs.add(hz(k, s, r as f64 / qf, ctx)?);
            }
            let mut rhs = rz(k, s, ctx)?.scale(-1.0);
            for j in 0..=k {
                rhs = rhs.add(rz(k - j, s, ctx)?.scale(binomial(k, j) * qf.powf(s) * qf.ln().powi(j as i32)));
            }
            eval(lhs, rhs)
        },
    ));
    cat.push(entry(
        desc(
            "I-8.8",
            "Candelpergher's log-cosine sum at u = ⅓",
            "Σ log n cos(2nπ/3)/n = ½(γ − ½ log 3) log 3",
            "none",
            ABEL_TOL,
        ),
        single(),
        |_, ctx| {
            let l3 = 3f64.ln();
            eval(abel(1.0 / 3.0, 1.0, &[P::new(1, Cos, 1.0)], ctx)?, exact(0.5 * (G - 0.5 * l3) * l3))
        },
    ));
    cat.push(entry(
        desc(
            "I-8.10",
            "Candelpergher's log-squared cosine sum at u = ⅓",
            "2 Σ log² n cos(2nπ/3)/n = −⅓ log³ 3 + γ log² 3 + 2γ₁ log 3; the note reports the variant with 2γ₁ log 2",
            "none",
            ABEL_TOL,
        ),
        single(),
        |_, ctx| {
            let l3 = 3f64.ln();
            let g1 = gam(1, 1.0, ctx)?;
            let lhs = abel(1.0 / 3.0, 1.0, &[P::new(2, Cos, 2.0)], ctx)?;
            let rhs = g1.scale(2.0 * l3).offset(-l3.powi(3) / 3.0 + G * l3 * l3);
            let printed = (2.0 * g1.value * (l3 - LN_2)).abs();
            Ok(Evaluation::new(lhs, rhs).with_note(format!("residual with 2γ₁ log 2: {printed:.3e}")))
        },
    ));
    cat.push(entry(
        desc(
            "I-8.11",
            "duplication formula for ζ''(0, x) from the Fourier series",
            "ζ''(0, x + ½) = ζ''(0, 2x) − ζ''(0, x) + 2 log 2 [log Γ(2x) − ½ log 2π] + log² 2 (½ − 2x)",
            "x ∈ (0, ½)",
            ABEL2_TOL,
        )
        .aliases(&["I-8.12", "I-8.14"]),
        pts("x", &XH),
        |p, ctx| {
            let x = within(p, "x", 0.0, 0.5)?;
            let rhs = combine(&[(1.0, z2f(2.0 * x, ctx)?), (-1.0, z2f(x, ctx)?), (2.0 * LN_2, lgamma(2.0 * x, ctx)?)])
                .offset(-LN_2 * LN_2PI + LN_2 * LN_2 * (0.5 - 2.0 * x));
            eval(z2f(x + 0.5, ctx)?, rhs)
        },
    ));
    cat.push(entry(
        desc(
            "I-8.13",
            "duplication formula for ζ''(0, x) through ζ(0, 2x) and ζ'(0, 2x)",
            "ζ''(0, x + ½) = log² 2 ζ(0, 2x) + 2 log 2 ζ'(0, 2x) + ζ''(0, 2x) − ζ''(0, x)",
            "x > 0",
            ENGINE_TOL,
        ),
        pts("x", &[0.1, 0.25, 0.4, 0.8, 1.3, 2.2]),
        |p, ctx| {
            let x = p["x"];
            require(x > 0.0, format!("x must be positive, got {x}"))?;
            let rhs = combine(&[
                (LN_2 * LN_2, hz(0, 0.0, 2.0 * x, ctx)?),
                (2.0 * LN_2, hz(1, 0.0, 2.0 * x, ctx)?),
                (1.0, z2(2.0 * x, ctx)?),
                (-1.0, z2(x, ctx)?),
            ]);
            eval(z2(x + 0.5, ctx)?, rhs)
        },
    ));
    cat.push(entry(
        desc(
            "I-Dilcher-1",
            "alternating sum of log n/n",
            "Σ (−1)ⁿ log n/n = γ log 2 − ½ log² 2",
            "none",
            DIRECT_TOL,
        ),
        single(),
        |_, ctx| {
            let (re, _) = osc_parts(|n| n.ln() / n, 0.5, 2, 0.0, ctx)?;
            eval(re, exact(G * LN_2 - 0.5 * LN_2 * LN_2))
        },
    ));
    cat.push(entry(
        desc(
            "I-Dilcher-2",
            "alternating sum of log² n/n",
            "Σ (−1)ⁿ log² n/n = γ log² 2 + 2γ₁ log 2 − ⅓ log³ 2",
            "none",
            DIRECT_TOL,
        ),
        single(),
        |_, ctx| {
            let (re, _) = osc_parts(|n| n.ln().powi(2) / n, 0.5, 2, 0.0, ctx)?;
            let rhs = gam(1, 1.0, ctx)?.scale(2.0 * LN_2).offset(G * LN_2 * LN_2 - LN_2.powi(3) / 3.0);
            eval(re, rhs)
        },
    ));
}

