//! Hurwitz's Fourier series and the digamma representations built on it.

use std::f64::consts::{PI, TAU};

use super::super::support::*;
use super::super::Entry;
use crate::consts::GAMMA_PLUS_LN_2PI as C;
use crate::regsum::{Component as P, TrigKind};
use crate::repr::{digamma_fourier, hansen_trig_closed, Path};
use TrigKind::{Cos, Sin};

fn cot(t: f64) -> f64 {
    1.0 / t.tan()
}

pub fn register(cat: &mut Vec<Entry>) {
    cat.push(entry(
        desc(
            "I-2.1",
            "Hurwitz's Fourier series for ζ(s, x)",
            "2Γ(1−s)[sin(πs/2) Σ cos 2πnx/(2πn)^{1−s} + cos(πs/2) Σ sin 2πnx/(2πn)^{1−s}] by direct summation",
            "s < 1, x ∈ (0, 1)",
            DIRECT_TOL,
        ),
        product(pts("s", &[-1.5, -0.5, 0.3, 0.6]), pts("x", &[0.2, 0.5, 0.8])),
        |p, ctx| {
            let s = p["s"];
            require(s < 1.0, format!("s must be below 1, got {s}"))?;
            let x = within(p, "x", 0.0, 1.0)?;
            let (re, im) = osc_parts(|n| (TAU * n).powf(s - 1.0), x, 1, 0.0, ctx)?;
            let g = 2.0 * lgamma(1.0 - s, ctx)?.value.exp();
            let (sn, cs) = (0.5 * PI * s).sin_cos();
            let rhs = crate::context::combine(&[(g * sn, re), (g * cs, im)]);
            eval(hz(0, s, x, ctx)?, rhs)
        },
    ));
    cat.push(entry(
        desc(
            "I-2.4",
            "continued limit of Σ cos 2πnx",
            "analytic continuation through Stieltjes constants of Σ cos(2πnx)/(2πn)^{1−s} at s → 1",
            "x ∈ (0, 1)",
            ENGINE_TOL,
        ),
        pts("x", &X9),
        |p, ctx| {
            let x = within(p, "x", 0.0, 1.0)?;
            eval(hansen_trig_closed(0, x, 0.0, Cos, ctx)?.real(), exact(-0.5))
        },
    ));
    cat.push(entry(
        desc(
            "I-2.6",
            "Fourier representation of the digamma function",
            "Abel limit of Σ [2(γ + log 2πn) cos 2πnx − π sin 2πnx]/n^{1−s} against ψ(x)",
            "x ∈ (0, 1)",
            ABEL_TOL,
        ),
        pts("x", &X9),
        |p, ctx| {
            let x = within(p, "x", 0.0, 1.0)?;
            let rhs = abel(x, 0.0, &[P::new(1, Cos, 2.0), P::new(0, Cos, 2.0 * C), P::new(0, Sin, -PI)], ctx)?;
            eval(psi(x, ctx)?, rhs)
        },
    ));
    cat.push(entry(
        desc(
            "I-2.7",
            "continued limit of Σ sin 2πnx",
            "analytic continuation through Stieltjes constants of Σ sin(2πnx)/n^{1−s} at s → 1",
            "x ∈ (0, 1)",
            ENGINE_TOL,
        ),
        pts("x", &X9),
        |p, ctx| {
            let x = within(p, "x", 0.0, 1.0)?;
            eval(hansen_trig_closed(0, x, 0.0, Sin, ctx)?.real(), exact(0.5 * cot(PI * x)))
        },
    ));
    cat.push(entry(
        desc(
            "I-2.8",
            "digamma function from Σ log n cos 2πnx",
            "ψ(x) = −C − (π/2) cot πx + 2 · Abel Σ log n cos 2πnx",
            "x ∈ (0, 1)",
            ABEL_TOL,
        ),
        pts("x", &X9),
        |p, ctx| {
            let x = within(p, "x", 0.0, 1.0)?;
            let rhs = abel(x, 0.0, &[P::new(1, Cos, 2.0)], ctx)?.offset(-C - 0.5 * PI * cot(PI * x));
            eval(psi(x, ctx)?, rhs)
        },
    ));
    cat.push(entry(
        desc(
            "I-2.8.1",
            "digamma function from Σ (γ + log 2πn) cos 2πnx",
            "ψ(x) = −(π/2) cot πx + 2 lim Σ (γ + log 2πn) cos 2πnx, continued through Stieltjes constants",
            "x ∈ (0, 1)",
            ENGINE_TOL,
        ),
        pts("x", &X9),
        |p, ctx| {
            let x = within(p, "x", 0.0, 1.0)?;
            eval(psi(x, ctx)?, digamma_fourier(x, Path::StieltjesExpansion, ctx)?.real())
        },
    ));
    cat.push(entry(
        desc(
            "I-2.10",
            "Lerch's trigonometric expansion of ψ(x) sin πx",
            "ψ(x) sin πx = −C sin πx − (π/2) cos πx − Σ sin((2n+1)πx) log(1 + 1/n)",
            "x ∈ (0, 1)",
            DIRECT_TOL,
        ),
        pts("x", &X9),
        |p, ctx| {
            let x = within(p, "x", 0.0, 1.0)?;
            let (_, im) = osc_parts(|n| (1.0 / n).ln_1p(), x, 1, PI * x, ctx)?;
            let lhs = psi(x, ctx)?.scale((PI * x).sin());
            let rhs = im.scale(-1.0).offset(-C * (PI * x).sin() - 0.5 * PI * (PI * x).cos());
            eval(lhs, rhs)
        },
    ));
    cat.push(entry(
        desc(
            "I-2.11",
            "Lerch's series against the Abel limit of Σ log n cos 2πnx",
            "−Σ sin((2n+1)πx) log(1 + 1/n) = 2 sin πx · Abel Σ log n cos 2πnx",
            "x ∈ (0, 1)",
            ABEL_TOL,
        ),
        pts("x", &X9),
        |p, ctx| {
            let x = within(p, "x", 0.0, 1.0)?;
            let (_, im) = osc_parts(|n| (1.0 / n).ln_1p(), x, 1, PI * x, ctx)?;
            let rhs = abel(x, 0.0, &[P::new(1, Cos, 2.0 * (PI * x).sin())], ctx)?;
            eval(im.scale(-1.0), rhs)
        },
    ));
    cat.push(entry(
        desc(
            "I-2.12",
            "integrated Lerch series",
            "Σ cos((2n+1)πu) log(1 + 1/n)/(2n+1) = 2 Σ [2n sin 2πnu sin πu + cos 2πnu cos πu] log n/(4n² − 1)",
            "u ∈ (0, 1)",
            DIRECT_TOL,
        ),
        pts("u", &X9),
        |p, ctx| {
            let u = within(p, "u", 0.0, 1.0)?;
            let (lhs, _) = osc_parts(|n| (1.0 / n).ln_1p() / (2.0 * n + 1.0), u, 1, PI * u, ctx)?;
            let (_, a) = osc_parts(|n| 2.0 * n * n.ln() / (4.0 * n * n - 1.0), u, 1, 0.0, ctx)?;
            let (b, _) = osc_parts(|n| n.ln() / (4.0 * n * n - 1.0), u, 1, 0.0, ctx)?;
            let rhs = crate::context::combine(&[(2.0 * (PI * u).sin(), a), (2.0 * (PI * u).cos(), b)]);
            eval(lhs, rhs)
        },
    ));
    cat.push(entry(
        desc(
            "I-2.13",
            "integrated Lerch series at u = ¼",
            "alternating series in log(1 + 1/2n) and log(1 + 1/(2n+1)) against alternating series in log n/(4n² − 1)",
            "none",
            DIRECT_TOL,
        ),
        single(),
        |_, ctx| {
            let (a, _) = osc_parts(|n| (1.0 / (2.0 * n)).ln_1p() / (4.0 * n + 1.0), 0.5, 1, 0.0, ctx)?;
            let (b, _) = osc_parts(|n| (1.0 / (2.0 * n + 1.0)).ln_1p() / (4.0 * n + 3.0), 0.5, 0, 0.0, ctx)?;
            let (c, _) = osc_parts(
                |n| {
                    let m = 2.0 * n + 1.0;
                    2.0 * m * m.ln() / (4.0 * m * m - 1.0)
                },
                0.5,
                0,
                0.0,
                ctx,
            )?;
            let (d, _) = osc_parts(|n| (2.0 * n).ln() / (16.0 * n * n - 1.0), 0.5, 1, 0.0, ctx)?;
            eval(a.sub(b), c.add(d).scale(2.0))
        },
    ));
    cat.push(entry(
        desc(
            "I-2.14",
            "Kölbig's integral of ψ(x) sin πx",
            "∫₀¹ ψ(x) sin πx dx = −(2/π)[C + 2 Σ log n/(4n² − 1)], the sum as −Σ 4⁻ᵏ ζ'(2k)",
            "none",
            QUAD_TOL,
        ),
        single(),
        |_, ctx| {
            let lhs = quad(|x| psi(x, ctx).map_or(f64::NAN, |v| v.value) * (PI * x).sin(), 0.0, 1.0, ctx)?;
            let mut sum = exact(0.0);
            let mut w = 1.0;
            for k in 1..=40 {
                w *= 0.25;
                let d = rz(1, 2.0 * k as f64, ctx)?.scale(-w);
                sum = sum.add(d);
                if d.value.abs() < 1e-18 {
                    break;
                }
            }
            eval(lhs, sum.scale(2.0).offset(C).scale(-2.0 / PI))
        },
    ));
    cat.push(entry(
        desc(
            "I-2.15",
            "Fourier sine coefficients of ψ",
            "∫₀¹ ψ(x) sin 2kπx dx = −π/2",
            "k ∈ {1, 2, …}",
            QUAD_TOL,
        ),
        pts("k", &[1.0, 2.0, 3.0]),
        |p, ctx| {
            let k = integer(p, "k", 1, 64)? as f64;
            let lhs = quad(|x| psi(x, ctx).map_or(f64::NAN, |v| v.value) * (TAU * k * x).sin(), 0.0, 1.0, ctx)?;
            eval(lhs, exact(-0.5 * PI))
        },
    ));
}
