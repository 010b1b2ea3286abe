//! The first Stieltjes constant: Fourier representation, special values and
//! functional equations, with the Dirichlet beta values they use.

use std::f64::consts::{LN_2, PI};

use super::super::support::*;
use super::super::{Entry, Evaluation};
use crate::consts::{EULER_GAMMA as G, GAMMA_PLUS_LN_2PI as C, LN_2PI, LN_PI};
use crate::context::{combine, EvalContext, RealValue};
use crate::error::Result;
use crate::regsum::{Component as P, TrigKind};
use crate::repr::{gamma1_rep, Path};
use crate::zeta::dirichlet_beta_deriv;
use TrigKind::{Cos, Sin};

const ZETA2: f64 = PI * PI / 6.0;

fn binomial(n: u32, k: u32) -> f64 {
    (0..k).fold(1.0, |acc, i| acc * (n - i) as f64 / (i + 1) as f64)
}

/// `ζₐ(s, t) = 2^{−s}[ζ(s, t/2) − ζ(s, (1+t)/2)]`.
fn alt_hurwitz(s: f64, t: f64, ctx: &EvalContext) -> Result<RealValue> {
    Ok(hz(0, s, 0.5 * t, ctx)?.sub(hz(0, s, 0.5 * (1.0 + t), ctx)?).scale(2f64.powf(-s)))
}

pub fn register(cat: &mut Vec<Entry>) {
    cat.push(entry(
        desc(
            "I-7.1",
            "Fourier representation of the first generalized Stieltjes constant",
            "Abel limit of Σ [(γ + log 2πn)² − ½ζ(2)] cos 2πnx/nˢ − π Σ (γ + log 2πn) sin 2πnx/nˢ",
            "x ∈ (0, 1)",
            ABEL2_TOL,
        )
        .aliases(&["I-7.2", "I-7.4"]),
        pts("x", &X9),
        |p, ctx| {
            let x = within(p, "x", 0.0, 1.0)?;
            eval(gam(1, x, ctx)?, gamma1_rep(x, Path::Abel, ctx)?.real())
        },
    ));
    cat.push(entry(
        desc(
            "I-7.5",
            "Coffey's multiplication sum rule for γ_p(r/q)",
            "Σ_{r<q} γ_p(r/q) = −γ_p + q(−1)ᵖ log^{p+1} q/(p+1) + q Σ_j C(p, j)(−1)ʲ γ_{p−j} logʲ q",
            "p ∈ {0, …, 3}, integer q ≥ 2",
            ENGINE_TOL,
        ),
        [(1.0, 2.0), (1.0, 3.0), (1.0, 4.0), (0.0, 2.0), (0.0, 5.0), (2.0, 3.0), (2.0, 4.0), (3.0, 3.0)]
            .iter()
            .map(|&(pp, q)| super::super::Params::from([("p".to_string(), pp), ("q".to_string(), q)]))
            .collect(),
        |p, ctx| {
            let pp = integer(p, "p", 0, 3)?;
            let q = integer(p, "q", 2, 64)?;
            let qf = q as f64;
            let lq = qf.ln();
            let mut lhs = exact(0.0);
            for r in 1..q {
                lhs = lhs.add(gam(pp, r as f64 / qf, ctx)?);
            }
            let sign = if pp % 2 == 0 { 1.0 } else { -1.0 };
            let mut rhs = gam(pp, 1.0, ctx)?.scale(-1.0).offset(qf * sign * lq.powi(pp as i32 + 1) / (pp + 1) as f64);
            for j in 0..=pp {
                let sj = if j % 2 == 0 { 1.0 } else { -1.0 };
                rhs = rhs.add(gam(pp - j, 1.0, ctx)?.scale(qf * binomial(pp, j) * sj * lq.powi(j as i32)));
            }
            eval(lhs, rhs)
        },
    ));
    cat.push(entry(
        desc("I-7.6", "γ₁(½) closed form", "γ₁(½) = γ₁ − log² 2 − 2γ log 2", "none", ENGINE_TOL),
        single(),
        |_, ctx| {
            let rhs = gam(1, 1.0, ctx)?.offset(-LN_2 * LN_2 - 2.0 * G * LN_2);
            eval(gam(1, 0.5, ctx)?, rhs)
        },
    ));
    cat.push(entry(
        desc(
            "I-7.7",
            "γ₁ through ζ''(0)",
            "γ₁ = ζ''(0) + C log 2π − ½(C² − ½ζ(2))",
            "none",
            ENGINE_TOL,
        ),
        single(),
        |_, ctx| {
            let rhs = rz(2, 0.0, ctx)?.offset(C * LN_2PI - 0.5 * (C * C - 0.5 * ZETA2));
            eval(gam(1, 1.0, ctx)?, rhs)
        },
    ));
    cat.push(entry(
        desc(
            "I-7.10",
            "alternating Hurwitz zeta by parity split",
            "Σ (−1)ⁿ/(n + t)ˢ = 2^{−s}[ζ(s, t/2) − ζ(s, (1 + t)/2)]",
            "s > 0, s ≠ 1, t > 0",
            DIRECT_TOL,
        ),
        product(pts("s", &[0.5, 1.5, 2.5]), pts("t", &[0.3, 1.0, 1.7])),
        |p, ctx| {
            let (s, t) = (p["s"], p["t"]);
            require(s > 0.0 && s != 1.0 && t > 0.0, format!("need s > 0, s ≠ 1, t > 0; got s = {s}, t = {t}"))?;
            let (re, _) = osc_parts(|n| (n + t).powf(-s), 0.5, 0, 0.0, ctx)?;
            eval(re, alt_hurwitz(s, t, ctx)?)
        },
    ));
    cat.push(entry(
        desc(
            "I-7.13",
            "Dirichlet beta through Hurwitz zeta",
            "Σ (−1)ⁿ/(2n + 1)ˢ = 4^{−s}[ζ(s, ¼) − ζ(s, ¾)]",
            "s > 0, s ≠ 1",
            DIRECT_TOL,
        ),
        pts("s", &[0.5, 1.5, 2.0, 3.0]),
        |p, ctx| {
            let s = p["s"];
            require(s > 0.0 && s != 1.0, format!("need s > 0 and s ≠ 1, got {s}"))?;
            let (re, _) = osc_parts(|n| (2.0 * n + 1.0).powf(-s), 0.5, 0, 0.0, ctx)?;
            let rhs = hz(0, s, 0.25, ctx)?.sub(hz(0, s, 0.75, ctx)?).scale(4f64.powf(-s));
            eval(re, rhs)
        },
    ));
    cat.push(entry(
        desc(
            "I-7.13.1",
            "derivative of the Dirichlet beta function",
            "β'(s) = Σ (−1)^{n+1} log(2n + 1)/(2n + 1)ˢ",
            "s > 0",
            DIRECT_TOL,
        ),
        pts("s", &[0.5, 1.0, 2.0, 3.0]),
        |p, ctx| {
            let s = p["s"];
            require(s > 0.0, format!("s must be positive, got {s}"))?;
            let (re, _) = osc_parts(|n| -(2.0 * n + 1.0).ln() * (2.0 * n + 1.0).powf(-s), 0.5, 1, 0.0, ctx)?;
            eval(re, dirichlet_beta_deriv(1, s, ctx)?)
        },
    ));
    cat.push(entry(
        desc("I-β0", "value β(0) = ½", "β(0) from ζ(0, x) = ½ − x", "none", ENGINE_TOL),
        single(),
        |_, ctx| eval(dirichlet_beta_deriv(0, 0.0, ctx)?, exact(0.5)),
    ));
    cat.push(entry(
        desc(
            "I-β'0",
            "value of β'(0)",
            "β'(0) = 2 log Γ(¼) − log π − (3/2) log 2",
            "none",
            ENGINE_TOL,
        ),
        single(),
        |_, ctx| {
            let rhs = lgamma(0.25, ctx)?.scale(2.0).offset(-LN_PI - 1.5 * LN_2);
            eval(dirichlet_beta_deriv(1, 0.0, ctx)?, rhs)
        },
    ));
    cat.push(entry(
        desc(
            "I-β'1",
            "Malmstén's value of β'(1)",
            "β'(1) = ¼π[γ + 2 log 2 + 3 log π − 4 log Γ(¼)]",
            "none",
            ENGINE_TOL,
        ),
        single(),
        |_, ctx| {
            let rhs = lgamma(0.25, ctx)?.scale(-PI).offset(0.25 * PI * (G + 2.0 * LN_2 + 3.0 * LN_PI));
            eval(dirichlet_beta_deriv(1, 1.0, ctx)?, rhs)
        },
    ));
    cat.push(entry(
        desc(
            "I-7.14",
            "Abel limit of Σ (−1)ⁿ/(2n + 1)ˢ",
            "lim_{s→0} Σ (−1)ⁿ/(2n + 1)ˢ as Abel Σ sin(nπ/2), compared with +β(0); the note reports −β(0)",
            "none",
            ABEL_TOL,
        ),
        single(),
        |_, ctx| {
            let lhs = abel(0.25, 0.0, &[P::new(0, Sin, 1.0)], ctx)?;
            let beta0 = dirichlet_beta_deriv(0, 0.0, ctx)?;
            let alt = (lhs.value + beta0.value).abs();
            Ok(Evaluation::new(lhs, beta0).with_note(format!("residual against −β(0): {alt:.3e}")))
        },
    ));
    cat.push(entry(
        desc(
            "I-7.15",
            "Abel limit of Σ (−1)ⁿ log(2n + 1)/(2n + 1)ˢ",
            "lim_{s→0} Σ (−1)ⁿ log(2n + 1)/(2n + 1)ˢ = −β'(0), as Abel Σ log n sin(nπ/2)",
            "none",
            ABEL_TOL,
        ),
        single(),
        |_, ctx| {
            let lhs = abel(0.25, 0.0, &[P::new(1, Sin, 1.0)], ctx)?;
            eval(lhs, dirichlet_beta_deriv(1, 0.0, ctx)?.scale(-1.0))
        },
    ));
    cat.push(entry(
        desc(
            "I-7.16",
            "γ₁(¼) and γ₁(¾) closed forms",
            "γ₁(x) = ½[2γ₁ − 7 log² 2 − 6γ log 2] ∓ ½π[γ + 4 log 2 + 3 log π − 4 log Γ(¼)] for x = ¼, ¾",
            "x ∈ {¼, ¾}",
            QUAD_TOL,
        ),
        pts("x", &[0.25, 0.75]),
        |p, ctx| {
            let x = p["x"];
            require(x == 0.25 || x == 0.75, format!("x must be ¼ or ¾, got {x}"))?;
            let sign = if x == 0.25 { -1.0 } else { 1.0 };
            let odd = lgamma(0.25, ctx)?.scale(-4.0).offset(G + 4.0 * LN_2 + 3.0 * LN_PI).scale(0.5 * PI * sign);
            let even = gam(1, 1.0, ctx)?.offset(-3.5 * LN_2 * LN_2 - 3.0 * G * LN_2);
            eval(gam(1, x, ctx)?, even.add(odd))
        },
    ));
    cat.push(entry(
        desc(
            "I-7.17",
            "odd part of the Stieltjes representation",
            "γ₁(x) − γ₁(1 − x) = −2π · Abel Σ (γ + log 2πn) sin 2πnx",
            "x ∈ (0, 1)",
            ABEL_TOL,
        ),
        pts("x", &X9),
        |p, ctx| {
            let x = within(p, "x", 0.0, 1.0)?;
            let lhs = gam(1, x, ctx)?.sub(gam(1, 1.0 - x, ctx)?);
            let rhs = abel(x, 0.0, &[P::new(1, Sin, -2.0 * PI), P::new(0, Sin, -2.0 * PI * C)], ctx)?;
            eval(lhs, rhs)
        },
    ));
    cat.push(entry(
        desc(
            "I-7.18",
            "even part of the Stieltjes representation",
            "γ₁(x) + γ₁(1 − x) = Abel Σ [2(γ + log 2πn)² − ζ(2)] cos 2πnx; the note reports the variant with (γ + log 2πn)²",
            "x ∈ (0, 1)",
            ABEL2_TOL,
        ),
        pts("x", &X9),
        |p, ctx| {
            let x = within(p, "x", 0.0, 1.0)?;
            let lhs = gam(1, x, ctx)?.add(gam(1, 1.0 - x, ctx)?);
            let square = abel(x, 0.0, &[P::new(2, Cos, 1.0), P::new(1, Cos, 2.0 * C), P::new(0, Cos, C * C)], ctx)?;
            let rhs = square.scale(2.0).offset(0.5 * ZETA2);
            let printed = (lhs.value - rhs.value + square.value).abs();
            Ok(Evaluation::new(lhs, rhs).with_note(format!("residual with a single (γ + log 2πn)²: {printed:.3e}")))
        },
    ));
    cat.push(entry(
        desc(
            "I-7.19",
            "functional equation for the first Stieltjes constant",
            "γ₁(x + ½) = 2γ₁(2x) − γ₁(x) − log² 2 + 2 log 2 · ψ(2x)",
            "x > 0",
            QUAD_TOL,
        )
        .aliases(&["I-7.20"]),
        pts("x", &XH),
        |p, ctx| {
            let x = p["x"];
            require(x > 0.0, format!("x must be positive, got {x}"))?;
            let rhs = combine(&[(2.0, gam(1, 2.0 * x, ctx)?), (-1.0, gam(1, x, ctx)?), (2.0 * LN_2, psi(2.0 * x, ctx)?)])
                .offset(-LN_2 * LN_2);
            eval(gam(1, x + 0.5, ctx)?, rhs)
        },
    ));
    cat.push(entry(
        desc(
            "I-7.21",
            "Hansen–Patrick duplication for Hurwitz zeta",
            "ζ(s, x + ½) = 2ˢ ζ(s, 2x) − ζ(s, x)",
            "s ≠ 1, x > 0",
            ENGINE_TOL,
        ),
        product(pts("s", &[-1.5, 0.5, 2.0, 3.5]), pts("x", &[0.15, 0.35, 0.8, 1.7])),
        |p, ctx| {
            let (s, x) = (p["s"], p["x"]);
            require(s != 1.0 && x > 0.0, format!("need s ≠ 1 and x > 0; got s = {s}, x = {x}"))?;
            let rhs = hz(0, s, 2.0 * x, ctx)?.scale(2f64.powf(s)).sub(hz(0, s, x, ctx)?);
            eval(hz(0, s, x + 0.5, ctx)?, rhs)
        },
    ));
    cat.push(entry(
        desc(
            "I-7.23",
            "Fourier series of the alternating Hurwitz zeta function",
            "ζₐ(s, t) = 2Γ(1−s)π^{s−1}[sin(πs/2) Σ cos((2n+1)πt)/(2n+1)^{1−s} + cos(πs/2) Σ sin((2n+1)πt)/(2n+1)^{1−s}]; the note reports the variant with π^{1−s}",
            "s < 1, t ∈ (0, 1)",
            DIRECT_TOL,
        ),
        product(pts("s", &[-1.5, -0.5, 0.3, 0.6]), pts("t", &[0.25, 0.6])),
        |p, ctx| {
            let s = p["s"];
            require(s < 1.0, format!("s must be below 1, got {s}"))?;
            let t = within(p, "t", 0.0, 1.0)?;
            let (re, im) = osc_parts(|n| (2.0 * n + 1.0).powf(s - 1.0), t, 0, PI * t, ctx)?;
            let g = 2.0 * lgamma(1.0 - s, ctx)?.value.exp() * PI.powf(s - 1.0);
            let (sn, cs) = (0.5 * PI * s).sin_cos();
            let lhs = alt_hurwitz(s, t, ctx)?;
            let rhs = combine(&[(g * sn, re), (g * cs, im)]);
            let printed = (lhs.value - rhs.value * PI.powf(2.0 - 2.0 * s)).abs();
            Ok(Evaluation::new(lhs, rhs).with_note(format!("residual with π^{{1−s}}: {printed:.3e}")))
        },
    ));
}
