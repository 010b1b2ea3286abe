//! Ramanujan and Abel summation: log-weighted trigonometric sums, power series
//! in ζ'(−n) and exponentially damped alternating sums.

use std::f64::consts::{LN_2, PI, TAU};

use super::super::support::*;
use super::super::{Entry, Evaluation};
use crate::consts::{EULER_GAMMA as G, GAMMA_PLUS_LN_2PI as C, LN_PI};
use crate::context::{combine, EvalContext, RealValue};
use crate::error::Result;
use crate::regsum::abel::alternating_exp_log_sum;
use crate::regsum::{abel_exp_limit, exp_log_series, ramanujan_sum_convergent, Component as P, TrigKind};
use crate::repr::{gamma1_reflection_series, zeta_odd_power_series, zeta_prime_odd_pi_series, zeta_prime_power_series};
use crate::special::bernoulli::scaled_even_table;
use crate::special::trigamma;
use crate::zeta::{alt_zeta_deriv, gamma1_prime};
use TrigKind::{Cos, Sin};

const ZETA2: f64 = PI * PI / 6.0;

fn sign(n: u32) -> f64 {
    if n.is_multiple_of(2) {
        1.0
    } else {
        -1.0
    }
}

/// `Σ_{n≥1} term(n, B₂ₙ/(2n)!)` until two consecutive terms fall below `1e-18`.
fn bernoulli_sum(term: impl Fn(u32, f64) -> f64) -> RealValue {
    let table = scaled_even_table();
    let mut acc = crate::special::summation::Neumaier::new();
    let mut small = 0;
    let mut last = 0.0;
    for (n, &c) in table.iter().enumerate().skip(1) {
        last = term(n as u32, c);
        acc.add(last);
        small = if last.abs() < 1e-18 { small + 1 } else { 0 };
        if small >= 2 {
            break;
        }
    }
    let v = acc.sum();
    RealValue::new(v, last.abs() + 4.0 * f64::EPSILON * v.abs())
}

/// `Σ_{n≥0} (−1)^{n+1} (2^{n+1} − 1) ζ'(−n) zⁿ/n!`.
fn alternating_taylor(z: f64, ctx: &EvalContext) -> Result<RealValue> {
    zeta_prime_taylor(z, 0, |n| -sign(n) * (2f64.powi(n as i32 + 1) - 1.0), ctx)
}

fn series_points() -> Vec<super::super::Params> {
    pts("z", &[0.1, 0.25, 0.5, 1.0])
}

pub fn register(cat: &mut Vec<Entry>) {
    cat.push(entry(
        desc(
            "I-9.1",
            "Ramanujan sum of a convergent series",
            "Σᴿ n^{−a} = Σ n^{−a} − ∫₁^∞ t^{−a} dt = ζ(a) − 1/(a − 1)",
            "a > 1",
            DIRECT_TOL,
        ),
        pts("a", &[1.5, 2.0, 3.0]),
        |p, ctx| {
            let a = p["a"];
            require(a > 1.0, format!("a must exceed 1, got {a}"))?;
            let lhs = ramanujan_sum_convergent(|t| t.powf(-a), ctx)?;
            eval(lhs, rz(0, a, ctx)?.offset(-1.0 / (a - 1.0)))
        },
    ));
    cat.push(entry(
        desc(
            "I-9.4",
            "Abel limit of Σ e^{2πinx}/nˢ at s = 0",
            "lim_{s→0} Σ e^{2πinx}/nˢ = e^{2πix}/(1 − e^{2πix}); part 0 is the real part, part 1 the imaginary part",
            "part ∈ {0, 1}, x ∈ (0, 1)",
            ABEL_TOL,
        ),
        product(pts("part", &[0.0, 1.0]), pts("x", &X9)),
        |p, ctx| {
            let part = integer(p, "part", 0, 1)?;
            let x = within(p, "x", 0.0, 1.0)?;
            let (kind, rhs) = if part == 0 { (Cos, -0.5) } else { (Sin, 0.5 / (PI * x).tan()) };
            eval(abel(x, 0.0, &[P::new(0, kind, 1.0)], ctx)?, exact(rhs))
        },
    ));
    cat.push(entry(
        desc(
            "I-9.9",
            "Abel limit of Σ log n cos 2πnx",
            "lim_{s→0} Σ log n cos(2πnx)/nˢ = ¼[ψ(x) + ψ(1 − x)] + ½(γ + log 2π)",
            "x ∈ (0, 1)",
            ABEL_TOL,
        ),
        pts("x", &X9),
        |p, ctx| {
            let x = within(p, "x", 0.0, 1.0)?;
            let rhs = psi(x, ctx)?.add(psi(1.0 - x, ctx)?).scale(0.25).offset(0.5 * C);
            eval(abel(x, 0.0, &[P::new(1, Cos, 1.0)], ctx)?, rhs)
        },
    ));
    cat.push(entry(
        desc(
            "I-9.12",
            "Abel limit of Σ log n sin 2πnx as a power series",
            "lim_{s→0} Σ log n sin(2πnx)/nˢ = Σ (−1)^{n−1} ζ'(−2n−1)(2πx)^{2n+1}/(2n+1)! − (γ + log 2πx)/(2πx)",
            "x ∈ (0, ½]",
            ABEL_TOL,
        )
        .aliases(&["I-9.29"]),
        pts("x", &XS),
        |p, ctx| {
            let x = within(p, "x", 0.0, 0.5)?;
            let rhs = zeta_prime_power_series(1, x, ctx)?.offset(-(G + (TAU * x).ln()) / (TAU * x));
            eval(abel(x, 0.0, &[P::new(1, Sin, 1.0)], ctx)?, rhs)
        },
    ));
    cat.push(entry(
        desc(
            "I-9.14",
            "γ₁ reflection as a power series in ζ'(−2n−1)",
            "[γ₁(1 − x) − γ₁(x)]/(2π) = Σ (−1)^{n−1} ζ'(−2n−1)(2πx)^{2n+1}/(2n+1)! − (γ + log 2πx)/(2πx) + ½(γ + log 2π) cot πx",
            "x ∈ (0, ½]",
            ENGINE_TOL,
        ),
        pts("x", &XS),
        |p, ctx| {
            let x = within(p, "x", 0.0, 0.5)?;
            let lhs = gam(1, 1.0 - x, ctx)?.sub(gam(1, x, ctx)?).scale(1.0 / TAU);
            let rhs = zeta_prime_power_series(1, x, ctx)?
                .offset(-(G + (TAU * x).ln()) / (TAU * x) + 0.5 * C / (PI * x).tan());
            eval(lhs, rhs)
        },
    ));
    cat.push(entry(
        desc(
            "I-9.15",
            "symmetric γ₁ reflection series",
            "γ₁(1 − x) − γ₁(1 + x) = 2π Σ (−1)^{n−1} ζ'(−2n−1)(2πx)^{2n+1}/(2n+1)! + (γ + log 2π)[ψ(1 − x) − ψ(1 + x)]",
            "x ∈ [0, 0.45]",
            ENGINE_TOL,
        ),
        pts("x", &XS),
        |p, ctx| {
            let x = within(p, "x", 0.0, 0.5)?;
            let lhs = gam(1, 1.0 - x, ctx)?.sub(gam(1, 1.0 + x, ctx)?);
            eval(lhs, gamma1_reflection_series(x, ctx)?)
        },
    ));
    cat.push(entry(
        desc(
            "I-9.16",
            "power series in ζ'(−2n−1) at x = ½",
            "Σ (−1)^{n−1} ζ'(−2n−1) π^{2n+1}/(2n+1)! = (γ + log π)/π",
            "none",
            QUAD_TOL,
        ),
        single(),
        |_, ctx| eval(zeta_prime_odd_pi_series(ctx)?, exact((G + LN_PI) / PI)),
    ));
    cat.push(entry(
        desc(
            "I-9.17",
            "derivative of the symmetric γ₁ reflection series",
            "−[γ₁'(1 − x) + γ₁'(1 + x)] = (2π)² Σ (−1)^{n−1} ζ'(−2n−1)(2πx)^{2n}/(2n)! − (γ + log 2π)[ψ'(1 + x) + ψ'(1 − x)]",
            "x ∈ [0, ½)",
            ENGINE_TOL,
        ),
        pts("x", &[0.1, 0.2, 0.3, 0.4]),
        |p, ctx| {
            let x = within(p, "x", 0.0, 0.5)?;
            let lhs = gamma1_prime(1.0 - x, ctx)?.add(gamma1_prime(1.0 + x, ctx)?).scale(-1.0);
            let w = |m: u32| if m.is_multiple_of(2) { -sign(m / 2) } else { 0.0 };
            let series = zeta_prime_taylor(TAU * x, 1, w, ctx)?;
            let tri = trigamma(1.0 + x, ctx)?.add(trigamma(1.0 - x, ctx)?);
            eval(lhs, combine(&[(TAU * TAU, series), (-C, tri)]))
        },
    ));
    cat.push(entry(
        desc(
            "I-9.18",
            "γ₁'(1) through ζ'(−1)",
            "γ₁'(1) = 2π² ζ'(−1) + ζ(2)(γ + log 2π), with γ₁'(1) by numerical differentiation",
            "none",
            QUAD_TOL,
        ),
        single(),
        |_, ctx| {
            let lhs = derivative(|x| gam(1, x, ctx), 1.0, 1e-3)?;
            eval(lhs, rz(1, -1.0, ctx)?.scale(2.0 * PI * PI).offset(ZETA2 * C))
        },
    ));
    cat.push(entry(
        desc(
            "I-9.20",
            "derivative of γ₁(x)",
            "γ₁'(x) = ζ(2, x) + ζ'(2, x), against numerical differentiation of γ₁",
            "x > 0",
            QUAD_TOL,
        )
        .aliases(&["I-9.21"]),
        pts("x", &[0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.0]),
        |p, ctx| {
            let x = p["x"];
            require(x > 0.0, format!("x must be positive, got {x}"))?;
            let lhs = derivative(|t| gam(1, t, ctx), x, 1e-3 * x.min(1.0))?;
            eval(lhs, gamma1_prime(x, ctx)?)
        },
    ));
    cat.push(entry(
        desc(
            "I-9.22",
            "exponentially damped log series",
            "Σ e^{−nz} log n = Σ (−1)^{n+1} ζ'(−n) zⁿ/n! − (γ + log z)/z",
            "0 < z < 2π",
            ENGINE_TOL,
        ),
        pts("z", &[0.25, 0.5, 1.0, 2.0]),
        |p, ctx| {
            let z = within(p, "z", 0.0, TAU)?;
            let rhs = zeta_prime_taylor(z, 0, |n| -sign(n), ctx)?.offset(-(G + z.ln()) / z);
            eval(exp_log_series(z, ctx)?, rhs)
        },
    ));
    cat.push(entry(
        desc(
            "I-9.23",
            "alternating exponentially damped log series",
            "Σ (−1)ⁿ e^{−nz} log n = 2 log 2 (−½ + Σ 2^{2n−1} B₂ₙ z^{2n−1}/(2n)!) + Σ (−1)^{n+1} ζ'(−n)(2^{n+1} − 1) zⁿ/n!",
            "0 < z < π",
            ENGINE_TOL,
        ),
        series_points(),
        |p, ctx| {
            let z = within(p, "z", 0.0, PI)?;
            let b = bernoulli_sum(|n, c| c * (2.0 * z).powi(2 * n as i32 - 1)).offset(-0.5);
            let rhs = combine(&[(2.0 * LN_2, b), (1.0, alternating_taylor(z, ctx)?)]);
            eval(exact(alternating_exp_log_sum(0, z)), rhs)
        },
    ));
    cat.push(entry(
        desc(
            "I-9.24",
            "Abel limit of Σ (−1)ⁿ log n",
            "lim_{z→0} Σ (−1)ⁿ e^{−nz} log n = −ζ'(0) − log 2; the note reports the variant +ζ'(0) − log 2",
            "none",
            ABEL_TOL,
        ),
        single(),
        |_, ctx| {
            let r = abel_exp_limit(0, ctx)?;
            let zp0 = rz(1, 0.0, ctx)?;
            let lhs = RealValue::new(r.value, r.err_estimate);
            let printed = (r.value - (zp0.value - LN_2)).abs();
            Ok(Evaluation::new(lhs, zp0.scale(-1.0).offset(-LN_2))
                .with_note(format!("residual against ζ'(0) − log 2: {printed:.3e}")))
        },
    ));
    cat.push(entry(
        desc(
            "I-9.25",
            "derivative of the alternating damped log series",
            "−Σ (−1)ⁿ n e^{−nz} log n = 2 log 2 Σ 2^{2n−1}(2n−1) B₂ₙ z^{2n−2}/(2n)! + Σ (−1)^{n+1} ζ'(−n)(2^{n+1} − 1) n z^{n−1}/n!",
            "0 < z < π",
            ENGINE_TOL,
        ),
        series_points(),
        |p, ctx| {
            let z = within(p, "z", 0.0, PI)?;
            let b = bernoulli_sum(|n, c| 2.0 * c * (2 * n - 1) as f64 * (2.0 * z).powi(2 * n as i32 - 2));
            let t = zeta_prime_taylor(z, 1, |m| sign(m) * (2f64.powi(m as i32 + 2) - 1.0), ctx)?;
            eval(exact(-alternating_exp_log_sum(1, z)), combine(&[(2.0 * LN_2, b), (1.0, t)]))
        },
    ));
    cat.push(entry(
        desc(
            "I-9.26",
            "Abel limit of Σ (−1)ⁿ n log n",
            "lim_{z→0} Σ (−1)ⁿ n e^{−nz} log n = −⅓ log 2 − 3ζ'(−1)",
            "none",
            ABEL_TOL,
        ),
        single(),
        |_, ctx| {
            let r = abel_exp_limit(1, ctx)?;
            let rhs = rz(1, -1.0, ctx)?.scale(-3.0).offset(-LN_2 / 3.0);
            eval(RealValue::new(r.value, r.err_estimate), rhs)
        },
    ));
    cat.push(entry(
        desc(
            "I-9.27",
            "ζₐ(3) from the Abel limit of Σ (−1)ⁿ n² log n",
            "ζₐ(3) = (3/7)π² lim_{z→0} Σ (−1)ⁿ n² e^{−nz} log n",
            "none",
            ABEL2_TOL,
        ),
        single(),
        |_, ctx| {
            let r = abel_exp_limit(2, ctx)?;
            let k = 3.0 / 7.0 * PI * PI;
            eval(alt_zeta_deriv(0, 3.0, ctx)?, RealValue::new(k * r.value, k * r.err_estimate))
        },
    ));
    cat.push(entry(
        desc(
            "I-9.28",
            "integrated alternating damped log series",
            "Σ (−1)ⁿ (1 − e^{−nz}) log n/n = 2 log 2 (−½z + Σ 2^{2n−1} B₂ₙ z^{2n}/(2n (2n)!)) + Σ (−1)^{n+1} ζ'(−n)(2^{n+1} − 1) z^{n+1}/((n+1) n!); the note reports the variant with e^{−nz} − 1",
            "0 < z < π",
            ENGINE_TOL,
        ),
        series_points(),
        |p, ctx| {
            let z = within(p, "z", 0.0, PI)?;
            let (lhs, _) = osc_parts(|n| -(-n * z).exp_m1() * n.ln() / n, 0.5, 2, 0.0, ctx)?;
            let b = bernoulli_sum(|n, c| c * (2.0 * z).powi(2 * n as i32) / (4 * n) as f64).offset(-0.5 * z);
            let t = zeta_prime_taylor(z, 0, |n| -sign(n) * (2f64.powi(n as i32 + 1) - 1.0) / (n + 1) as f64, ctx)?;
            let rhs = combine(&[(2.0 * LN_2, b), (z, t)]);
            let printed = (lhs.value + rhs.value).abs();
            Ok(Evaluation::new(lhs, rhs).with_note(format!("residual with e^{{−nz}} − 1: {printed:.3e}")))
        },
    ));
    cat.push(entry(
        desc(
            "I-9.30",
            "Abel limit of Σ log n cos 2πnx as a power series",
            "lim_{α→0} Σ e^{−αn} log n cos 2πnx = −Σ (−1)ⁿ ζ'(−2n)(2πx)^{2n}/(2n)! − 1/(4x)",
            "x ∈ (0, ½]",
            ABEL_TOL,
        ),
        pts("x", &XS),
        |p, ctx| {
            let x = within(p, "x", 0.0, 0.5)?;
            let rhs = zeta_prime_power_series(0, x, ctx)?.offset(-0.25 / x);
            eval(abel(x, 0.0, &[P::new(1, Cos, 1.0)], ctx)?, rhs)
        },
    ));
    cat.push(entry(
        desc(
            "I-zeta-odd",
            "generating function of ζ(2n+1)",
            "Σ_{n≥1} ζ(2n+1) x^{2n} = −½[ψ(1 + x) + ψ(1 − x)] − γ",
            "|x| < 1",
            ENGINE_TOL,
        ),
        pts("x", &X9),
        |p, ctx| {
            let x = within(p, "x", -1.0, 1.0)?;
            let r = zeta_odd_power_series(x, ctx)?;
            eval(r.series, r.closed_form)
        },
    ));
}
