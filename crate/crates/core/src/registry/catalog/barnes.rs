//! Barnes G-function: Fourier expansion, integrals and Vardi's relation.

use std::f64::consts::{LN_2, PI};

use super::super::support::*;
use super::super::Entry;
use crate::consts::{GAMMA_PLUS_LN_2PI as C, LN_2PI, LN_PI};
use crate::context::combine;
use crate::repr::{barnes_fourier, zeta_prime_neg1_fourier};
use crate::zeta::{barnes_log_g, barnes_log_g_product};

pub fn register(cat: &mut Vec<Entry>) {
    cat.push(entry(
        desc(
            "I-6.1",
            "Fourier expansion of log G(1 + u)",
            "Abel-summed log-weighted series plus direct Σ/n² sums against the Barnes G-function",
            "u ∈ (0, 1)",
            ABEL_TOL,
        ),
        pts("u", &X9),
        |p, ctx| {
            let u = within(p, "u", 0.0, 1.0)?;
            eval(barnes_log_g(1.0 + u, ctx)?, barnes_fourier(u, ctx)?.real())
        },
    ));
    cat.push(entry(
        desc(
            "I-6.2",
            "Weierstrass product for G(1 + x)",
            "½x log 2π − ½x(1 + x) − ½γx² + Σ [x²/(2n) − x + n log(1 + x/n)] against log G via Hurwitz ζ'(−1, x)",
            "x > −1",
            ENGINE_TOL,
        ),
        pts("x", &X9),
        |p, ctx| {
            let x = p["x"];
            require(x > -1.0, format!("x must exceed −1, got {x}"))?;
            eval(barnes_log_g_product(x, ctx)?, barnes_log_g(1.0 + x, ctx)?)
        },
    ));
    cat.push(entry(
        desc(
            "I-6.3",
            "integral of xψ(1 + x)",
            "∫₀ᵘ xψ(1 + x) dx = log G(1 + u) − ½u log 2π + ½u(u + 1)",
            "u > −1",
            QUAD_TOL,
        ),
        pts("u", &X9),
        |p, ctx| {
            let u = p["u"];
            require(u > -1.0, format!("u must exceed −1, got {u}"))?;
            let lhs = quad(|x| x * psi(1.0 + x, ctx).map_or(f64::NAN, |v| v.value), 0.0, u, ctx)?;
            let rhs = barnes_log_g_product(u, ctx)?.offset(-0.5 * u * LN_2PI + 0.5 * u * (u + 1.0));
            eval(lhs, rhs)
        },
    ));
    cat.push(entry(
        desc(
            "I-6.4",
            "integral of xψ(x)",
            "∫₀ᵘ xψ(x) dx = log G(1 + u) − ½u log 2π + ½u(u − 1)",
            "u > 0",
            QUAD_TOL,
        ),
        pts("u", &X9),
        |p, ctx| {
            let u = p["u"];
            require(u > 0.0, format!("u must be positive, got {u}"))?;
            let lhs = quad(|x| x * psi(x, ctx).map_or(f64::NAN, |v| v.value), 0.0, u, ctx)?;
            let rhs = barnes_log_g_product(u, ctx)?.offset(-0.5 * u * LN_2PI + 0.5 * u * (u - 1.0));
            eval(lhs, rhs)
        },
    ));
    cat.push(entry(
        desc(
            "I-6.6",
            "integral of x cot πx",
            "∫₀ᵘ x cot πx dx = (1/2π²) Σ sin(2πnu)/n² − (u/π) Σ cos(2πnu)/n",
            "u ∈ (0, 1)",
            QUAD_TOL,
        ),
        pts("u", &X9),
        |p, ctx| {
            let u = within(p, "u", 0.0, 1.0)?;
            let lhs = quad(|x| x / (PI * x).tan(), 0.0, u, ctx)?;
            let (_, s2) = osc_parts(|n| 1.0 / (n * n), u, 1, 0.0, ctx)?;
            let (c1, _) = osc_parts(|n| 1.0 / n, u, 1, 0.0, ctx)?;
            eval(lhs, combine(&[(0.5 / (PI * PI), s2), (-u / PI, c1)]))
        },
    ));
    cat.push(entry(
        desc(
            "I-6.7",
            "Barnes' value of G(½)",
            "log G(½) = (1/24) log 2 − ¼ log π + (3/2) ζ'(−1), product form against the engine ζ'(−1)",
            "none",
            QUAD_TOL,
        ),
        single(),
        |_, ctx| {
            let lhs = barnes_log_g_product(-0.5, ctx)?;
            let rhs = rz(1, -1.0, ctx)?.scale(1.5).offset(LN_2 / 24.0 - 0.25 * LN_PI);
            eval(lhs, rhs)
        },
    ));
    cat.push(entry(
        desc(
            "I-6.9",
            "Fourier series of log G(1 + t) − t log Γ(t)",
            "−(1/4π) Σ sin/n² + (1/2π²)(C − 1) Σ cos/n² + (1/2π²) Σ log n cos/n² + ζ'(−1)",
            "t ∈ (0, 1)",
            DIRECT_TOL,
        ),
        pts("t", &X9),
        |p, ctx| {
            let t = within(p, "t", 0.0, 1.0)?;
            let lhs = barnes_log_g_product(t, ctx)?.sub(lgamma(t, ctx)?.scale(t));
            let (c0, s0) = osc_parts(|n| 1.0 / (n * n), t, 1, 0.0, ctx)?;
            let (c1, _) = osc_parts(|n| n.ln() / (n * n), t, 2, 0.0, ctx)?;
            let k = 0.5 / (PI * PI);
            let rhs = combine(&[(-0.25 / PI, s0), (k * (C - 1.0), c0), (k, c1), (1.0, rz(1, -1.0, ctx)?)]);
            eval(lhs, rhs)
        },
    ));
    cat.push(entry(
        desc(
            "I-6.10",
            "Fourier series of ζ'(−1, t)",
            "ζ'(−1, t) = (1/4π) Σ sin/n² − (1/2π²)(C − 1) Σ cos/n² − (1/2π²) Σ log n cos/n²",
            "t ∈ (0, 1)",
            DIRECT_TOL,
        ),
        pts("t", &X9),
        |p, ctx| {
            let t = within(p, "t", 0.0, 1.0)?;
            eval(hz(1, -1.0, t, ctx)?, zeta_prime_neg1_fourier(t, ctx)?.real())
        },
    ));
    cat.push(entry(
        desc(
            "I-6.11",
            "Vardi's functional equation",
            "log G(1 + t) − t log Γ(t) = ζ'(−1) − ζ'(−1, t), left side from the Weierstrass product",
            "t > 0",
            QUAD_TOL,
        ),
        pts("t", &[0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.5, 2.5]),
        |p, ctx| {
            let t = p["t"];
            require(t > 0.0, format!("t must be positive, got {t}"))?;
            let lhs = barnes_log_g_product(t, ctx)?.sub(lgamma(t, ctx)?.scale(t));
            eval(lhs, rz(1, -1.0, ctx)?.sub(hz(1, -1.0, t, ctx)?))
        },
    ));
}
