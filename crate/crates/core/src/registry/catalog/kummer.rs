//! Kummer's Fourier series for log Γ and Lerch's identity.

use std::f64::consts::{LN_2, PI};

use super::super::support::*;
use super::super::Entry;
use crate::consts::{GAMMA_PLUS_LN_2PI as C, LN_2PI, LN_PI};
use crate::regsum::{Component as P, TrigKind};
use crate::repr::kummer_log_gamma;
use TrigKind::{Cos, Sin};

pub fn register(cat: &mut Vec<Entry>) {
    cat.push(entry(
        desc(
            "I-5.1",
            "Fourier series of log Γ with the cosine term",
            "log Γ(u) = ½ log π + Σ (γ + log 2πn) sin(2πnu)/(πn) + ½ Σ cos(2πnu)/n + ½ log 2, Abel-summed",
            "u ∈ (0, 1)",
            ABEL_TOL,
        ),
        pts("u", &X9),
        |p, ctx| {
            let u = within(p, "u", 0.0, 1.0)?;
            let parts = [P::new(1, Sin, 1.0 / PI), P::new(0, Sin, C / PI), P::new(0, Cos, 0.5)];
            let rhs = abel(u, 1.0, &parts, ctx)?.offset(0.5 * LN_PI + 0.5 * LN_2);
            eval(lgamma(u, ctx)?, rhs)
        },
    ));
    cat.push(entry(
        desc("I-5.2", "log-sine Fourier series", "log(2 sin πu) = −Σ cos(2πnu)/n", "u ∈ (0, 1)", DIRECT_TOL),
        pts("u", &X9),
        |p, ctx| {
            let u = within(p, "u", 0.0, 1.0)?;
            let (re, _) = osc_parts(|n| 1.0 / n, u, 1, 0.0, ctx)?;
            eval(exact((2.0 * (PI * u).sin()).ln()), re.scale(-1.0))
        },
    ));
    cat.push(entry(
        desc("I-5.3", "sawtooth Fourier series", "π(u − ½) = −Σ sin(2πnu)/n", "u ∈ (0, 1)", DIRECT_TOL),
        pts("u", &X9),
        |p, ctx| {
            let u = within(p, "u", 0.0, 1.0)?;
            let (_, im) = osc_parts(|n| 1.0 / n, u, 1, 0.0, ctx)?;
            eval(exact(PI * (u - 0.5)), im.scale(-1.0))
        },
    ));
    cat.push(entry(
        desc(
            "I-5.4",
            "Kummer's formula",
            "log Γ(u) = ½ log π + Σ log n sin(2πnu)/(πn) − (u − ½)C − ½ log sin πu, summed directly",
            "u ∈ (0, 1)",
            DIRECT_TOL,
        ),
        pts("u", &X9),
        |p, ctx| {
            let u = within(p, "u", 0.0, 1.0)?;
            let (_, im) = osc_parts(|n| n.ln() / n, u, 2, 0.0, ctx)?;
            let rhs = im.scale(1.0 / PI).offset(0.5 * LN_PI - (u - 0.5) * C - 0.5 * (PI * u).sin().ln());
            eval(lgamma(u, ctx)?, rhs)
        },
    ));
    cat.push(entry(
        desc(
            "I-5.5",
            "Kummer's formula in the (γ + log 2πn) form",
            "log Γ(u) = ½ log π + Σ (γ + log 2πn) sin(2πnu)/(πn) − ½ log sin πu, Abel-summed",
            "u ∈ (0, 1)",
            ABEL_TOL,
        ),
        pts("u", &X9),
        |p, ctx| {
            let u = within(p, "u", 0.0, 1.0)?;
            eval(lgamma(u, ctx)?, kummer_log_gamma(u, ctx)?.real())
        },
    ));
    cat.push(entry(
        desc(
            "I-5.6",
            "Lerch's identity",
            "ζ'(0, x) = log Γ(x) − ½ log 2π",
            "x > 0",
            1e-10,
        ),
        pts("x", &[0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9, 1.5, 3.2]),
        |p, ctx| {
            let x = p["x"];
            require(x > 0.0, format!("x must be positive, got {x}"))?;
            eval(hz(1, 0.0, x, ctx)?, lgamma(x, ctx)?.offset(-0.5 * LN_2PI))
        },
    ));
}
