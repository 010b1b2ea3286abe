//! Regularized trigonometric limits and their closed forms.

use std::f64::consts::{PI, TAU};

use super::super::support::*;
use super::super::Entry;
use crate::consts::GAMMA_PLUS_LN_2PI as C;
use crate::regsum::{Component as P, TrigKind};
use crate::repr::fourier::abel_shifted;
use crate::repr::{srivastava_tsumura, SrivastavaTsumura};
use crate::zeta::alt_zeta_deriv;
use TrigKind::{Cos, Sin};

fn cot(t: f64) -> f64 {
    1.0 / t.tan()
}

pub fn register(cat: &mut Vec<Entry>) {
    cat.push(entry(
        desc(
            "I-1.1",
            "reflection of the first generalized Stieltjes constant",
            "γ₁(1−x) − γ₁(x) against πC cot πx + 2π · Abel Σ log n sin 2πnx",
            "x ∈ (0, 1)",
            ABEL_TOL,
        )
        .aliases(&["I-9.13"]),
        pts("x", &X9),
        |p, ctx| {
            let x = within(p, "x", 0.0, 1.0)?;
            let lhs = gam(1, 1.0 - x, ctx)?.sub(gam(1, x, ctx)?);
            let rhs = abel(x, 0.0, &[P::new(1, Sin, TAU)], ctx)?.offset(PI * C * cot(PI * x));
            eval(lhs, rhs)
        },
    ));
    cat.push(entry(
        desc("I-1.4", "Abel limit of Σ cos 2πnx", "lim_{s→0} Σ cos(2πnx)/nˢ = −½", "x ∈ (0, 1)", ABEL_TOL),
        pts("x", &X9),
        |p, ctx| {
            let x = within(p, "x", 0.0, 1.0)?;
            eval(abel(x, 0.0, &[P::new(0, Cos, 1.0)], ctx)?, exact(-0.5))
        },
    ));
    cat.push(entry(
        desc("I-1.5", "Abel limit of Σ sin 2πnx", "lim_{s→0} Σ sin(2πnx)/nˢ = ½ cot πx", "x ∈ (0, 1)", ABEL_TOL),
        pts("x", &X9),
        |p, ctx| {
            let x = within(p, "x", 0.0, 1.0)?;
            eval(abel(x, 0.0, &[P::new(0, Sin, 1.0)], ctx)?, exact(0.5 * cot(PI * x)))
        },
    ));

    let st: [(&'static str, &'static str, SrivastavaTsumura); 6] = [
        ("I-1.6", "Srivastava–Tsumura series Σ cos(nπ/3)/nˢ", SrivastavaTsumura::CosPiThird),
        ("I-1.7", "Srivastava–Tsumura series Σ cos(2nπ/3)/nˢ", SrivastavaTsumura::CosTwoPiThirds),
        ("I-1.8", "Srivastava–Tsumura series Σ cos(nπ/2)/nˢ", SrivastavaTsumura::CosPiHalf),
        ("I-1.9", "Srivastava–Tsumura series Σ sin(nπ/3)/nˢ", SrivastavaTsumura::SinPiThird),
        ("I-1.10", "Srivastava–Tsumura series Σ sin(2nπ/3)/nˢ", SrivastavaTsumura::SinTwoPiThirds),
        ("I-1.11", "Srivastava–Tsumura series Σ sin(nπ/2)/nˢ", SrivastavaTsumura::SinPiHalf),
    ];
    for (id, title, which) in st {
        cat.push(entry(
            desc(
                id,
                title,
                "direct summation for s > 0 and Abel limit at s = 0 against the Hurwitz closed form",
                "s = 0 or s > 0 with s ≠ 1",
                ABEL_TOL,
            ),
            pts("s", &[0.0, 0.5, 2.0, 3.0]),
            move |p, ctx| {
                let s = p["s"];
                require(s >= 0.0 && s != 1.0, format!("s must be non-negative and ≠ 1, got {s}"))?;
                let kind = if which.is_sine() { Sin } else { Cos };
                let t = which.turns();
                let lhs = if s == 0.0 {
                    abel(t, 0.0, &[P::new(0, kind, 1.0)], ctx)?
                } else {
                    let (re, im) = osc_parts(|n| n.powf(-s), t, 1, 0.0, ctx)?;
                    if which.is_sine() { im } else { re }
                };
                eval(lhs, srivastava_tsumura(which, s, ctx)?)
            },
        ));
    }

    let hansen_grid = || product(product(pts("x", &[0.1, 0.3, 0.7]), pts("y", &[0.0, 0.7])), pts("s", &[0.5, 1.5, 2.5]));
    cat.push(entry(
        desc(
            "I-1.12",
            "Hansen's sine series",
            "Σ sin(2πnx + y)/(2πn)ˢ against Hurwitz zeta at 1 − s",
            "x ∈ (0, 1), y real, s > 0 not an integer",
            DIRECT_TOL,
        ),
        hansen_grid(),
        |p, ctx| {
            let (x, y, s) = hansen_params(p)?;
            let (_, im) = osc_parts(|n| (TAU * n).powf(-s), x, 1, y, ctx)?;
            let k = 0.5 / (lgamma(s, ctx)?.value.exp() * (PI * s).sin());
            let a = hz(0, 1.0 - s, x, ctx)?;
            let b = hz(0, 1.0 - s, 1.0 - x, ctx)?;
            let rhs = crate::context::combine(&[
                (k * (y - 0.5 * PI * s).cos(), a),
                (-k * (y + 0.5 * PI * s).cos(), b),
            ]);
            eval(im, rhs)
        },
    ));
    cat.push(entry(
        desc(
            "I-1.13",
            "Hansen's cosine series",
            "Σ cos(2πnx + y)/(2πn)ˢ against Hurwitz zeta at 1 − s",
            "x ∈ (0, 1), y real, s > 0 not an integer",
            DIRECT_TOL,
        ),
        hansen_grid(),
        |p, ctx| {
            let (x, y, s) = hansen_params(p)?;
            let (re, _) = osc_parts(|n| (TAU * n).powf(-s), x, 1, y, ctx)?;
            let k = 0.5 / (lgamma(s, ctx)?.value.exp() * (PI * s).sin());
            let a = hz(0, 1.0 - s, 1.0 - x, ctx)?;
            let b = hz(0, 1.0 - s, x, ctx)?;
            let rhs = crate::context::combine(&[
                (k * (y + 0.5 * PI * s).sin(), a),
                (-k * (y - 0.5 * PI * s).sin(), b),
            ]);
            eval(re, rhs)
        },
    ));

    let shift_grid = || product(pts("x", &[0.1, 0.3, 0.5, 0.7, 0.9]), pts("y", &[0.4, 1.3]));
    cat.push(entry(
        desc(
            "I-1.14",
            "Abel limit of the shifted sine series",
            "lim_{s→0} Σ sin(2πnx + y)/(2πn)ˢ = ½ cos(πx + y)/sin πx",
            "x ∈ (0, 1), y real",
            ABEL_TOL,
        ),
        shift_grid(),
        |p, ctx| {
            let x = within(p, "x", 0.0, 1.0)?;
            let y = p["y"];
            let lhs = abel_shifted(0, x, y, 0.0, Sin, ctx)?;
            eval(lhs, exact(0.5 * (PI * x + y).cos() / (PI * x).sin()))
        },
    ));
    cat.push(entry(
        desc(
            "I-1.15",
            "Abel limit of the shifted cosine series",
            "lim_{s→0} Σ cos(2πnx + y)/(2πn)ˢ = −½ sin(πx + y)/sin πx",
            "x ∈ (0, 1), y real",
            ABEL_TOL,
        ),
        shift_grid(),
        |p, ctx| {
            let x = within(p, "x", 0.0, 1.0)?;
            let y = p["y"];
            let lhs = abel_shifted(0, x, y, 0.0, Cos, ctx)?;
            eval(lhs, exact(-0.5 * (PI * x + y).sin() / (PI * x).sin()))
        },
    ));
    cat.push(entry(
        desc(
            "I-1.16",
            "Abel limit of Σ (−1)ⁿ",
            "lim_{s→0} Σ (−1)ⁿ/(2πn)ˢ = −ζₐ(0)",
            "none",
            ABEL_TOL,
        ),
        single(),
        |_, ctx| {
            let lhs = abel(0.5, 0.0, &[P::new(0, Cos, 1.0)], ctx)?;
            eval(lhs, alt_zeta_deriv(0, 0.0, ctx)?.scale(-1.0))
        },
    ));
}

fn hansen_params(p: &super::super::Params) -> crate::error::Result<(f64, f64, f64)> {
    let x = within(p, "x", 0.0, 1.0)?;
    let s = p["s"];
    require(s > 0.0 && s.fract() != 0.0, format!("s must be positive and non-integer, got {s}"))?;
    Ok((x, p["y"], s))
}
