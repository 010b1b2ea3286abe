//! Adaptive Gauss–Kronrod (7, 15) quadrature.

use std::collections::BinaryHeap;
use std::cmp::Ordering;

use super::summation::Neumaier;
use crate::context::{EvalContext, RealValue};
use crate::error::{Error, Result};

const XGK: [f64; 8] = [
    0.991_455_371_120_812_6,
    0.949_107_912_342_758_5,
    0.864_864_423_359_769_1,
    0.741_531_185_599_394_4,
    0.586_087_235_467_691_1,
    0.405_845_151_377_397_2,
    0.207_784_955_007_898_5,
    0.0,
];
const WGK: [f64; 8] = [
    0.022_935_322_010_529_22,
    0.063_092_092_629_978_55,
    0.104_790_010_322_250_2,
    0.140_653_259_715_525_9,
    0.169_004_726_639_267_9,
    0.190_350_578_064_785_4,
    0.204_432_940_075_298_9,
    0.209_482_141_084_727_8,
];
const WG: [f64; 4] = [
    0.129_484_966_168_869_7,
    0.279_705_391_489_276_7,
    0.381_830_050_505_118_9,
    0.417_959_183_673_469_4,
];

const MAX_PANELS: usize = 4000;

struct Panel {
    a: f64,
    b: f64,
    value: f64,
    err: f64,
}

impl PartialEq for Panel {
    fn eq(&self, o: &Self) -> bool {
        self.err == o.err
    }
}
impl Eq for Panel {}
impl PartialOrd for Panel {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}
impl Ord for Panel {
    fn cmp(&self, o: &Self) -> Ordering {
        self.err.total_cmp(&o.err)
    }
}

fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> Panel {
    let c = 0.5 * (a + b);
    let h = 0.5 * (b - a);
    let fc = f(c);
    let mut k = WGK[7] * fc;
    let mut g = WG[3] * fc;
    for i in 0..7 {
        let dx = h * XGK[i];
        let s = f(c - dx) + f(c + dx);
        k += WGK[i] * s;
        if i % 2 == 1 {
            g += WG[i / 2] * s;
        }
    }
    let value = k * h;
    let err = ((k - g) * h).abs();
    Panel { a, b, value, err }
}

/// `∫ₐᵇ f` by repeated bisection of the panel with the largest Kronrod–Gauss
/// discrepancy until the total discrepancy is below `quad_tol`.
///
/// The integrand is never evaluated at the endpoints, so removable
/// singularities there need no special handling.
pub fn integrate_adaptive<F>(f: F, a: f64, b: f64, ctx: &EvalContext) -> Result<RealValue>
where
    F: Fn(f64) -> f64,
{
    if !(a.is_finite() && b.is_finite()) {
        return Err(Error::domain("integrate_adaptive", "limits must be finite"));
    }
    if a == b {
        return Ok(RealValue::exact(0.0));
    }
    let mut heap = BinaryHeap::new();
    heap.push(gk15(&f, a, b));
    let mut total_err = heap.peek().map(|p| p.err).unwrap_or(0.0);
    let mut panels = 1;
    while total_err > ctx.quad_tol {
        if panels >= MAX_PANELS {
            return Err(Error::NonConvergence { op: "integrate_adaptive", err: total_err });
        }
        let worst = heap.pop().expect("heap is never empty");
        let mid = 0.5 * (worst.a + worst.b);
        let left = gk15(&f, worst.a, mid);
        let right = gk15(&f, mid, worst.b);
        if !(left.value.is_finite() && right.value.is_finite()) {
            return Err(Error::domain("integrate_adaptive", "integrand is not finite"));
        }
        total_err += left.err + right.err - worst.err;
        heap.push(left);
        heap.push(right);
        panels += 1;
        if panels % 64 == 0 {
            total_err = heap.iter().map(|p| p.err).sum();
        }
    }
    let mut acc = Neumaier::new();
    let mut err = 0.0;
    for p in heap.iter() {
        acc.add(p.value);
        err += p.err;
    }
    let v = acc.sum();
    Ok(RealValue::new(v, err + 8.0 * f64::EPSILON * v.abs()))
}
