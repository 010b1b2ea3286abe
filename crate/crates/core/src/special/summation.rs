//! Compensated accumulation and accelerated oscillatory series.

use num_complex::Complex64;
use std::f64::consts::TAU;

use crate::context::EvalContext;
use crate::error::{Error, Result};

/// Neumaier's variant of Kahan summation.
#[derive(Debug, Clone, Copy, Default)]
pub struct Neumaier {
    sum: f64,
    comp: f64,
}

impl Neumaier {
    pub fn new() -> Self {
        Self::default()
    }

    #[inline]
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    #[inline]
    pub fn sum(&self) -> f64 {
        self.sum + self.comp
    }
}

impl FromIterator<f64> for Neumaier {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = Neumaier::new();
        for x in iter {
            acc.add(x);
        }
        acc
    }
}

pub fn compensated_sum<I: IntoIterator<Item = f64>>(iter: I) -> f64 {
    iter.into_iter().collect::<Neumaier>().sum()
}

#[derive(Debug, Clone, Copy, Default)]
pub struct ComplexNeumaier {
    re: Neumaier,
    im: Neumaier,
}

impl ComplexNeumaier {
    #[inline]
    pub fn add(&mut self, z: Complex64) {
        self.re.add(z.re);
        self.im.add(z.im);
    }

    pub fn sum(&self) -> Complex64 {
        Complex64::new(self.re.sum(), self.im.sum())
    }
}

/// Fractional part of `n·t`, computed from the exact product so that large `n`
/// do not degrade the phase.
#[inline]
pub fn turns(n: f64, t: f64) -> f64 {
    let hi = n * t;
    let lo = n.mul_add(t, -hi);
    let fr = (hi - hi.floor()) + lo;
    fr - fr.floor()
}

/// `e^{2πi·n·t}` with exact phase reduction.
#[inline]
pub fn unit_phase(n: f64, t: f64) -> Complex64 {
    let (s, c) = (TAU * turns(n, t)).sin_cos();
    Complex64::new(c, s)
}

const TAIL_DIFFS: usize = 4;

/// `Σ_{n ≥ start} f(n) e^{2πi n t}` for a smooth amplitude `f` decaying to zero.
///
/// The explicit partial sum is closed by repeated summation by parts,
/// `Σ_{n≥M} f(n) zⁿ = Σ_k z^{M+k} Δᵏf(M) / (1−z)^{k+1} + …`,
/// and the cut-off is doubled until the first neglected difference is below
/// `abs_tol / 1000`.
pub fn oscillatory_sum<F>(f: F, t: f64, start: u64, ctx: &EvalContext) -> Result<(Complex64, f64)>
where
    F: Fn(f64) -> f64,
{
    let frac = t - t.floor();
    if frac == 0.0 {
        return Err(Error::domain("oscillatory_sum", "phase must not be an integer"));
    }
    let z = unit_phase(1.0, frac);
    let one_minus = Complex64::new(1.0, 0.0) - z;
    let target = ctx.abs_tol * 1e-3;

    let mut acc = ComplexNeumaier::default();
    let mut abs_mass = 0.0;
    let mut n = start;
    let mut m = (start + 1024).max(2 * start);
    loop {
        while n < m {
            let a = f(n as f64);
            abs_mass += a.abs();
            acc.add(unit_phase(n as f64, frac) * a);
            n += 1;
        }
        let mut d: Vec<f64> = (0..=TAIL_DIFFS).map(|k| f((m + k as u64) as f64)).collect();
        let mut tail = Complex64::new(0.0, 0.0);
        let mut denom = one_minus;
        let mut last = 0.0;
        for k in 0..TAIL_DIFFS {
            tail += unit_phase((m + k as u64) as f64, frac) * d[0] / denom;
            denom *= one_minus;
            last = d[0].abs();
            for i in 0..d.len() - 1 - k {
                d[i] = d[i + 1] - d[i];
            }
        }
        let trunc = last / denom.norm() * one_minus.norm();
        let err = trunc + 4.0 * f64::EPSILON * abs_mass;
        if trunc <= target || 2 * m > ctx.max_terms {
            if trunc > ctx.abs_tol {
                return Err(Error::NonConvergence { op: "oscillatory_sum", err });
            }
            return Ok((acc.sum() + tail, err));
        }
        m *= 2;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{LN_2, PI};

    #[test]
    fn neumaier_recovers_cancelled_mass() {
        let v = [1.0, 1e100, 1.0, -1e100];
        assert_eq!(compensated_sum(v), 2.0);
    }

    #[test]
    fn turns_is_exact_for_dyadic_phase() {
        assert_eq!(turns(1e12 + 3.0, 0.25), 0.75);
        assert!(turns(123_456_789.0, 0.1) < 1.0);
    }

    #[test]
    fn alternating_harmonic() {
        let ctx = EvalContext::default();
        let (s, err) = oscillatory_sum(|n| 1.0 / n, 0.5, 1, &ctx).unwrap();
        assert!((s.re + LN_2).abs() < 1e-13, "{s} {err}");
    }

    #[test]
    fn log_sine_series() {
        let ctx = EvalContext::default();
        for &u in &[0.1, 0.3, 0.77] {
            let (s, _) = oscillatory_sum(|n| 1.0 / n, u, 1, &ctx).unwrap();
            assert!((s.re + (2.0 * (PI * u).sin()).ln()).abs() < 1e-12);
            assert!((s.im - PI * (0.5 - u)).abs() < 1e-12);
        }
    }
}
