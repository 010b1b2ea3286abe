//! Abel-regularized trigonometric and alternating series.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::collections::HashMap;
use std::f64::consts::TAU;
use std::sync::{Arc, OnceLock, RwLock};

use super::extrapolate::{eps_schedule, extrapolate, Basis, ExtrapolationResult};
use crate::context::EvalContext;
use crate::error::{Error, Result};
use crate::special::bernoulli::scaled_even_table;
use crate::special::summation::{turns, Neumaier};

/// Highest power of `log n` carried by the kernel.
pub const MAX_LOG_POWER: usize = 2;

/// `e^{−εn}·n^{−s}·logʲ n` below this is dropped from the inner sum.
const INNER_CUTOFF_LN: f64 = 41.446_531_673_892_82; // ln 1e18

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum TrigKind {
    Cos,
    Sin,
}

/// `Σ_{n≥1} logʲ n · trig(2πnx + y) / nˢ`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TrigSeriesSpec {
    pub j: u32,
    pub x: f64,
    pub y: f64,
    pub s: f64,
    pub kind: TrigKind,
}

impl TrigSeriesSpec {
    pub fn new(j: u32, x: f64, y: f64, s: f64, kind: TrigKind) -> Self {
        TrigSeriesSpec { j, x, y, s, kind }
    }

    pub fn validate(&self) -> Result<()> {
        if self.j as usize > MAX_LOG_POWER {
            return Err(Error::domain("abel_trig_limit", format!("log power {} exceeds {MAX_LOG_POWER}", self.j)));
        }
        if !(self.x > 0.0 && self.x < 1.0) {
            return Err(Error::domain("abel_trig_limit", format!("x must lie in (0, 1), got {}", self.x)));
        }
        if !self.y.is_finite() || !self.s.is_finite() || self.s < 0.0 {
            return Err(Error::domain("abel_trig_limit", "y must be finite and s non-negative"));
        }
        Ok(())
    }
}

/// Regularized sums `Σ logʲ n · {cos, sin}(2πnx) e^{−εn} / nˢ` for every `ε`
/// of the schedule and every `j ≤ 2`.
#[derive(Debug, Clone)]
pub struct AbelSamples {
    pub eps: Vec<f64>,
    /// Indexed `[kind][j][level]` with `kind` 0 = cos, 1 = sin.
    pub sums: [[Vec<f64>; MAX_LOG_POWER + 1]; 2],
}

/// One term of a linear combination of kernel components.
#[derive(Debug, Clone, Copy)]
pub struct Component {
    pub j: u32,
    pub kind: TrigKind,
    pub coef: f64,
}

impl Component {
    pub fn new(j: u32, kind: TrigKind, coef: f64) -> Self {
        Component { j, kind, coef }
    }
}

impl AbelSamples {
    /// Samples of `Σᵢ coefᵢ · componentᵢ`.
    pub fn combine(&self, parts: &[Component]) -> Vec<(f64, f64)> {
        self.eps
            .iter()
            .enumerate()
            .map(|(lvl, &e)| {
                let mut acc = Neumaier::new();
                for p in parts {
                    let k = match p.kind {
                        TrigKind::Cos => 0,
                        TrigKind::Sin => 1,
                    };
                    acc.add(p.coef * self.sums[k][p.j as usize][lvl]);
                }
                (e, acc.sum())
            })
            .collect()
    }

    /// Extrapolated limit of a linear combination of components.
    pub fn limit(&self, parts: &[Component], basis: Basis, abs_tol: f64) -> Result<ExtrapolationResult> {
        extrapolate(&self.combine(parts), basis, abs_tol)
    }
}

fn inner_cutoff(eps: f64, s: f64) -> u64 {
    // smallest n with εn + s log n − 2 log log n ≥ ln 1e18
    let mut n = INNER_CUTOFF_LN / eps;
    for _ in 0..8 {
        let l = n.ln();
        n = (INNER_CUTOFF_LN - s * l + 2.0 * l.ln().max(0.0)) / eps;
    }
    n.ceil().max(16.0) as u64
}

fn level_sums(x: f64, s: f64, eps: f64) -> [[f64; MAX_LOG_POWER + 1]; 2] {
    let nmax = inner_cutoff(eps, s);
    let mut acc = [[Neumaier::new(); MAX_LOG_POWER + 1]; 2];
    for n in 1..=nmax {
        let nf = n as f64;
        let l = nf.ln();
        let mut w = (-eps * nf).exp();
        if s == 1.0 {
            w /= nf;
        } else if s != 0.0 {
            w *= (-s * l).exp();
        }
        let (sn, cs) = (TAU * turns(nf, x)).sin_cos();
        let wc = w * cs;
        let ws = w * sn;
        acc[0][0].add(wc);
        acc[1][0].add(ws);
        acc[0][1].add(wc * l);
        acc[1][1].add(ws * l);
        acc[0][2].add(wc * l * l);
        acc[1][2].add(ws * l * l);
    }
    let mut out = [[0.0; MAX_LOG_POWER + 1]; 2];
    for k in 0..2 {
        for j in 0..=MAX_LOG_POWER {
            out[k][j] = acc[k][j].sum();
        }
    }
    out
}

type CacheKey = (u64, u64, u64, u32);

fn cache() -> &'static RwLock<HashMap<CacheKey, Arc<AbelSamples>>> {
    static CACHE: OnceLock<RwLock<HashMap<CacheKey, Arc<AbelSamples>>>> = OnceLock::new();
    CACHE.get_or_init(|| RwLock::new(HashMap::new()))
}

/// Kernel sums at phase `x` and exponent `s` on the context's `ε` schedule.
///
/// Results are memoized; a cached entry is bit-identical to a fresh evaluation.
pub fn abel_samples(x: f64, s: f64, ctx: &EvalContext) -> Result<Arc<AbelSamples>> {
    ctx.validate()?;
    let frac = x - x.floor();
    if frac == 0.0 || !x.is_finite() {
        return Err(Error::domain("abel_samples", format!("phase must not be an integer, got {x}")));
    }
    if !(s >= 0.0) || !s.is_finite() {
        return Err(Error::domain("abel_samples", format!("exponent must be non-negative, got {s}")));
    }
    let key = (frac.to_bits(), s.to_bits(), ctx.abel_eps0.to_bits(), ctx.abel_levels);
    if let Some(hit) = cache().read().expect("cache lock poisoned").get(&key) {
        return Ok(hit.clone());
    }
    let eps = eps_schedule(ctx.abel_eps0, ctx.abel_levels);
    let levels: Vec<_> = eps.par_iter().map(|&e| level_sums(frac, s, e)).collect();
    let mut sums: [[Vec<f64>; MAX_LOG_POWER + 1]; 2] = Default::default();
    for lv in &levels {
        for k in 0..2 {
            for j in 0..=MAX_LOG_POWER {
                sums[k][j].push(lv[k][j]);
            }
        }
    }
    let samples = Arc::new(AbelSamples { eps, sums });
    cache().write().expect("cache lock poisoned").insert(key, samples.clone());
    Ok(samples)
}

fn require_converged(op: &'static str, r: ExtrapolationResult) -> Result<ExtrapolationResult> {
    if r.converged {
        Ok(r)
    } else {
        Err(Error::NonConvergence { op, err: r.err_estimate })
    }
}

/// Components of `trig(θ + y)` in terms of `cos θ` and `sin θ`.
pub fn shifted_components(j: u32, y: f64, kind: TrigKind, coef: f64) -> [Component; 2] {
    let (sy, cy) = y.sin_cos();
    match kind {
        TrigKind::Sin => [Component::new(j, TrigKind::Sin, coef * cy), Component::new(j, TrigKind::Cos, coef * sy)],
        TrigKind::Cos => [Component::new(j, TrigKind::Cos, coef * cy), Component::new(j, TrigKind::Sin, -coef * sy)],
    }
}

/// `lim_{ε→0⁺} Σ logʲ n · trig(2πnx + y) e^{−εn} / nˢ`.
pub fn abel_trig_limit(spec: &TrigSeriesSpec, ctx: &EvalContext) -> Result<ExtrapolationResult> {
    abel_trig_limit_with(spec, Basis::Poly, ctx)
}

pub fn abel_trig_limit_with(spec: &TrigSeriesSpec, basis: Basis, ctx: &EvalContext) -> Result<ExtrapolationResult> {
    spec.validate()?;
    let k = abel_samples(spec.x, spec.s, ctx)?;
    let parts = shifted_components(spec.j, spec.y, spec.kind, 1.0);
    require_converged("abel_trig_limit", k.limit(&parts, basis, ctx.abs_tol)?)
}

/// Explicit terms before the tail formula takes over.
const BOOLE_START: u64 = 32;
const BOOLE_TERMS: usize = 24;

/// `Σ_{n≥1} (−1)ⁿ nᵏ e^{−nz} log n` for `0 < z < π`.
///
/// Terms below `n = 32` are summed explicitly; the rest uses Boole's formula
/// `Σ_{n≥a} (−1)ⁿ f(n) = (−1)ᵃ [½ f(a) − Σ_{m≥1} (2^{2m}−1) B₂ₘ/(2m)! f^{(2m−1)}(a)]`
/// with the derivatives of `tᵏ log t · e^{−zt}` taken analytically.
pub fn alternating_exp_log_sum(k: u32, z: f64) -> f64 {
    let f = |t: f64| t.powi(k as i32) * t.ln() * (-z * t).exp();
    let mut acc = Neumaier::new();
    for n in 2..BOOLE_START {
        let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
        acc.add(sign * f(n as f64));
    }
    let a = BOOLE_START as f64;
    let derivs = exp_log_derivatives(k, z, a, 2 * BOOLE_TERMS);
    let bern = scaled_even_table();
    let mut tail = Neumaier::new();
    tail.add(0.5 * derivs[0]);
    let mut prev = f64::INFINITY;
    for m in 1..BOOLE_TERMS {
        let coef = ((2.0f64).powi(2 * m as i32) - 1.0) * bern[m];
        let term = -coef * derivs[2 * m - 1];
        if term.abs() > prev {
            break;
        }
        prev = term.abs();
        tail.add(term);
    }
    let sign = if BOOLE_START.is_multiple_of(2) { 1.0 } else { -1.0 };
    acc.add(sign * tail.sum());
    acc.sum()
}

/// `dᵐ/dtᵐ [tᵏ log t · e^{−zt}]` at `t = a` for `m = 0..count`.
fn exp_log_derivatives(k: u32, z: f64, a: f64, count: usize) -> Vec<f64> {
    // dⁱ/dtⁱ [tᵏ log t] = t^{k−i} (Aᵢ log t + Cᵢ)
    let la = a.ln();
    let mut u = Vec::with_capacity(count);
    let (mut am, mut cm) = (1.0, 0.0);
    for i in 0..count {
        u.push(a.powi(k as i32 - i as i32) * (am * la + cm));
        let kf = k as f64 - i as f64;
        cm = kf * cm + am;
        am *= kf;
    }
    let e = (-z * a).exp();
    (0..count)
        .map(|m| {
            let mut binom = 1.0;
            let mut s = 0.0;
            for i in 0..=m {
                s += binom * u[i] * (-z).powi((m - i) as i32);
                binom = binom * (m - i) as f64 / (i + 1) as f64;
            }
            s * e
        })
        .collect()
}

/// `lim_{z→0⁺} Σ_{n≥1} (−1)ⁿ nᵏ e^{−nz} log n` for `k ≤ 2`.
pub fn abel_exp_limit(k: u32, ctx: &EvalContext) -> Result<ExtrapolationResult> {
    abel_exp_limit_with(k, Basis::Poly, ctx)
}

pub fn abel_exp_limit_with(k: u32, basis: Basis, ctx: &EvalContext) -> Result<ExtrapolationResult> {
    ctx.validate()?;
    if k > 2 {
        return Err(Error::domain("abel_exp_limit", format!("power {k} exceeds 2")));
    }
    let samples: Vec<(f64, f64)> = eps_schedule(ctx.abel_eps0, ctx.abel_levels)
        .par_iter()
        .map(|&z| (z, alternating_exp_log_sum(k, z)))
        .collect();
    require_converged("abel_exp_limit", extrapolate(&samples, basis, ctx.abs_tol)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{LN_2, PI};

    fn c() -> EvalContext {
        EvalContext::default()
    }

    #[test]
    fn cosine_and_sine_limits() {
        for i in 1..10 {
            let x = i as f64 / 10.0;
            let cs = abel_trig_limit(&TrigSeriesSpec::new(0, x, 0.0, 0.0, TrigKind::Cos), &c()).unwrap();
            let sn = abel_trig_limit(&TrigSeriesSpec::new(0, x, 0.0, 0.0, TrigKind::Sin), &c()).unwrap();
            assert!((cs.value + 0.5).abs() < 1e-10, "x={x} {}", cs.value);
            assert!((sn.value - 0.5 / (PI * x).tan()).abs() < 1e-10, "x={x}");
        }
    }

    #[test]
    fn log_weighted_cosine_matches_digamma_form() {
        // ¼[ψ(x) + ψ(1−x)] + ½[γ + log 2π] at x = 1/2
        let x = 0.5;
        let want = 0.5 * (-crate::consts::EULER_GAMMA - 2.0 * LN_2) + 0.5 * crate::consts::GAMMA_PLUS_LN_2PI;
        let r = abel_trig_limit(&TrigSeriesSpec::new(1, x, 0.0, 0.0, TrigKind::Cos), &c()).unwrap();
        assert!((r.value - want).abs() < 1e-10, "{} {want}", r.value);
    }

    #[test]
    fn alternating_log_limit() {
        // −ζ'(0) − log 2 = ½ log(π/2)
        let r = abel_exp_limit(0, &c()).unwrap();
        let want = 0.5 * crate::consts::LN_2PI - LN_2;
        assert!((r.value - want).abs() < 1e-10, "{r:?}");
    }

    #[test]
    fn samples_are_cached_bit_identically() {
        let a = abel_samples(0.37, 0.0, &c()).unwrap();
        let b = abel_samples(0.37, 0.0, &c()).unwrap();
        assert!(Arc::ptr_eq(&a, &b));
        let fresh = level_sums(0.37, 0.0, a.eps[3]);
        assert_eq!(fresh[1][2].to_bits(), a.sums[1][2][3].to_bits());
    }

    #[test]
    fn rejects_bad_specs() {
        assert!(abel_trig_limit(&TrigSeriesSpec::new(3, 0.3, 0.0, 0.0, TrigKind::Cos), &c()).is_err());
        assert!(abel_trig_limit(&TrigSeriesSpec::new(0, 1.0, 0.0, 0.0, TrigKind::Cos), &c()).is_err());
        assert!(abel_exp_limit(3, &c()).is_err());
    }
}
