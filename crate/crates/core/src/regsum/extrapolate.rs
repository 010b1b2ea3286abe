//! Extrapolation of sampled regularizations to `ε → 0`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Basis {
    /// Polynomial in `ε` (Neville's scheme evaluated at 0).
    Poly,
    /// Least squares over `{1, ε, ε log ε, ε², ε² log ε}`.
    PolyLog,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExtrapolationResult {
    pub value: f64,
    pub err_estimate: f64,
    /// `(ε, regularized partial value)` pairs, largest `ε` first.
    pub samples: Vec<(f64, f64)>,
    pub converged: bool,
}

/// Inflation applied to the difference of the last two extrapolants.
pub const ERR_INFLATION: f64 = 4.0;

/// Extrapolates `samples` to `ε = 0`.
///
/// The error estimate is `4 |T_last − T_prev|`, where `T_prev` omits the sample
/// with the smallest `ε`. `converged` holds when it is at most `10·abs_tol`.
pub fn extrapolate(samples: &[(f64, f64)], basis: Basis, abs_tol: f64) -> Result<ExtrapolationResult> {
    let (last, prev) = match basis {
        Basis::Poly => {
            if samples.len() < 2 {
                return Err(Error::IllConditioned("need at least two samples".into()));
            }
            (neville_at_zero(samples), neville_at_zero(&samples[..samples.len() - 1]))
        }
        Basis::PolyLog => {
            if samples.len() < POLY_LOG_DIM + 1 {
                return Err(Error::IllConditioned(format!(
                    "need at least {} samples for the log basis",
                    POLY_LOG_DIM + 1
                )));
            }
            (poly_log_fit(samples)?, poly_log_fit(&samples[..samples.len() - 1])?)
        }
    };
    let err = ERR_INFLATION * (last - prev).abs();
    Ok(ExtrapolationResult {
        value: last,
        err_estimate: err,
        samples: samples.to_vec(),
        converged: err <= 10.0 * abs_tol,
    })
}

fn neville_at_zero(samples: &[(f64, f64)]) -> f64 {
    let mut p: Vec<f64> = samples.iter().map(|s| s.1).collect();
    let n = p.len();
    for m in 1..n {
        for i in 0..n - m {
            let xi = samples[i].0;
            let xj = samples[i + m].0;
            p[i] = (xi * p[i + 1] - xj * p[i]) / (xi - xj);
        }
    }
    p[0]
}

const POLY_LOG_DIM: usize = 5;

fn poly_log_row(e: f64) -> [f64; POLY_LOG_DIM] {
    let l = e.ln();
    [1.0, e, e * l, e * e, e * e * l]
}

/// Constant coefficient of the least-squares fit, by modified Gram–Schmidt.
fn poly_log_fit(samples: &[(f64, f64)]) -> Result<f64> {
    let m = samples.len();
    let mut cols: Vec<Vec<f64>> = (0..POLY_LOG_DIM)
        .map(|c| samples.iter().map(|s| poly_log_row(s.0)[c]).collect())
        .collect();
    let y: Vec<f64> = samples.iter().map(|s| s.1).collect();
    let mut r = [[0.0; POLY_LOG_DIM]; POLY_LOG_DIM];
    for c in 0..POLY_LOG_DIM {
        for p in 0..c {
            let d: f64 = (0..m).map(|i| cols[p][i] * cols[c][i]).sum();
            r[p][c] = d;
            for i in 0..m {
                cols[c][i] -= d * cols[p][i];
            }
        }
        let norm = cols[c].iter().map(|v| v * v).sum::<f64>().sqrt();
        if norm == 0.0 || !norm.is_finite() {
            return Err(Error::IllConditioned("rank-deficient log basis".into()));
        }
        r[c][c] = norm;
        for v in cols[c].iter_mut() {
            *v /= norm;
        }
    }
    let qty: Vec<f64> = (0..POLY_LOG_DIM).map(|c| (0..m).map(|i| cols[c][i] * y[i]).sum()).collect();
    let mut coef = [0.0; POLY_LOG_DIM];
    for c in (0..POLY_LOG_DIM).rev() {
        let mut v = qty[c];
        for p in c + 1..POLY_LOG_DIM {
            v -= r[c][p] * coef[p];
        }
        coef[c] = v / r[c][c];
    }
    let resid: f64 = samples
        .iter()
        .map(|s| {
            let row = poly_log_row(s.0);
            let fit: f64 = row.iter().zip(&coef).map(|(a, b)| a * b).sum();
            (fit - s.1).powi(2)
        })
        .sum::<f64>()
        .sqrt();
    let (lo, hi) = y.iter().fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), &v| (a.min(v), b.max(v)));
    if resid > (hi - lo) && resid > 1e-14 * hi.abs().max(lo.abs()) {
        return Err(Error::IllConditioned(format!("fit residual {resid:e} exceeds sample spread {:e}", hi - lo)));
    }
    Ok(coef[0])
}

/// `ε_k = eps0 · 2^{−k}` for `k = 0..levels`.
pub fn eps_schedule(eps0: f64, levels: u32) -> Vec<f64> {
    (0..levels).map(|k| eps0 * 0.5f64.powi(k as i32)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn polynomial_basis_is_exact_on_polynomials() {
        let s: Vec<(f64, f64)> = eps_schedule(0.02, 8).into_iter().map(|e| (e, 2.0 + 3.0 * e - 5.0 * e * e)).collect();
        let r = extrapolate(&s, Basis::Poly, 1e-10).unwrap();
        assert!((r.value - 2.0).abs() < 1e-13);
        assert!(r.converged);
    }

    #[test]
    fn log_basis_removes_eps_log_eps() {
        let s: Vec<(f64, f64)> = eps_schedule(0.02, 8).into_iter().map(|e| (e, 2.0 + 3.0 * e * e.ln())).collect();
        let r = extrapolate(&s, Basis::PolyLog, 1e-10).unwrap();
        assert!((r.value - 2.0).abs() < 1e-12, "{r:?}");
        let p = extrapolate(&s, Basis::Poly, 1e-10).unwrap();
        assert!((p.value - 2.0).abs() > 1e-6);
    }

    #[test]
    fn too_few_samples() {
        let s = vec![(0.02, 1.0), (0.01, 1.0)];
        assert!(matches!(extrapolate(&s, Basis::PolyLog, 1e-10), Err(Error::IllConditioned(_))));
        assert!(matches!(extrapolate(&s[..1], Basis::Poly, 1e-10), Err(Error::IllConditioned(_))));
    }
}
