//! Evaluation context and the value type returned by every numerical routine.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Tolerances and budgets shared by all evaluators.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct EvalContext {
    pub abs_tol: f64,
    pub max_terms: u64,
    /// Number of Bernoulli correction terms (two per pair) in Euler–Maclaurin tails.
    pub em_order: u32,
    pub abel_eps0: f64,
    pub abel_levels: u32,
    pub quad_tol: f64,
}

impl Default for EvalContext {
    fn default() -> Self {
        EvalContext {
            abs_tol: 1e-10,
            max_terms: 1_000_000,
            em_order: 12,
            abel_eps0: 0.02,
            abel_levels: 8,
            quad_tol: 1e-12,
        }
    }
}

impl EvalContext {
    pub fn validate(&self) -> Result<()> {
        let bad = |m: String| Err(Error::InvalidContext(m));
        if !(self.abs_tol > 0.0) {
            return bad(format!("abs_tol must be positive, got {}", self.abs_tol));
        }
        if !(self.quad_tol > 0.0) {
            return bad(format!("quad_tol must be positive, got {}", self.quad_tol));
        }
        if self.max_terms < 16 {
            return bad(format!("max_terms too small: {}", self.max_terms));
        }
        if self.em_order == 0 || !self.em_order.is_multiple_of(2) || self.em_order > 30 {
            return bad(format!("em_order must be even and in 2..=30, got {}", self.em_order));
        }
        if !(self.abel_eps0 > 0.0 && self.abel_eps0 <= 0.1) {
            return bad(format!("abel_eps0 must lie in (0, 0.1], got {}", self.abel_eps0));
        }
        if !(4..=16).contains(&self.abel_levels) {
            return bad(format!("abel_levels must lie in 4..=16, got {}", self.abel_levels));
        }
        Ok(())
    }

    pub(crate) fn em_pairs(&self) -> usize {
        (self.em_order / 2) as usize
    }
}

/// A real number together with an estimate of its absolute error.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RealValue {
    pub value: f64,
    pub err_estimate: f64,
}

impl RealValue {
    pub const fn new(value: f64, err_estimate: f64) -> Self {
        RealValue { value, err_estimate }
    }

    pub const fn exact(value: f64) -> Self {
        RealValue { value, err_estimate: 0.0 }
    }

    pub fn scale(self, c: f64) -> Self {
        RealValue::new(c * self.value, c.abs() * self.err_estimate)
    }

    pub fn add(self, o: RealValue) -> Self {
        RealValue::new(self.value + o.value, self.err_estimate + o.err_estimate)
    }

    pub fn sub(self, o: RealValue) -> Self {
        RealValue::new(self.value - o.value, self.err_estimate + o.err_estimate)
    }

    pub fn mul(self, o: RealValue) -> Self {
        RealValue::new(
            self.value * o.value,
            self.value.abs() * o.err_estimate + o.value.abs() * self.err_estimate + self.err_estimate * o.err_estimate,
        )
    }

    pub fn offset(self, c: f64) -> Self {
        RealValue::new(self.value + c, self.err_estimate)
    }
}

/// Linear combination `Σ cᵢ vᵢ` with summed error bounds.
pub fn combine(terms: &[(f64, RealValue)]) -> RealValue {
    let mut acc = crate::special::summation::Neumaier::new();
    let mut err = 0.0;
    for &(c, v) in terms {
        acc.add(c * v.value);
        err += c.abs() * v.err_estimate;
    }
    RealValue::new(acc.sum(), err)
}
