//! Series representations: the Stieltjes-expansion path for regularized
//! trigonometric sums and Fourier-type expansions of ψ, log Γ, log G, ζ'(−1, t),
//! ζ''(0, u) and γ₁(x).

use serde::{Deserialize, Serialize};

use crate::context::RealValue;

pub mod fourier;
pub mod hansen;
pub mod series;
mod taylor;

pub use fourier::{
    barnes_fourier, digamma_fourier, gamma1_rep, kummer_log_gamma, zeta2_fourier, zeta_prime_neg1_fourier,
};
pub use hansen::hansen_trig_closed;
pub use series::{
    gamma1_reflection_series, srivastava_tsumura, zeta_odd_power_series, zeta_prime_odd_pi_series, zeta_prime_power_series,
    OddZetaSeries,
    SrivastavaTsumura,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Path {
    StieltjesExpansion,
    Abel,
    ClosedForm,
    /// Absolutely convergent series summed term by term.
    Direct,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RepresentationValue {
    pub value: f64,
    pub err_estimate: f64,
    pub path: Path,
}

impl RepresentationValue {
    pub(crate) fn new(v: RealValue, path: Path) -> Self {
        RepresentationValue { value: v.value, err_estimate: v.err_estimate, path }
    }

    pub fn real(&self) -> RealValue {
        RealValue::new(self.value, self.err_estimate)
    }
}

