//! Regularized sums: Abel limits, exponential-weight limits and Ramanujan sums.

pub mod abel;
pub mod extrapolate;
pub mod series;

pub use abel::{abel_exp_limit, abel_samples, abel_trig_limit, Component, TrigKind, TrigSeriesSpec};
pub use extrapolate::{extrapolate, Basis, ExtrapolationResult};
pub use series::{exp_log_constant, exp_log_series, ramanujan_sum_convergent};
