//! Special functions on the real line.

pub mod bernoulli;
pub mod clausen;
pub mod gamma;
pub mod quadrature;
pub mod summation;

pub use bernoulli::{bernoulli_exact, bernoulli_number, bernoulli_poly, bernoulli_poly_exact, harmonic};
pub use clausen::clausen_cl2;
pub use gamma::{digamma, log_gamma, trigamma};
pub use quadrature::integrate_adaptive;
