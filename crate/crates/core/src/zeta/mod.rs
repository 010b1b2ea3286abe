//! Hurwitz and Riemann zeta derivatives, Stieltjes constants and Barnes G.

pub mod barnes;
pub mod dirichlet;
pub mod hurwitz;
pub mod stieltjes;

pub use barnes::{barnes_log_g, barnes_log_g_product, zeta_prime_minus_one};
pub use dirichlet::{alt_zeta_deriv, dirichlet_beta_deriv};
pub use hurwitz::{hurwitz_zeta_deriv, riemann_zeta_deriv};
pub use stieltjes::{gamma1_prime, stieltjes, stieltjes_via_xderiv, StieltjesMethod, StieltjesValue};
