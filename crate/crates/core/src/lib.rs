//! Hurwitz zeta derivatives at integer and real arguments, generalized Stieltjes
//! constants, Barnes G, regularized trigonometric Dirichlet series and a catalog
//! of identities that ties them together.

pub mod cli;
pub mod consts;
pub mod context;
pub mod error;
pub mod registry;
pub mod regsum;
pub mod report;
pub mod repr;
pub mod special;
pub mod zeta;

pub use context::{EvalContext, RealValue};
pub use error::{Error, Result};
